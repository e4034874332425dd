/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#ifndef CPLAUS_FORMULA_HPP
#define CPLAUS_FORMULA_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cplaus {

// Formula language: atoms, bot, implication, and the comparative
// plausibility modality A <= B ("A is at least as plausible as B").
// top, ~, &, | are definable and are desugared at construction time:
//   top = bot -> bot, ~A = A -> bot, A | B = ~A -> B, A & B = ~(A -> ~B).
enum class Kind : std::uint8_t { Atom, Bot, Imp, CmpPl };

class Formula;
using FormulaRef = const Formula*;

// Interned, immutable formula node. Equal formulas are pointer-equal,
// so FormulaRef can be used directly as a map key.
class Formula {
public:
    Kind kind() const { return kind_; }
    const std::string& atomName() const { return name_; }
    FormulaRef left() const { return left_; }
    FormulaRef right() const { return right_; }
    std::uint32_t id() const { return id_; }

    bool isAtom() const { return kind_ == Kind::Atom; }
    bool isBot() const { return kind_ == Kind::Bot; }
    bool isImp() const { return kind_ == Kind::Imp; }
    bool isCmpPl() const { return kind_ == Kind::CmpPl; }

private:
    friend class FormulaArena;
    Kind kind_;
    std::uint32_t id_;
    std::string name_;
    FormulaRef left_ = nullptr;
    FormulaRef right_ = nullptr;
};

// Constructors. All formulas live in a process-wide arena; nodes are
// never freed. Thread-safe.
FormulaRef mkAtom(std::string_view name);
FormulaRef mkBot();
FormulaRef mkImp(FormulaRef left, FormulaRef right);
FormulaRef mkCmpPl(FormulaRef left, FormulaRef right);

// Desugaring helpers.
FormulaRef mkTop();
FormulaRef mkNeg(FormulaRef a);
FormulaRef mkOr(FormulaRef a, FormulaRef b);
FormulaRef mkAnd(FormulaRef a, FormulaRef b);

// Structural total order, independent of creation order. Atoms compare
// by name; composite formulas by kind, then children.
bool formulaLess(FormulaRef a, FormulaRef b);

struct FormulaOrder {
    bool operator()(FormulaRef a, FormulaRef b) const { return formulaLess(a, b); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position);
    // 0-based offset into the input text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Parses the ascii grammar:
//   atoms [a-z][a-z0-9_]* (keywords bot, top excluded), prefix ~,
//   infix by decreasing precedence: ~ > & > | > <= > ->,
//   -> right-associative, & and | left-associative, <= non-associative.
// Sugar connectives are desugared; the result contains only
// Atom/Bot/Imp/CmpPl nodes. Throws ParseError on malformed input.
FormulaRef parse(std::string_view text);

enum class RenderStyle { Ascii, Unicode, Latex };

struct RenderOptions {
    RenderStyle style = RenderStyle::Ascii;
    // When set, recognizable desugared patterns print as top/~/&/|.
    bool resugar = false;
};

// Prints with minimal parentheses. Ascii output re-parses to the same
// formula (with or without resugaring).
std::string render(FormulaRef f, const RenderOptions& opts = {});

// Complexity: c(p) = c(bot) = 1, c(A -> B) = c(A <= B) = c(A) + c(B) + 1.
int complexity(FormulaRef f);

// Reflexive-transitive subterm closure, sorted and deduplicated.
std::vector<FormulaRef> subformulas(FormulaRef f);

// Atom names occurring in f, sorted and deduplicated.
std::vector<std::string> atomsOf(FormulaRef f);

// Conjunction/disjunction of a list, folded right; empty conjunction is
// top, empty disjunction is bot.
FormulaRef bigAnd(const std::vector<FormulaRef>& fs);
FormulaRef bigOr(const std::vector<FormulaRef>& fs);

} // namespace cplaus

#endif
