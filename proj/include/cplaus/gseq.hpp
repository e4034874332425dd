/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#ifndef CPLAUS_GSEQ_HPP
#define CPLAUS_GSEQ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cplaus/formula.hpp"
#include "cplaus/logic.hpp"

namespace cplaus {

// Two-sided sequent Gamma => Delta over finite multisets, stored as
// canonically sorted sequences so equal multisets compare equal.
struct Sequent {
    std::vector<FormulaRef> ante;
    std::vector<FormulaRef> succ;

    bool operator==(const Sequent& o) const = default;
};

Sequent mkSequent(std::vector<FormulaRef> ante, std::vector<FormulaRef> succ);

// Interpretation: /\Gamma -> \/Delta.
FormulaRef sequentFormula(const Sequent& s);

std::string renderSequent(const Sequent& s, const RenderOptions& opts = {});

// Multi-premiss rules. CP/N/T/W/A/NA analyse an ordered selection of
// <=-formulas from the antecedent (premiss k exposes D_1..D_{k-1}, so
// order matters); W/W0/A additionally analyse one <=-formula on the
// right, and retained principal formulas are copied into the premiss.
enum class GRule { Init, BotL, ImpL, ImpR, CP, N, T, W, W0, C0, A, NA };

const char* gRuleName(GRule r);

struct GRuleInstance {
    GRule rule = GRule::Init;
    // ImpL/ImpR: the implication; C0: the antecedent <=-formula;
    // Init: the shared atom.
    FormulaRef principal = nullptr;
    // CP/N/T/W/A/NA: ordered C_i <= D_i selection from the antecedent.
    std::vector<FormulaRef> selection;
    // CP/W/W0/A: the succedent <=-formula A <= B.
    FormulaRef rightPrincipal = nullptr;

    bool operator==(const GRuleInstance& o) const = default;
};

struct GDerivation {
    Sequent conclusion;
    GRuleInstance instance;
    std::vector<GDerivation> premisses;
};

// Validates the instance against the conclusion and builds the premiss
// sequents; nullopt when the instance does not apply. Shared by search
// and replay.
std::optional<std::vector<Sequent>> gExpand(const Sequent& conclusion, const GRuleInstance& inst,
                                            LogicId logic);

// Every rule instance applicable to s in the calculus of l, premisses
// included. Selections are enumerated shortest-first over distinct
// <=-formula values; duplicate multiset occurrences add no instances
// (contraction is admissible). Throws for logics without a calculus.
std::vector<std::pair<GRuleInstance, std::vector<Sequent>>> gApplicable(const Sequent& s,
                                                                        LogicId l);

enum class GStatus { Proved, Fail, BudgetExceeded };

struct GResult {
    GStatus status = GStatus::Fail;
    std::optional<GDerivation> derivation;
    std::uint64_t expansions = 0;
};

constexpr std::uint64_t kDefaultGBudget = 1'000'000;

// Exhaustive backtracking proof search. Fail means no derivation exists:
// the search explores all instances under memoised failure caching and
// branch-repetition blocking, both sound by the admissible structural
// rules. Internally sequents are read as sets (contraction-admissible);
// the returned derivation is over the deduplicated input.
GResult gProve(const Sequent& s, LogicId l, std::uint64_t budget = kDefaultGBudget);
GResult gProve(FormulaRef f, LogicId l, std::uint64_t budget = kDefaultGBudget);

// Re-validates a derivation bottom-up: each node's instance must expand
// to exactly its children's conclusions (as set-sequents).
bool gReplay(const GDerivation& d, LogicId l);

// Cut harness: left must contain the cut formula in the succedent,
// right in the antecedent (std::invalid_argument otherwise). Returns
// derivability of Gamma, Gamma' => Delta, Delta' with one cut-formula
// occurrence removed from each side. Cut is never a search rule.
bool gCutTest(const Sequent& left, const Sequent& right, FormulaRef cutFormula, LogicId l,
              std::uint64_t budget = kDefaultGBudget);

std::string gDerivationToJson(const GDerivation& d, int indent = -1);
std::string gDerivationToLatex(const GDerivation& d);

} // namespace cplaus

#endif
