/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#include "cplaus/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace cplaus {

namespace {

struct NodeKey {
    Kind kind;
    std::string name;
    FormulaRef left;
    FormulaRef right;

    bool operator==(const NodeKey& o) const {
        return kind == o.kind && name == o.name && left == o.left && right == o.right;
    }
};

struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const {
        std::size_t h = std::hash<int>()(static_cast<int>(k.kind));
        h = h * 31 + std::hash<std::string>()(k.name);
        h = h * 31 + std::hash<const void*>()(k.left);
        h = h * 31 + std::hash<const void*>()(k.right);
        return h;
    }
};

} // namespace

class FormulaArena {
public:
    static FormulaArena& instance() {
        static FormulaArena arena;
        return arena;
    }

    FormulaRef intern(Kind kind, std::string name, FormulaRef l, FormulaRef r) {
        NodeKey key{kind, std::move(name), l, r};
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = nodes_.find(key);
        if (it != nodes_.end())
            return it->second.get();
        auto node = std::make_unique<Formula>();
        node->kind_ = kind;
        node->name_ = key.name;
        node->left_ = l;
        node->right_ = r;
        node->id_ = static_cast<std::uint32_t>(nodes_.size());
        FormulaRef ref = node.get();
        nodes_.emplace(std::move(key), std::move(node));
        return ref;
    }

private:
    std::mutex mutex_;
    std::unordered_map<NodeKey, std::unique_ptr<Formula>, NodeKeyHash> nodes_;
};

FormulaRef mkAtom(std::string_view name) {
    return FormulaArena::instance().intern(Kind::Atom, std::string(name), nullptr, nullptr);
}

FormulaRef mkBot() {
    return FormulaArena::instance().intern(Kind::Bot, "", nullptr, nullptr);
}

FormulaRef mkImp(FormulaRef left, FormulaRef right) {
    return FormulaArena::instance().intern(Kind::Imp, "", left, right);
}

FormulaRef mkCmpPl(FormulaRef left, FormulaRef right) {
    return FormulaArena::instance().intern(Kind::CmpPl, "", left, right);
}

FormulaRef mkTop() { return mkImp(mkBot(), mkBot()); }
FormulaRef mkNeg(FormulaRef a) { return mkImp(a, mkBot()); }
FormulaRef mkOr(FormulaRef a, FormulaRef b) { return mkImp(mkNeg(a), b); }
FormulaRef mkAnd(FormulaRef a, FormulaRef b) { return mkNeg(mkImp(a, mkNeg(b))); }

bool formulaLess(FormulaRef a, FormulaRef b) {
    if (a == b)
        return false;
    if (a->kind() != b->kind())
        return static_cast<int>(a->kind()) < static_cast<int>(b->kind());
    switch (a->kind()) {
    case Kind::Atom:
        return a->atomName() < b->atomName();
    case Kind::Bot:
        return false;
    case Kind::Imp:
    case Kind::CmpPl:
        if (a->left() != b->left())
            return formulaLess(a->left(), b->left());
        return formulaLess(a->right(), b->right());
    }
    return false;
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(std::string message, std::size_t position)
    : std::runtime_error(std::move(message)), position_(position) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    FormulaRef run() {
        skipSpace();
        if (pos_ >= text_.size())
            fail("empty input");
        FormulaRef f = parseImp();
        skipSpace();
        if (pos_ < text_.size())
            fail("unexpected trailing input");
        return f;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "syntax error at position " << pos_ << ": " << what;
        throw ParseError(os.str(), pos_);
    }

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(std::string_view token) {
        skipSpace();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    char peek() {
        skipSpace();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    // imp := cmp ('->' imp)?    right-associative
    FormulaRef parseImp() {
        FormulaRef left = parseCmp();
        if (eat("->"))
            return mkImp(left, parseImp());
        return left;
    }

    // cmp := disj ('<=' disj)?  non-associative
    FormulaRef parseCmp() {
        FormulaRef left = parseDisj();
        if (eat("<=")) {
            FormulaRef right = parseDisj();
            skipSpace();
            if (text_.substr(pos_, 2) == "<=")
                fail("'<=' is non-associative, parenthesize");
            return mkCmpPl(left, right);
        }
        return left;
    }

    FormulaRef parseDisj() {
        FormulaRef f = parseConj();
        while (peek() == '|' && eat("|"))
            f = mkOr(f, parseConj());
        return f;
    }

    FormulaRef parseConj() {
        FormulaRef f = parseNeg();
        while (peek() == '&' && eat("&"))
            f = mkAnd(f, parseNeg());
        return f;
    }

    FormulaRef parseNeg() {
        if (eat("~"))
            return mkNeg(parseNeg());
        return parsePrimary();
    }

    FormulaRef parsePrimary() {
        skipSpace();
        if (pos_ >= text_.size())
            fail("expected a formula");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            FormulaRef f = parseImp();
            skipSpace();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                fail("expected ')'");
            ++pos_;
            return f;
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size()) {
                char d = text_[pos_];
                if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_')
                    ++pos_;
                else
                    break;
            }
            std::string name(text_.substr(start, pos_ - start));
            if (name == "bot")
                return mkBot();
            if (name == "top")
                return mkTop();
            return mkAtom(name);
        }
        fail("unexpected character");
    }
};

} // namespace

FormulaRef parse(std::string_view text) {
    return Parser(text).run();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// Precedence levels, loosest to tightest: -> (1), <= (2), | (3), & (4),
// ~ (5), atoms and parenthesized forms (6).
enum class Sugar { None, Top, Neg, And, Or };

struct Symbols {
    const char* imp;
    const char* cmp;
    const char* bot;
    const char* top;
    const char* neg;
    const char* conj;
    const char* disj;
};

const Symbols kAscii{" -> ", " <= ", "bot", "top", "~", " & ", " | "};
const Symbols kUnicode{" → ", " ≼ ", "⊥", "⊤", "¬", " ∧ ", " ∨ "};
const Symbols kLatex{" \\to ", " \\preccurlyeq ", "\\bot", "\\top", "\\lnot ", " \\land ", " \\lor "};

Sugar matchSugar(FormulaRef f) {
    if (!f->isImp())
        return Sugar::None;
    if (f->left()->isBot() && f->right()->isBot())
        return Sugar::Top;
    // A & B = (A -> (B -> bot)) -> bot
    if (f->right()->isBot() && f->left()->isImp() && f->left()->right()->isImp() &&
        f->left()->right()->right()->isBot())
        return Sugar::And;
    if (f->right()->isBot())
        return Sugar::Neg;
    // A | B = (A -> bot) -> B
    if (f->left()->isImp() && f->left()->right()->isBot())
        return Sugar::Or;
    return Sugar::None;
}

class Printer {
public:
    Printer(const Symbols& sym, bool resugar) : sym_(sym), resugar_(resugar) {}

    void print(std::ostringstream& os, FormulaRef f, int minPrec) {
        switch (f->kind()) {
        case Kind::Atom:
            os << f->atomName();
            return;
        case Kind::Bot:
            os << sym_.bot;
            return;
        case Kind::CmpPl:
            binary(os, f->left(), f->right(), sym_.cmp, 2, 3, 3, minPrec);
            return;
        case Kind::Imp:
            break;
        }
        if (resugar_) {
            switch (matchSugar(f)) {
            case Sugar::Top:
                os << sym_.top;
                return;
            case Sugar::And:
                binary(os, f->left()->left(), f->left()->right()->left(), sym_.conj, 4, 4, 5,
                       minPrec);
                return;
            case Sugar::Or:
                binary(os, f->left()->left(), f->right(), sym_.disj, 3, 3, 4, minPrec);
                return;
            case Sugar::Neg: {
                bool parens = minPrec > 5;
                if (parens)
                    os << '(';
                os << sym_.neg;
                print(os, f->left(), 6);
                if (parens)
                    os << ')';
                return;
            }
            case Sugar::None:
                break;
            }
        }
        // -> right-associative: the left operand needs a tighter context.
        binary(os, f->left(), f->right(), sym_.imp, 1, 2, 1, minPrec);
    }

private:
    const Symbols& sym_;
    bool resugar_;

    void binary(std::ostringstream& os, FormulaRef l, FormulaRef r, const char* op, int prec,
                int leftMin, int rightMin, int minPrec) {
        bool parens = minPrec > prec;
        if (parens)
            os << '(';
        print(os, l, leftMin);
        os << op;
        print(os, r, rightMin);
        if (parens)
            os << ')';
    }
};

} // namespace

std::string render(FormulaRef f, const RenderOptions& opts) {
    const Symbols& sym = opts.style == RenderStyle::Ascii     ? kAscii
                         : opts.style == RenderStyle::Unicode ? kUnicode
                                                              : kLatex;
    std::ostringstream os;
    Printer(sym, opts.resugar).print(os, f, 0);
    return os.str();
}

// ---------------------------------------------------------------------------
// Measures

int complexity(FormulaRef f) {
    switch (f->kind()) {
    case Kind::Atom:
    case Kind::Bot:
        return 1;
    case Kind::Imp:
    case Kind::CmpPl:
        return complexity(f->left()) + complexity(f->right()) + 1;
    }
    return 1;
}

namespace {
void collectSub(FormulaRef f, std::set<FormulaRef, FormulaOrder>& out) {
    if (!out.insert(f).second)
        return;
    if (f->isImp() || f->isCmpPl()) {
        collectSub(f->left(), out);
        collectSub(f->right(), out);
    }
}
} // namespace

std::vector<FormulaRef> subformulas(FormulaRef f) {
    std::set<FormulaRef, FormulaOrder> acc;
    collectSub(f, acc);
    return {acc.begin(), acc.end()};
}

std::vector<std::string> atomsOf(FormulaRef f) {
    std::set<std::string> acc;
    for (FormulaRef g : subformulas(f))
        if (g->isAtom())
            acc.insert(g->atomName());
    return {acc.begin(), acc.end()};
}

FormulaRef bigAnd(const std::vector<FormulaRef>& fs) {
    if (fs.empty())
        return mkTop();
    FormulaRef acc = fs.back();
    for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it)
        acc = mkAnd(*it, acc);
    return acc;
}

FormulaRef bigOr(const std::vector<FormulaRef>& fs) {
    if (fs.empty())
        return mkBot();
    FormulaRef acc = fs.back();
    for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it)
        acc = mkOr(*it, acc);
    return acc;
}

} // namespace cplaus
