/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#include "cplaus/gseq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace cplaus {

namespace {

void sortFormulas(std::vector<FormulaRef>& v) {
    std::sort(v.begin(), v.end(), formulaLess);
}

std::vector<FormulaRef> sortedUnique(std::vector<FormulaRef> v) {
    sortFormulas(v);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool containsFormula(const std::vector<FormulaRef>& sorted, FormulaRef f) {
    return std::binary_search(sorted.begin(), sorted.end(), f, formulaLess);
}

void insertAll(std::vector<FormulaRef>& v, const std::vector<FormulaRef>& add) {
    v.insert(v.end(), add.begin(), add.end());
    sortFormulas(v);
}

bool removeOne(std::vector<FormulaRef>& v, FormulaRef f) {
    auto it = std::find(v.begin(), v.end(), f);
    if (it == v.end())
        return false;
    v.erase(it);
    return true;
}

std::vector<FormulaRef> cmpOnly(const std::vector<FormulaRef>& v) {
    std::vector<FormulaRef> out;
    for (FormulaRef f : v)
        if (f->isCmpPl())
            out.push_back(f);
    return out;
}

} // namespace

Sequent mkSequent(std::vector<FormulaRef> ante, std::vector<FormulaRef> succ) {
    Sequent s{std::move(ante), std::move(succ)};
    sortFormulas(s.ante);
    sortFormulas(s.succ);
    return s;
}

FormulaRef sequentFormula(const Sequent& s) {
    return mkImp(bigAnd(s.ante), bigOr(s.succ));
}

std::string renderSequent(const Sequent& s, const RenderOptions& opts) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.ante.size(); ++i)
        os << (i ? ", " : "") << render(s.ante[i], opts);
    os << (opts.style == RenderStyle::Latex ? " \\Rightarrow " : " => ");
    for (std::size_t i = 0; i < s.succ.size(); ++i)
        os << (i ? ", " : "") << render(s.succ[i], opts);
    return os.str();
}

const char* gRuleName(GRule r) {
    switch (r) {
    case GRule::Init: return "init";
    case GRule::BotL: return "botL";
    case GRule::ImpL: return "impL";
    case GRule::ImpR: return "impR";
    case GRule::CP: return "CP";
    case GRule::N: return "N";
    case GRule::T: return "T";
    case GRule::W: return "W";
    case GRule::W0: return "W0";
    case GRule::C0: return "C0";
    case GRule::A: return "A";
    case GRule::NA: return "NA";
    }
    return "?";
}

namespace {

bool ruleInLogic(GRule r, LogicId l) {
    switch (r) {
    case GRule::Init:
    case GRule::BotL:
    case GRule::ImpL:
    case GRule::ImpR:
        return true;
    default:
        break;
    }
    switch (l) {
    case LogicId::N: return r == GRule::CP;
    case LogicId::NN: return r == GRule::CP || r == GRule::N;
    case LogicId::NT: return r == GRule::CP || r == GRule::T;
    case LogicId::NW: return r == GRule::CP || r == GRule::T || r == GRule::W;
    case LogicId::NC: return r == GRule::CP || r == GRule::W0 || r == GRule::C0;
    case LogicId::NA: return r == GRule::A;
    case LogicId::NNA: return r == GRule::A || r == GRule::NA;
    default: return false;
    }
}

bool distinctCmpSelection(const std::vector<FormulaRef>& sel) {
    for (std::size_t i = 0; i < sel.size(); ++i) {
        if (!sel[i]->isCmpPl())
            return false;
        for (std::size_t j = i + 1; j < sel.size(); ++j)
            if (sel[i] == sel[j])
                return false;
    }
    return true;
}

} // namespace

std::optional<std::vector<Sequent>> gExpand(const Sequent& s, const GRuleInstance& inst,
                                            LogicId logic) {
    if (!hasCalculus(logic))
        throw std::invalid_argument(std::string("logic ") + logicName(logic) +
                                    " has no sequent calculus");
    if (!ruleInLogic(inst.rule, logic))
        return std::nullopt;

    const auto& sel = inst.selection;
    auto selInAnte = [&] {
        for (FormulaRef f : sel)
            if (std::find(s.ante.begin(), s.ante.end(), f) == s.ante.end())
                return false;
        return distinctCmpSelection(sel);
    };
    auto dPrefix = [&](std::size_t k) {
        std::vector<FormulaRef> ds;
        for (std::size_t i = 0; i < k; ++i)
            ds.push_back(sel[i]->right());
        return ds;
    };

    switch (inst.rule) {
    case GRule::Init: {
        if (!inst.principal || !inst.principal->isAtom())
            return std::nullopt;
        if (std::find(s.ante.begin(), s.ante.end(), inst.principal) == s.ante.end() ||
            std::find(s.succ.begin(), s.succ.end(), inst.principal) == s.succ.end())
            return std::nullopt;
        return std::vector<Sequent>{};
    }
    case GRule::BotL: {
        if (std::find(s.ante.begin(), s.ante.end(), mkBot()) == s.ante.end())
            return std::nullopt;
        return std::vector<Sequent>{};
    }
    case GRule::ImpL: {
        FormulaRef p = inst.principal;
        if (!p || !p->isImp() || std::find(s.ante.begin(), s.ante.end(), p) == s.ante.end())
            return std::nullopt;
        Sequent p1 = s, p2 = s;
        removeOne(p1.ante, p);
        p1.succ.push_back(p->left());
        sortFormulas(p1.succ);
        removeOne(p2.ante, p);
        p2.ante.push_back(p->right());
        sortFormulas(p2.ante);
        return std::vector<Sequent>{p1, p2};
    }
    case GRule::ImpR: {
        FormulaRef p = inst.principal;
        if (!p || !p->isImp() || std::find(s.succ.begin(), s.succ.end(), p) == s.succ.end())
            return std::nullopt;
        Sequent pr = s;
        removeOne(pr.succ, p);
        pr.ante.push_back(p->left());
        pr.succ.push_back(p->right());
        sortFormulas(pr.ante);
        sortFormulas(pr.succ);
        return std::vector<Sequent>{pr};
    }
    case GRule::CP: {
        FormulaRef rp = inst.rightPrincipal;
        if (!rp || !rp->isCmpPl() ||
            std::find(s.succ.begin(), s.succ.end(), rp) == s.succ.end() || !selInAnte())
            return std::nullopt;
        std::vector<Sequent> prems;
        for (std::size_t k = 0; k < sel.size(); ++k) {
            std::vector<FormulaRef> right = dPrefix(k);
            right.push_back(rp->left());
            prems.push_back(mkSequent({sel[k]->left()}, std::move(right)));
        }
        std::vector<FormulaRef> right = dPrefix(sel.size());
        right.push_back(rp->left());
        prems.push_back(mkSequent({rp->right()}, std::move(right)));
        return prems;
    }
    case GRule::N: {
        if (sel.empty() || !selInAnte())
            return std::nullopt;
        std::vector<Sequent> prems;
        for (std::size_t k = 0; k < sel.size(); ++k)
            prems.push_back(mkSequent({sel[k]->left()}, dPrefix(k)));
        prems.push_back(mkSequent({}, dPrefix(sel.size())));
        return prems;
    }
    case GRule::T: {
        if (sel.empty() || !selInAnte())
            return std::nullopt;
        std::vector<Sequent> prems;
        for (std::size_t k = 0; k < sel.size(); ++k)
            prems.push_back(mkSequent({sel[k]->left()}, dPrefix(k)));
        Sequent big = s;
        insertAll(big.succ, dPrefix(sel.size()));
        prems.push_back(std::move(big));
        return prems;
    }
    case GRule::W: {
        FormulaRef rp = inst.rightPrincipal;
        if (!rp || !rp->isCmpPl() ||
            std::find(s.succ.begin(), s.succ.end(), rp) == s.succ.end() || !selInAnte())
            return std::nullopt;
        std::vector<Sequent> prems;
        for (std::size_t k = 0; k < sel.size(); ++k) {
            std::vector<FormulaRef> right = dPrefix(k);
            right.push_back(rp->left());
            prems.push_back(mkSequent({sel[k]->left()}, std::move(right)));
        }
        Sequent big = s;
        std::vector<FormulaRef> extra = dPrefix(sel.size());
        extra.push_back(rp->left());
        insertAll(big.succ, extra);
        prems.push_back(std::move(big));
        return prems;
    }
    case GRule::W0: {
        FormulaRef rp = inst.rightPrincipal;
        if (!rp || !rp->isCmpPl() ||
            std::find(s.succ.begin(), s.succ.end(), rp) == s.succ.end() || !sel.empty())
            return std::nullopt;
        Sequent pr = s;
        pr.succ.push_back(rp->left());
        sortFormulas(pr.succ);
        return std::vector<Sequent>{pr};
    }
    case GRule::C0: {
        FormulaRef p = inst.principal;
        if (!p || !p->isCmpPl() || std::find(s.ante.begin(), s.ante.end(), p) == s.ante.end())
            return std::nullopt;
        Sequent p1 = s, p2 = s;
        p1.ante.push_back(p->left());
        sortFormulas(p1.ante);
        p2.succ.push_back(p->right());
        sortFormulas(p2.succ);
        return std::vector<Sequent>{p1, p2};
    }
    case GRule::A: {
        FormulaRef rp = inst.rightPrincipal;
        if (!rp || !rp->isCmpPl() ||
            std::find(s.succ.begin(), s.succ.end(), rp) == s.succ.end() || !selInAnte())
            return std::nullopt;
        std::vector<FormulaRef> leftCmp = cmpOnly(s.ante);
        std::vector<FormulaRef> rightCmp = cmpOnly(s.succ);
        std::vector<Sequent> prems;
        for (std::size_t k = 0; k <= sel.size(); ++k) {
            bool last = k == sel.size();
            std::vector<FormulaRef> left = leftCmp;
            left.push_back(last ? rp->right() : sel[k]->left());
            std::vector<FormulaRef> right = rightCmp;
            right.push_back(rp->left());
            for (FormulaRef d : dPrefix(last ? sel.size() : k))
                right.push_back(d);
            prems.push_back(mkSequent(std::move(left), std::move(right)));
        }
        return prems;
    }
    case GRule::NA: {
        if (sel.empty() || !selInAnte())
            return std::nullopt;
        std::vector<FormulaRef> leftCmp = cmpOnly(s.ante);
        std::vector<FormulaRef> rightCmp = cmpOnly(s.succ);
        std::vector<Sequent> prems;
        for (std::size_t k = 0; k < sel.size(); ++k) {
            std::vector<FormulaRef> left = leftCmp;
            left.push_back(sel[k]->left());
            std::vector<FormulaRef> right = rightCmp;
            for (FormulaRef d : dPrefix(k))
                right.push_back(d);
            prems.push_back(mkSequent(std::move(left), std::move(right)));
        }
        std::vector<FormulaRef> right = rightCmp;
        for (FormulaRef d : dPrefix(sel.size()))
            right.push_back(d);
        prems.push_back(mkSequent(leftCmp, std::move(right)));
        return prems;
    }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Instance enumeration

namespace {

// Ordered selections from pool: sizes ascending, combinations and
// permutations in lexicographic order.
template <typename Fn>
void forEachOrderedSelection(const std::vector<FormulaRef>& pool, std::size_t minSize, Fn&& fn) {
    std::size_t m = pool.size();
    for (std::size_t n = minSize; n <= m; ++n) {
        std::vector<std::size_t> comb(n);
        for (std::size_t i = 0; i < n; ++i)
            comb[i] = i;
        while (true) {
            std::vector<std::size_t> perm = comb;
            do {
                std::vector<FormulaRef> sel(n);
                for (std::size_t i = 0; i < n; ++i)
                    sel[i] = pool[perm[i]];
                fn(std::move(sel));
            } while (std::next_permutation(perm.begin(), perm.end()));
            // next combination
            std::size_t i = n;
            while (i > 0 && comb[i - 1] == m - n + i - 1)
                --i;
            if (i == 0)
                break;
            ++comb[i - 1];
            for (std::size_t j = i; j < n; ++j)
                comb[j] = comb[j - 1] + 1;
        }
    }
}

struct InstanceCollector {
    const Sequent& s;
    LogicId logic;
    std::vector<GRuleInstance> out;

    void axioms() {
        std::vector<FormulaRef> shared;
        std::set_intersection(s.ante.begin(), s.ante.end(), s.succ.begin(), s.succ.end(),
                              std::back_inserter(shared), formulaLess);
        for (FormulaRef f : sortedUnique(shared))
            if (f->isAtom())
                out.push_back({GRule::Init, f, {}, nullptr});
        if (std::find(s.ante.begin(), s.ante.end(), mkBot()) != s.ante.end())
            out.push_back({GRule::BotL, nullptr, {}, nullptr});
    }

    void propositional() {
        for (FormulaRef f : sortedUnique(s.succ))
            if (f->isImp())
                out.push_back({GRule::ImpR, f, {}, nullptr});
        for (FormulaRef f : sortedUnique(s.ante))
            if (f->isImp())
                out.push_back({GRule::ImpL, f, {}, nullptr});
    }

    void modal() {
        std::vector<FormulaRef> la = cmpOnly(sortedUnique(s.ante));
        std::vector<FormulaRef> ra = cmpOnly(sortedUnique(s.succ));
        auto selectionRule = [&](GRule r, std::size_t minSize, bool withRight) {
            if (!ruleInLogic(r, logic))
                return;
            forEachOrderedSelection(la, minSize, [&](std::vector<FormulaRef> sel) {
                if (withRight) {
                    for (FormulaRef rp : ra)
                        out.push_back({r, nullptr, sel, rp});
                } else {
                    out.push_back({r, nullptr, sel, nullptr});
                }
            });
        };
        selectionRule(GRule::CP, 0, true);
        selectionRule(GRule::N, 1, false);
        selectionRule(GRule::T, 1, false);
        selectionRule(GRule::W, 0, true);
        if (ruleInLogic(GRule::W0, logic))
            for (FormulaRef rp : ra)
                out.push_back({GRule::W0, nullptr, {}, rp});
        if (ruleInLogic(GRule::C0, logic))
            for (FormulaRef p : la)
                out.push_back({GRule::C0, p, {}, nullptr});
        selectionRule(GRule::A, 0, true);
        selectionRule(GRule::NA, 1, false);
    }
};

} // namespace

std::vector<std::pair<GRuleInstance, std::vector<Sequent>>> gApplicable(const Sequent& s,
                                                                        LogicId l) {
    if (!hasCalculus(l))
        throw std::invalid_argument(std::string("logic ") + logicName(l) +
                                    " has no sequent calculus");
    InstanceCollector c{s, l, {}};
    c.axioms();
    c.propositional();
    c.modal();
    std::vector<std::pair<GRuleInstance, std::vector<Sequent>>> result;
    for (auto& inst : c.out) {
        auto prems = gExpand(s, inst, l);
        if (prems)
            result.emplace_back(std::move(inst), std::move(*prems));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Proof search

namespace {

struct SeqKey {
    std::vector<std::uint32_t> data;
    bool operator==(const SeqKey& o) const = default;
};

struct SeqKeyHash {
    std::size_t operator()(const SeqKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t x : k.data) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

Sequent canonical(const Sequent& s) {
    return {sortedUnique(s.ante), sortedUnique(s.succ)};
}

SeqKey keyOf(const Sequent& s) {
    SeqKey k;
    k.data.reserve(s.ante.size() + s.succ.size() + 1);
    for (FormulaRef f : s.ante)
        k.data.push_back(f->id());
    k.data.push_back(0xffffffffu);
    for (FormulaRef f : s.succ)
        k.data.push_back(f->id());
    return k;
}

class GSearch {
public:
    GSearch(LogicId logic, std::uint64_t budget) : logic_(logic), budget_(budget) {}

    enum class Out { Proved, Fail, Budget };
    struct Res {
        Out out;
        bool pure; // failure established without branch-repetition pruning
    };

    Res prove(const Sequent& canon, GDerivation* outDeriv) {
        SeqKey key = keyOf(canon);
        if (auto it = proved_.find(key); it != proved_.end()) {
            if (outDeriv)
                *outDeriv = it->second;
            return {Out::Proved, true};
        }
        if (failed_.count(key))
            return {Out::Fail, true};
        if (onPath_.count(key))
            return {Out::Fail, false};

        // Axioms close immediately.
        if (auto leaf = axiomLeaf(canon)) {
            proved_.emplace(key, *leaf);
            if (outDeriv)
                *outDeriv = std::move(*leaf);
            return {Out::Proved, true};
        }

        onPath_.insert(key);
        bool pure = true;
        Res final{Out::Fail, true};

        auto tryInstance = [&](const GRuleInstance& inst) -> std::optional<Res> {
            if (++spent_ > budget_)
                return Res{Out::Budget, true};
            auto prems = gExpand(canon, inst, logic_);
            if (!prems)
                return std::nullopt; // not applicable; skip
            GDerivation node;
            node.conclusion = canon;
            node.instance = inst;
            for (const Sequent& p : *prems) {
                GDerivation child;
                Res r = prove(canonical(p), &child);
                if (r.out == Out::Budget)
                    return Res{Out::Budget, true};
                if (r.out == Out::Fail) {
                    if (!r.pure)
                        pure = false;
                    return std::nullopt; // instance rejected
                }
                node.premisses.push_back(std::move(child));
            }
            proved_.emplace(key, node);
            if (outDeriv)
                *outDeriv = std::move(node);
            return Res{Out::Proved, true};
        };

        // Propositional rules are invertible: commit to the first one.
        bool committed = false;
        for (FormulaRef f : canon.succ) {
            if (f->isImp()) {
                committed = true;
                if (auto r = tryInstance({GRule::ImpR, f, {}, nullptr}))
                    final = *r;
                break;
            }
        }
        if (!committed) {
            for (FormulaRef f : canon.ante) {
                if (f->isImp()) {
                    committed = true;
                    if (auto r = tryInstance({GRule::ImpL, f, {}, nullptr}))
                        final = *r;
                    break;
                }
            }
        }
        if (!committed) {
            InstanceCollector c{canon, logic_, {}};
            c.modal();
            for (const GRuleInstance& inst : c.out) {
                if (auto r = tryInstance(inst)) {
                    final = *r;
                    if (r->out != Out::Fail)
                        break;
                }
            }
        }

        onPath_.erase(key);
        if (final.out == Out::Fail) {
            final.pure = pure;
            if (pure)
                failed_.insert(std::move(key));
        }
        return final;
    }

    std::uint64_t spent() const { return spent_; }

private:
    LogicId logic_;
    std::uint64_t budget_;
    std::uint64_t spent_ = 0;
    std::unordered_map<SeqKey, GDerivation, SeqKeyHash> proved_;
    std::unordered_set<SeqKey, SeqKeyHash> failed_;
    std::unordered_set<SeqKey, SeqKeyHash> onPath_;

    std::optional<GDerivation> axiomLeaf(const Sequent& s) {
        if (std::find(s.ante.begin(), s.ante.end(), mkBot()) != s.ante.end()) {
            GDerivation d;
            d.conclusion = s;
            d.instance = {GRule::BotL, nullptr, {}, nullptr};
            return d;
        }
        std::vector<FormulaRef> shared;
        std::set_intersection(s.ante.begin(), s.ante.end(), s.succ.begin(), s.succ.end(),
                              std::back_inserter(shared), formulaLess);
        for (FormulaRef f : shared) {
            if (f->isAtom()) {
                GDerivation d;
                d.conclusion = s;
                d.instance = {GRule::Init, f, {}, nullptr};
                return d;
            }
        }
        return std::nullopt;
    }
};

} // namespace

GResult gProve(const Sequent& s, LogicId l, std::uint64_t budget) {
    if (!hasCalculus(l))
        throw std::invalid_argument(std::string("logic ") + logicName(l) +
                                    " has no sequent calculus");
    GSearch search(l, budget);
    GDerivation deriv;
    auto r = search.prove(canonical(s), &deriv);
    GResult out;
    out.expansions = search.spent();
    switch (r.out) {
    case GSearch::Out::Proved:
        out.status = GStatus::Proved;
        out.derivation = std::move(deriv);
        break;
    case GSearch::Out::Fail:
        out.status = GStatus::Fail;
        break;
    case GSearch::Out::Budget:
        out.status = GStatus::BudgetExceeded;
        break;
    }
    return out;
}

GResult gProve(FormulaRef f, LogicId l, std::uint64_t budget) {
    return gProve(mkSequent({}, {f}), l, budget);
}

bool gReplay(const GDerivation& d, LogicId l) {
    Sequent canon = canonical(d.conclusion);
    auto prems = gExpand(canon, d.instance, l);
    if (!prems)
        return false;
    if (prems->size() != d.premisses.size())
        return false;
    for (std::size_t i = 0; i < prems->size(); ++i) {
        if (canonical((*prems)[i]) != canonical(d.premisses[i].conclusion))
            return false;
        if (!gReplay(d.premisses[i], l))
            return false;
    }
    return true;
}

bool gCutTest(const Sequent& left, const Sequent& right, FormulaRef cutFormula, LogicId l,
              std::uint64_t budget) {
    Sequent lhs = left, rhs = right;
    if (!removeOne(lhs.succ, cutFormula))
        throw std::invalid_argument("cut formula not in the succedent of the left premiss");
    if (!removeOne(rhs.ante, cutFormula))
        throw std::invalid_argument("cut formula not in the antecedent of the right premiss");
    std::vector<FormulaRef> ante = lhs.ante;
    ante.insert(ante.end(), rhs.ante.begin(), rhs.ante.end());
    std::vector<FormulaRef> succ = lhs.succ;
    succ.insert(succ.end(), rhs.succ.begin(), rhs.succ.end());
    return gProve(mkSequent(std::move(ante), std::move(succ)), l, budget).status ==
           GStatus::Proved;
}

// ---------------------------------------------------------------------------
// Export

namespace {

nlohmann::json sequentJson(const Sequent& s) {
    nlohmann::json j;
    auto strs = [](const std::vector<FormulaRef>& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (FormulaRef f : v)
            arr.push_back(render(f));
        return arr;
    };
    j["ante"] = strs(s.ante);
    j["succ"] = strs(s.succ);
    return j;
}

nlohmann::json derivationJson(const GDerivation& d) {
    nlohmann::json j;
    j["conclusion"] = sequentJson(d.conclusion);
    j["rule"] = gRuleName(d.instance.rule);
    if (d.instance.principal)
        j["principal"] = render(d.instance.principal);
    if (!d.instance.selection.empty()) {
        nlohmann::json sel = nlohmann::json::array();
        for (FormulaRef f : d.instance.selection)
            sel.push_back(render(f));
        j["selection"] = std::move(sel);
    }
    if (d.instance.rightPrincipal)
        j["rightPrincipal"] = render(d.instance.rightPrincipal);
    nlohmann::json kids = nlohmann::json::array();
    for (const auto& p : d.premisses)
        kids.push_back(derivationJson(p));
    j["premisses"] = std::move(kids);
    return j;
}

std::string gRuleLatex(const GRuleInstance& inst) {
    std::size_t n = inst.selection.size();
    switch (inst.rule) {
    case GRule::Init: return "\\mathsf{init}";
    case GRule::BotL: return "\\bot_{\\mathsf{L}}";
    case GRule::ImpL: return "\\to_{\\mathsf{L}}";
    case GRule::ImpR: return "\\to_{\\mathsf{R}}";
    case GRule::CP: return "\\mathsf{CP}_{" + std::to_string(n) + "}";
    case GRule::N: return "\\mathsf{N}_{" + std::to_string(n) + "}";
    case GRule::T: return "\\mathsf{T}_{" + std::to_string(n) + "}";
    case GRule::W: return "\\mathsf{W}_{" + std::to_string(n) + "}";
    case GRule::W0: return "\\mathsf{W_0}";
    case GRule::C0: return "\\mathsf{C_0}";
    case GRule::A: return "\\mathsf{A}_{" + std::to_string(n) + "}";
    case GRule::NA: return "\\mathsf{N^A}_{" + std::to_string(n) + "}";
    }
    return "?";
}

void latexTree(const GDerivation& d, std::ostringstream& os) {
    os << "\\infer[" << gRuleLatex(d.instance) << "]{"
       << renderSequent(d.conclusion, {RenderStyle::Latex, false}) << "}{";
    for (std::size_t i = 0; i < d.premisses.size(); ++i) {
        if (i)
            os << " & ";
        latexTree(d.premisses[i], os);
    }
    os << "}";
}

} // namespace

std::string gDerivationToJson(const GDerivation& d, int indent) {
    return derivationJson(d).dump(indent);
}

std::string gDerivationToLatex(const GDerivation& d) {
    std::ostringstream os;
    latexTree(d, os);
    return os.str();
}

} // namespace cplaus
