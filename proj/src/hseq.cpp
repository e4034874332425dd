/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#include "cplaus/hseq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cplaus/semantics.hpp"

namespace cplaus {

namespace {

std::vector<FormulaRef> sortedSet(std::vector<FormulaRef> v) {
    std::sort(v.begin(), v.end(), formulaLess);
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool member(const std::vector<FormulaRef>& sortedVec, FormulaRef f) {
    return std::binary_search(sortedVec.begin(), sortedVec.end(), f, formulaLess);
}

// Set insert; returns false if already present.
bool insertFormula(std::vector<FormulaRef>& sortedVec, FormulaRef f) {
    auto it = std::lower_bound(sortedVec.begin(), sortedVec.end(), f, formulaLess);
    if (it != sortedVec.end() && *it == f)
        return false;
    sortedVec.insert(it, f);
    return true;
}

bool subsetOf(const std::vector<FormulaRef>& a, const std::vector<FormulaRef>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end(), formulaLess);
}

} // namespace

Block mkBlock(std::vector<FormulaRef> sigma, FormulaRef head) {
    return Block{sortedSet(std::move(sigma)), head};
}

FormulaRef blockFormula(const Block& b) {
    return mkCmpPl(bigOr(b.sigma), b.head);
}

HComponent mkComponent(std::vector<FormulaRef> gamma, std::vector<FormulaRef> delta,
                       std::vector<Block> blocks) {
    return HComponent{sortedSet(std::move(gamma)), sortedSet(std::move(delta)),
                      std::move(blocks)};
}

FormulaRef componentFormula(const HComponent& c) {
    std::vector<FormulaRef> disjuncts = c.delta;
    for (const Block& b : c.blocks)
        disjuncts.push_back(blockFormula(b));
    return mkImp(bigAnd(c.gamma), bigOr(disjuncts));
}

Hypersequent wrapFormula(FormulaRef f) {
    return Hypersequent{{mkComponent({}, {f})}};
}

std::string renderComponent(const HComponent& c, const RenderOptions& opts) {
    std::ostringstream os;
    bool latex = opts.style == RenderStyle::Latex;
    for (std::size_t i = 0; i < c.gamma.size(); ++i)
        os << (i ? ", " : "") << render(c.gamma[i], opts);
    os << (latex ? " \\Rightarrow " : " => ");
    bool first = true;
    for (FormulaRef f : c.delta) {
        os << (first ? "" : ", ") << render(f, opts);
        first = false;
    }
    for (const Block& b : c.blocks) {
        os << (first ? "" : ", ");
        first = false;
        os << (latex ? "\\langle " : "<");
        for (std::size_t i = 0; i < b.sigma.size(); ++i)
            os << (i ? ", " : "") << render(b.sigma[i], opts);
        os << (latex ? " \\lhd " : " <| ") << render(b.head, opts)
           << (latex ? "\\rangle" : ">");
    }
    return os.str();
}

std::string renderHypersequent(const Hypersequent& h, const RenderOptions& opts) {
    std::ostringstream os;
    bool latex = opts.style == RenderStyle::Latex;
    for (std::size_t i = 0; i < h.components.size(); ++i) {
        if (i)
            os << (latex ? " \\mid " : " | ");
        os << renderComponent(h.components[i], opts);
    }
    return os.str();
}

bool hypersequentValidInModel(const Model& m, const Hypersequent& h) {
    for (const HComponent& c : h.components)
        if (validInModel(m, componentFormula(c)))
            return true;
    return false;
}

const char* hRuleName(HRule r) {
    switch (r) {
    case HRule::Init: return "init";
    case HRule::BotL: return "botL";
    case HRule::ImpL: return "impL";
    case HRule::ImpR: return "impR";
    case HRule::CmpL: return "cmpL";
    case HRule::CmpR: return "cmpR";
    case HRule::Jp: return "jp";
    case HRule::N: return "N";
    case HRule::T: return "T";
    case HRule::W: return "W";
    case HRule::C: return "C";
    case HRule::AL: return "A_L";
    case HRule::AR: return "A_R";
    }
    return "?";
}

bool hRuleInLogic(HRule r, LogicId l) {
    switch (r) {
    case HRule::Init:
    case HRule::BotL:
    case HRule::ImpL:
    case HRule::ImpR:
    case HRule::CmpL:
    case HRule::CmpR:
    case HRule::Jp:
        return true;
    case HRule::N:
        return l == LogicId::NN || l == LogicId::NNA;
    case HRule::T:
        return l == LogicId::NT || l == LogicId::NW;
    case HRule::W:
        return l == LogicId::NW || l == LogicId::NC;
    case HRule::C:
        return l == LogicId::NC;
    case HRule::AL:
    case HRule::AR:
        return l == LogicId::NA || l == LogicId::NNA;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Saturation conditions

namespace {

bool hasBlockWith(const HComponent& c, FormulaRef head, FormulaRef elem) {
    for (const Block& b : c.blocks)
        if (b.head == head && member(b.sigma, elem))
            return true;
    return false;
}

bool hasSuperBlock(const HComponent& c, FormulaRef head, const std::vector<FormulaRef>& sigma) {
    for (const Block& b : c.blocks)
        if (b.head == head && subsetOf(sigma, b.sigma))
            return true;
    return false;
}

// Saturated w.r.t. one candidate rule application.
bool conditionHolds(const Hypersequent& h, const HRuleInstance& inst) {
    const HComponent& c = h.components[inst.component];
    switch (inst.rule) {
    case HRule::Init:
    case HRule::BotL:
        return false; // axioms have no saturation condition to satisfy
    case HRule::ImpL:
        return member(c.delta, inst.principal->left()) ||
               member(c.gamma, inst.principal->right());
    case HRule::ImpR:
        return member(c.gamma, inst.principal->left()) &&
               member(c.delta, inst.principal->right());
    case HRule::CmpR:
        return hasBlockWith(c, inst.principal->right(), inst.principal->left());
    case HRule::CmpL: {
        const Block& b = c.blocks[inst.blockIndex];
        return member(b.sigma, inst.principal->right()) ||
               hasSuperBlock(c, inst.principal->left(), b.sigma);
    }
    case HRule::Jp: {
        const Block& b = c.blocks[inst.blockIndex];
        for (const HComponent& other : h.components)
            if (member(other.gamma, b.head) && subsetOf(b.sigma, other.delta))
                return true;
        return false;
    }
    case HRule::N:
        return hasBlockWith(c, mkTop(), mkBot());
    case HRule::T:
        return member(c.delta, inst.principal->right()) ||
               hasBlockWith(c, inst.principal->left(), mkBot());
    case HRule::W:
        return subsetOf(c.blocks[inst.blockIndex].sigma, c.delta);
    case HRule::C:
        return member(c.delta, inst.principal->right()) ||
               member(c.gamma, inst.principal->left());
    case HRule::AL:
        return member(h.components[inst.target].gamma, inst.principal);
    case HRule::AR:
        return member(h.components[inst.target].delta, inst.principal);
    }
    return true;
}

void insertBlock(HComponent& c, Block b) {
    for (const Block& e : c.blocks)
        if (e == b)
            return;
    c.blocks.push_back(std::move(b));
}

// Grow the sigma of block i by f, keeping the earlier copy if the grown
// block collides with another one.
void growBlock(HComponent& c, int i, FormulaRef f) {
    Block grown = c.blocks[i];
    insertFormula(grown.sigma, f);
    for (int j = 0; j < static_cast<int>(c.blocks.size()); ++j) {
        if (j != i && c.blocks[j] == grown) {
            c.blocks.erase(c.blocks.begin() + std::max(i, j));
            if (j < i)
                return; // earlier copy already in place
            c.blocks[i] = std::move(grown);
            return;
        }
    }
    c.blocks[i] = std::move(grown);
}

} // namespace

std::optional<std::vector<Hypersequent>> hExpand(const Hypersequent& h, const HRuleInstance& inst,
                                                 LogicId l) {
    if (!hasCalculus(l))
        throw std::invalid_argument(std::string("logic ") + logicName(l) +
                                    " has no hypersequent calculus");
    if (!hRuleInLogic(inst.rule, l))
        return std::nullopt;
    if (inst.component < 0 || inst.component >= static_cast<int>(h.components.size()))
        return std::nullopt;
    const HComponent& c = h.components[inst.component];

    auto needPrincipal = [&](bool inGamma, Kind kind) {
        return inst.principal && inst.principal->kind() == kind &&
               member(inGamma ? c.gamma : c.delta, inst.principal);
    };
    auto validBlock = [&] {
        return inst.blockIndex >= 0 && inst.blockIndex < static_cast<int>(c.blocks.size());
    };

    // Validate shape.
    switch (inst.rule) {
    case HRule::Init:
        if (!inst.principal || !inst.principal->isAtom() || !member(c.gamma, inst.principal) ||
            !member(c.delta, inst.principal))
            return std::nullopt;
        return std::vector<Hypersequent>{};
    case HRule::BotL:
        if (!member(c.gamma, mkBot()))
            return std::nullopt;
        return std::vector<Hypersequent>{};
    case HRule::ImpL:
        if (!needPrincipal(true, Kind::Imp))
            return std::nullopt;
        break;
    case HRule::ImpR:
        if (!needPrincipal(false, Kind::Imp))
            return std::nullopt;
        break;
    case HRule::CmpR:
        if (!needPrincipal(false, Kind::CmpPl))
            return std::nullopt;
        break;
    case HRule::CmpL:
        if (!needPrincipal(true, Kind::CmpPl) || !validBlock())
            return std::nullopt;
        break;
    case HRule::Jp:
    case HRule::W:
        if (!validBlock())
            return std::nullopt;
        break;
    case HRule::N:
        break;
    case HRule::T:
    case HRule::C:
        if (!needPrincipal(true, Kind::CmpPl))
            return std::nullopt;
        break;
    case HRule::AL:
        if (!needPrincipal(true, Kind::CmpPl) || inst.target < 0 ||
            inst.target >= static_cast<int>(h.components.size()))
            return std::nullopt;
        break;
    case HRule::AR:
        if (!needPrincipal(false, Kind::CmpPl) || inst.target < 0 ||
            inst.target >= static_cast<int>(h.components.size()))
            return std::nullopt;
        break;
    }

    // The strategy never applies an instance whose condition holds.
    if (conditionHolds(h, inst))
        return std::nullopt;

    std::vector<Hypersequent> prems;
    auto push = [&](Hypersequent p) { prems.push_back(std::move(p)); };
    int k = inst.component;

    switch (inst.rule) {
    case HRule::ImpL: {
        Hypersequent p1 = h, p2 = h;
        insertFormula(p1.components[k].gamma, inst.principal->right());
        insertFormula(p2.components[k].delta, inst.principal->left());
        push(std::move(p1));
        push(std::move(p2));
        break;
    }
    case HRule::ImpR: {
        Hypersequent p = h;
        insertFormula(p.components[k].gamma, inst.principal->left());
        insertFormula(p.components[k].delta, inst.principal->right());
        push(std::move(p));
        break;
    }
    case HRule::CmpR: {
        Hypersequent p = h;
        insertBlock(p.components[k], mkBlock({inst.principal->left()}, inst.principal->right()));
        push(std::move(p));
        break;
    }
    case HRule::CmpL: {
        Hypersequent p1 = h, p2 = h;
        growBlock(p1.components[k], inst.blockIndex, inst.principal->right());
        insertBlock(p2.components[k],
                    Block{c.blocks[inst.blockIndex].sigma, inst.principal->left()});
        push(std::move(p1));
        push(std::move(p2));
        break;
    }
    case HRule::Jp: {
        Hypersequent p = h;
        const Block& b = c.blocks[inst.blockIndex];
        p.components.push_back(mkComponent({b.head}, b.sigma));
        push(std::move(p));
        break;
    }
    case HRule::N: {
        Hypersequent p = h;
        insertBlock(p.components[k], mkBlock({mkBot()}, mkTop()));
        push(std::move(p));
        break;
    }
    case HRule::T: {
        Hypersequent p1 = h, p2 = h;
        insertFormula(p1.components[k].delta, inst.principal->right());
        insertBlock(p2.components[k], mkBlock({mkBot()}, inst.principal->left()));
        push(std::move(p1));
        push(std::move(p2));
        break;
    }
    case HRule::W: {
        Hypersequent p = h;
        for (FormulaRef f : c.blocks[inst.blockIndex].sigma)
            insertFormula(p.components[k].delta, f);
        push(std::move(p));
        break;
    }
    case HRule::C: {
        Hypersequent p1 = h, p2 = h;
        insertFormula(p1.components[k].delta, inst.principal->right());
        insertFormula(p2.components[k].gamma, inst.principal->left());
        push(std::move(p1));
        push(std::move(p2));
        break;
    }
    case HRule::AL: {
        Hypersequent p = h;
        insertFormula(p.components[inst.target].gamma, inst.principal);
        push(std::move(p));
        break;
    }
    case HRule::AR: {
        Hypersequent p = h;
        insertFormula(p.components[inst.target].delta, inst.principal);
        push(std::move(p));
        break;
    }
    case HRule::Init:
    case HRule::BotL:
        break;
    }
    return prems;
}

// ---------------------------------------------------------------------------
// Instance scanning

namespace {

// Emits instances of one rule whose saturation condition fails, in the
// deterministic scan order; fn returns true to stop early.
template <typename Fn>
bool scanRule(const Hypersequent& h, HRule rule, Fn&& fn) {
    int n = static_cast<int>(h.components.size());
    auto tryInst = [&](HRuleInstance inst) {
        return !conditionHolds(h, inst) && fn(inst);
    };
    for (int k = 0; k < n; ++k) {
        const HComponent& c = h.components[k];
        switch (rule) {
        case HRule::Init:
            for (FormulaRef f : c.gamma)
                if (f->isAtom() && member(c.delta, f) &&
                    fn(HRuleInstance{rule, k, f, -1, -1}))
                    return true;
            break;
        case HRule::BotL:
            if (member(c.gamma, mkBot()) && fn(HRuleInstance{rule, k, nullptr, -1, -1}))
                return true;
            break;
        case HRule::ImpL:
            for (FormulaRef f : c.gamma)
                if (f->isImp() && tryInst({rule, k, f, -1, -1}))
                    return true;
            break;
        case HRule::ImpR:
            for (FormulaRef f : c.delta)
                if (f->isImp() && tryInst({rule, k, f, -1, -1}))
                    return true;
            break;
        case HRule::CmpR:
            for (FormulaRef f : c.delta)
                if (f->isCmpPl() && tryInst({rule, k, f, -1, -1}))
                    return true;
            break;
        case HRule::CmpL:
            for (FormulaRef f : c.gamma) {
                if (!f->isCmpPl())
                    continue;
                for (int b = 0; b < static_cast<int>(c.blocks.size()); ++b)
                    if (tryInst({rule, k, f, b, -1}))
                        return true;
            }
            break;
        case HRule::Jp:
            for (int b = 0; b < static_cast<int>(c.blocks.size()); ++b)
                if (tryInst({rule, k, nullptr, b, -1}))
                    return true;
            break;
        case HRule::N:
            if (tryInst({rule, k, nullptr, -1, -1}))
                return true;
            break;
        case HRule::T:
        case HRule::C:
            for (FormulaRef f : c.gamma)
                if (f->isCmpPl() && tryInst({rule, k, f, -1, -1}))
                    return true;
            break;
        case HRule::W:
            for (int b = 0; b < static_cast<int>(c.blocks.size()); ++b)
                if (tryInst({rule, k, nullptr, b, -1}))
                    return true;
            break;
        case HRule::AL:
            for (FormulaRef f : c.gamma) {
                if (!f->isCmpPl())
                    continue;
                for (int j = 0; j < n; ++j)
                    if (j != k && tryInst({rule, k, f, -1, j}))
                        return true;
            }
            break;
        case HRule::AR:
            for (FormulaRef f : c.delta) {
                if (!f->isCmpPl())
                    continue;
                for (int j = 0; j < n; ++j)
                    if (j != k && tryInst({rule, k, f, -1, j}))
                        return true;
            }
            break;
        }
    }
    return false;
}

// Proof-search rule order: propositional and block-creating rules before
// component-creating ones; jp late keeps the component count minimal.
constexpr HRule kStrategyOrder[] = {HRule::ImpR, HRule::ImpL, HRule::CmpR, HRule::W,
                                    HRule::N,    HRule::T,    HRule::C,    HRule::CmpL,
                                    HRule::Jp,   HRule::AL,   HRule::AR};

// Closed = some component is the conclusion of init or botL.
bool isInitial(const Hypersequent& h) {
    for (const HComponent& c : h.components) {
        if (member(c.gamma, mkBot()))
            return true;
        for (FormulaRef f : c.gamma)
            if (f->isAtom() && member(c.delta, f))
                return true;
    }
    return false;
}

std::optional<HRuleInstance> firstApplicable(const Hypersequent& h, LogicId l) {
    std::optional<HRuleInstance> found;
    for (HRule r : kStrategyOrder) {
        if (!hRuleInLogic(r, l))
            continue;
        if (scanRule(h, r, [&](const HRuleInstance& inst) {
                found = inst;
                return true;
            }))
            return found;
    }
    return std::nullopt;
}

} // namespace

std::vector<std::pair<HRuleInstance, std::vector<Hypersequent>>> hApplicable(const Hypersequent& h,
                                                                             LogicId l) {
    if (!hasCalculus(l))
        throw std::invalid_argument(std::string("logic ") + logicName(l) +
                                    " has no hypersequent calculus");
    std::vector<std::pair<HRuleInstance, std::vector<Hypersequent>>> out;
    auto collect = [&](const HRuleInstance& inst) {
        auto prems = hExpand(h, inst, l);
        if (prems)
            out.emplace_back(inst, std::move(*prems));
        return false;
    };
    for (HRule r : {HRule::Init, HRule::BotL}) {
        scanRule(h, r, [&](const HRuleInstance& inst) {
            out.emplace_back(inst, std::vector<Hypersequent>{});
            return false;
        });
    }
    for (HRule r : kStrategyOrder)
        if (hRuleInLogic(r, l))
            scanRule(h, r, collect);
    return out;
}

// ---------------------------------------------------------------------------
// Saturation report

SaturationReport saturationReport(const Hypersequent& h, LogicId l) {
    if (!hasCalculus(l))
        throw std::invalid_argument(std::string("logic ") + logicName(l) +
                                    " has no hypersequent calculus");
    SaturationReport rep;
    // (init): Gamma_k and Delta_k share no formula; (botL): bot not in Gamma_k.
    for (int k = 0; k < static_cast<int>(h.components.size()); ++k) {
        const HComponent& c = h.components[k];
        for (FormulaRef f : c.gamma)
            if (member(c.delta, f))
                rep.defects.push_back({HRule::Init, k, render(f) + " occurs on both sides"});
        if (member(c.gamma, mkBot()))
            rep.defects.push_back({HRule::BotL, k, "bot in the antecedent"});
    }
    for (HRule r : kStrategyOrder) {
        if (!hRuleInLogic(r, l))
            continue;
        scanRule(h, r, [&](const HRuleInstance& inst) {
            std::ostringstream os;
            if (inst.principal)
                os << render(inst.principal);
            if (inst.blockIndex >= 0)
                os << (inst.principal ? " / " : "") << "block #" << inst.blockIndex;
            if (inst.target >= 0)
                os << " -> component " << inst.target;
            rep.defects.push_back({r, inst.component, os.str()});
            return false;
        });
    }
    rep.saturated = rep.defects.empty();
    return rep;
}

bool isSaturated(const Hypersequent& h, LogicId l) {
    return saturationReport(h, l).saturated;
}

// ---------------------------------------------------------------------------
// Proof search

namespace {

struct HSearch {
    LogicId logic;
    std::uint64_t ceiling;
    std::uint64_t steps = 0;
    bool ceilingHit = false;

    // Returns the proof tree, or nullopt with `refutation` filled in.
    std::optional<HDerivation> run(const Hypersequent& h, HRefutation& refutation,
                                   std::vector<RefutationTraceStep>& trace) {
        if (isInitial(h)) {
            HDerivation leaf;
            leaf.conclusion = h;
            leaf.instance = axiomInstance(h);
            return leaf;
        }
        auto inst = firstApplicable(h, logic);
        if (!inst) {
            refutation.saturated = h;
            return std::nullopt;
        }
        if (++steps > ceiling) {
            ceilingHit = true;
            return std::nullopt;
        }
        auto prems = hExpand(h, *inst, logic);
        // firstApplicable only yields expandable instances.
        HDerivation node;
        node.conclusion = h;
        node.instance = *inst;
        for (const Hypersequent& p : *prems) {
            auto sub = run(p, refutation, trace);
            if (ceilingHit)
                return std::nullopt;
            if (!sub) {
                std::ostringstream os;
                if (inst->principal)
                    os << render(inst->principal);
                trace.push_back({inst->rule, inst->component, os.str()});
                return std::nullopt;
            }
            node.premisses.push_back(std::move(*sub));
        }
        return node;
    }

    static HRuleInstance axiomInstance(const Hypersequent& h) {
        for (int k = 0; k < static_cast<int>(h.components.size()); ++k) {
            const HComponent& c = h.components[k];
            if (member(c.gamma, mkBot()))
                return {HRule::BotL, k, nullptr, -1, -1};
            for (FormulaRef f : c.gamma)
                if (f->isAtom() && member(c.delta, f))
                    return {HRule::Init, k, f, -1, -1};
        }
        return {};
    }
};

} // namespace

HResult hProve(const Hypersequent& h, LogicId l, std::uint64_t safetyCeiling) {
    if (!hasCalculus(l))
        throw std::invalid_argument(std::string("logic ") + logicName(l) +
                                    " has no hypersequent calculus");
    HSearch search{l, safetyCeiling};
    HRefutation refutation;
    std::vector<RefutationTraceStep> trace;
    auto proof = search.run(h, refutation, trace);
    HResult r;
    r.steps = search.steps;
    if (search.ceilingHit) {
        r.status = HStatus::CeilingDefect;
        return r;
    }
    if (proof) {
        r.status = HStatus::Proved;
        r.proof = std::move(*proof);
    } else {
        r.status = HStatus::Refuted;
        std::reverse(trace.begin(), trace.end());
        refutation.trace = std::move(trace);
        r.refutation = std::move(refutation);
    }
    return r;
}

HResult hProve(FormulaRef f, LogicId l, std::uint64_t safetyCeiling) {
    return hProve(wrapFormula(f), l, safetyCeiling);
}

bool hReplay(const HDerivation& d, LogicId l) {
    auto prems = hExpand(d.conclusion, d.instance, l);
    if (!prems)
        return false;
    if (prems->size() != d.premisses.size())
        return false;
    for (std::size_t i = 0; i < prems->size(); ++i) {
        if ((*prems)[i] != d.premisses[i].conclusion)
            return false;
        if (!hReplay(d.premisses[i], l))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Export

namespace {

nlohmann::json blockJson(const Block& b) {
    nlohmann::json j;
    nlohmann::json sigma = nlohmann::json::array();
    for (FormulaRef f : b.sigma)
        sigma.push_back(render(f));
    j["sigma"] = std::move(sigma);
    j["head"] = render(b.head);
    return j;
}

nlohmann::json componentJson(const HComponent& c) {
    nlohmann::json j;
    nlohmann::json gamma = nlohmann::json::array(), delta = nlohmann::json::array(),
                   blocks = nlohmann::json::array();
    for (FormulaRef f : c.gamma)
        gamma.push_back(render(f));
    for (FormulaRef f : c.delta)
        delta.push_back(render(f));
    for (const Block& b : c.blocks)
        blocks.push_back(blockJson(b));
    j["gamma"] = std::move(gamma);
    j["delta"] = std::move(delta);
    j["blocks"] = std::move(blocks);
    return j;
}

nlohmann::json hypersequentJsonObj(const Hypersequent& h) {
    nlohmann::json comps = nlohmann::json::array();
    for (const HComponent& c : h.components)
        comps.push_back(componentJson(c));
    return nlohmann::json{{"components", std::move(comps)}};
}

nlohmann::json hDerivationJsonObj(const HDerivation& d) {
    nlohmann::json j;
    j["conclusion"] = hypersequentJsonObj(d.conclusion);
    j["rule"] = hRuleName(d.instance.rule);
    j["component"] = d.instance.component;
    if (d.instance.principal)
        j["principal"] = render(d.instance.principal);
    if (d.instance.blockIndex >= 0)
        j["block"] = d.instance.blockIndex;
    if (d.instance.target >= 0)
        j["target"] = d.instance.target;
    nlohmann::json kids = nlohmann::json::array();
    for (const auto& p : d.premisses)
        kids.push_back(hDerivationJsonObj(p));
    j["premisses"] = std::move(kids);
    return j;
}

std::string hRuleLatex(HRule r) {
    switch (r) {
    case HRule::Init: return "\\mathsf{init}";
    case HRule::BotL: return "\\bot_{\\mathsf{L}}";
    case HRule::ImpL: return "\\to_{\\mathsf{L}}";
    case HRule::ImpR: return "\\to_{\\mathsf{R}}";
    case HRule::CmpL: return "\\preccurlyeq_{\\mathsf{L}}";
    case HRule::CmpR: return "\\preccurlyeq_{\\mathsf{R}}";
    case HRule::Jp: return "\\mathsf{jp}";
    case HRule::N: return "\\mathsf{N}";
    case HRule::T: return "\\mathsf{T}";
    case HRule::W: return "\\mathsf{W}";
    case HRule::C: return "\\mathsf{C}";
    case HRule::AL: return "\\mathsf{A_L}";
    case HRule::AR: return "\\mathsf{A_R}";
    }
    return "?";
}

void hLatexTree(const HDerivation& d, std::ostringstream& os) {
    os << "\\infer[" << hRuleLatex(d.instance.rule) << "]{"
       << renderHypersequent(d.conclusion, {RenderStyle::Latex, false}) << "}{";
    for (std::size_t i = 0; i < d.premisses.size(); ++i) {
        if (i)
            os << " & ";
        hLatexTree(d.premisses[i], os);
    }
    os << "}";
}

} // namespace

std::string hypersequentToJson(const Hypersequent& h, int indent) {
    return hypersequentJsonObj(h).dump(indent);
}

std::string hDerivationToJson(const HDerivation& d, int indent) {
    return hDerivationJsonObj(d).dump(indent);
}

std::string hDerivationToLatex(const HDerivation& d) {
    std::ostringstream os;
    hLatexTree(d, os);
    return os.str();
}

} // namespace cplaus
