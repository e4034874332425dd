/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#include "cplaus/countermodel.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cplaus {

namespace {

bool memberSorted(const std::vector<FormulaRef>& v, FormulaRef f) {
    return std::binary_search(v.begin(), v.end(), f, formulaLess);
}

// Sigma^Delta with the set projection of Sigma.
WorldMask sigmaDelta(const Hypersequent& h, const std::vector<FormulaRef>& sigma) {
    WorldMask mask = 0;
    for (std::size_t n = 0; n < h.components.size(); ++n) {
        const auto& delta = h.components[n].delta;
        bool all = true;
        for (FormulaRef f : sigma)
            if (!memberSorted(delta, f)) {
                all = false;
                break;
            }
        if (all)
            mask |= WorldMask(1) << n;
    }
    return mask;
}

std::vector<WorldMask> sortedDistinct(std::vector<WorldMask> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

Model extractModel(const Hypersequent& h, LogicId l) {
    if (!hasCalculus(l))
        throw std::invalid_argument(std::string("logic ") + logicName(l) +
                                    " has no hypersequent calculus");
    if (!isSaturated(h, l))
        throw std::invalid_argument("countermodel extraction requires a saturated hypersequent");
    const int worlds = static_cast<int>(h.components.size());
    if (worlds < 1 || worlds > kMaxWorlds)
        throw std::invalid_argument("component count out of range for extraction");

    Model m;
    m.worldCount = worlds;
    std::vector<std::vector<WorldMask>> base(worlds);
    for (int n = 0; n < worlds; ++n)
        for (const Block& b : h.components[n].blocks)
            base[n].push_back(sigmaDelta(h, b.sigma));

    switch (l) {
    case LogicId::N:
    case LogicId::NN:
        for (int n = 0; n < worlds; ++n)
            m.neighbourhoods.push_back(sortedDistinct(base[n]));
        break;
    case LogicId::NT:
    case LogicId::NW:
        for (int n = 0; n < worlds; ++n) {
            WorldMask o = WorldMask(1) << n;
            for (WorldMask a : base[n])
                o |= a;
            base[n].push_back(o);
            m.neighbourhoods.push_back(sortedDistinct(base[n]));
        }
        break;
    case LogicId::NC:
        for (int n = 0; n < worlds; ++n) {
            base[n].push_back(WorldMask(1) << n);
            m.neighbourhoods.push_back(sortedDistinct(base[n]));
        }
        break;
    case LogicId::NA:
    case LogicId::NNA: {
        std::vector<WorldMask> shared;
        for (int n = 0; n < worlds; ++n)
            shared.insert(shared.end(), base[n].begin(), base[n].end());
        shared = sortedDistinct(shared);
        m.neighbourhoods.assign(worlds, shared);
        break;
    }
    default:
        break;
    }

    std::set<std::string> atoms;
    for (const HComponent& c : h.components) {
        auto collect = [&](FormulaRef f) {
            for (const std::string& a : atomsOf(f))
                atoms.insert(a);
        };
        for (FormulaRef f : c.gamma)
            collect(f);
        for (FormulaRef f : c.delta)
            collect(f);
        for (const Block& b : c.blocks)
            collect(blockFormula(b));
    }
    for (const std::string& a : atoms) {
        WorldMask v = 0;
        for (int n = 0; n < worlds; ++n)
            if (memberSorted(h.components[n].gamma, mkAtom(a)))
                v |= WorldMask(1) << n;
        m.valuation[a] = v;
    }
    validateModel(m);
    return m;
}

ExtractionReport verifyExtraction(const Hypersequent& h, const Model& m, LogicId l,
                                  FormulaRef root) {
    ExtractionReport rep;
    rep.model = m;
    rep.root = root;
    rep.witnessWorld = 0;

    auto fail = [&](const std::string& what) {
        rep.ok = false;
        rep.failure = what;
    };

    for (int n = 0; n < static_cast<int>(h.components.size()); ++n) {
        const HComponent& c = h.components[n];
        auto claim = [&](FormulaRef f, bool expected, const char* side) {
            ClaimCheck cc;
            cc.world = n;
            cc.item = std::string(side) + " " + render(f);
            cc.expected = expected;
            cc.actual = forces(m, n, f);
            rep.claims.push_back(cc);
            return cc.ok();
        };
        for (FormulaRef f : c.gamma)
            if (!claim(f, true, "ante")) {
                fail("claim (i) fails at world " + std::to_string(n) + ": " + render(f));
                return rep;
            }
        for (FormulaRef f : c.delta)
            if (!claim(f, false, "succ")) {
                fail("claim (ii) fails at world " + std::to_string(n) + ": " + render(f));
                return rep;
            }
        for (const Block& b : c.blocks)
            if (!claim(blockFormula(b), false, "block")) {
                fail("claim (iii) fails at world " + std::to_string(n) + ": " +
                     render(blockFormula(b)));
                return rep;
            }
    }

    for (FrameCondition fc : frameConditions(l)) {
        bool holds = checkCondition(m, fc);
        rep.frameChecks.push_back({fc, holds});
        if (!holds) {
            fail(std::string("frame condition ") + frameConditionName(fc) + " fails");
            return rep;
        }
    }

    rep.rootRefuted = !forces(m, rep.witnessWorld, root);
    if (!rep.rootRefuted) {
        fail("root formula is not refuted at the witness world");
        return rep;
    }
    rep.ok = true;
    return rep;
}

ExtractionReport refuteReport(const Hypersequent& saturated, LogicId l, FormulaRef root) {
    Model m = extractModel(saturated, l);
    return verifyExtraction(saturated, m, l, root);
}

std::string reportToJson(const ExtractionReport& r, int indent) {
    nlohmann::json j;
    j["model"] = nlohmann::json::parse(modelToJson(r.model));
    j["witnessWorld"] = r.witnessWorld;
    if (r.root)
        j["root"] = render(r.root);
    j["ok"] = r.ok;
    j["rootRefuted"] = r.rootRefuted;
    nlohmann::json claims = nlohmann::json::array();
    for (const ClaimCheck& c : r.claims)
        claims.push_back({{"world", c.world},
                          {"item", c.item},
                          {"expected", c.expected},
                          {"actual", c.actual}});
    j["claims"] = std::move(claims);
    nlohmann::json frames = nlohmann::json::array();
    for (const FrameCheck& f : r.frameChecks)
        frames.push_back({{"condition", frameConditionName(f.condition)}, {"holds", f.holds}});
    j["frameChecks"] = std::move(frames);
    if (!r.ok)
        j["failure"] = r.failure;
    return j.dump(indent);
}

std::string reportToText(const ExtractionReport& r) {
    std::ostringstream os;
    os << "countermodel with " << r.model.worldCount << " worlds\n";
    for (int w = 0; w < r.model.worldCount; ++w) {
        os << "  N(" << w << ") = {";
        const auto& sets = r.model.neighbourhoods[w];
        for (std::size_t i = 0; i < sets.size(); ++i) {
            os << (i ? ", " : "") << "{";
            auto ws = worldsOf(sets[i]);
            for (std::size_t k = 0; k < ws.size(); ++k)
                os << (k ? "," : "") << ws[k];
            os << "}";
        }
        os << "}\n";
    }
    for (const auto& [atom, mask] : r.model.valuation) {
        os << "  V(" << atom << ") = {";
        auto ws = worldsOf(mask);
        for (std::size_t k = 0; k < ws.size(); ++k)
            os << (k ? "," : "") << ws[k];
        os << "}\n";
    }
    os << "  witness world " << r.witnessWorld;
    if (r.root)
        os << ", refutes " << render(r.root);
    os << "\n";
    os << "  claims checked: " << r.claims.size() << ", frame conditions: ";
    for (std::size_t i = 0; i < r.frameChecks.size(); ++i)
        os << (i ? ", " : "") << frameConditionName(r.frameChecks[i].condition)
           << (r.frameChecks[i].holds ? " ok" : " FAIL");
    os << "\n  verification " << (r.ok ? "passed" : ("FAILED: " + r.failure)) << "\n";
    return os.str();
}

} // namespace cplaus
