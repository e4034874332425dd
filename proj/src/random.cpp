/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#include "cplaus/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace cplaus {

FormulaRef sampleFormula(std::mt19937_64& rng, int maxComplexity,
                         const std::vector<std::string>& atoms) {
    if (maxComplexity < 1)
        throw std::invalid_argument("maxComplexity must be >= 1");
    auto leaf = [&]() -> FormulaRef {
        if (std::uniform_int_distribution<int>(0, 4)(rng) == 0 || atoms.empty())
            return mkBot();
        std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
        return mkAtom(atoms[pick(rng)]);
    };
    if (maxComplexity < 3)
        return leaf();
    // leaf : imp : cmppl = 1 : 2 : 2
    int k = std::uniform_int_distribution<int>(0, 4)(rng);
    if (k == 0)
        return leaf();
    int leftBudget = std::uniform_int_distribution<int>(1, maxComplexity - 2)(rng);
    FormulaRef l = sampleFormula(rng, leftBudget, atoms);
    FormulaRef r = sampleFormula(rng, maxComplexity - complexity(l) - 1, atoms);
    return k <= 2 ? mkImp(l, r) : mkCmpPl(l, r);
}

namespace {

bool hasCondition(const std::vector<FrameCondition>& cs, FrameCondition c) {
    return std::find(cs.begin(), cs.end(), c) != cs.end();
}

std::vector<WorldMask> sampleNeighbourhoodList(std::mt19937_64& rng, int worlds, int owner,
                                               bool mustOwn, bool mustSelf, bool someOwn,
                                               bool nonempty) {
    const WorldMask all = (WorldMask(1) << worlds) - 1;
    std::vector<WorldMask> admissible;
    for (WorldMask a = 1; a <= all; ++a)
        if (!mustOwn || ((a >> owner) & 1))
            admissible.push_back(a);
    std::vector<WorldMask> chosen;
    for (WorldMask a : admissible)
        if (std::uniform_int_distribution<int>(0, 1)(rng))
            chosen.push_back(a);
    auto addMask = [&](WorldMask a) {
        if (!std::binary_search(chosen.begin(), chosen.end(), a)) {
            chosen.push_back(a);
            std::sort(chosen.begin(), chosen.end());
        }
    };
    if (mustSelf)
        addMask(WorldMask(1) << owner);
    if (someOwn) {
        bool owns = false;
        for (WorldMask a : chosen)
            if ((a >> owner) & 1)
                owns = true;
        if (!owns)
            addMask(WorldMask(1) << owner);
    }
    if (nonempty && chosen.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, admissible.size() - 1);
        addMask(admissible[pick(rng)]);
    }
    return chosen;
}

} // namespace

Model sampleModel(std::mt19937_64& rng, int worlds, const std::vector<std::string>& atoms,
                  const std::vector<FrameCondition>& conditions) {
    if (worlds < 1 || worlds > 16)
        throw std::invalid_argument("world count out of range for sampling");
    bool needN = hasCondition(conditions, FrameCondition::N);
    bool needT = hasCondition(conditions, FrameCondition::T);
    bool needW = hasCondition(conditions, FrameCondition::W);
    bool needC = hasCondition(conditions, FrameCondition::C);
    bool needAPlus =
        hasCondition(conditions, FrameCondition::APlus) || hasCondition(conditions, FrameCondition::A);
    bool needU = hasCondition(conditions, FrameCondition::U);

    for (int attempt = 0; attempt < 10000; ++attempt) {
        Model m;
        m.worldCount = worlds;
        if (needAPlus) {
            auto shared = sampleNeighbourhoodList(rng, worlds, 0, /*mustOwn=*/false,
                                                  /*mustSelf=*/false, /*someOwn=*/false,
                                                  /*nonempty=*/needN || needW || needC);
            m.neighbourhoods.assign(worlds, shared);
        } else {
            for (int w = 0; w < worlds; ++w)
                m.neighbourhoods.push_back(sampleNeighbourhoodList(
                    rng, worlds, w, /*mustOwn=*/needW || needC, /*mustSelf=*/needC,
                    /*someOwn=*/needT, /*nonempty=*/needN || needW));
        }
        for (const std::string& a : atoms)
            m.valuation[a] = std::uniform_int_distribution<WorldMask>(
                0, (WorldMask(1) << worlds) - 1)(rng);
        if (!needU || checkCondition(m, FrameCondition::U))
            if (checkConditions(m, conditions))
                return m;
    }
    throw std::runtime_error("model sampling failed to satisfy the requested conditions");
}

Model sampleModel(std::mt19937_64& rng, int worlds, const std::vector<std::string>& atoms,
                  LogicId logic) {
    return sampleModel(rng, worlds, atoms, frameConditions(logic));
}

} // namespace cplaus
