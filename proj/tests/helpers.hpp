/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#ifndef CPLAUS_TESTS_HELPERS_HPP
#define CPLAUS_TESTS_HELPERS_HPP

#include <optional>
#include <random>

#include "cplaus/gseq.hpp"
#include "cplaus/random.hpp"

namespace cplaus::testing {

inline Sequent sampleSequent(std::mt19937_64& rng, int maxComplexity) {
    auto count = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    std::vector<FormulaRef> ante, succ;
    for (int i = count(0, 2); i > 0; --i)
        ante.push_back(sampleFormula(rng, maxComplexity));
    for (int i = count(1, 2); i > 0; --i)
        succ.push_back(sampleFormula(rng, maxComplexity));
    // Keep a healthy share of derivable samples: sometimes mirror an
    // antecedent formula into the succedent.
    if (!ante.empty() && count(0, 2) == 0)
        succ.push_back(ante[0]);
    return mkSequent(std::move(ante), std::move(succ));
}

inline std::optional<Sequent> sampleDerivableSequent(std::mt19937_64& rng, LogicId l,
                                                     int maxComplexity, int maxAttempts = 400) {
    for (int i = 0; i < maxAttempts; ++i) {
        Sequent s = sampleSequent(rng, maxComplexity);
        if (gProve(s, l).status == GStatus::Proved)
            return s;
    }
    return std::nullopt;
}

} // namespace cplaus::testing

#endif
