/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#ifndef CPLAUS_RANDOM_HPP
#define CPLAUS_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cplaus/formula.hpp"
#include "cplaus/logic.hpp"
#include "cplaus/semantics.hpp"

namespace cplaus {

constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// Random core formula with complexity <= maxComplexity over the given
// atoms. Deterministic for a fixed generator state.
FormulaRef sampleFormula(std::mt19937_64& rng, int maxComplexity,
                         const std::vector<std::string>& atoms = {"p", "q", "r"});

// Random model with the given world count satisfying the conditions of
// the logic (NonEmptiness/N/T/W/C/APlus are built constructively, U by
// rejection).
Model sampleModel(std::mt19937_64& rng, int worlds, const std::vector<std::string>& atoms,
                  const std::vector<FrameCondition>& conditions);

Model sampleModel(std::mt19937_64& rng, int worlds, const std::vector<std::string>& atoms,
                  LogicId logic);

} // namespace cplaus

#endif
