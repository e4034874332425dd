/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#ifndef CPLAUS_COUNTERMODEL_HPP
#define CPLAUS_COUNTERMODEL_HPP

#include <string>
#include <vector>

#include "cplaus/hseq.hpp"
#include "cplaus/logic.hpp"
#include "cplaus/semantics.hpp"

namespace cplaus {

// Countermodel extraction from a saturated hypersequent. Worlds are the
// component indices; Sigma^Delta = {m | set(Sigma) included in Delta_m};
// N(n) collects Sigma^Delta over the blocks of Delta_n; V(p) = {n | p in
// Gamma_n}. Per logic the neighbourhood function is adjusted:
//   N, NN          base
//   NT, NW         base plus O(n) = union N(n) + {n}
//   NC             base plus {n}
//   NA, NNA        the union of base sets over all components, constant
// For NW the paper's weak-centering argument covers only the base
// blocks; the O(n) set (justified by T-saturation, T being a rule of
// that calculus) also supplies the non-emptiness half of condition W.
Model extractModel(const Hypersequent& saturated, LogicId l);

struct ClaimCheck {
    int world = 0;
    std::string item;    // rendered formula or block interpretation
    bool expected = false; // expected forcing value
    bool actual = false;

    bool ok() const { return expected == actual; }
};

struct FrameCheck {
    FrameCondition condition;
    bool holds = false;
};

struct ExtractionReport {
    Model model;
    int witnessWorld = 0;
    FormulaRef root = nullptr;
    std::vector<ClaimCheck> claims;
    std::vector<FrameCheck> frameChecks;
    bool rootRefuted = false;
    bool ok = false;
    std::string failure; // first counterexample when !ok (engine defect)
};

// Checks, against the semantics module, that every antecedent formula is
// forced, every succedent formula and block is refuted, every frame
// condition of l holds, and the root formula fails at the witness world
// (component 0). Stops at the first counterexample.
ExtractionReport verifyExtraction(const Hypersequent& saturated, const Model& m, LogicId l,
                                  FormulaRef root);

// extractModel + verifyExtraction in one step.
ExtractionReport refuteReport(const Hypersequent& saturated, LogicId l, FormulaRef root);

std::string reportToJson(const ExtractionReport& r, int indent = -1);
std::string reportToText(const ExtractionReport& r);

} // namespace cplaus

#endif
