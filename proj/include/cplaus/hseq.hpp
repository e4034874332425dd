/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#ifndef CPLAUS_HSEQ_HPP
#define CPLAUS_HSEQ_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cplaus/formula.hpp"
#include "cplaus/logic.hpp"

namespace cplaus {

// Succedent block <Sigma <| A>, interpreted as (\/Sigma) <= A.
// Sigma is kept as a sorted set; the saturation conditions only ever
// inspect set(Sigma), and the rules never create duplicates.
struct Block {
    std::vector<FormulaRef> sigma;
    FormulaRef head = nullptr;

    bool operator==(const Block& o) const = default;
};

Block mkBlock(std::vector<FormulaRef> sigma, FormulaRef head);
FormulaRef blockFormula(const Block& b);

// Sequent with blocks: blocks occur only in succedents. gamma and delta
// are sorted sets; blocks keep creation order.
struct HComponent {
    std::vector<FormulaRef> gamma;
    std::vector<FormulaRef> delta;
    std::vector<Block> blocks;

    bool operator==(const HComponent& o) const = default;
};

HComponent mkComponent(std::vector<FormulaRef> gamma, std::vector<FormulaRef> delta,
                       std::vector<Block> blocks = {});

// Interpretation: /\gamma -> \/delta \/ blocks.
FormulaRef componentFormula(const HComponent& c);

// Component order is the world-index order used by countermodel
// extraction; indices are stable within one proof-search run.
struct Hypersequent {
    std::vector<HComponent> components;

    bool operator==(const Hypersequent& o) const = default;
};

Hypersequent wrapFormula(FormulaRef f);

std::string renderComponent(const HComponent& c, const RenderOptions& opts = {});
std::string renderHypersequent(const Hypersequent& h, const RenderOptions& opts = {});

// Valid in a model iff some component's formula interpretation is.
bool hypersequentValidInModel(const Model& m, const Hypersequent& h);

enum class HRule { Init, BotL, ImpL, ImpR, CmpL, CmpR, Jp, N, T, W, C, AL, AR };

const char* hRuleName(HRule r);
bool hRuleInLogic(HRule r, LogicId l);

struct HRuleInstance {
    HRule rule = HRule::Init;
    int component = 0;
    // ImpL/ImpR/CmpR/T/C/AL/AR/Init: the analysed formula.
    FormulaRef principal = nullptr;
    // CmpL/Jp/W: index of the analysed block in that component.
    int blockIndex = -1;
    // AL/AR: the component the <=-formula is propagated into.
    int target = -1;

    bool operator==(const HRuleInstance& o) const = default;
};

struct HDerivation {
    Hypersequent conclusion;
    HRuleInstance instance;
    std::vector<HDerivation> premisses;
};

// Validates and builds premisses; nullopt when the instance does not
// apply or its saturation condition already holds.
std::optional<std::vector<Hypersequent>> hExpand(const Hypersequent& h,
                                                 const HRuleInstance& inst, LogicId l);

// All non-redundant instances of l's rules (axioms included, with empty
// premiss lists). Throws for logics without a calculus.
std::vector<std::pair<HRuleInstance, std::vector<Hypersequent>>> hApplicable(const Hypersequent& h,
                                                                             LogicId l);

struct SaturationDefect {
    HRule rule;
    int component;
    std::string detail;
};

struct SaturationReport {
    bool saturated = false;
    std::vector<SaturationDefect> defects;
};

// Literal check of the saturation conditions of l's rules, with one
// defect per unsatisfied instance.
SaturationReport saturationReport(const Hypersequent& h, LogicId l);
bool isSaturated(const Hypersequent& h, LogicId l);

struct RefutationTraceStep {
    HRule rule;
    int component;
    std::string detail;
};

struct HRefutation {
    Hypersequent saturated;
    std::vector<RefutationTraceStep> trace; // root-to-leaf rule applications
};

enum class HStatus { Proved, Refuted, CeilingDefect };

struct HResult {
    HStatus status = HStatus::Refuted;
    std::optional<HDerivation> proof;
    std::optional<HRefutation> refutation;
    std::uint64_t steps = 0;
};

// Backward proof search per the saturation strategy: rules are applied
// in a fixed order (botL/init detection, impR, impL, cmpR, W, N, T, C,
// cmpL, jp, AL, AR), never to an initial hypersequent and never when the
// instance's saturation condition already holds. Terminates without a
// budget; the safety ceiling reports an engine defect, it is not a
// search bound.
constexpr std::uint64_t kDefaultHSafetyCeiling = 1'000'000;

HResult hProve(const Hypersequent& h, LogicId l,
               std::uint64_t safetyCeiling = kDefaultHSafetyCeiling);
HResult hProve(FormulaRef f, LogicId l, std::uint64_t safetyCeiling = kDefaultHSafetyCeiling);

bool hReplay(const HDerivation& d, LogicId l);

std::string hypersequentToJson(const Hypersequent& h, int indent = -1);
std::string hDerivationToJson(const HDerivation& d, int indent = -1);
std::string hDerivationToLatex(const HDerivation& d);

} // namespace cplaus

#endif
