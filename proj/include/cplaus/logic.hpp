/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#ifndef CPLAUS_LOGIC_HPP
#define CPLAUS_LOGIC_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cplaus/formula.hpp"
#include "cplaus/semantics.hpp"

namespace cplaus {

// The seven calculus-bearing logics come first; the remaining entries
// are registered for semantic checking only (no proof calculus exists
// for uniformity, and the absoluteness variants beyond NA/NNA have no
// calculus here either). Requesting proof search for a semantic-only
// logic is a defined error.
enum class LogicId {
    N,
    NN,
    NT,
    NW,
    NC,
    NA,
    NNA,
    // semantic-only
    NU,
    NNU,
    NTU,
    NWU,
    NCU,
    NTA,
    NWA,
    NCA,
};

bool hasCalculus(LogicId l);

// CLI spelling: n, nn, nt, nw, nc, na, nna, ... (case-insensitive).
const char* logicName(LogicId l);
std::optional<LogicId> logicByName(std::string_view name);

std::vector<LogicId> calculusLogics();
std::vector<LogicId> allLogics();

// Frame conditions of the logic's model class: the letters after N in
// the logic's name, plus non-emptiness. Absoluteness logics use the
// strong (constant-function) formulation.
std::vector<FrameCondition> frameConditions(LogicId l);

// Axiom schemas over <=; cpr is an inference rule, not an axiom, and is
// therefore excluded from instantiation and corpora.
enum class AxiomSchema { Cpr, Tr, Or, N, T, W, C, UMinus, U, AMinus, A, Co };

const char* schemaName(AxiomSchema s);
int schemaArity(AxiomSchema s);

// Capture-free substitution into the schema template, then desugaring.
// Throws std::invalid_argument on arity mismatch or for Cpr.
FormulaRef instantiate(AxiomSchema s, const std::vector<FormulaRef>& args);

// The <=-schemas of the logic (beyond classical propositional logic).
std::vector<AxiomSchema> axiomSchemas(LogicId l);

// All instantiations of the logic's schemas with arguments drawn from
// the given atoms plus bot and top, deduplicated, in a deterministic
// order.
std::vector<FormulaRef> axiomCorpus(LogicId l, const std::vector<std::string>& atoms);

// Fixed instances of stronger logics' axioms that are not theorems of l,
// plus the connection axiom, which no logic in the family derives. Each
// entry is expected to be refuted by l's hypersequent calculus with a
// verified countermodel.
struct SeparationCase {
    AxiomSchema schema;
    FormulaRef formula;
};

std::vector<SeparationCase> separationSuite(LogicId l);

} // namespace cplaus

#endif
