/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <doctest.h>

#include <random>
#include <set>

#include "cplaus/logic.hpp"
#include "cplaus/random.hpp"

using namespace cplaus;

TEST_CASE("registry names and calculus flags") {
    CHECK(logicByName("n") == LogicId::N);
    CHECK(logicByName("NC") == LogicId::NC);
    CHECK(logicByName("nNa") == LogicId::NNA);
    CHECK(logicByName("nu") == LogicId::NU);
    CHECK(!logicByName("v"));
    for (LogicId l : calculusLogics())
        CHECK(hasCalculus(l));
    CHECK(!hasCalculus(LogicId::NU));
    CHECK(!hasCalculus(LogicId::NCA));
}

TEST_CASE("frame condition sets") {
    CHECK(frameConditions(LogicId::N) == std::vector<FrameCondition>{FrameCondition::NonEmptiness});
    CHECK(frameConditions(LogicId::NT) ==
          std::vector<FrameCondition>{FrameCondition::NonEmptiness, FrameCondition::T});
    CHECK(frameConditions(LogicId::NA) ==
          std::vector<FrameCondition>{FrameCondition::NonEmptiness, FrameCondition::APlus});
    CHECK(frameConditions(LogicId::NNA) ==
          std::vector<FrameCondition>{FrameCondition::NonEmptiness, FrameCondition::N,
                                      FrameCondition::APlus});
}

TEST_CASE("every NC-model satisfies W as well") {
    ModelEnumerator en(2, {"p"}, frameConditions(LogicId::NC));
    int n = 0;
    while (auto m = en.next()) {
        ++n;
        CHECK(checkCondition(*m, FrameCondition::W));
    }
    CHECK(n > 0);
}

TEST_CASE("schema instantiation") {
    FormulaRef p = mkAtom("p"), q = mkAtom("q"), r = mkAtom("r");
    CHECK(instantiate(AxiomSchema::Tr, {p, q, r}) == parse("(p <= q) & (q <= r) -> (p <= r)"));
    CHECK(instantiate(AxiomSchema::Or, {p, q, r}) == parse("(p <= q) & (p <= r) -> (p <= q | r)"));
    CHECK(instantiate(AxiomSchema::N, {}) == parse("~(bot <= top)"));
    CHECK(instantiate(AxiomSchema::T, {p}) == parse("(bot <= p) -> ~p"));
    CHECK(instantiate(AxiomSchema::W, {p}) == parse("p -> (p <= top)"));
    CHECK(instantiate(AxiomSchema::C, {p}) == parse("(p <= top) -> p"));
    CHECK(instantiate(AxiomSchema::U, {p}) == parse("(bot <= p) -> (bot <= ~(bot <= p))"));
    CHECK(instantiate(AxiomSchema::UMinus, {p}) == parse("~(bot <= p) -> (bot <= (bot <= p))"));
    CHECK(instantiate(AxiomSchema::AMinus, {p, q}) ==
          parse("(p <= q) -> (bot <= ~(p <= q))"));
    CHECK(instantiate(AxiomSchema::A, {p, q}) == parse("~(p <= q) -> (bot <= (p <= q))"));
    CHECK(instantiate(AxiomSchema::Co, {p, q}) == parse("(p <= q) | (q <= p)"));
    CHECK(instantiate(AxiomSchema::Co, {p, p}) == parse("(p <= p) | (p <= p)"));
    CHECK_THROWS_AS(instantiate(AxiomSchema::Tr, {p, q}), std::invalid_argument);
    CHECK_THROWS_AS(instantiate(AxiomSchema::Cpr, {p, q}), std::invalid_argument);
}

TEST_CASE("axiom corpus contents and counts") {
    auto nn = axiomCorpus(LogicId::NN, {"p"});
    CHECK(std::find(nn.begin(), nn.end(), parse("~(bot <= top)")) != nn.end());
    // tr and or over {p, bot, top}: 27 + 27 instances, plus n.
    CHECK(nn.size() == 55);

    auto n = axiomCorpus(LogicId::N, {"p", "q", "r"});
    // Independent combinatorial count: two ternary schemas over five
    // argument values, no cross-schema collisions.
    CHECK(n.size() == 2 * 5 * 5 * 5);
    std::set<FormulaRef> uniq(n.begin(), n.end());
    CHECK(uniq.size() == n.size());

    auto nc = axiomCorpus(LogicId::NC, {"p", "q", "r"});
    CHECK(nc.size() == 250 + 5 + 5 + 5);
    auto nna = axiomCorpus(LogicId::NNA, {"p", "q", "r"});
    CHECK(nna.size() == 250 + 1 + 25 + 25);
}

TEST_CASE("corpus members are valid on sampled models of their logic") {
    std::mt19937_64 rng(kDefaultSeed);
    for (LogicId l : calculusLogics()) {
        auto corpus = axiomCorpus(l, {"p", "q"});
        for (int i = 0; i < 50; ++i) {
            Model m = sampleModel(rng, 3, {"p", "q"}, l);
            for (FormulaRef f : corpus)
                CHECK(validInModel(m, f));
        }
    }
}
