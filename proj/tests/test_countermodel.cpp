/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <doctest.h>

#include <random>

#include "cplaus/countermodel.hpp"
#include "cplaus/random.hpp"

using namespace cplaus;

namespace {

Hypersequent refuted(FormulaRef f, LogicId l) {
    auto r = hProve(f, l);
    REQUIRE(r.status == HStatus::Refuted);
    return r.refutation->saturated;
}

} // namespace

TEST_CASE("extraction for the failed connection-axiom search") {
    FormulaRef co = parse("(p <= q) | (q <= p)");
    Hypersequent h = refuted(co, LogicId::N);
    Model m = extractModel(h, LogicId::N);
    CHECK(m.worldCount == 3);
    CHECK(m.neighbourhoods[0] == std::vector<WorldMask>{maskOf({1}), maskOf({2})});
    CHECK(m.neighbourhoods[1].empty());
    CHECK(m.neighbourhoods[2].empty());
    CHECK(m.valuation.at("p") == maskOf({2}));
    CHECK(m.valuation.at("q") == maskOf({1}));
    auto rep = verifyExtraction(h, m, LogicId::N, co);
    CHECK(rep.ok);
    CHECK(rep.rootRefuted);
    CHECK(!forces(m, 0, co));
}

TEST_CASE("extraction requires saturation") {
    Hypersequent h = wrapFormula(parse("p <= q"));
    CHECK_THROWS_AS(extractModel(h, LogicId::N), std::invalid_argument);
}

TEST_CASE("a saturated hypersequent without blocks has empty neighbourhoods") {
    Hypersequent h = refuted(mkAtom("p"), LogicId::N);
    Model m = extractModel(h, LogicId::N);
    for (const auto& sets : m.neighbourhoods)
        CHECK(sets.empty());
}

TEST_CASE("total-reflexivity extraction adds O(n) containing the world") {
    // p is also refutable in NT; the N^T clause owns every world.
    Hypersequent h = refuted(mkAtom("p"), LogicId::NT);
    Model m = extractModel(h, LogicId::NT);
    for (int n = 0; n < m.worldCount; ++n) {
        bool owns = false;
        for (WorldMask a : m.neighbourhoods[n])
            if ((a >> n) & 1)
                owns = true;
        CHECK(owns);
    }
    CHECK(checkCondition(m, FrameCondition::T));
}

TEST_CASE("centering extraction adds the singleton") {
    FormulaRef aMinus = instantiate(AxiomSchema::AMinus, {mkAtom("p"), mkAtom("q")});
    Hypersequent h = refuted(aMinus, LogicId::NC);
    Model m = extractModel(h, LogicId::NC);
    CHECK(checkCondition(m, FrameCondition::C));
    auto rep = verifyExtraction(h, m, LogicId::NC, aMinus);
    CHECK(rep.ok);
}

TEST_CASE("absoluteness extraction is constant") {
    FormulaRef n = instantiate(AxiomSchema::N, {});
    Hypersequent h = refuted(n, LogicId::NA);
    Model m = extractModel(h, LogicId::NA);
    CHECK(checkCondition(m, FrameCondition::APlus));
    CHECK(verifyExtraction(h, m, LogicId::NA, n).ok);
}

TEST_CASE("tampered models are caught") {
    FormulaRef co = parse("(p <= q) | (q <= p)");
    Hypersequent h = refuted(co, LogicId::N);
    Model m = extractModel(h, LogicId::N);
    Model broken = m;
    broken.neighbourhoods[0].pop_back();
    auto rep = verifyExtraction(h, broken, LogicId::N, co);
    CHECK(!rep.ok);
    CHECK(!rep.failure.empty());
}

TEST_CASE("verification reports in json and text") {
    FormulaRef co = parse("(p <= q) | (q <= p)");
    Hypersequent h = refuted(co, LogicId::N);
    auto rep = refuteReport(h, LogicId::N, co);
    REQUIRE(rep.ok);
    std::string json = reportToJson(rep);
    CHECK(json.find("\"frameChecks\"") != std::string::npos);
    CHECK(json.find("\"worlds\"") != std::string::npos);
    CHECK(reportToText(rep).find("verification passed") != std::string::npos);
}

TEST_CASE("fuzzed refutations verify across all logics") {
    std::mt19937_64 rng(kDefaultSeed);
    int verified = 0;
    while (verified < 350) {
        FormulaRef f = sampleFormula(rng, 8);
        for (LogicId l : calculusLogics()) {
            auto r = hProve(f, l);
            REQUIRE(r.status != HStatus::CeilingDefect);
            if (r.status != HStatus::Refuted)
                continue;
            auto rep = refuteReport(r.refutation->saturated, l, f);
            CHECK(rep.ok);
            if (!rep.ok) {
                MESSAGE("formula: ", render(f), " logic: ", logicName(l), " -> ", rep.failure);
                return;
            }
            ++verified;
        }
    }
}

TEST_CASE("bounded oracle and prover agree on a small fuzz set") {
    // hProve Proved implies the bounded search finds nothing; a bounded
    // countermodel implies hProve refutes.
    std::mt19937_64 rng(kDefaultSeed + 1);
    int checked = 0;
    while (checked < 60) {
        FormulaRef f = sampleFormula(rng, 6, {"p", "q"});
        for (LogicId l : {LogicId::N, LogicId::NN, LogicId::NT, LogicId::NC, LogicId::NA}) {
            auto r = hProve(f, l);
            auto oracle = findSemanticCountermodel(f, frameConditions(l), 2, 5'000'000);
            if (oracle.status == CountermodelSearchResult::Status::CeilingExceeded)
                continue;
            bool found = oracle.status == CountermodelSearchResult::Status::Found;
            if (r.status == HStatus::Proved)
                CHECK(!found);
            if (found)
                CHECK(r.status == HStatus::Refuted);
            ++checked;
        }
    }
}
