/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
// Acceptance suite: one pass/fail line per criterion, exit 0 iff all
// pass. Run with --cli <path-to-cplaus> so the command-line surface is
// exercised too.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cplaus/countermodel.hpp"
#include "cplaus/gseq.hpp"
#include "cplaus/hseq.hpp"
#include "cplaus/logic.hpp"
#include "cplaus/random.hpp"
#include "cplaus/semantics.hpp"

using namespace cplaus;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cliPath;
bool g_ceilingHit = false; // criterion 8 watches every hProve call

struct CliResult {
    int exitCode = -1;
    std::string output;
};

CliResult runCli(const std::string& args) {
    CliResult r;
    std::string cmd = "'" + g_cliPath + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe))
        r.output.append(buf, n);
    int status = pclose(pipe);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

HResult checkedHProve(const Hypersequent& h, LogicId l) {
    HResult r = hProve(h, l);
    if (r.status == HStatus::CeilingDefect)
        g_ceilingHit = true;
    return r;
}

HResult checkedHProve(FormulaRef f, LogicId l) {
    return checkedHProve(wrapFormula(f), l);
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

// --------------------------------------------------------------------------
// 1. Example reproduction: the connection axiom fails in the base logic
//    with the exact three-world countermodel.

Outcome criterion1() {
    Outcome out;
    auto t0 = Clock::now();
    FormulaRef co = parse("(p <= q) | (q <= p)");

    auto r = checkedHProve(co, LogicId::N);
    out.require(r.status == HStatus::Refuted, "expected a refutation");
    if (!out.pass)
        return out;
    Model m = extractModel(r.refutation->saturated, LogicId::N);
    Model expected;
    expected.worldCount = 3;
    expected.neighbourhoods = {{maskOf({1}), maskOf({2})}, {}, {}};
    expected.valuation["p"] = maskOf({2});
    expected.valuation["q"] = maskOf({1});
    out.require(m == expected, "extracted model differs from the expected one");
    auto rep = verifyExtraction(r.refutation->saturated, m, LogicId::N, co);
    out.require(rep.ok, "verification failed: " + rep.failure);
    out.require(!forces(m, 0, co), "root formula not refuted at world 0");

    // The same through the command-line surface.
    auto cli = runCli("prove --logic n --calculus h --format json \"(p <= q) | (q <= p)\"");
    out.require(cli.exitCode == 1, "cli exit code != 1");
    if (out.pass) {
        auto doc = json::parse(cli.output, nullptr, false);
        out.require(!doc.is_discarded() && doc.is_array() && doc.size() == 1,
                    "cli json output malformed");
        if (out.pass) {
            out.require(doc[0]["status"] == "refuted", "cli status != refuted");
            out.require(doc[0]["countermodel"]["model"] == json::parse(modelToJson(expected)),
                        "cli countermodel differs");
        }
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    out.require(secs < 1.0, "took " + std::to_string(secs) + "s");
    return out;
}

// --------------------------------------------------------------------------
// 2. Golden derivations: tr, or, and the cpr pattern over {a, b, c}.

Outcome criterion2() {
    Outcome out;
    FormulaRef a = mkAtom("a"), b = mkAtom("b"), c = mkAtom("c");
    std::vector<FormulaRef> goldens = {
        instantiate(AxiomSchema::Tr, {a, b, c}),
        instantiate(AxiomSchema::Or, {a, b, c}),
    };
    for (FormulaRef f : goldens) {
        auto t0 = Clock::now();
        auto g = gProve(f, LogicId::N);
        out.require(g.status == GStatus::Proved, "gProve failed on " + render(f));
        out.require(g.status != GStatus::Proved || gReplay(*g.derivation, LogicId::N),
                    "derivation replay failed on " + render(f));
        auto h = checkedHProve(f, LogicId::N);
        out.require(h.status == HStatus::Proved, "hProve failed on " + render(f));
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        out.require(secs < 1.0, render(f) + " took " + std::to_string(secs) + "s");
    }
    // cpr pattern: establish a -> b' for a derivable implication, cut it
    // into modus-ponens position, then derive the comparative formula.
    auto t0 = Clock::now();
    FormulaRef ab = mkAnd(a, b);
    FormulaRef imp = mkImp(ab, a);
    out.require(gProve(mkSequent({}, {imp}), LogicId::N).status == GStatus::Proved,
                "cpr pattern: implication not derivable");
    out.require(gCutTest(mkSequent({}, {imp}), mkSequent({ab, imp}, {a}), imp, LogicId::N),
                "cpr pattern: cut conclusion not derivable");
    FormulaRef cmp = mkCmpPl(a, ab);
    out.require(gProve(cmp, LogicId::N).status == GStatus::Proved,
                "cpr pattern: G-derivation missing");
    out.require(checkedHProve(cmp, LogicId::N).status == HStatus::Proved,
                "cpr pattern: H-derivation missing");
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    out.require(secs < 1.0, "cpr pattern took " + std::to_string(secs) + "s");
    return out;
}

// --------------------------------------------------------------------------
// 3. Axiom corpus completeness in both calculi.

std::vector<std::pair<FormulaRef, LogicId>> g_provenFormulas; // feeds criterion 5

Outcome criterion3() {
    Outcome out;
    auto t0 = Clock::now();
    for (LogicId l : calculusLogics()) {
        for (FormulaRef f : axiomCorpus(l, {"p", "q", "r"})) {
            auto h = checkedHProve(f, l);
            out.require(h.status == HStatus::Proved,
                        std::string("hProve failed: ") + render(f) + " in " + logicName(l));
            auto g = gProve(f, l);
            out.require(g.status == GStatus::Proved,
                        std::string("gProve failed: ") + render(f) + " in " + logicName(l));
            if (h.status == HStatus::Proved)
                g_provenFormulas.push_back({f, l});
            if (!out.pass)
                return out;
        }
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    out.require(secs < 60.0, "corpus took " + std::to_string(secs) + "s");
    if (out.pass)
        out.detail = "corpus of " + std::to_string(g_provenFormulas.size()) + " formulas";
    return out;
}

// --------------------------------------------------------------------------
// 4. Separation suite: lattice-edge axioms refuted with verified
//    countermodels in the weaker logic.

Outcome criterion4() {
    Outcome out;
    auto t0 = Clock::now();
    auto refutedVerified = [&](FormulaRef f, LogicId l) {
        auto r = checkedHProve(f, l);
        if (r.status != HStatus::Refuted) {
            out.require(false, render(f) + " not refuted in " + logicName(l));
            return;
        }
        auto rep = refuteReport(r.refutation->saturated, l, f);
        out.require(rep.ok, render(f) + " in " + logicName(l) +
                                ": verification failed: " + rep.failure);
    };
    FormulaRef p = mkAtom("p"), q = mkAtom("q");
    // One edge per extension step of the two chains.
    refutedVerified(instantiate(AxiomSchema::N, {}), LogicId::N);
    refutedVerified(instantiate(AxiomSchema::T, {p}), LogicId::NN);
    refutedVerified(instantiate(AxiomSchema::W, {p}), LogicId::NT);
    refutedVerified(instantiate(AxiomSchema::C, {p}), LogicId::NW);
    refutedVerified(instantiate(AxiomSchema::AMinus, {p, q}), LogicId::N);
    refutedVerified(instantiate(AxiomSchema::N, {}), LogicId::NA);
    for (LogicId l : calculusLogics())
        refutedVerified(instantiate(AxiomSchema::Co, {p, q}), l);
    // The wider registry table, for good measure.
    for (LogicId l : calculusLogics())
        for (const SeparationCase& c : separationSuite(l))
            refutedVerified(c.formula, l);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    out.require(secs < 30.0, "separation suite took " + std::to_string(secs) + "s");
    return out;
}

// --------------------------------------------------------------------------
// 5. Soundness harness over all proved formulas.

Outcome criterion5() {
    Outcome out;
    std::mt19937_64 rng(kDefaultSeed);

    // Criterion 2's goldens participate as well.
    FormulaRef a = mkAtom("a"), b = mkAtom("b"), c = mkAtom("c");
    g_provenFormulas.push_back({instantiate(AxiomSchema::Tr, {a, b, c}), LogicId::N});
    g_provenFormulas.push_back({instantiate(AxiomSchema::Or, {a, b, c}), LogicId::N});
    g_provenFormulas.push_back({mkCmpPl(a, mkAnd(a, b)), LogicId::N});

    // 500 seeded random proof outcomes.
    std::size_t randomProofs = 0;
    auto logics = calculusLogics();
    while (randomProofs < 500) {
        FormulaRef f = sampleFormula(rng, 8);
        LogicId l = logics[randomProofs % logics.size()];
        if (checkedHProve(f, l).status == HStatus::Proved) {
            g_provenFormulas.push_back({f, l});
            ++randomProofs;
        }
    }

    // Shared pools of 10^4 random three-world models per logic.
    std::map<LogicId, std::vector<Model>> pools;
    for (LogicId l : logics) {
        auto& pool = pools[l];
        pool.reserve(10'000);
        for (int i = 0; i < 10'000; ++i)
            pool.push_back(sampleModel(rng, 3, {"p", "q", "r"}, l));
    }

    for (const auto& [f, l] : g_provenFormulas) {
        // Exhaustive over models with at most two worlds on the
        // formula's own atoms.
        ModelEnumerator en(2, atomsOf(f), frameConditions(l));
        while (auto m = en.next()) {
            if (!validInModel(*m, f)) {
                out.require(false, render(f) + " invalid on a 2-world " +
                                       std::string(logicName(l)) + "-model");
                return out;
            }
        }
        out.require(!en.overflowed(), "enumeration ceiling hit unexpectedly");
        for (const Model& m : pools[l]) {
            if (!validInModel(m, f)) {
                out.require(false, render(f) + " invalid on a sampled 3-world " +
                                       std::string(logicName(l)) + "-model");
                return out;
            }
        }
    }
    if (out.pass)
        out.detail = std::to_string(g_provenFormulas.size()) + " proved formulas checked";
    return out;
}

// --------------------------------------------------------------------------
// 6. Cross-calculus agreement on seeded random formulas.

Outcome criterion6() {
    Outcome out;
    auto t0 = Clock::now();
    std::mt19937_64 rng(kDefaultSeed + 6);
    int agreements = 0;
    for (LogicId l : calculusLogics()) {
        for (int i = 0; i < 1000; ++i) {
            FormulaRef f = sampleFormula(rng, 8);
            auto h = checkedHProve(f, l);
            auto g = gProve(f, l);
            out.require(g.status != GStatus::BudgetExceeded,
                        std::string("gProve budget exceeded on ") + render(f) + " in " +
                            logicName(l));
            bool hYes = h.status == HStatus::Proved;
            bool gYes = g.status == GStatus::Proved;
            out.require(hYes == gYes, std::string("disagreement on ") + render(f) + " in " +
                                          logicName(l));
            if (!out.pass)
                return out;
            ++agreements;
        }
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    out.require(secs < 600.0, "agreement run took " + std::to_string(secs) + "s");
    if (out.pass)
        out.detail = std::to_string(agreements) + " formulas";
    return out;
}

// --------------------------------------------------------------------------
// 7. Structural rules, extensionally on seeded derivable instances.

Outcome criterion7() {
    Outcome out;
    std::mt19937_64 rng(kDefaultSeed + 7);
    auto logics = calculusLogics();

    auto sampleDerivable = [&](LogicId l) {
        while (true) {
            std::vector<FormulaRef> ante, succ;
            int na = std::uniform_int_distribution<int>(0, 2)(rng);
            int ns = std::uniform_int_distribution<int>(1, 2)(rng);
            for (int i = 0; i < na; ++i)
                ante.push_back(sampleFormula(rng, 6));
            for (int i = 0; i < ns; ++i)
                succ.push_back(sampleFormula(rng, 6));
            if (!ante.empty() && std::uniform_int_distribution<int>(0, 2)(rng) == 0)
                succ.push_back(ante[0]);
            Sequent s = mkSequent(ante, succ);
            if (gProve(s, l).status == GStatus::Proved)
                return s;
        }
    };

    for (int i = 0; i < 200 && out.pass; ++i) {
        LogicId l = logics[i % logics.size()];
        Sequent s = sampleDerivable(l);
        FormulaRef extra = sampleFormula(rng, 5);
        Sequent wkL = s, wkR = s;
        wkL.ante.push_back(extra);
        wkR.succ.push_back(extra);
        out.require(gProve(mkSequent(wkL.ante, wkL.succ), l).status == GStatus::Proved,
                    "weakening failed in " + std::string(logicName(l)));
    }
    for (int i = 0; i < 200 && out.pass; ++i) {
        LogicId l = logics[i % logics.size()];
        Sequent s = sampleDerivable(l);
        Sequent dup = s;
        if (!dup.ante.empty())
            dup.ante.push_back(dup.ante.front());
        else
            dup.succ.push_back(dup.succ.front());
        out.require(gProve(mkSequent(dup.ante, dup.succ), l).status == GStatus::Proved,
                    "contraction failed in " + std::string(logicName(l)));
    }
    int cuts = 0;
    while (cuts < 200 && out.pass) {
        LogicId l = logics[cuts % logics.size()];
        FormulaRef cut = sampleFormula(rng, 5);
        Sequent left = mkSequent({sampleFormula(rng, 5)}, {cut, sampleFormula(rng, 5)});
        Sequent right = mkSequent({cut, sampleFormula(rng, 5)}, {sampleFormula(rng, 5)});
        if (gProve(left, l).status != GStatus::Proved ||
            gProve(right, l).status != GStatus::Proved)
            continue;
        out.require(gCutTest(left, right, cut, l),
                    "cut conclusion underivable in " + std::string(logicName(l)));
        ++cuts;
    }
    // Hypersequent structural rules on derivable corpus items.
    int hchecks = 0;
    for (LogicId l : logics) {
        auto corpus = axiomCorpus(l, {"p", "q"});
        for (int i = 0; i < 25; ++i) {
            FormulaRef f = corpus[std::uniform_int_distribution<std::size_t>(
                0, corpus.size() - 1)(rng)];
            Hypersequent h = wrapFormula(f);
            FormulaRef extra = sampleFormula(rng, 5);
            Hypersequent wkL = h, wkR = h, wkB = h, wkC = h, ctrC = h;
            wkL.components[0] = mkComponent({extra}, h.components[0].delta);
            wkR.components[0] = mkComponent({}, {f, extra});
            wkB.components[0].blocks.push_back(mkBlock({extra}, sampleFormula(rng, 4)));
            wkC.components.push_back(mkComponent({extra}, {sampleFormula(rng, 4)}));
            ctrC.components.push_back(h.components[0]);
            for (const Hypersequent& variant : {wkL, wkR, wkB, wkC, ctrC}) {
                out.require(checkedHProve(variant, l).status == HStatus::Proved,
                            "hypersequent structural rule failed in " +
                                std::string(logicName(l)));
                ++hchecks;
            }
        }
    }
    if (out.pass)
        out.detail = "200 weakenings, 200 contractions, 200 cuts, " + std::to_string(hchecks) +
                     " hypersequent variants";
    return out;
}

// --------------------------------------------------------------------------
// 8. Termination: no safety-ceiling hit anywhere in the run.

Outcome criterion8() {
    Outcome out;
    out.require(!g_ceilingHit, "a safety ceiling was hit during the run");
    return out;
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli")
            g_cliPath = argv[i + 1];
    if (g_cliPath.empty()) {
        std::cerr << "usage: cplaus_acceptance --cli <path-to-cplaus>\n";
        return 2;
    }

    struct Entry {
        const char* label;
        Outcome (*run)();
    };
    std::vector<Entry> entries = {
        {"example reproduction (3-world countermodel, exact match)", criterion1},
        {"golden derivations tr / or / cpr pattern", criterion2},
        {"axiom corpus completeness in both calculi", criterion3},
        {"separation suite with verified countermodels", criterion4},
        {"soundness harness on proved formulas", criterion5},
        {"cross-calculus agreement on random formulas", criterion6},
        {"structural rules: weakening, contraction, cut", criterion7},
        {"termination without safety-ceiling hits", criterion8},
    };

    bool all = true;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        auto t0 = Clock::now();
        Outcome out = entries[i].run();
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        all = all && out.pass;
        std::cout << "criterion " << (i + 1) << ": " << (out.pass ? "PASS" : "FAIL") << " - "
                  << entries[i].label;
        if (out.pass && !out.detail.empty())
            std::cout << " [" << out.detail << "]";
        std::printf(" (%.2fs)\n", secs);
        if (!out.pass)
            std::cout << "    reason: " << out.detail << "\n";
    }
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES present")
              << "\n";
    return all ? 0 : 1;
}
