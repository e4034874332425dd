/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cplaus/countermodel.hpp"
#include "cplaus/gseq.hpp"
#include "cplaus/hseq.hpp"
#include "cplaus/logic.hpp"
#include "cplaus/random.hpp"
#include "cplaus/semantics.hpp"

using namespace cplaus;
using nlohmann::json;

// Exit codes, stable across commands:
//   0  affirmative result (derivable / countermodel found / all passed)
//   1  negative result (not derivable / nothing found up to the bound)
//   2  usage, parse or schema error
//   3  budget or enumeration ceiling exceeded
namespace exitcode {
constexpr int Ok = 0;
constexpr int Negative = 1;
constexpr int Usage = 2;
constexpr int Budget = 3;
} // namespace exitcode

namespace {

struct Options {
    std::string logic = "n";
    std::string calculus = "h";
    std::string format = "text";
    std::string modelFile;
    std::string formulaFile;
    int maxWorlds = 2;
    std::uint64_t budget = kDefaultGBudget;
    std::uint64_t ceiling = kDefaultModelCeiling;
    std::uint64_t seed = kDefaultSeed;
    bool resugar = false;
    std::vector<std::string> formulas;
};

RenderOptions renderOpts(const Options& o) {
    RenderStyle style = o.format == "latex" ? RenderStyle::Latex : RenderStyle::Ascii;
    return {style, o.resugar};
}

LogicId parseLogic(const std::string& name, bool needCalculus) {
    auto l = logicByName(name);
    if (!l)
        throw CLI::ValidationError("--logic", "unknown logic '" + name + "'");
    if (needCalculus && !hasCalculus(*l))
        throw CLI::ValidationError("--logic",
                                   "logic '" + name + "' has no proof calculus (semantic only)");
    return *l;
}

std::vector<std::string> gatherFormulas(const Options& o) {
    std::vector<std::string> texts = o.formulas;
    if (!o.formulaFile.empty()) {
        std::ifstream in(o.formulaFile);
        if (!in)
            throw std::runtime_error("cannot open formula file " + o.formulaFile);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos)
                line.erase(hash);
            auto end = line.find_last_not_of(" \t\r");
            if (end == std::string::npos)
                continue;
            line.erase(end + 1);
            auto begin = line.find_first_not_of(" \t");
            texts.push_back(line.substr(begin));
        }
    }
    if (texts.empty())
        throw std::runtime_error("no formula given (positional argument or --file)");
    return texts;
}

void emit(const Options& o, const json& results, const std::string& text) {
    if (o.format == "json")
        std::cout << results.dump(2) << "\n";
    else
        std::cout << text;
}

int worse(int a, int b) {
    // Usage errors dominate, then budget overflow, then a negative verdict.
    for (int code : {exitcode::Usage, exitcode::Budget, exitcode::Negative})
        if (a == code || b == code)
            return code;
    return exitcode::Ok;
}

// ---------------------------------------------------------------------------
// prove

int runProve(const Options& o) {
    LogicId logic = parseLogic(o.logic, true);
    if (o.calculus != "g" && o.calculus != "h")
        throw CLI::ValidationError("--calculus", "expected 'g' or 'h'");
    json results = json::array();
    std::ostringstream text;
    int code = exitcode::Ok;

    for (const std::string& input : gatherFormulas(o)) {
        FormulaRef f = parse(input);
        json r;
        r["command"] = "prove";
        r["logic"] = logicName(logic);
        r["calculus"] = o.calculus;
        r["formula"] = render(f, {RenderStyle::Ascii, o.resugar});
        if (o.calculus == "g") {
            GResult g = gProve(f, logic, o.budget);
            r["expansions"] = g.expansions;
            switch (g.status) {
            case GStatus::Proved:
                r["status"] = "proved";
                r["proof"] = json::parse(gDerivationToJson(*g.derivation));
                text << input << ": derivable (G." << logicName(logic) << ")\n";
                if (o.format == "latex")
                    text << gDerivationToLatex(*g.derivation) << "\n";
                break;
            case GStatus::Fail:
                r["status"] = "fail";
                text << input << ": not derivable (G." << logicName(logic)
                     << ", search exhausted)\n";
                code = worse(code, exitcode::Negative);
                break;
            case GStatus::BudgetExceeded:
                r["status"] = "budget-exceeded";
                text << input << ": budget exceeded after " << g.expansions << " expansions\n";
                code = worse(code, exitcode::Budget);
                break;
            }
        } else {
            HResult h = hProve(f, logic);
            r["steps"] = h.steps;
            if (h.status == HStatus::Proved) {
                r["status"] = "proved";
                r["proof"] = json::parse(hDerivationToJson(*h.proof));
                text << input << ": derivable (H." << logicName(logic) << ")\n";
                if (o.format == "latex")
                    text << hDerivationToLatex(*h.proof) << "\n";
            } else if (h.status == HStatus::Refuted) {
                ExtractionReport rep = refuteReport(h.refutation->saturated, logic, f);
                if (!rep.ok) {
                    std::cerr << "internal defect: countermodel verification failed: "
                              << rep.failure << "\n";
                    return exitcode::Usage;
                }
                r["status"] = "refuted";
                r["saturated"] = json::parse(hypersequentToJson(h.refutation->saturated));
                r["countermodel"] = json::parse(reportToJson(rep));
                text << input << ": not derivable (H." << logicName(logic)
                     << "), verified countermodel:\n"
                     << reportToText(rep);
                code = worse(code, exitcode::Negative);
            } else {
                r["status"] = "ceiling-defect";
                std::cerr << "internal defect: safety ceiling hit in hProve\n";
                return exitcode::Budget;
            }
        }
        results.push_back(std::move(r));
    }
    emit(o, results, text.str());
    return code;
}

// ---------------------------------------------------------------------------
// check

int runCheck(const Options& o) {
    if (o.modelFile.empty())
        throw CLI::ValidationError("--model", "check requires --model FILE");
    std::ifstream in(o.modelFile);
    if (!in)
        throw std::runtime_error("cannot open model file " + o.modelFile);
    std::stringstream buf;
    buf << in.rdbuf();
    Model m = modelFromJson(buf.str());

    json results = json::array();
    std::ostringstream text;
    for (const std::string& input : gatherFormulas(o)) {
        FormulaRef f = parse(input);
        json r;
        r["formula"] = render(f, {RenderStyle::Ascii, o.resugar});
        json perWorld = json::array();
        text << input << ":\n";
        bool all = true;
        for (int w = 0; w < m.worldCount; ++w) {
            bool v = forces(m, w, f);
            perWorld.push_back(v);
            all = all && v;
            text << "  world " << w << ": " << (v ? "true" : "false") << "\n";
        }
        r["perWorld"] = std::move(perWorld);
        r["valid"] = all;
        text << "  valid in model: " << (all ? "true" : "false") << "\n";
        results.push_back(std::move(r));
    }
    emit(o, results, text.str());
    return exitcode::Ok;
}

// ---------------------------------------------------------------------------
// oracle

int runOracle(const Options& o) {
    LogicId logic = parseLogic(o.logic, false);
    json results = json::array();
    std::ostringstream text;
    int code = exitcode::Ok;
    for (const std::string& input : gatherFormulas(o)) {
        FormulaRef f = parse(input);
        auto r = findSemanticCountermodel(f, frameConditions(logic), o.maxWorlds, o.ceiling);
        json j;
        j["formula"] = render(f, {RenderStyle::Ascii, o.resugar});
        j["logic"] = logicName(logic);
        j["maxWorlds"] = o.maxWorlds;
        switch (r.status) {
        case CountermodelSearchResult::Status::Found:
            j["status"] = "found";
            j["model"] = json::parse(modelToJson(r.model));
            j["witnessWorld"] = r.world;
            text << input << ": countermodel found (" << r.model.worldCount
                 << " worlds, witness " << r.world << ")\n"
                 << modelToJson(r.model, 2) << "\n";
            break;
        case CountermodelSearchResult::Status::NotFoundUpToBound:
            j["status"] = "not-found-up-to-bound";
            text << input << ": no countermodel with up to " << o.maxWorlds
                 << " worlds (not a validity proof)\n";
            code = worse(code, exitcode::Negative);
            break;
        case CountermodelSearchResult::Status::CeilingExceeded:
            j["status"] = "ceiling-exceeded";
            text << input << ": enumeration ceiling exceeded\n";
            code = worse(code, exitcode::Budget);
            break;
        }
        results.push_back(std::move(j));
    }
    emit(o, results, text.str());
    return code;
}

// ---------------------------------------------------------------------------
// corpus

int runCorpus(const Options& o) {
    LogicId logic = parseLogic(o.logic, true);
    json summary;
    summary["logic"] = logicName(logic);
    std::ostringstream text;
    bool ok = true;

    auto corpus = axiomCorpus(logic, {"p", "q", "r"});
    int hProved = 0, gProved = 0;
    for (FormulaRef f : corpus) {
        if (hProve(f, logic).status == HStatus::Proved)
            ++hProved;
        else
            text << "  FAIL hProve: " << render(f) << "\n";
        if (gProve(f, logic, o.budget).status == GStatus::Proved)
            ++gProved;
        else
            text << "  FAIL gProve: " << render(f) << "\n";
    }
    ok = ok && hProved == static_cast<int>(corpus.size()) &&
         gProved == static_cast<int>(corpus.size());
    summary["axioms"] = {{"total", corpus.size()}, {"hProved", hProved}, {"gProved", gProved}};
    text << "axiom corpus (" << logicName(logic) << ", atoms p,q,r): " << corpus.size()
         << " instances, hProve " << hProved << ", gProve " << gProved << "\n";

    json sep = json::array();
    for (const SeparationCase& c : separationSuite(logic)) {
        auto r = hProve(c.formula, logic);
        std::string status;
        if (r.status != HStatus::Refuted) {
            status = "unexpected-proof";
            ok = false;
        } else {
            auto rep = refuteReport(r.refutation->saturated, logic, c.formula);
            status = rep.ok ? "refuted-verified" : "verification-failed";
            ok = ok && rep.ok;
        }
        sep.push_back({{"axiom", schemaName(c.schema)},
                       {"formula", render(c.formula)},
                       {"status", status}});
        text << "separation " << schemaName(c.schema) << " (" << render(c.formula)
             << "): " << status << "\n";
    }
    summary["separation"] = std::move(sep);
    summary["ok"] = ok;
    text << (ok ? "all expectations met" : "EXPECTATIONS VIOLATED") << "\n";
    emit(o, summary, text.str());
    return ok ? exitcode::Ok : exitcode::Negative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decision procedures for comparative plausibility logics "
                 "over neighbourhood models"};
    app.require_subcommand(1);
    Options o;

    auto addCommon = [&](CLI::App* cmd, bool withFormulas) {
        cmd->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"text", "json", "latex"}));
        cmd->add_flag("--resugar", o.resugar, "Print top/~/&/| where recognizable");
        cmd->add_option("--seed", o.seed, "Seed for randomized harnesses");
        if (withFormulas) {
            cmd->add_option("formulas", o.formulas, "Formulas (ascii syntax)");
            cmd->add_option("--file", o.formulaFile,
                            "Read formulas from a file, one per line, # comments");
        }
    };

    CLI::App* prove = app.add_subcommand("prove", "Decide derivability of formulas");
    prove->add_option("--logic", o.logic, "Logic: n, nn, nt, nw, nc, na, nna");
    prove->add_option("--calculus", o.calculus, "Calculus: g (sequent) or h (hypersequent)");
    prove->add_option("--budget", o.budget, "G-calculus expansion budget");
    addCommon(prove, true);

    CLI::App* check = app.add_subcommand("check", "Evaluate formulas in a model file");
    check->add_option("--model", o.modelFile, "Model file (json)")->required();
    addCommon(check, true);

    CLI::App* oracle = app.add_subcommand("oracle", "Bounded semantic countermodel search");
    oracle->add_option("--logic", o.logic, "Any registered logic, semantic-only included");
    oracle->add_option("--max-worlds", o.maxWorlds, "World bound")->check(CLI::Range(1, 6));
    oracle->add_option("--ceiling", o.ceiling, "Candidate-model ceiling");
    addCommon(oracle, true);

    CLI::App* corpus = app.add_subcommand("corpus", "Run the axiom corpus and separation suite");
    corpus->add_option("--logic", o.logic, "Logic: n, nn, nt, nw, nc, na, nna");
    corpus->add_option("--budget", o.budget, "G-calculus expansion budget");
    addCommon(corpus, false);

    try {
        app.parse(argc, argv);
        if (prove->parsed())
            return runProve(o);
        if (check->parsed())
            return runCheck(o);
        if (oracle->parsed())
            return runOracle(o);
        if (corpus->parsed())
            return runCorpus(o);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : exitcode::Usage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exitcode::Usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exitcode::Usage;
    }
    return exitcode::Usage;
}
