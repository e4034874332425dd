/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "cplaus/countermodel.hpp"
#include "cplaus/gseq.hpp"
#include "cplaus/hseq.hpp"
#include "cplaus/logic.hpp"
#include "cplaus/semantics.hpp"

namespace py = pybind11;
using namespace cplaus;
using nlohmann::json;

namespace {

py::object jsonToPy(const json& j) {
    switch (j.type()) {
    case json::value_t::null:
        return py::none();
    case json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
        return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
        return py::float_(j.get<double>());
    case json::value_t::string:
        return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (const auto& e : j)
            out.append(jsonToPy(e));
        return out;
    }
    case json::value_t::object: {
        py::dict out;
        for (const auto& [k, v] : j.items())
            out[py::str(k)] = jsonToPy(v);
        return out;
    }
    default:
        return py::none();
    }
}

LogicId logicArg(const std::string& name, bool needCalculus) {
    auto l = logicByName(name);
    if (!l)
        throw py::value_error("unknown logic '" + name + "'");
    if (needCalculus && !hasCalculus(*l))
        throw py::value_error("logic '" + name + "' has no proof calculus");
    return *l;
}

RenderOptions styleArg(const std::string& style, bool resugar) {
    if (style == "ascii")
        return {RenderStyle::Ascii, resugar};
    if (style == "unicode")
        return {RenderStyle::Unicode, resugar};
    if (style == "latex")
        return {RenderStyle::Latex, resugar};
    throw py::value_error("style must be ascii, unicode or latex");
}

py::object pyProve(const std::string& formula, const std::string& logic,
                   const std::string& calculus, std::uint64_t budget) {
    LogicId l = logicArg(logic, true);
    FormulaRef f = parse(formula);
    json r;
    r["formula"] = render(f);
    r["logic"] = logicName(l);
    r["calculus"] = calculus;
    if (calculus == "g") {
        GResult g = gProve(f, l, budget);
        r["expansions"] = g.expansions;
        r["status"] = g.status == GStatus::Proved           ? "proved"
                      : g.status == GStatus::BudgetExceeded ? "budget-exceeded"
                                                            : "fail";
        if (g.derivation)
            r["proof"] = json::parse(gDerivationToJson(*g.derivation));
    } else if (calculus == "h") {
        HResult h = hProve(f, l);
        r["steps"] = h.steps;
        if (h.status == HStatus::Proved) {
            r["status"] = "proved";
            r["proof"] = json::parse(hDerivationToJson(*h.proof));
        } else if (h.status == HStatus::Refuted) {
            r["status"] = "refuted";
            auto rep = refuteReport(h.refutation->saturated, l, f);
            if (!rep.ok)
                throw std::runtime_error("countermodel verification failed: " + rep.failure);
            r["saturated"] = json::parse(hypersequentToJson(h.refutation->saturated));
            r["countermodel"] = json::parse(reportToJson(rep));
        } else {
            r["status"] = "ceiling-defect";
        }
    } else {
        throw py::value_error("calculus must be 'g' or 'h'");
    }
    return jsonToPy(r);
}

py::object pyOracle(const std::string& formula, const std::string& logic, int maxWorlds,
                    std::uint64_t ceiling) {
    LogicId l = logicArg(logic, false);
    FormulaRef f = parse(formula);
    auto r = findSemanticCountermodel(f, frameConditions(l), maxWorlds, ceiling);
    json j;
    j["formula"] = render(f);
    j["logic"] = logicName(l);
    switch (r.status) {
    case CountermodelSearchResult::Status::Found:
        j["status"] = "found";
        j["model"] = json::parse(modelToJson(r.model));
        j["witnessWorld"] = r.world;
        break;
    case CountermodelSearchResult::Status::NotFoundUpToBound:
        j["status"] = "not-found-up-to-bound";
        break;
    case CountermodelSearchResult::Status::CeilingExceeded:
        j["status"] = "ceiling-exceeded";
        break;
    }
    return jsonToPy(j);
}

py::object pyCheck(const std::string& modelJson, const std::string& formula) {
    Model m = modelFromJson(modelJson);
    FormulaRef f = parse(formula);
    py::list out;
    for (int w = 0; w < m.worldCount; ++w)
        out.append(forces(m, w, f));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Decision procedures for comparative plausibility logics over "
              "neighbourhood models";

    m.def("render", [](const std::string& f, const std::string& style, bool resugar) {
              return render(parse(f), styleArg(style, resugar));
          },
          py::arg("formula"), py::arg("style") = "ascii", py::arg("resugar") = false,
          "Parse and reprint a formula with minimal parentheses.");
    m.def("complexity", [](const std::string& f) { return complexity(parse(f)); },
          py::arg("formula"));
    m.def("subformulas", [](const std::string& f) {
              py::list out;
              for (FormulaRef g : subformulas(parse(f)))
                  out.append(render(g));
              return out;
          },
          py::arg("formula"));
    m.def("atoms", [](const std::string& f) { return atomsOf(parse(f)); }, py::arg("formula"));

    m.def("logics", [] {
        py::list out;
        for (LogicId l : allLogics())
            out.append(std::string(logicName(l)));
        return out;
    });
    m.def("calculus_logics", [] {
        py::list out;
        for (LogicId l : calculusLogics())
            out.append(std::string(logicName(l)));
        return out;
    });
    m.def("frame_conditions", [](const std::string& logic) {
              py::list out;
              for (FrameCondition c : frameConditions(logicArg(logic, false)))
                  out.append(std::string(frameConditionName(c)));
              return out;
          },
          py::arg("logic"));
    m.def("axiom_corpus", [](const std::string& logic, const std::vector<std::string>& atoms) {
              py::list out;
              for (FormulaRef f : axiomCorpus(logicArg(logic, false), atoms))
                  out.append(render(f));
              return out;
          },
          py::arg("logic"), py::arg("atoms") = std::vector<std::string>{"p", "q", "r"});

    m.def("prove", &pyProve, py::arg("formula"), py::arg("logic") = "n",
          py::arg("calculus") = "h", py::arg("budget") = kDefaultGBudget,
          "Decide derivability; for the hypersequent calculus a refutation "
          "carries a verified countermodel.");
    m.def("oracle", &pyOracle, py::arg("formula"), py::arg("logic") = "n",
          py::arg("max_worlds") = 2, py::arg("ceiling") = kDefaultModelCeiling,
          "Bounded enumeration of countermodels over the logic's model class.");
    m.def("check_model", &pyCheck, py::arg("model_json"), py::arg("formula"),
          "Per-world truth values of a formula in a model given as json.");
}
