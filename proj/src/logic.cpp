/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#include "cplaus/logic.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace cplaus {

bool hasCalculus(LogicId l) {
    switch (l) {
    case LogicId::N:
    case LogicId::NN:
    case LogicId::NT:
    case LogicId::NW:
    case LogicId::NC:
    case LogicId::NA:
    case LogicId::NNA:
        return true;
    default:
        return false;
    }
}

const char* logicName(LogicId l) {
    switch (l) {
    case LogicId::N: return "n";
    case LogicId::NN: return "nn";
    case LogicId::NT: return "nt";
    case LogicId::NW: return "nw";
    case LogicId::NC: return "nc";
    case LogicId::NA: return "na";
    case LogicId::NNA: return "nna";
    case LogicId::NU: return "nu";
    case LogicId::NNU: return "nnu";
    case LogicId::NTU: return "ntu";
    case LogicId::NWU: return "nwu";
    case LogicId::NCU: return "ncu";
    case LogicId::NTA: return "nta";
    case LogicId::NWA: return "nwa";
    case LogicId::NCA: return "nca";
    }
    return "?";
}

std::optional<LogicId> logicByName(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (LogicId l : allLogics())
        if (lower == logicName(l))
            return l;
    return std::nullopt;
}

std::vector<LogicId> calculusLogics() {
    return {LogicId::N,  LogicId::NN, LogicId::NT, LogicId::NW,
            LogicId::NC, LogicId::NA, LogicId::NNA};
}

std::vector<LogicId> allLogics() {
    return {LogicId::N,   LogicId::NN,  LogicId::NT,  LogicId::NW,  LogicId::NC,
            LogicId::NA,  LogicId::NNA, LogicId::NU,  LogicId::NNU, LogicId::NTU,
            LogicId::NWU, LogicId::NCU, LogicId::NTA, LogicId::NWA, LogicId::NCA};
}

std::vector<FrameCondition> frameConditions(LogicId l) {
    using FC = FrameCondition;
    switch (l) {
    case LogicId::N: return {FC::NonEmptiness};
    case LogicId::NN: return {FC::NonEmptiness, FC::N};
    case LogicId::NT: return {FC::NonEmptiness, FC::T};
    case LogicId::NW: return {FC::NonEmptiness, FC::W};
    case LogicId::NC: return {FC::NonEmptiness, FC::C};
    case LogicId::NA: return {FC::NonEmptiness, FC::APlus};
    case LogicId::NNA: return {FC::NonEmptiness, FC::N, FC::APlus};
    case LogicId::NU: return {FC::NonEmptiness, FC::U};
    case LogicId::NNU: return {FC::NonEmptiness, FC::N, FC::U};
    case LogicId::NTU: return {FC::NonEmptiness, FC::T, FC::U};
    case LogicId::NWU: return {FC::NonEmptiness, FC::W, FC::U};
    case LogicId::NCU: return {FC::NonEmptiness, FC::C, FC::U};
    case LogicId::NTA: return {FC::NonEmptiness, FC::T, FC::APlus};
    case LogicId::NWA: return {FC::NonEmptiness, FC::W, FC::APlus};
    case LogicId::NCA: return {FC::NonEmptiness, FC::C, FC::APlus};
    }
    return {};
}

const char* schemaName(AxiomSchema s) {
    switch (s) {
    case AxiomSchema::Cpr: return "cpr";
    case AxiomSchema::Tr: return "tr";
    case AxiomSchema::Or: return "or";
    case AxiomSchema::N: return "n";
    case AxiomSchema::T: return "t";
    case AxiomSchema::W: return "w";
    case AxiomSchema::C: return "c";
    case AxiomSchema::UMinus: return "u-";
    case AxiomSchema::U: return "u";
    case AxiomSchema::AMinus: return "a-";
    case AxiomSchema::A: return "a";
    case AxiomSchema::Co: return "co";
    }
    return "?";
}

int schemaArity(AxiomSchema s) {
    switch (s) {
    case AxiomSchema::Cpr: return 2;
    case AxiomSchema::Tr:
    case AxiomSchema::Or: return 3;
    case AxiomSchema::N: return 0;
    case AxiomSchema::T:
    case AxiomSchema::W:
    case AxiomSchema::C:
    case AxiomSchema::UMinus:
    case AxiomSchema::U: return 1;
    case AxiomSchema::AMinus:
    case AxiomSchema::A:
    case AxiomSchema::Co: return 2;
    }
    return 0;
}

FormulaRef instantiate(AxiomSchema s, const std::vector<FormulaRef>& args) {
    if (s == AxiomSchema::Cpr)
        throw std::invalid_argument("cpr is an inference rule, not an axiom");
    if (static_cast<int>(args.size()) != schemaArity(s))
        throw std::invalid_argument(std::string("schema ") + schemaName(s) + " expects " +
                                    std::to_string(schemaArity(s)) + " arguments");
    switch (s) {
    case AxiomSchema::Tr: // (A <= B) & (B <= C) -> (A <= C)
        return mkImp(mkAnd(mkCmpPl(args[0], args[1]), mkCmpPl(args[1], args[2])),
                     mkCmpPl(args[0], args[2]));
    case AxiomSchema::Or: // (A <= B) & (A <= C) -> (A <= B | C)
        return mkImp(mkAnd(mkCmpPl(args[0], args[1]), mkCmpPl(args[0], args[2])),
                     mkCmpPl(args[0], mkOr(args[1], args[2])));
    case AxiomSchema::N: // ~(bot <= top)
        return mkNeg(mkCmpPl(mkBot(), mkTop()));
    case AxiomSchema::T: // (bot <= A) -> ~A
        return mkImp(mkCmpPl(mkBot(), args[0]), mkNeg(args[0]));
    case AxiomSchema::W: // A -> (A <= top)
        return mkImp(args[0], mkCmpPl(args[0], mkTop()));
    case AxiomSchema::C: // (A <= top) -> A
        return mkImp(mkCmpPl(args[0], mkTop()), args[0]);
    case AxiomSchema::UMinus: // ~(bot <= A) -> (bot <= (bot <= A))
        return mkImp(mkNeg(mkCmpPl(mkBot(), args[0])),
                     mkCmpPl(mkBot(), mkCmpPl(mkBot(), args[0])));
    case AxiomSchema::U: // (bot <= A) -> (bot <= ~(bot <= A))
        return mkImp(mkCmpPl(mkBot(), args[0]),
                     mkCmpPl(mkBot(), mkNeg(mkCmpPl(mkBot(), args[0]))));
    case AxiomSchema::AMinus: // (A <= B) -> (bot <= ~(A <= B))
        return mkImp(mkCmpPl(args[0], args[1]),
                     mkCmpPl(mkBot(), mkNeg(mkCmpPl(args[0], args[1]))));
    case AxiomSchema::A: // ~(A <= B) -> (bot <= (A <= B))
        return mkImp(mkNeg(mkCmpPl(args[0], args[1])),
                     mkCmpPl(mkBot(), mkCmpPl(args[0], args[1])));
    case AxiomSchema::Co: // (A <= B) | (B <= A)
        return mkOr(mkCmpPl(args[0], args[1]), mkCmpPl(args[1], args[0]));
    case AxiomSchema::Cpr:
        break;
    }
    throw std::invalid_argument("unreachable");
}

std::vector<AxiomSchema> axiomSchemas(LogicId l) {
    using S = AxiomSchema;
    std::vector<S> base{S::Tr, S::Or};
    auto with = [&](std::initializer_list<S> extra) {
        std::vector<S> out = base;
        out.insert(out.end(), extra);
        return out;
    };
    switch (l) {
    case LogicId::N: return base;
    case LogicId::NN: return with({S::N});
    case LogicId::NT: return with({S::T});
    case LogicId::NW: return with({S::T, S::W});
    case LogicId::NC: return with({S::T, S::W, S::C});
    case LogicId::NA: return with({S::AMinus, S::A});
    case LogicId::NNA: return with({S::N, S::AMinus, S::A});
    case LogicId::NU: return with({S::UMinus, S::U});
    case LogicId::NNU: return with({S::N, S::UMinus, S::U});
    case LogicId::NTU: return with({S::T, S::UMinus, S::U});
    case LogicId::NWU: return with({S::T, S::W, S::UMinus, S::U});
    case LogicId::NCU: return with({S::T, S::W, S::C, S::UMinus, S::U});
    case LogicId::NTA: return with({S::T, S::AMinus, S::A});
    case LogicId::NWA: return with({S::T, S::W, S::AMinus, S::A});
    case LogicId::NCA: return with({S::T, S::W, S::C, S::AMinus, S::A});
    }
    return base;
}

std::vector<SeparationCase> separationSuite(LogicId l) {
    using S = AxiomSchema;
    FormulaRef p = mkAtom("p"), q = mkAtom("q");
    auto inst = [&](S s) {
        int arity = schemaArity(s);
        std::vector<FormulaRef> args;
        if (arity >= 1)
            args.push_back(p);
        if (arity >= 2)
            args.push_back(q);
        return SeparationCase{s, instantiate(s, args)};
    };
    std::vector<AxiomSchema> schemas;
    switch (l) {
    case LogicId::N: schemas = {S::N, S::T, S::W, S::C, S::AMinus, S::A}; break;
    case LogicId::NN: schemas = {S::T, S::W, S::C, S::AMinus, S::A}; break;
    case LogicId::NT: schemas = {S::W, S::C, S::AMinus, S::A}; break;
    case LogicId::NW: schemas = {S::C, S::AMinus, S::A}; break;
    case LogicId::NC: schemas = {S::AMinus, S::A}; break;
    case LogicId::NA: schemas = {S::N, S::T, S::W, S::C}; break;
    case LogicId::NNA: schemas = {S::T, S::W, S::C}; break;
    default:
        throw std::invalid_argument(std::string("logic ") + logicName(l) +
                                    " has no separation suite");
    }
    std::vector<SeparationCase> out;
    for (AxiomSchema s : schemas)
        out.push_back(inst(s));
    out.push_back(inst(S::Co));
    return out;
}

std::vector<FormulaRef> axiomCorpus(LogicId l, const std::vector<std::string>& atoms) {
    std::vector<FormulaRef> args;
    for (const auto& a : atoms)
        args.push_back(mkAtom(a));
    args.push_back(mkBot());
    args.push_back(mkTop());

    std::vector<FormulaRef> corpus;
    std::set<FormulaRef> seen;
    auto add = [&](FormulaRef f) {
        if (seen.insert(f).second)
            corpus.push_back(f);
    };
    for (AxiomSchema s : axiomSchemas(l)) {
        int arity = schemaArity(s);
        std::vector<FormulaRef> tuple(arity, nullptr);
        // Odometer over argument tuples.
        std::vector<std::size_t> idx(arity, 0);
        while (true) {
            for (int i = 0; i < arity; ++i)
                tuple[i] = args[idx[i]];
            add(instantiate(s, tuple));
            int pos = arity - 1;
            while (pos >= 0 && ++idx[pos] == args.size()) {
                idx[pos] = 0;
                --pos;
            }
            if (pos < 0)
                break;
        }
    }
    return corpus;
}

} // namespace cplaus
