/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#include "cplaus/semantics.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cplaus {

WorldMask maskOf(const std::vector<int>& worlds) {
    WorldMask m = 0;
    for (int w : worlds)
        m |= WorldMask(1) << w;
    return m;
}

std::vector<int> worldsOf(WorldMask mask) {
    std::vector<int> out;
    for (int w = 0; mask != 0; ++w, mask >>= 1)
        if (mask & 1)
            out.push_back(w);
    return out;
}

const char* frameConditionName(FrameCondition c) {
    switch (c) {
    case FrameCondition::NonEmptiness: return "non-emptiness";
    case FrameCondition::N: return "N";
    case FrameCondition::T: return "T";
    case FrameCondition::W: return "W";
    case FrameCondition::C: return "C";
    case FrameCondition::U: return "U";
    case FrameCondition::A: return "A";
    case FrameCondition::APlus: return "A+";
    }
    return "?";
}

void validateModel(const Model& m) {
    if (m.worldCount < 1 || m.worldCount > kMaxWorlds)
        throw std::invalid_argument("world count out of range");
    if (static_cast<int>(m.neighbourhoods.size()) != m.worldCount)
        throw std::invalid_argument("neighbourhood list length != world count");
    const WorldMask all =
        m.worldCount == kMaxWorlds ? ~WorldMask(0) : (WorldMask(1) << m.worldCount) - 1;
    for (const auto& sets : m.neighbourhoods) {
        WorldMask prev = 0;
        bool first = true;
        for (WorldMask a : sets) {
            if (a == 0)
                throw std::invalid_argument("empty member set in neighbourhood");
            if ((a & ~all) != 0)
                throw std::invalid_argument("world index out of range in neighbourhood");
            if (!first && a <= prev)
                throw std::invalid_argument("neighbourhood sets not sorted/distinct");
            prev = a;
            first = false;
        }
    }
    for (const auto& [atom, v] : m.valuation)
        if ((v & ~all) != 0)
            throw std::invalid_argument("world index out of range in valuation of " + atom);
}

bool forces(const Model& m, int world, FormulaRef f) {
    if (world < 0 || world >= m.worldCount)
        throw std::invalid_argument("world index out of range");
    switch (f->kind()) {
    case Kind::Atom: {
        auto it = m.valuation.find(f->atomName());
        return it != m.valuation.end() && (it->second >> world) & 1;
    }
    case Kind::Bot:
        return false;
    case Kind::Imp:
        return !forces(m, world, f->left()) || forces(m, world, f->right());
    case Kind::CmpPl:
        for (WorldMask alpha : m.neighbourhoods[world])
            if (existsForces(m, alpha, f->right()) && !existsForces(m, alpha, f->left()))
                return false;
        return true;
    }
    return false;
}

bool existsForces(const Model& m, WorldMask alpha, FormulaRef f) {
    for (WorldMask rest = alpha; rest != 0; rest &= rest - 1)
        if (forces(m, std::countr_zero(rest), f))
            return true;
    return false;
}

bool validInModel(const Model& m, FormulaRef f) {
    for (int w = 0; w < m.worldCount; ++w)
        if (!forces(m, w, f))
            return false;
    return true;
}

namespace {

WorldMask unionOf(const std::vector<WorldMask>& sets) {
    WorldMask u = 0;
    for (WorldMask a : sets)
        u |= a;
    return u;
}

} // namespace

bool checkCondition(const Model& m, FrameCondition c) {
    switch (c) {
    case FrameCondition::NonEmptiness:
        for (const auto& sets : m.neighbourhoods)
            for (WorldMask a : sets)
                if (a == 0)
                    return false;
        return true;
    case FrameCondition::N:
        for (const auto& sets : m.neighbourhoods)
            if (sets.empty())
                return false;
        return true;
    case FrameCondition::T:
        for (int w = 0; w < m.worldCount; ++w) {
            bool hit = false;
            for (WorldMask a : m.neighbourhoods[w])
                if ((a >> w) & 1) {
                    hit = true;
                    break;
                }
            if (!hit)
                return false;
        }
        return true;
    case FrameCondition::W:
        for (int w = 0; w < m.worldCount; ++w) {
            if (m.neighbourhoods[w].empty())
                return false;
            for (WorldMask a : m.neighbourhoods[w])
                if (((a >> w) & 1) == 0)
                    return false;
        }
        return true;
    case FrameCondition::C:
        for (int w = 0; w < m.worldCount; ++w) {
            const auto& sets = m.neighbourhoods[w];
            if (!std::binary_search(sets.begin(), sets.end(), WorldMask(1) << w))
                return false;
            for (WorldMask a : sets)
                if (((a >> w) & 1) == 0)
                    return false;
        }
        return true;
    case FrameCondition::U:
        for (int w = 0; w < m.worldCount; ++w)
            for (WorldMask a : m.neighbourhoods[w])
                for (int v : worldsOf(a))
                    if (unionOf(m.neighbourhoods[v]) != unionOf(m.neighbourhoods[w]))
                        return false;
        return true;
    case FrameCondition::A:
        for (int w = 0; w < m.worldCount; ++w)
            for (WorldMask a : m.neighbourhoods[w])
                for (int v : worldsOf(a))
                    if (m.neighbourhoods[v] != m.neighbourhoods[w])
                        return false;
        return true;
    case FrameCondition::APlus:
        for (int w = 1; w < m.worldCount; ++w)
            if (m.neighbourhoods[w] != m.neighbourhoods[0])
                return false;
        return true;
    }
    return false;
}

bool checkConditions(const Model& m, const std::vector<FrameCondition>& cs) {
    for (FrameCondition c : cs)
        if (!checkCondition(m, c))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Enumeration

ModelEnumerator::ModelEnumerator(int maxWorlds, std::vector<std::string> atoms,
                                 std::vector<FrameCondition> conditions, std::uint64_t ceiling)
    : maxWorlds_(maxWorlds), atoms_(std::move(atoms)), conditions_(std::move(conditions)),
      ceiling_(ceiling) {
    if (maxWorlds < 1)
        throw std::invalid_argument("maxWorlds must be >= 1");
    if (maxWorlds > 6)
        throw std::invalid_argument("maxWorlds > 6 is not supported by the enumerator");
    startWorldCount(1);
}

std::uint64_t ModelEnumerator::valuationSpace() const {
    std::uint64_t bits = std::uint64_t(atoms_.size()) * std::uint64_t(worlds_);
    if (bits >= 63)
        return ~std::uint64_t(0); // saturate; the ceiling will trip first
    return std::uint64_t(1) << bits;
}

bool ModelEnumerator::startWorldCount(int worlds) {
    if (worlds > maxWorlds_)
        return false;
    worlds_ = worlds;
    frameSelector_.assign(worlds, 0);
    valuationIndex_ = 0;
    decodeFrame();
    return true;
}

// Selector bit j of world w encodes membership of the nonempty set with
// mask j+1 in N(w).
void ModelEnumerator::decodeFrame() {
    frameModel_.worldCount = worlds_;
    frameModel_.neighbourhoods.assign(worlds_, {});
    const std::uint64_t nSets = (std::uint64_t(1) << worlds_) - 1;
    for (int w = 0; w < worlds_; ++w)
        for (std::uint64_t j = 0; j < nSets; ++j)
            if ((frameSelector_[w] >> j) & 1)
                frameModel_.neighbourhoods[w].push_back(WorldMask(j + 1));
    frameModel_.valuation.clear();
    frameAdmissible_ = checkConditions(frameModel_, conditions_);
}

bool ModelEnumerator::advanceFrame() {
    const std::uint64_t selectorSpace = std::uint64_t(1) << ((std::uint64_t(1) << worlds_) - 1);
    for (int w = 0; w < worlds_; ++w) {
        if (++frameSelector_[w] < selectorSpace) {
            for (int v = 0; v < w; ++v)
                frameSelector_[v] = 0;
            valuationIndex_ = 0;
            decodeFrame();
            return true;
        }
    }
    return startWorldCount(worlds_ + 1);
}

std::optional<Model> ModelEnumerator::next() {
    if (done_ || overflowed_)
        return std::nullopt;
    while (true) {
        if (!frameAdmissible_) {
            // Count the whole skipped block so the bound reflects work.
            std::uint64_t block = valuationSpace();
            if (block > ceiling_ - considered_) {
                overflowed_ = true;
                return std::nullopt;
            }
            considered_ += block;
            if (!advanceFrame()) {
                done_ = true;
                return std::nullopt;
            }
            continue;
        }
        if (valuationIndex_ >= valuationSpace()) {
            if (!advanceFrame()) {
                done_ = true;
                return std::nullopt;
            }
            continue;
        }
        if (considered_ >= ceiling_) {
            overflowed_ = true;
            return std::nullopt;
        }
        ++considered_;
        Model m = frameModel_;
        std::uint64_t v = valuationIndex_++;
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            WorldMask mask = (v >> (i * worlds_)) & ((WorldMask(1) << worlds_) - 1);
            m.valuation[atoms_[i]] = mask;
        }
        ++emitted_;
        return m;
    }
}

namespace {

// In-place enumeration used by the refutation oracle: the same order and
// candidate accounting as ModelEnumerator, without per-model copies.
// visit returns true to stop. Returns true iff the ceiling was hit.
template <typename Visit>
bool visitModels(int maxWorlds, const std::vector<std::string>& atoms,
                 const std::vector<FrameCondition>& conditions, std::uint64_t ceiling,
                 Visit&& visit) {
    std::uint64_t considered = 0;
    for (int worlds = 1; worlds <= maxWorlds; ++worlds) {
        const std::uint64_t nSets = (std::uint64_t(1) << worlds) - 1;
        const std::uint64_t selectorSpace = std::uint64_t(1) << nSets;
        std::uint64_t valBits = std::uint64_t(atoms.size()) * worlds;
        std::uint64_t valSpace = valBits >= 63 ? ~std::uint64_t(0) : std::uint64_t(1) << valBits;
        std::vector<std::uint64_t> sel(worlds, 0);
        Model m;
        m.worldCount = worlds;
        while (true) {
            m.neighbourhoods.assign(worlds, {});
            for (int w = 0; w < worlds; ++w)
                for (std::uint64_t j = 0; j < nSets; ++j)
                    if ((sel[w] >> j) & 1)
                        m.neighbourhoods[w].push_back(WorldMask(j + 1));
            m.valuation.clear();
            if (checkConditions(m, conditions)) {
                for (std::uint64_t v = 0; v < valSpace; ++v) {
                    if (considered++ >= ceiling)
                        return true;
                    for (std::size_t i = 0; i < atoms.size(); ++i)
                        m.valuation[atoms[i]] =
                            (v >> (i * worlds)) & ((WorldMask(1) << worlds) - 1);
                    if (visit(m))
                        return false;
                }
            } else {
                if (valSpace > ceiling - considered)
                    return true;
                considered += valSpace;
            }
            int w = 0;
            while (w < worlds && ++sel[w] == selectorSpace)
                sel[w++] = 0;
            if (w == worlds)
                break;
        }
    }
    return false;
}

} // namespace

CountermodelSearchResult findSemanticCountermodel(FormulaRef f,
                                                  const std::vector<FrameCondition>& conditions,
                                                  int maxWorlds, std::uint64_t ceiling) {
    CountermodelSearchResult r;
    bool overflow = visitModels(maxWorlds, atomsOf(f), conditions, ceiling, [&](const Model& m) {
        for (int w = 0; w < m.worldCount; ++w) {
            if (!forces(m, w, f)) {
                r.status = CountermodelSearchResult::Status::Found;
                r.model = m;
                r.world = w;
                return true;
            }
        }
        return false;
    });
    if (r.status == CountermodelSearchResult::Status::Found)
        return r;
    r.status = overflow ? CountermodelSearchResult::Status::CeilingExceeded
                        : CountermodelSearchResult::Status::NotFoundUpToBound;
    return r;
}

// ---------------------------------------------------------------------------
// JSON

std::string modelToJson(const Model& m, int indent) {
    nlohmann::json j;
    j["worlds"] = m.worldCount;
    auto& nbh = j["neighbourhoods"] = nlohmann::json::array();
    for (const auto& sets : m.neighbourhoods) {
        nlohmann::json row = nlohmann::json::array();
        for (WorldMask a : sets)
            row.push_back(worldsOf(a));
        nbh.push_back(std::move(row));
    }
    auto& val = j["valuation"] = nlohmann::json::object();
    for (const auto& [atom, mask] : m.valuation)
        val[atom] = worldsOf(mask);
    return j.dump(indent);
}

namespace {

[[noreturn]] void schemaError(const std::string& path, const std::string& what) {
    throw std::invalid_argument("model schema violation at " + path + ": " + what);
}

WorldMask readWorldSet(const nlohmann::json& j, const std::string& path, int worldCount,
                       bool allowEmpty) {
    if (!j.is_array())
        schemaError(path, "expected an array of world indices");
    WorldMask mask = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        std::string epath = path + "/" + std::to_string(i);
        if (!e.is_number_integer())
            schemaError(epath, "expected an integer world index");
        long long w = e.get<long long>();
        if (w < 0 || w >= worldCount)
            schemaError(epath, "world index out of range");
        if ((mask >> w) & 1)
            schemaError(epath, "duplicate world index");
        mask |= WorldMask(1) << w;
    }
    if (!allowEmpty && mask == 0)
        schemaError(path, "member set must be nonempty");
    return mask;
}

} // namespace

Model modelFromJson(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("model file is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        schemaError("/", "expected an object");
    if (!j.contains("worlds") || !j["worlds"].is_number_integer())
        schemaError("/worlds", "expected an integer");
    int worlds = j["worlds"].get<int>();
    if (worlds < 1 || worlds > kMaxWorlds)
        schemaError("/worlds", "world count out of range");
    Model m;
    m.worldCount = worlds;
    if (!j.contains("neighbourhoods") || !j["neighbourhoods"].is_array())
        schemaError("/neighbourhoods", "expected an array");
    const auto& nbh = j["neighbourhoods"];
    if (static_cast<int>(nbh.size()) != worlds)
        schemaError("/neighbourhoods", "expected one entry per world");
    for (int w = 0; w < worlds; ++w) {
        std::string wpath = "/neighbourhoods/" + std::to_string(w);
        if (!nbh[w].is_array())
            schemaError(wpath, "expected an array of world sets");
        std::vector<WorldMask> sets;
        for (std::size_t i = 0; i < nbh[w].size(); ++i)
            sets.push_back(readWorldSet(nbh[w][i], wpath + "/" + std::to_string(i), worlds,
                                        /*allowEmpty=*/false));
        std::vector<WorldMask> sorted = sets;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            schemaError(wpath, "duplicate member sets");
        m.neighbourhoods.push_back(std::move(sorted));
    }
    if (j.contains("valuation")) {
        if (!j["valuation"].is_object())
            schemaError("/valuation", "expected an object");
        for (const auto& [atom, arr] : j["valuation"].items())
            m.valuation[atom] =
                readWorldSet(arr, "/valuation/" + atom, worlds, /*allowEmpty=*/true);
    }
    validateModel(m);
    return m;
}

} // namespace cplaus
