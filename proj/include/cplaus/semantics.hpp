/*
 * Copyright (c) 2026, the cplaus authors
 *
 * SPDX-License-Identifier: MIT
 */
#ifndef CPLAUS_SEMANTICS_HPP
#define CPLAUS_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cplaus/formula.hpp"

namespace cplaus {

// Worlds are dense indices 0..worldCount-1; world sets are bitmasks.
// 64 worlds are far more than either the enumerator or the countermodel
// extractor ever produce.
using WorldMask = std::uint64_t;

constexpr int kMaxWorlds = 64;

WorldMask maskOf(const std::vector<int>& worlds);
std::vector<int> worldsOf(WorldMask mask);

// Finite neighbourhood model <W, N, V>. Neighbourhood lists are kept
// sorted and duplicate-free so that N(v) == N(w) is plain equality.
// Every member set is nonempty (the non-emptiness condition).
struct Model {
    int worldCount = 1;
    std::vector<std::vector<WorldMask>> neighbourhoods;
    std::map<std::string, WorldMask> valuation; // absent atom = empty set

    bool operator==(const Model& o) const = default;
};

enum class FrameCondition : std::uint8_t {
    NonEmptiness, // {} not in N(w)
    N,            // N(w) nonempty                        (normality)
    T,            // some a in N(w) with w in a           (total reflexivity)
    W,            // N(w) nonempty, all a in N(w) own w   (weak centering)
    C,            // {w} in N(w), all a in N(w) own w     (centering)
    U,            // v in a in N(w) implies UN(v)=UN(w)   (uniformity)
    A,            // v in a in N(w) implies N(v)=N(w)     (absoluteness)
    APlus,        // N constant over W                    (strong absoluteness)
};

const char* frameConditionName(FrameCondition c);

// Structural sanity: indices in range, member sets nonempty, lists
// sorted and distinct. Throws std::invalid_argument on violation.
void validateModel(const Model& m);

// The forcing relation; w must be a valid world index.
bool forces(const Model& m, int world, FormulaRef f);

// True iff some world of alpha forces f.
bool existsForces(const Model& m, WorldMask alpha, FormulaRef f);

bool validInModel(const Model& m, FormulaRef f);

bool checkCondition(const Model& m, FrameCondition c);
bool checkConditions(const Model& m, const std::vector<FrameCondition>& cs);

// ---------------------------------------------------------------------------
// Brute-force enumeration oracle.
//
// Enumerates every model with 1..maxWorlds worlds over the given atoms
// that satisfies all requested conditions, each exactly once in the
// canonical indexing (world count ascending, then neighbourhood
// selectors, then valuations). No isomorphism reduction.
//
// The ceiling bounds the number of candidate (frame, valuation) pairs
// considered; hitting it is reported explicitly, never silently.

constexpr std::uint64_t kDefaultModelCeiling = 1'000'000;

class ModelEnumerator {
public:
    ModelEnumerator(int maxWorlds, std::vector<std::string> atoms,
                    std::vector<FrameCondition> conditions,
                    std::uint64_t ceiling = kDefaultModelCeiling);

    // nullopt when exhausted or when the ceiling was hit (check overflowed()).
    std::optional<Model> next();

    bool overflowed() const { return overflowed_; }
    std::uint64_t consideredCount() const { return considered_; }
    std::uint64_t emittedCount() const { return emitted_; }

private:
    int maxWorlds_;
    std::vector<std::string> atoms_;
    std::vector<FrameCondition> conditions_;
    std::uint64_t ceiling_;

    int worlds_ = 0;
    std::vector<std::uint64_t> frameSelector_;
    std::uint64_t valuationIndex_ = 0;
    bool frameAdmissible_ = false;
    bool done_ = false;
    bool overflowed_ = false;
    std::uint64_t considered_ = 0;
    std::uint64_t emitted_ = 0;
    Model frameModel_;

    bool advanceFrame();
    bool startWorldCount(int worlds);
    void decodeFrame();
    std::uint64_t valuationSpace() const;
};

struct CountermodelSearchResult {
    enum class Status { Found, NotFoundUpToBound, CeilingExceeded };
    Status status = Status::NotFoundUpToBound;
    Model model;
    int world = 0;
};

// First enumerated model and world with forces(model, world, f) false.
// NotFoundUpToBound is not a validity proof.
CountermodelSearchResult findSemanticCountermodel(FormulaRef f,
                                                  const std::vector<FrameCondition>& conditions,
                                                  int maxWorlds,
                                                  std::uint64_t ceiling = kDefaultModelCeiling);

// ---------------------------------------------------------------------------
// JSON model format (External Interfaces):
//   {"worlds": 3, "neighbourhoods": [[[1],[2]],[],[]],
//    "valuation": {"p":[2],"q":[1]}}
// The loader rejects empty member sets, out-of-range indices and
// duplicate sets, reporting the JSON path of the offending element.

std::string modelToJson(const Model& m, int indent = -1);
Model modelFromJson(const std::string& text);

} // namespace cplaus

#endif
