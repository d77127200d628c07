#pragma once

#include <hypack/packing.hpp>

#include <optional>
#include <vector>

namespace hypack {

// Finite family of candidate placements: a translation grid of step h (and a
// range of scale exponents in hyperbolic mode) bounded by a window that every
// candidate copy must stay inside.
struct CandidateFamily {
    Mode mode = Mode::Euclidean;
    Rat grid_step = 1;
    long a_min = 0, a_max = 0;
    Rect window{Rat(0), Rat(0), Rat(0), Rat(0)};

    static CandidateFamily euclidean(Rat h, Rect window) {
        CandidateFamily f;
        f.mode = Mode::Euclidean;
        f.grid_step = std::move(h);
        f.window = std::move(window);
        return f;
    }
    static CandidateFamily hyperbolic(Rat h, long a_min, long a_max, Rect window) {
        CandidateFamily f;
        f.mode = Mode::Hyperbolic;
        f.grid_step = std::move(h);
        f.a_min = a_min;
        f.a_max = a_max;
        f.window = std::move(window);
        return f;
    }
};

// Fill a region under a prescribed boundary configuration: the copies whose
// interiors cross the boundary of F are fixed, the interior is repacked with
// as many candidate copies as possible.
struct FillingProblem {
    Body body;
    RectRegion region;                  // F
    std::vector<Placement> boundary;    // copies whose interiors meet the boundary of F
    CandidateFamily family;
    std::vector<Placement> extra_candidates;  // off-grid candidates also allowed
};

// All family placements whose copy's interior meets the interior of F,
// deduplicated, canonically ordered. ConfigError on an empty family.
std::vector<Placement> enumerate_candidates(const FillingProblem& p);

inline constexpr long kDefaultNodeBudget = 10'000'000;

struct FillingResult {
    std::vector<Placement> placements;  // lexicographically least optimum
    std::size_t count = 0;
    bool optimal_within_family = true;  // false when the node budget ran out
    long nodes = 0;
};

// Branch-and-bound maximum-cardinality packing of candidates contained in F
// and compatible with the boundary configuration. Deterministic: the
// returned set is the lexicographically least among the maximum ones.
FillingResult solve_filling(const FillingProblem& p, long node_budget = kDefaultNodeBudget);

// Saturation pass over the square-cell tiling of side j centered on the
// origin: per cell, copies crossing the cell boundary are kept and the cell
// interior is repacked by solve_filling over the grid family of step h plus
// the cell's own original copies (so per-cell counts never decrease). The
// pass commutes with the lattice translations by construction.
PackingWindow saturate_map_euclid(const PackingWindow& w, long cell_side,
                                  const Rat& grid_step,
                                  long node_budget = kDefaultNodeBudget);

enum class Verdict { No, Yes, Unknown };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::No: return "no";
        case Verdict::Yes: return "yes";
        default: return "unknown";
    }
}

struct SwapWitness {
    std::vector<Placement> removed;
    std::vector<Placement> added;
};

struct UnsaturatedReport {
    Verdict unsaturated = Verdict::No;
    std::optional<SwapWitness> witness;
    int k_searched = 0;
    long nodes = 0;
};

// Is there a subset F1 of at most k_max copies contained in F that can be
// replaced by |F1| + 1 family copies contained in F, keeping a packing?
// Three-valued: Unknown when the node budget ran out before a verdict.
UnsaturatedReport check_unsaturated(const PackingWindow& w, const RectRegion& F,
                                    int k_max, const CandidateFamily& family,
                                    long node_budget = kDefaultNodeBudget);

struct ReducibleReport {
    Verdict reducible = Verdict::No;
    std::optional<SwapWitness> witness;
    int k_searched = 0;
    long combos = 0;
};

// Covering analog: can some F1 of at most k_max copies contained in F be
// replaced by |F1| - 1 family copies so that F stays covered? Requires that
// w covers F.
ReducibleReport check_reducible_covering(const PackingWindow& w, const RectRegion& F,
                                         int k_max, const CandidateFamily& family,
                                         long combo_budget = 1'000'000);

}  // namespace hypack
