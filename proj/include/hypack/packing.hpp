#pragma once

#include <hypack/body.hpp>
#include <hypack/placement.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace hypack {

enum class WindowKind { Packing, CoveringCandidate };

// Finite set of placements of one body together with a window region.
// The placement list is the complete configuration (complete = true) unless
// a producer explicitly marks it as a clipped view of something larger.
struct PackingWindow {
    Body body;
    std::vector<Placement> placements;
    RectRegion window;
    WindowKind kind = WindowKind::Packing;
    bool complete = true;

    Mode mode() const { return body.mode; }
};

// Transformed copies, in placement order.
std::vector<RectRegion> placed_copies(const PackingWindow& w);

// Normalized union of all copies.
RectRegion union_of_copies(const PackingWindow& w);

// Invariant check: placements pairwise distinct (packings only; covering
// candidates may stack copies), every copy meets the window, and packings
// pass the pairwise interior-disjointness test. Throws on violation.
void validate_window(const PackingWindow& w);

struct PackingCheck {
    bool ok;
    std::optional<std::pair<std::size_t, std::size_t>> violation;  // lex-least
};

PackingCheck is_packing(const PackingWindow& w);

struct CoverCheck {
    bool covered;
    RectRegion uncovered;  // witness, empty iff covered
};

CoverCheck covers(const PackingWindow& w, const RectRegion& target);

// Membership of the point in the closed set c(P) within the window; exact
// for rational points. Asking about a point outside the window is an
// OutOfWindowError, distinct from a negative answer.
bool origin_in_bodies(const PackingWindow& w, const Rat& px, const Rat& py);
inline bool origin_in_bodies(const PackingWindow& w) {
    return origin_in_bodies(w, Rat(0), Rat(1));
}

// The patch {s^i tau^j K : i in [i_lo, i_hi], j in [j_lo, j_hi]} of the
// tiling generated by the scale map s and the horizontal translation tau.
// The window is the exact union of the placed copies. Construction verifies
// pairwise interior-disjointness and throws ConstructionFailure otherwise.
PackingWindow generate_tiling_patch(const Body& body, long i_lo, long i_hi,
                                    long j_lo, long j_hi);

// Local-matching pseudometric at scale n (positive integer): placements of
// either side within the norm ball of radius n must be matched by nearby
// placements of the other side; the value is the max-min placement distance,
// +infinity when exactly one side has no placements at all.
MetricValue metric_dn(const PackingWindow& w1, const PackingWindow& w2, long n,
                      const GroupNorm& norm = {});

struct MetricResult {
    MetricValue value;
    bool exact = true;       // sup attained within the evaluated range
    double error_bound = 0;  // residual when not exact
    long n_evaluated = 0;
};

// sup over n >= 1 of min(d_n / n, 1 / n). n_max = 0 evaluates far enough to
// make the supremum exact (possible because windows are finite); otherwise
// the tail is bounded by 1/(n_max + 1) and reported.
MetricResult metric_dK(const PackingWindow& w1, const PackingWindow& w2,
                       const GroupNorm& norm = {}, long n_max = 0);

}  // namespace hypack
