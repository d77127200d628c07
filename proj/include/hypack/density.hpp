#pragma once

#include <hypack/geom.hpp>
#include <hypack/integrate.hpp>
#include <hypack/packing.hpp>

#include <string>
#include <vector>

namespace hypack {

// Euclidean periodic packing: a rectangular translation lattice, a motif of
// placements per fundamental cell, and the cell itself. This is the concrete
// realization of the canonical invariant measure of a cocompact periodic
// packing; its density is the covered fraction of the cell.
struct PeriodicPacking {
    Body body;  // euclidean
    Rat step_x = 1, step_y = 1;
    std::vector<Placement> motif;  // euclidean translations
    RectRegion cell;               // one rectangle of size step_x x step_y
};

// Checks the lattice invariants: cell shape, and pairwise interior
// disjointness of the motif against every lattice translate that can touch
// it. Throws on violation.
void validate_periodic(const PeriodicPacking& pp);

// Covered fraction of the fundamental cell, exact.
Rat periodic_density(const PeriodicPacking& pp);

// All lattice translates of the motif whose copies meet the target box, as a
// packing window (window = target box).
PackingWindow realize_window(const PeriodicPacking& pp, const Rect& target);

struct RadiusSample {
    double r = 0;
    double value = 0;
    double error = 0;
};

struct DensityReport {
    double value = 0;
    std::string method;  // exact | integrated | monte-carlo | bound-chain | ratio
    double tol = 0;
    bool has_exact = false;
    Rat exact_value = 0;
    std::vector<RadiusSample> sweep;
    std::uint64_t seed = 0;
    std::int64_t samples = 0;
};

// Covered fraction of the ball B_r(p) within the window, by adaptive slab
// integration to the given tolerance. The window must contain the ball.
DensityReport ball_density(const PackingWindow& w, const HPoint& p, double r,
                           double tol);

// Independent Monte Carlo estimate of the same fraction (the oracle side of
// the dual route); error field carries one standard error.
DensityReport mc_ball_density(const PackingWindow& w, const HPoint& p, double r,
                              std::int64_t samples, std::uint64_t seed);

struct BoundStep {
    std::string name;
    std::string statement;
};

// The exact density-bound chain of the pocket construction: the covered
// fraction of any invariant configuration is at most
// mu_upper * (1 - (m-1) * area(Q0)/area(R')).
struct BoundChain {
    int m = 0;
    Rat lambda_Q0, lambda_Rprime, ratio, mu_upper, bound;
    std::vector<BoundStep> steps;
};

BoundChain bound_chain(const Body& body, const Rat& mu_upper = 1);

// Frequency-ratio law on the concrete periodic measure: the frequency of
// hitting gL among copies, relative to hitting the body itself, equals the
// area ratio exactly; ball averages converge to the same ratio at rate C/r.
struct RatioReport {
    Rat freq_L, freq_K;      // covered fractions of the cell
    Rat cell_ratio;          // freq_L / freq_K
    Rat area_ratio;          // area(L) / area(K)
    bool equal = false;
    std::vector<RadiusSample> ball_ratios;
    double fitted_C = 0;
};

RatioReport ratio_check(const PeriodicPacking& pp, const RectRegion& L,
                        const std::vector<double>& radii, double tol = 1e-9);

struct BirkhoffRow {
    double px, py, r;
    double average;
    double deviation;
};

struct BirkhoffReport {
    Rat cell_density;
    std::vector<BirkhoffRow> rows;
    double fitted_C = 0;  // max over rows of r * |avg - density|
};

// Ball averages of the covered fraction around several centers, against the
// exact cell density (euclidean).
BirkhoffReport birkhoff_sweep(const PeriodicPacking& pp,
                              const std::vector<HPoint>& centers,
                              const std::vector<double>& radii, double tol = 1e-9);

}  // namespace hypack
