#pragma once

#include <hypack/placement.hpp>
#include <hypack/region.hpp>

#include <map>
#include <string>
#include <vector>

namespace hypack {

// A body: connected compact region equal to the closure of its interior,
// with trivial symmetry group. Hyperbolic bodies carry the construction
// parameters (m, delta, delta_prime) and the named auxiliary pieces; the
// euclidean factory wraps a plain rectilinear region for the translation
// engine (m is 1 and the pieces map is empty there).
struct Body {
    Mode mode = Mode::Hyperbolic;
    RectRegion region;
    int m = 0;
    Rat delta = 0, delta_prime = 0;
    Rat epsilon = 0;  // target bound the parameters were chosen for (0 = none)
    std::map<std::string, RectRegion> pieces;

    static Body euclidean(RectRegion r);

    const RectRegion& piece(const std::string& name) const;
    Placement tau() const;   // z -> z + m
    Placement s() const;     // z -> m z
    Placement identity() const;
};

struct BodyParams {
    int m;
    Rat delta, delta_prime;
};

// Smallest m with 1/m < epsilon; then the largest delta in the halving
// sequence 1/10, 1/20, 1/40, ... whose exact density bound beats epsilon,
// with delta_prime = delta/5.
BodyParams choose_parameters(const Rat& epsilon);

// Assembles the rectilinear body with m pockets Q_j, m small pockets Q'_j,
// the protrusions P = mQ_0 and P' = mQ'_0 attached above the base rectangle
// R = [0,m] x [1,m], and verifies connectivity. Requires m >= 2 and
// 0 < delta' < delta/2 < 1/6.
Body build_body(int m, const Rat& delta, const Rat& delta_prime,
                const Rat& epsilon = 0);

struct EpsilonBound {
    bool holds;
    Rat bound;  // 1 - (m-1) * area(Q0) / area(R'), exact
};

EpsilonBound verify_epsilon_bound(const Body& body, const Rat& epsilon);

struct FitSearchParams {
    long a_min = -2, a_max = 2;
    Rat grid_step = rat(1, 100);
    Rat margin = 0;  // widens the translation range beyond the contact range
};

struct FitReport {
    bool holds = false;
    std::vector<Placement> witnesses;  // violating placements, sorted
    long candidates = 0;
    long contacts = 0;  // candidates that touch Q0 while disjoint from the body
    FitSearchParams params;
};

// Exhaustive check over the affine candidate family: every placement whose
// copy can coexist with the body (interior-disjoint) and touches the pocket
// Q0 must map the protrusion P into Q0. The fitting placement s^-1 is
// accepted; anything else is reported as a witness.
FitReport verify_fit_condition(const Body& body, const FitSearchParams& params = {});

}  // namespace hypack
