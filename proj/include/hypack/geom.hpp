#pragma once

#include <hypack/rational.hpp>

namespace hypack {

// Point of the upper half-plane model; y > 0. The distinguished origin is
// (0, 1), i.e. the point i of the complex model.
struct HPoint {
    double x = 0.0;
    double y = 1.0;
};

inline constexpr HPoint kOrigin{0.0, 1.0};

// acosh(1 + (dx^2 + dy^2) / (2 py qy)). Symmetric, zero iff p == q.
double hyp_distance(const HPoint& p, const HPoint& q);

// Hyperbolic area of the rectangle [a,b] x [c,d]: (b-a)(1/c - 1/d).
double rect_hyp_area(double a, double b, double c, double d);
Rat rect_hyp_area(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

// Area of a hyperbolic disk of radius r: 2 pi (cosh r - 1).
double ball_area(double r);

// Hyperbolic ball with its Euclidean realization: a disk with center
// (x, y cosh r) and radius y sinh r.
struct HBall {
    HPoint center;
    double radius = 0.0;
    HPoint euclidean_center;
    double euclidean_radius = 0.0;
};

HBall hyp_ball(const HPoint& center, double r);

// Membership by the Euclidean disk test (equivalent to hyp_distance <= r).
bool ball_contains(const HBall& b, const HPoint& p);

}  // namespace hypack
