#include <hypack/errors.hpp>
#include <hypack/geom.hpp>

#include <cmath>
#include <numbers>

namespace hypack {

namespace {

void check_upper(const HPoint& p, const char* op) {
    if (!(p.y > 0.0)) throw DomainError(std::string(op) + ": point requires y > 0");
}

}  // namespace

double hyp_distance(const HPoint& p, const HPoint& q) {
    check_upper(p, "hyp_distance");
    check_upper(q, "hyp_distance");
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    const double arg = 1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y);
    return std::acosh(std::max(1.0, arg));
}

double rect_hyp_area(double a, double b, double c, double d) {
    if (!(a < b) || !(c < d)) throw DomainError("rect_hyp_area: degenerate rectangle");
    if (!(c > 0.0)) throw DomainError("rect_hyp_area: rectangle requires y > 0");
    return (b - a) * (1.0 / c - 1.0 / d);
}

Rat rect_hyp_area(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    if (!(a < b) || !(c < d)) throw DomainError("rect_hyp_area: degenerate rectangle");
    if (!(c > 0)) throw DomainError("rect_hyp_area: rectangle requires y > 0");
    return (b - a) * (Rat(1) / c - Rat(1) / d);
}

double ball_area(double r) {
    if (r < 0.0) throw DomainError("ball_area: negative radius");
    return 2.0 * std::numbers::pi * (std::cosh(r) - 1.0);
}

HBall hyp_ball(const HPoint& center, double r) {
    check_upper(center, "hyp_ball");
    if (r < 0.0) throw DomainError("hyp_ball: negative radius");
    HBall b;
    b.center = center;
    b.radius = r;
    b.euclidean_center = HPoint{center.x, center.y * std::cosh(r)};
    b.euclidean_radius = center.y * std::sinh(r);
    return b;
}

bool ball_contains(const HBall& b, const HPoint& p) {
    check_upper(p, "ball_contains");
    const double dx = p.x - b.euclidean_center.x;
    const double dy = p.y - b.euclidean_center.y;
    return dx * dx + dy * dy <= b.euclidean_radius * b.euclidean_radius;
}

}  // namespace hypack
