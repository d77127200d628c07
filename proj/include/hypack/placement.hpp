#pragma once

#include <hypack/region.hpp>

#include <compare>

namespace hypack {

// Orientation-preserving placement of a body. Hyperbolic mode: the affine
// half-plane map z -> base^a * z + t with integer exponent a and rational t
// (an isometry of the upper half-plane). Euclidean mode: translation by
// (tx, ty). The family is closed under composition and inverse.
struct Placement {
    Mode mode = Mode::Euclidean;
    // hyperbolic fields
    int base = 2;  // the body's scale base m
    long a = 0;
    Rat t = 0;
    // euclidean fields
    Rat tx = 0, ty = 0;

    static Placement hyperbolic(int base, long a, Rat t) {
        Placement p;
        p.mode = Mode::Hyperbolic;
        p.base = base;
        p.a = a;
        p.t = std::move(t);
        return p;
    }
    static Placement euclidean(Rat tx, Rat ty) {
        Placement p;
        p.mode = Mode::Euclidean;
        p.tx = std::move(tx);
        p.ty = std::move(ty);
        return p;
    }
    static Placement identity(Mode mode, int base = 2) {
        return mode == Mode::Hyperbolic ? hyperbolic(base, 0, 0) : euclidean(0, 0);
    }

    bool is_identity() const {
        return mode == Mode::Hyperbolic ? (a == 0 && t == 0) : (tx == 0 && ty == 0);
    }

    // Scale factor base^a (hyperbolic only).
    Rat scale() const { return rat_pow(Rat(base), a); }

    bool operator==(const Placement& o) const {
        if (mode != o.mode) return false;
        if (mode == Mode::Hyperbolic) return base == o.base && a == o.a && t == o.t;
        return tx == o.tx && ty == o.ty;
    }

    // Canonical order used for deterministic witnesses and tie-breaking.
    bool operator<(const Placement& o) const {
        if (mode != o.mode) return mode < o.mode;
        if (mode == Mode::Hyperbolic) {
            if (a != o.a) return a < o.a;
            return t < o.t;
        }
        if (tx != o.tx) return tx < o.tx;
        return ty < o.ty;
    }
};

// g then h from the right: (compose(g, h))(z) = g(h(z)).
Placement compose(const Placement& g, const Placement& h);
Placement invert(const Placement& g);

// Image of a region under a placement. Hyperbolic placements act as
// (x, y) -> (base^a x + t, base^a y); euclidean ones translate.
RectRegion transform(const RectRegion& r, const Placement& g);

// Double-precision action on a point, for spot checks.
void apply(const Placement& g, double& x, double& y);

// Value of the placement metric: lin + lg * log(base) when exact, otherwise
// only the double approximation is meaningful. Supports +infinity (used by
// the empty-side convention of the packing pseudometrics).
struct MetricValue {
    bool inf = false;
    bool exact = true;
    Rat lin = 0, lg = 0;
    int base = 1;  // base == 1 forces lg == 0
    double approx = 0.0;

    static MetricValue zero() { return MetricValue{}; }
    static MetricValue infinity() {
        MetricValue v;
        v.inf = true;
        v.exact = false;
        return v;
    }
    static MetricValue from_exact(Rat lin, Rat lg = 0, int base = 1);
    static MetricValue from_approx(double v) {
        MetricValue out;
        out.exact = false;
        out.approx = v;
        return out;
    }

    double value() const;
    bool is_zero() const { return !inf && exact && lin == 0 && lg == 0; }
    MetricValue divided_by(long n) const;
};

// Total order; exact comparison whenever both operands carry exact forms
// with a common log term, double comparison otherwise.
int compare(const MetricValue& a, const MetricValue& b);

inline const MetricValue& metric_min(const MetricValue& a, const MetricValue& b) {
    return compare(a, b) <= 0 ? a : b;
}
inline const MetricValue& metric_max(const MetricValue& a, const MetricValue& b) {
    return compare(a, b) >= 0 ? a : b;
}

// Weights of the left-invariant placement metric.
struct GroupNorm {
    Rat w_scale = 1;
    Rat w_trans = 1;
};

// Left-invariant distance between placements of the same mode (and base).
// Euclidean: w_trans * (|dtx| + |dty|). Hyperbolic: the geodesic distance of
// the taxicab half-plane metric ds = (w_trans |dx| + w_scale |dy|) / y
// between the orbit points of the two placements; it is computed from the
// exact relative placement g^-1 h, so symmetry and left-invariance hold
// bit-exactly, and values are exact rationals whenever no scaling shortcut
// is involved.
MetricValue placement_distance(const Placement& g, const Placement& h,
                               const GroupNorm& norm = {});

// Distance to the identity placement.
MetricValue placement_norm(const Placement& g, const GroupNorm& norm = {});

}  // namespace hypack
