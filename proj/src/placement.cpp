#include <hypack/placement.hpp>

#include <cmath>

namespace hypack {

namespace {

void check_same_family(const Placement& g, const Placement& h, const char* op) {
    if (g.mode != h.mode)
        throw ModeMismatchError(std::string(op) + ": placements in different modes");
    if (g.mode == Mode::Hyperbolic && g.base != h.base)
        throw UnsupportedPlacementError(std::string(op) +
                                        ": placements over different scale bases");
}

}  // namespace

Placement compose(const Placement& g, const Placement& h) {
    check_same_family(g, h, "compose");
    if (g.mode == Mode::Hyperbolic)
        return Placement::hyperbolic(g.base, g.a + h.a, g.scale() * h.t + g.t);
    return Placement::euclidean(g.tx + h.tx, g.ty + h.ty);
}

Placement invert(const Placement& g) {
    if (g.mode == Mode::Hyperbolic)
        return Placement::hyperbolic(g.base, -g.a, -g.t * rat_pow(Rat(g.base), -g.a));
    return Placement::euclidean(-g.tx, -g.ty);
}

RectRegion transform(const RectRegion& r, const Placement& g) {
    if (g.mode != r.mode())
        throw ModeMismatchError("transform: placement mode differs from region mode");
    if (g.mode == Mode::Hyperbolic) {
        if (g.base < 2) throw UnsupportedPlacementError("transform: base must be >= 2");
        return region_scaled_translated(r, g.scale(), g.t, Rat(0));
    }
    return region_scaled_translated(r, Rat(1), g.tx, g.ty);
}

void apply(const Placement& g, double& x, double& y) {
    if (g.mode == Mode::Hyperbolic) {
        const double s = rat_d(g.scale());
        x = s * x + rat_d(g.t);
        y = s * y;
    } else {
        x += rat_d(g.tx);
        y += rat_d(g.ty);
    }
}

MetricValue MetricValue::from_exact(Rat lin, Rat lg, int base) {
    MetricValue v;
    v.lin = std::move(lin);
    v.lg = std::move(lg);
    v.base = v.lg == 0 ? 1 : base;
    if (v.base == 1 && v.lg != 0)
        throw DomainError("MetricValue: log term requires a base > 1");
    v.approx = rat_d(v.lin) + (v.lg == 0 ? 0.0 : rat_d(v.lg) * std::log(double(base)));
    return v;
}

double MetricValue::value() const {
    if (inf) return std::numeric_limits<double>::infinity();
    return approx;
}

MetricValue MetricValue::divided_by(long n) const {
    if (inf) return *this;
    MetricValue v = *this;
    v.approx /= double(n);
    if (exact) {
        v.lin /= n;
        v.lg /= n;
    }
    return v;
}

int compare(const MetricValue& a, const MetricValue& b) {
    if (a.inf || b.inf) {
        if (a.inf && b.inf) return 0;
        return a.inf ? 1 : -1;
    }
    if (a.exact && b.exact && (a.base == b.base || a.lg == 0 || b.lg == 0)) {
        if (a.lg == b.lg) {
            if (a.lin == b.lin) return 0;
            return a.lin < b.lin ? -1 : 1;
        }
        // lin + lg*log(base): distinct log coefficients, so never truly equal
        // (log of an integer base >= 2 is irrational).
        const int base = a.lg != 0 ? a.base : b.base;
        const double d = rat_d(a.lin - b.lin) + rat_d(a.lg - b.lg) * std::log(double(base));
        return d < 0 ? -1 : 1;
    }
    const double da = a.value();
    const double db = b.value();
    if (da == db) return 0;
    return da < db ? -1 : 1;
}

MetricValue placement_distance(const Placement& g, const Placement& h,
                               const GroupNorm& norm) {
    check_same_family(g, h, "placement_distance");
    if (norm.w_scale <= 0 || norm.w_trans <= 0)
        throw DomainError("placement_distance: norm weights must be positive");
    if (g.mode == Mode::Euclidean) {
        Rat lin = norm.w_trans * (rat_abs(h.tx - g.tx) + rat_abs(h.ty - g.ty));
        return MetricValue::from_exact(std::move(lin));
    }
    // Relative placement; the canonical form make symmetry and
    // left-invariance hold bit-exactly.
    const Placement rel = compose(invert(g), h);
    const long da = rel.a < 0 ? -rel.a : rel.a;
    // Horizontal offset normalized to the higher of the two orbit points.
    const Rat h_norm = rat_abs(rel.t) * rat_pow(Rat(rel.base), -std::max(rel.a, 0L));
    const Rat vertical_lg = norm.w_scale * da;
    if (norm.w_trans * h_norm <= 2 * norm.w_scale) {
        // No shortcut through higher levels: exact value.
        return MetricValue::from_exact(norm.w_trans * h_norm, vertical_lg, rel.base);
    }
    // Shortcut branch: climb, cross at the optimal height, descend.
    const double ws = rat_d(norm.w_scale);
    const double wt = rat_d(norm.w_trans);
    const double val = double(da) * ws * std::log(double(rel.base)) + 2.0 * ws +
                       2.0 * ws * std::log(wt * rat_d(h_norm) / (2.0 * ws));
    return MetricValue::from_approx(val);
}

MetricValue placement_norm(const Placement& g, const GroupNorm& norm) {
    return placement_distance(Placement::identity(g.mode, g.base), g, norm);
}

}  // namespace hypack
