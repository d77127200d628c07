#include <hypack/kernels.hpp>
#include <hypack/packing.hpp>

#include <algorithm>
#include <cmath>
#include <set>

namespace hypack {

std::vector<RectRegion> placed_copies(const PackingWindow& w) {
    std::vector<RectRegion> copies;
    copies.reserve(w.placements.size());
    for (const auto& g : w.placements) copies.push_back(transform(w.body.region, g));
    return copies;
}

RectRegion union_of_copies(const PackingWindow& w) {
    std::vector<Rect> all;
    for (const auto& g : w.placements) {
        RectRegion c = transform(w.body.region, g);
        all.insert(all.end(), c.rects().begin(), c.rects().end());
    }
    return RectRegion::from_rects(w.mode(), std::move(all));
}

void validate_window(const PackingWindow& w) {
    if (w.body.region.mode() != w.window.mode())
        throw ModeMismatchError("validate_window: body and window modes differ");
    if (w.kind == WindowKind::Packing) {
        std::set<Placement> seen(w.placements.begin(), w.placements.end());
        if (seen.size() != w.placements.size())
            throw DomainError("validate_window: duplicate placements in a packing");
    }
    if (!w.window.empty()) {
        for (const auto& c : placed_copies(w))
            if (interiors_disjoint(c, w.window))
                throw DomainError("validate_window: a copy does not meet the window");
    }
    if (w.kind == WindowKind::Packing) {
        auto check = is_packing(w);
        if (!check.ok)
            throw ConstructionFailure("validate_window: interior overlap",
                                      check.violation->first, check.violation->second);
    }
}

PackingCheck is_packing(const PackingWindow& w) {
    auto hit = kernels::first_overlap(placed_copies(w));
    return PackingCheck{!hit.has_value(), hit};
}

CoverCheck covers(const PackingWindow& w, const RectRegion& target) {
    RectRegion uncovered = region_difference(target, union_of_copies(w));
    bool ok = uncovered.empty();
    return CoverCheck{ok, std::move(uncovered)};
}

bool origin_in_bodies(const PackingWindow& w, const Rat& px, const Rat& py) {
    if (!w.window.empty() && !region_contains_point(w.window, px, py))
        throw OutOfWindowError("origin_in_bodies: point outside the window");
    if (w.window.empty() && w.placements.empty()) return false;
    for (const auto& g : w.placements)
        if (region_contains_point(transform(w.body.region, g), px, py)) return true;
    return false;
}

PackingWindow generate_tiling_patch(const Body& body, long i_lo, long i_hi,
                                    long j_lo, long j_hi) {
    if (body.mode != Mode::Hyperbolic || body.m < 2)
        throw DomainError("generate_tiling_patch: requires a built hyperbolic body");
    if (i_lo > i_hi || j_lo > j_hi)
        throw DomainError("generate_tiling_patch: empty index range");
    PackingWindow w;
    w.body = body;
    for (long i = i_lo; i <= i_hi; ++i) {
        // s^i tau^j : z -> m^i z + j m^(i+1)
        const Rat t_step = rat_pow(Rat(body.m), i + 1);
        for (long j = j_lo; j <= j_hi; ++j)
            w.placements.push_back(Placement::hyperbolic(body.m, i, Rat(j) * t_step));
    }
    w.window = union_of_copies(w);
    w.kind = WindowKind::Packing;
    auto check = is_packing(w);
    if (!check.ok)
        throw ConstructionFailure("generate_tiling_patch: copies overlap",
                                  check.violation->first, check.violation->second);
    return w;
}

namespace {

void check_metric_inputs(const PackingWindow& w1, const PackingWindow& w2) {
    if (w1.mode() != w2.mode())
        throw ModeMismatchError("packing metric: windows in different modes");
    if (w1.mode() == Mode::Hyperbolic && w1.body.m != w2.body.m)
        throw DomainError("packing metric: windows over different scale bases");
    if (!(w1.body.region == w2.body.region))
        throw DomainError("packing metric: windows must share one body");
    if (!w1.complete || !w2.complete)
        throw TruncationError("packing metric: incomplete windows are not supported", 0);
}

// max over placements of `from` within the norm ball of radius n of the
// distance to the nearest placement of `to`.
MetricValue one_sided(const std::vector<Placement>& from,
                      const std::vector<Placement>& to, long n, const GroupNorm& norm) {
    MetricValue worst = MetricValue::zero();
    const MetricValue radius = MetricValue::from_exact(Rat(n));
    for (const auto& g : from) {
        if (compare(placement_norm(g, norm), radius) > 0) continue;
        if (to.empty()) return MetricValue::infinity();
        MetricValue best = MetricValue::infinity();
        for (const auto& h : to) {
            MetricValue d = placement_distance(g, h, norm);
            if (compare(d, best) < 0) best = std::move(d);
        }
        if (compare(best, worst) > 0) worst = std::move(best);
    }
    return worst;
}

}  // namespace

MetricValue metric_dn(const PackingWindow& w1, const PackingWindow& w2, long n,
                      const GroupNorm& norm) {
    check_metric_inputs(w1, w2);
    if (n <= 0) throw DomainError("metric_dn: n must be a positive integer");
    MetricValue a = one_sided(w1.placements, w2.placements, n, norm);
    MetricValue b = one_sided(w2.placements, w1.placements, n, norm);
    return metric_max(a, b);
}

MetricResult metric_dK(const PackingWindow& w1, const PackingWindow& w2,
                       const GroupNorm& norm, long n_max) {
    check_metric_inputs(w1, w2);
    if (n_max < 0) throw DomainError("metric_dK: n_max must be nonnegative");

    // Beyond the largest placement norm the balls stop growing, so the terms
    // min(d_n/n, 1/n) are strictly decreasing; evaluating one extra n makes
    // the supremum exact.
    double max_norm = 0.0;
    for (const auto* w : {&w1, &w2})
        for (const auto& g : w->placements)
            max_norm = std::max(max_norm, placement_norm(g, norm).value());
    const long stable_n = static_cast<long>(std::ceil(max_norm)) + 1;
    const bool auto_range = n_max == 0;
    const long limit = auto_range ? std::max(stable_n, 1L) : n_max;

    MetricResult out;
    out.value = MetricValue::zero();
    for (long n = 1; n <= limit; ++n) {
        MetricValue dn = metric_dn(w1, w2, n, norm);
        MetricValue term =
            metric_min(dn.divided_by(n), MetricValue::from_exact(rat(1, n)));
        if (compare(term, out.value) > 0) out.value = std::move(term);
    }
    out.n_evaluated = limit;
    if (auto_range || limit >= stable_n) {
        out.exact = true;
        out.error_bound = 0.0;
    } else {
        // terms beyond limit are bounded by 1/(limit+1)
        const MetricValue tail = MetricValue::from_exact(rat(1, limit + 1));
        out.exact = compare(out.value, tail) >= 0;
        out.error_bound = out.exact ? 0.0 : tail.value() - out.value.value();
    }
    return out;
}

}  // namespace hypack
