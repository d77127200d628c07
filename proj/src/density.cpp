#include <hypack/density.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hypack {

namespace {

void check_euclidean(const PeriodicPacking& pp, const char* op) {
    if (pp.body.mode != Mode::Euclidean)
        throw ModeMismatchError(std::string(op) + ": euclidean packings only");
}

// Lattice shift range so that shifted copies of `content` can meet `target`.
std::pair<long, long> shift_range(const Rat& lo_c, const Rat& hi_c, const Rat& lo_t,
                                  const Rat& hi_t, const Rat& step) {
    // shift k with [lo_c + k step, hi_c + k step] meeting [lo_t, hi_t]
    Rat k_lo = (lo_t - hi_c) / step;
    Rat k_hi = (hi_t - lo_c) / step;
    return {rat_floor_long(k_lo), rat_floor_long(k_hi) + 1};
}

// Union of motif copies of `content` over all lattice shifts meeting target.
RectRegion periodic_cover(const PeriodicPacking& pp, const RectRegion& content,
                          const Rect& target) {
    if (content.empty()) return RectRegion(Mode::Euclidean);
    std::vector<Rect> rects;
    const Rect cb = content.bbox();
    for (const auto& g : pp.motif) {
        const Rat x0 = cb.x0 + g.tx, x1 = cb.x1 + g.tx;
        const Rat y0 = cb.y0 + g.ty, y1 = cb.y1 + g.ty;
        auto [kx0, kx1] = shift_range(x0, x1, target.x0, target.x1, pp.step_x);
        auto [ky0, ky1] = shift_range(y0, y1, target.y0, target.y1, pp.step_y);
        for (long kx = kx0; kx <= kx1; ++kx) {
            for (long ky = ky0; ky <= ky1; ++ky) {
                RectRegion copy = region_scaled_translated(
                    content, 1, g.tx + Rat(kx) * pp.step_x, g.ty + Rat(ky) * pp.step_y);
                rects.insert(rects.end(), copy.rects().begin(), copy.rects().end());
            }
        }
    }
    return RectRegion::from_rects(Mode::Euclidean, std::move(rects));
}

Disk ball_disk(Mode mode, const HPoint& p, double r) {
    if (mode == Mode::Hyperbolic) {
        HBall b = hyp_ball(p, r);
        return Disk{b.euclidean_center.x, b.euclidean_center.y, b.euclidean_radius};
    }
    return Disk{p.x, p.y, r};
}

double disk_total_measure(Mode mode, double r) {
    if (mode == Mode::Hyperbolic) return ball_area(r);
    return std::numbers::pi * r * r;
}

// The window must contain the disk; otherwise report how far it would have
// to reach.
void check_disk_in_window(const PackingWindow& w, const Disk& d, double r_query) {
    // Any part of the disk's bounding box that the window misses must stay
    // strictly outside the disk.
    const double pad = 1e-12 * std::max(1.0, d.r);
    Rat bx0(d.cx - d.r), bx1(d.cx + d.r), by0(d.cy - d.r), by1(d.cy + d.r);
    RectRegion box = RectRegion::rect(w.mode(), Rect{bx0, bx1, by0, by1});
    RectRegion missing = region_difference(box, w.window);
    for (const auto& rc : missing.rects()) {
        const double x0 = rat_d(rc.x0), x1 = rat_d(rc.x1);
        const double y0 = rat_d(rc.y0), y1 = rat_d(rc.y1);
        const double nx = std::clamp(d.cx, x0, x1);
        const double ny = std::clamp(d.cy, y0, y1);
        const double dx = nx - d.cx, dy = ny - d.cy;
        if (dx * dx + dy * dy < (d.r - pad) * (d.r - pad))
            throw TruncationError(
                "ball_density: window does not contain the ball; enlarge the patch",
                r_query);
    }
}

}  // namespace

void validate_periodic(const PeriodicPacking& pp) {
    check_euclidean(pp, "validate_periodic");
    if (pp.step_x <= 0 || pp.step_y <= 0)
        throw DomainError("validate_periodic: lattice steps must be positive");
    if (pp.motif.empty()) throw DomainError("validate_periodic: empty motif");
    if (pp.cell.size() != 1)
        throw DomainError("validate_periodic: cell must be a single rectangle");
    const Rect c = pp.cell.rects().front();
    if (c.width() != pp.step_x || c.height() != pp.step_y)
        throw DomainError("validate_periodic: cell shape does not match the lattice");

    // Pairwise disjointness of motif copies against every translate that can
    // touch them (sufficient for translation lattices and bounded bodies).
    const Rect kb = pp.body.region.bbox();
    const long sx = rat_floor_long(kb.width() / pp.step_x) + 1;
    const long sy = rat_floor_long(kb.height() / pp.step_y) + 1;
    const auto copies = [&] {
        std::vector<RectRegion> v;
        for (const auto& g : pp.motif) v.push_back(transform(pp.body.region, g));
        return v;
    }();
    for (std::size_t i = 0; i < copies.size(); ++i) {
        for (std::size_t j = 0; j < copies.size(); ++j) {
            for (long kx = -sx; kx <= sx; ++kx) {
                for (long ky = -sy; ky <= sy; ++ky) {
                    if (i == j && kx == 0 && ky == 0) continue;
                    if (i > j) continue;  // unordered pairs once, shifts both signs
                    RectRegion shifted = region_scaled_translated(
                        copies[j], 1, Rat(kx) * pp.step_x, Rat(ky) * pp.step_y);
                    if (!interiors_disjoint(copies[i], shifted))
                        throw DomainError("validate_periodic: motif overlaps a translate");
                }
            }
        }
    }
}

Rat periodic_density(const PeriodicPacking& pp) {
    validate_periodic(pp);
    const Rect cell = pp.cell.rects().front();
    RectRegion covered =
        region_intersect(periodic_cover(pp, pp.body.region, cell), pp.cell);
    return covered.area() / pp.cell.area();
}

PackingWindow realize_window(const PeriodicPacking& pp, const Rect& target) {
    check_euclidean(pp, "realize_window");
    PackingWindow w;
    w.body = pp.body;
    w.window = RectRegion::rect(Mode::Euclidean, target);
    const Rect kb = pp.body.region.bbox();
    for (const auto& g : pp.motif) {
        auto [kx0, kx1] = shift_range(kb.x0 + g.tx, kb.x1 + g.tx, target.x0, target.x1,
                                      pp.step_x);
        auto [ky0, ky1] = shift_range(kb.y0 + g.ty, kb.y1 + g.ty, target.y0, target.y1,
                                      pp.step_y);
        for (long kx = kx0; kx <= kx1; ++kx)
            for (long ky = ky0; ky <= ky1; ++ky)
                w.placements.push_back(Placement::euclidean(
                    g.tx + Rat(kx) * pp.step_x, g.ty + Rat(ky) * pp.step_y));
    }
    std::sort(w.placements.begin(), w.placements.end());
    w.placements.erase(std::unique(w.placements.begin(), w.placements.end()),
                       w.placements.end());
    return w;
}

DensityReport ball_density(const PackingWindow& w, const HPoint& p, double r,
                           double tol) {
    if (r <= 0) throw DomainError("ball_density: radius must be positive");
    if (!(tol > 0)) throw DomainError("ball_density: tolerance must be positive");
    if (w.mode() == Mode::Hyperbolic && !(p.y > 0))
        throw DomainError("ball_density: center requires y > 0");
    const Disk d = ball_disk(w.mode(), p, r);
    check_disk_in_window(w, d, r);
    const double denom = disk_total_measure(w.mode(), r);
    const double numer =
        region_disk_measure(union_of_copies(w), d, w.mode(), 0.5 * tol * denom);
    DensityReport rep;
    rep.value = numer / denom;
    rep.method = "integrated";
    rep.tol = tol;
    return rep;
}

DensityReport mc_ball_density(const PackingWindow& w, const HPoint& p, double r,
                              std::int64_t samples, std::uint64_t seed) {
    if (r <= 0) throw DomainError("mc_ball_density: radius must be positive");
    const Disk d = ball_disk(w.mode(), p, r);
    check_disk_in_window(w, d, r);
    const McEstimate est = mc_disk_fraction(union_of_copies(w), d, w.mode(), samples, seed);
    DensityReport rep;
    rep.value = est.fraction;
    rep.method = "monte-carlo";
    rep.tol = est.stderr_;
    rep.seed = seed;
    rep.samples = est.samples;
    return rep;
}

BoundChain bound_chain(const Body& body, const Rat& mu_upper) {
    if (body.mode != Mode::Hyperbolic || body.m < 2)
        throw DomainError("bound_chain: requires a built hyperbolic body");
    if (mu_upper <= 0 || mu_upper > 1)
        throw DomainError("bound_chain: mu_upper must lie in (0, 1]");
    BoundChain c;
    c.m = body.m;
    c.lambda_Q0 = body.piece("Q0").area();
    c.lambda_Rprime = body.piece("R'").area();
    c.ratio = c.lambda_Q0 / c.lambda_Rprime;
    c.mu_upper = mu_upper;
    c.bound = mu_upper * (1 - Rat(body.m - 1) * c.ratio);
    c.steps = {
        {"body-split", "D = freq(K - P) + freq(P)"},
        {"protrusion-pocket-exchange", "freq(P) = freq(Q0)"},
        {"pocket-decomposition", "freq(R') = freq(K - P) + m freq(Q0)"},
        {"eliminate-interior", "D = freq(R') - (m - 1) freq(Q0)"},
        {"frequency-ratio-law", "freq(Q0) = freq(R') area(Q0) / area(R')"},
        {"combine", "D = freq(R') (1 - (m - 1) area(Q0) / area(R'))"},
        {"cap", "freq(R') <= mu_upper, hence D <= mu_upper (1 - (m - 1) area(Q0)/area(R'))"},
    };
    return c;
}

RatioReport ratio_check(const PeriodicPacking& pp, const RectRegion& L,
                        const std::vector<double>& radii, double tol) {
    validate_periodic(pp);
    if (!region_difference(L, pp.body.region).empty())
        throw DomainError("ratio_check: L must be a subset of the body");

    const Rect cell = pp.cell.rects().front();
    RatioReport rep;
    const Rat cell_area = pp.cell.area();
    rep.freq_K =
        region_intersect(periodic_cover(pp, pp.body.region, cell), pp.cell).area() /
        cell_area;
    rep.freq_L = L.empty()
                     ? Rat(0)
                     : region_intersect(periodic_cover(pp, L, cell), pp.cell).area() /
                           cell_area;
    if (rep.freq_K == 0) throw DomainError("ratio_check: zero body frequency");
    rep.cell_ratio = rep.freq_L / rep.freq_K;
    rep.area_ratio = L.empty() ? Rat(0) : L.area() / pp.body.region.area();
    rep.equal = rep.cell_ratio == rep.area_ratio;

    const double exact = rat_d(rep.area_ratio);
    for (double r : radii) {
        const Rect target = make_rect(Rat(-r - 2), Rat(r + 2), Rat(-r - 2), Rat(r + 2));
        const Disk d{0, 0, r};
        const RectRegion cover_L = L.empty() ? RectRegion(Mode::Euclidean)
                                             : periodic_cover(pp, L, target);
        const RectRegion cover_K = periodic_cover(pp, pp.body.region, target);
        const double num = L.empty() ? 0.0
                                     : region_disk_measure(cover_L, d, Mode::Euclidean, tol);
        const double den = region_disk_measure(cover_K, d, Mode::Euclidean, tol);
        const double ratio = den > 0 ? num / den : 0.0;
        rep.ball_ratios.push_back(RadiusSample{r, ratio, std::abs(ratio - exact)});
        rep.fitted_C = std::max(rep.fitted_C, r * std::abs(ratio - exact));
    }
    return rep;
}

BirkhoffReport birkhoff_sweep(const PeriodicPacking& pp,
                              const std::vector<HPoint>& centers,
                              const std::vector<double>& radii, double tol) {
    validate_periodic(pp);
    BirkhoffReport rep;
    rep.cell_density = periodic_density(pp);
    const double density = rat_d(rep.cell_density);
    for (const auto& p : centers) {
        for (double r : radii) {
            const Rect target = make_rect(Rat(p.x - r - 2), Rat(p.x + r + 2),
                                          Rat(p.y - r - 2), Rat(p.y + r + 2));
            const RectRegion cover = periodic_cover(pp, pp.body.region, target);
            const Disk d{p.x, p.y, r};
            const double numer = region_disk_measure(cover, d, Mode::Euclidean,
                                                     tol * std::numbers::pi * r * r);
            const double avg = numer / (std::numbers::pi * r * r);
            const double dev = std::abs(avg - density);
            rep.rows.push_back(BirkhoffRow{p.x, p.y, r, avg, dev});
            rep.fitted_C = std::max(rep.fitted_C, r * dev);
        }
    }
    return rep;
}

}  // namespace hypack
