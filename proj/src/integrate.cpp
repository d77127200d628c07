#include <hypack/integrate.hpp>
#include <hypack/kernels.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace hypack {

namespace {

struct DRect {
    double x0, x1, y0, y1;
};

// Length (euclidean) or ∫ dy/y^2 (hyperbolic) of the part of the rect's
// y-extent inside the disk at abscissa x.
double slice_value(const DRect& rc, const Disk& d, Mode mode, double x) {
    const double dx = x - d.cx;
    const double s = d.r * d.r - dx * dx;
    if (s <= 0.0) return 0.0;
    const double half = std::sqrt(s);
    const double lo = std::max(rc.y0, d.cy - half);
    const double hi = std::min(rc.y1, d.cy + half);
    if (lo >= hi) return 0.0;
    if (mode == Mode::Euclidean) return hi - lo;
    return 1.0 / lo - 1.0 / hi;
}

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive(const F& f, double a, double b, double fa, double fm, double fb,
                double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double rect_disk_measure(const DRect& rc, const Disk& d, Mode mode, double tol) {
    double x_lo = std::max(rc.x0, d.cx - d.r);
    double x_hi = std::min(rc.x1, d.cx + d.r);
    if (x_lo >= x_hi) return 0.0;

    // Breakpoints where the integrand loses smoothness: circle-edge
    // crossings and the disk center line.
    std::vector<double> cuts{x_lo, x_hi};
    auto add_cut = [&](double x) {
        if (x > x_lo && x < x_hi) cuts.push_back(x);
    };
    add_cut(d.cx);
    for (double edge : {rc.y0, rc.y1}) {
        const double dy = edge - d.cy;
        const double s = d.r * d.r - dy * dy;
        if (s > 0.0) {
            const double w = std::sqrt(s);
            add_cut(d.cx - w);
            add_cut(d.cx + w);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto f = [&](double x) { return slice_value(rc, d, mode, x); };
    double total = 0.0;
    const double span = x_hi - x_lo;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        const double piece_tol = std::max(tol * (b - a) / span, 1e-300);
        const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
        const double whole = simpson(fa, fm, fb, a, b);
        total += adaptive(f, a, b, fa, fm, fb, whole, piece_tol, 48);
    }
    return total;
}

}  // namespace

double region_disk_measure(const RectRegion& region, const Disk& disk, Mode mode,
                           double abs_tol) {
    if (!(abs_tol > 0)) throw DomainError("region_disk_measure: tolerance must be > 0");
    if (region.empty() || disk.r <= 0) return 0.0;
    std::vector<DRect> rects;
    rects.reserve(region.size());
    for (const auto& r : region.rects())
        rects.push_back(DRect{rat_d(r.x0), rat_d(r.x1), rat_d(r.y0), rat_d(r.y1)});
    const double per_rect = abs_tol / static_cast<double>(rects.size());
    return kernels::sum_pieces(rects.size(), [&](std::size_t i) {
        return rect_disk_measure(rects[i], disk, mode, per_rect);
    });
}

McEstimate mc_disk_fraction(const RectRegion& region, const Disk& disk, Mode mode,
                            std::int64_t samples, std::uint64_t seed) {
    if (samples <= 0) throw DomainError("mc_disk_fraction: need samples > 0");
    if (mode == Mode::Hyperbolic && disk.cy - disk.r <= 0)
        throw DomainError("mc_disk_fraction: disk leaves the upper half-plane");

    std::vector<DRect> rects;
    rects.reserve(region.size());
    for (const auto& r : region.rects())
        rects.push_back(DRect{rat_d(r.x0), rat_d(r.x1), rat_d(r.y0), rat_d(r.y1)});

    const double x0 = disk.cx - disk.r, x1 = disk.cx + disk.r;
    const double y0 = disk.cy - disk.r, y1 = disk.cy + disk.r;

    const std::int64_t chunk_size = 1 << 14;
    const std::size_t chunks =
        static_cast<std::size_t>((samples + chunk_size - 1) / chunk_size);

    auto run_chunk = [&](std::size_t c) {
        kernels::McTally tally;
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (c + 1)));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        const std::int64_t todo =
            std::min<std::int64_t>(chunk_size, samples - static_cast<std::int64_t>(c) * chunk_size);
        for (std::int64_t i = 0; i < todo; ++i) {
            const double x = x0 + (x1 - x0) * uni(rng);
            double y;
            if (mode == Mode::Hyperbolic) {
                // y with density proportional to 1/y^2 on [y0, y1]
                const double a = 1.0 / y0, b = 1.0 / y1;
                y = 1.0 / (a - uni(rng) * (a - b));
            } else {
                y = y0 + (y1 - y0) * uni(rng);
            }
            ++tally.proposed;
            const double dx = x - disk.cx, dy = y - disk.cy;
            if (dx * dx + dy * dy > disk.r * disk.r) continue;
            ++tally.accepted;
            for (const auto& rc : rects) {
                if (x >= rc.x0 && x <= rc.x1 && y >= rc.y0 && y <= rc.y1) {
                    ++tally.hits;
                    break;
                }
            }
        }
        return tally;
    };

    const auto tally = kernels::mc_tally(chunks, run_chunk);
    McEstimate est;
    est.samples = tally.proposed;
    est.accepted = tally.accepted;
    est.seed = seed;
    if (tally.accepted > 0) {
        const double p = static_cast<double>(tally.hits) / static_cast<double>(tally.accepted);
        est.fraction = p;
        est.stderr_ = std::sqrt(std::max(p * (1.0 - p), 0.0) /
                                static_cast<double>(tally.accepted));
    }
    return est;
}

}  // namespace hypack
