#pragma once

// Test-only oracles, kept independent of the library computation paths they
// are used to check.

#include <hypack/region.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

// Composite-Simpson double integral of y^-2 over [a,b] x [c,d].
inline double hyp_rect_area_numeric(double a, double b, double c, double d,
                                    int n = 800) {
    auto simpson_weight = [n](int i) {
        if (i == 0 || i == n) return 1.0;
        return i % 2 == 1 ? 4.0 : 2.0;
    };
    const double hx = (b - a) / n, hy = (d - c) / n;
    double total = 0.0;
    for (int iy = 0; iy <= n; ++iy) {
        const double y = c + hy * iy;
        const double fy = 1.0 / (y * y);
        double row = 0.0;
        for (int ix = 0; ix <= n; ++ix) row += simpson_weight(ix);
        total += simpson_weight(iy) * row * fy;
    }
    return total * hx * hy / 9.0;
}

// Same quadrature over an arbitrary rect list (interiors assumed disjoint).
inline double hyp_region_area_numeric(const hypack::RectRegion& r, int n = 400) {
    double total = 0.0;
    for (const auto& rc : r.rects())
        total += hyp_rect_area_numeric(hypack::rat_d(rc.x0), hypack::rat_d(rc.x1),
                                       hypack::rat_d(rc.y0), hypack::rat_d(rc.y1), n);
    return total;
}

// Monte Carlo hyperbolic area of the ball of radius r about (0, 1): samples
// the bounding box with vertical density proportional to y^-2 and counts
// disk membership.
struct McArea {
    double value;
    double stderr_;
};

inline McArea mc_hyp_ball_area(double r, std::int64_t samples, std::uint64_t seed) {
    const double cy = std::cosh(r), re = std::sinh(r);
    const double x0 = -re, x1 = re;
    const double y0 = cy - re, y1 = cy + re;
    const double box_area = (x1 - x0) * (1.0 / y0 - 1.0 / y1);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::int64_t hit = 0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const double x = x0 + (x1 - x0) * uni(rng);
        const double inv = 1.0 / y0 - uni(rng) * (1.0 / y0 - 1.0 / y1);
        const double y = 1.0 / inv;
        const double dx = x, dy = y - cy;
        if (dx * dx + dy * dy <= re * re) ++hit;
    }
    const double p = double(hit) / double(samples);
    return McArea{box_area * p,
                  box_area * std::sqrt(p * (1.0 - p) / double(samples))};
}

// Inclusion-exclusion area of a union of up to ~16 closed rectangles, exact.
inline hypack::Rat inclusion_exclusion_area(hypack::Mode mode,
                                            const std::vector<hypack::Rect>& rects) {
    using hypack::Rat;
    const std::size_t n = rects.size();
    Rat total = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        hypack::Rect cur{0, 0, 0, 0};
        bool first = true, empty = false;
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (1u << i))) continue;
            ++bits;
            if (first) {
                cur = rects[i];
                first = false;
                continue;
            }
            cur.x0 = hypack::rat_max(cur.x0, rects[i].x0);
            cur.x1 = hypack::rat_min(cur.x1, rects[i].x1);
            cur.y0 = hypack::rat_max(cur.y0, rects[i].y0);
            cur.y1 = hypack::rat_min(cur.y1, rects[i].y1);
            if (cur.x0 >= cur.x1 || cur.y0 >= cur.y1) {
                empty = true;
                break;
            }
        }
        if (empty) continue;
        Rat piece;
        if (mode == hypack::Mode::Euclidean)
            piece = cur.width() * cur.height();
        else
            piece = cur.width() * (Rat(1) / cur.y0 - Rat(1) / cur.y1);
        total += (bits % 2 == 1) ? piece : -piece;
    }
    return total;
}

// Exhaustive maximum independent set over candidate conflict masks (n <= 64):
// depth-first over all independent subsets with only the remaining-count
// prune; returns the maximum cardinality.
inline int brute_force_max_packing(const std::vector<std::uint64_t>& conflict) {
    const int n = static_cast<int>(conflict.size());
    if (n == 0) return 0;
    int best = 0;
    // usable = bitmask of candidates still compatible with everything chosen
    auto rec = [&](auto&& self, int idx, int count, std::uint64_t usable) -> void {
        if (count + (n - idx) <= best) return;
        if (idx == n) {
            best = std::max(best, count);
            return;
        }
        if (usable & (1ull << idx))
            self(self, idx + 1, count + 1, usable & ~conflict[idx]);
        self(self, idx + 1, count, usable);
    };
    rec(rec, 0, 0, n == 64 ? ~0ull : ((1ull << n) - 1));
    return best;
}

// Trapezoid integral of 1/y on [a, b].
inline double integral_inv_y(double a, double b, int n = 200000) {
    double total = 0.0;
    const double h = (b - a) / n;
    for (int i = 0; i < n; ++i) {
        const double y0 = a + h * i, y1 = y0 + h;
        total += 0.5 * (1.0 / y0 + 1.0 / y1) * h;
    }
    return total;
}

}  // namespace oracle
