#include <hypack/region.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace hypack {

namespace {

using Interval = std::pair<Rat, Rat>;  // [lo, hi], lo < hi

// Sorts and merges touching/overlapping intervals.
std::vector<Interval> merge_intervals(std::vector<Interval> v) {
    std::sort(v.begin(), v.end());
    std::vector<Interval> out;
    for (auto& iv : v) {
        if (!out.empty() && iv.first <= out.back().second)
            out.back().second = rat_max(out.back().second, iv.second);
        else
            out.push_back(iv);
    }
    return out;
}

// Both inputs sorted, disjoint, non-touching.
std::vector<Interval> intervals_union(const std::vector<Interval>& a,
                                      const std::vector<Interval>& b) {
    std::vector<Interval> v;
    v.reserve(a.size() + b.size());
    v.insert(v.end(), a.begin(), a.end());
    v.insert(v.end(), b.begin(), b.end());
    return merge_intervals(std::move(v));
}

std::vector<Interval> intervals_intersect(const std::vector<Interval>& a,
                                          const std::vector<Interval>& b) {
    std::vector<Interval> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        Rat lo = rat_max(a[i].first, b[j].first);
        Rat hi = rat_min(a[i].second, b[j].second);
        if (lo < hi) out.emplace_back(lo, hi);
        if (a[i].second < b[j].second)
            ++i;
        else
            ++j;
    }
    return out;
}

std::vector<Interval> intervals_subtract(const std::vector<Interval>& a,
                                         const std::vector<Interval>& b) {
    std::vector<Interval> out;
    std::size_t j = 0;
    for (const auto& iv : a) {
        Rat cur = iv.first;
        while (j < b.size() && b[j].second <= cur) ++j;
        std::size_t k = j;
        while (k < b.size() && b[k].first < iv.second) {
            if (b[k].first > cur) out.emplace_back(cur, b[k].first);
            cur = rat_max(cur, b[k].second);
            if (cur >= iv.second) break;
            ++k;
        }
        if (cur < iv.second) out.emplace_back(cur, iv.second);
    }
    return out;
}

struct Column {
    Rat x0, x1;
    std::vector<Interval> ys;
};

// Emits canonical rects from columns: merges x-contiguous columns with
// identical interval lists, orders rects by (x0, y0).
std::vector<Rect> columns_to_rects(std::vector<Column> cols) {
    std::vector<Rect> rects;
    std::size_t i = 0;
    while (i < cols.size()) {
        if (cols[i].ys.empty()) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < cols.size() && cols[j + 1].x0 == cols[j].x1 &&
               cols[j + 1].ys == cols[i].ys)
            ++j;
        for (const auto& iv : cols[i].ys)
            rects.push_back(Rect{cols[i].x0, cols[j].x1, iv.first, iv.second});
        i = j + 1;
    }
    std::sort(rects.begin(), rects.end(), [](const Rect& a, const Rect& b) {
        if (a.x0 != b.x0) return a.x0 < b.x0;
        return a.y0 < b.y0;
    });
    return rects;
}

// Per-slab interval lists for one rect set over the given slab boundaries.
// xs must contain all rect x-edges, sorted unique.
std::vector<std::vector<Interval>> slab_intervals(const std::vector<Rect>& rects,
                                                  const std::vector<Rat>& xs) {
    std::size_t slabs = xs.empty() ? 0 : xs.size() - 1;
    std::vector<std::vector<Interval>> out(slabs);
    if (slabs == 0) return out;
    // Events bucketed by slab index.
    std::vector<std::vector<std::size_t>> starts(slabs), ends(slabs + 1);
    auto slab_of = [&xs](const Rat& x) {
        return static_cast<std::size_t>(
            std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
    };
    for (std::size_t r = 0; r < rects.size(); ++r) {
        starts[slab_of(rects[r].x0)].push_back(r);
        ends[slab_of(rects[r].x1)].push_back(r);
    }
    std::vector<char> active(rects.size(), 0);
    std::vector<std::size_t> live;
    for (std::size_t s = 0; s < slabs; ++s) {
        for (auto r : starts[s]) {
            active[r] = 1;
            live.push_back(r);
        }
        for (auto r : ends[s]) active[r] = 0;
        std::vector<Interval> ys;
        std::vector<std::size_t> still;
        still.reserve(live.size());
        for (auto r : live) {
            if (!active[r]) continue;
            still.push_back(r);
            ys.emplace_back(rects[r].y0, rects[r].y1);
        }
        live.swap(still);
        out[s] = merge_intervals(std::move(ys));
    }
    return out;
}

std::vector<Rat> sorted_unique_xs(const std::vector<Rect>& a,
                                  const std::vector<Rect>& b = {}) {
    std::vector<Rat> xs;
    xs.reserve(2 * (a.size() + b.size()));
    for (const auto& r : a) {
        xs.push_back(r.x0);
        xs.push_back(r.x1);
    }
    for (const auto& r : b) {
        xs.push_back(r.x0);
        xs.push_back(r.x1);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

void check_mode(const RectRegion& a, const RectRegion& b, const char* op) {
    if (a.mode() != b.mode())
        throw ModeMismatchError(std::string(op) + ": operands in different modes");
}

template <typename IntervalOp>
RectRegion combine(const RectRegion& a, const RectRegion& b, IntervalOp op) {
    std::vector<Rat> xs = sorted_unique_xs(a.rects(), b.rects());
    auto ia = slab_intervals(a.rects(), xs);
    auto ib = slab_intervals(b.rects(), xs);
    std::vector<Column> cols;
    for (std::size_t s = 0; s + 1 < xs.size(); ++s)
        cols.push_back(Column{xs[s], xs[s + 1], op(ia[s], ib[s])});
    return unsafe_from_normalized(a.mode(), columns_to_rects(std::move(cols)));
}

}  // namespace

RectRegion unsafe_from_normalized(Mode m, std::vector<Rect> rects) {
    RectRegion out(m);
    out.rects_ = std::move(rects);
    return out;
}

RectRegion RectRegion::from_rects(Mode m, std::vector<Rect> raw) {
    std::vector<Rect> kept;
    kept.reserve(raw.size());
    for (auto& r : raw) {
        if (r.x0 >= r.x1 || r.y0 >= r.y1) continue;  // degenerate: no area
        if (m == Mode::Hyperbolic && r.y0 <= 0)
            throw DomainError("RectRegion: hyperbolic rectangle must satisfy y > 0");
        kept.push_back(std::move(r));
    }
    std::vector<Rat> xs = sorted_unique_xs(kept);
    auto iv = slab_intervals(kept, xs);
    std::vector<Column> cols;
    for (std::size_t s = 0; s + 1 < xs.size(); ++s)
        cols.push_back(Column{xs[s], xs[s + 1], std::move(iv[s])});
    return unsafe_from_normalized(m, columns_to_rects(std::move(cols)));
}

Rat RectRegion::area() const {
    Rat total = 0;
    for (const auto& r : rects_) {
        if (mode_ == Mode::Euclidean) {
            total += r.width() * r.height();
        } else {
            if (r.y0 <= 0)
                throw DomainError("area: hyperbolic rectangle touching y <= 0");
            total += r.width() * (Rat(1) / r.y0 - Rat(1) / r.y1);
        }
    }
    return total;
}

Rect RectRegion::bbox() const {
    if (rects_.empty()) throw DomainError("bbox: empty region");
    Rect b = rects_.front();
    for (const auto& r : rects_) {
        b.x0 = rat_min(b.x0, r.x0);
        b.x1 = rat_max(b.x1, r.x1);
        b.y0 = rat_min(b.y0, r.y0);
        b.y1 = rat_max(b.y1, r.y1);
    }
    return b;
}

RectRegion region_union(const RectRegion& a, const RectRegion& b) {
    check_mode(a, b, "union");
    return combine(a, b, intervals_union);
}

RectRegion region_intersect(const RectRegion& a, const RectRegion& b) {
    check_mode(a, b, "intersect");
    return combine(a, b, intervals_intersect);
}

RectRegion region_difference(const RectRegion& a, const RectRegion& b) {
    check_mode(a, b, "difference");
    return combine(a, b, intervals_subtract);
}

bool interiors_disjoint(const RectRegion& a, const RectRegion& b) {
    check_mode(a, b, "interiors_disjoint");
    if (a.empty() || b.empty()) return true;
    // Sorted by x0 already; scan with an x-overlap window.
    const auto& ra = a.rects();
    const auto& rb = b.rects();
    for (const auto& r : ra) {
        for (const auto& s : rb) {
            if (s.x0 >= r.x1) break;  // rb sorted by x0: no later overlap in x
            if (s.x1 <= r.x0) continue;
            if (s.y0 < r.y1 && r.y0 < s.y1) return false;
        }
    }
    return true;
}

bool region_contains_point(const RectRegion& r, const Rat& x, const Rat& y) {
    for (const auto& rc : r.rects()) {
        if (rc.x0 > x) break;
        if (x <= rc.x1 && rc.y0 <= y && y <= rc.y1) return true;
    }
    return false;
}

RectRegion region_scaled_translated(const RectRegion& r, const Rat& scale,
                                    const Rat& tx, const Rat& ty) {
    if (scale <= 0)
        throw UnsupportedPlacementError("region map: scale must be positive");
    std::vector<Rect> out;
    out.reserve(r.size());
    for (const auto& rc : r.rects())
        out.push_back(Rect{scale * rc.x0 + tx, scale * rc.x1 + tx,
                           scale * rc.y0 + ty, scale * rc.y1 + ty});
    if (r.mode() == Mode::Hyperbolic && !out.empty()) {
        for (const auto& rc : out)
            if (rc.y0 <= 0)
                throw DomainError("region map: image leaves the upper half-plane");
    }
    return unsafe_from_normalized(r.mode(), std::move(out));
}

namespace {

// Boundary pieces along one axis: for each candidate coordinate c, the
// symmetric difference between coverage on the two sides of the line.
void axis_boundary(const std::vector<Rect>& rects, bool vertical,
                   std::vector<Segment>& out) {
    std::vector<Rat> cs;
    for (const auto& r : rects) {
        cs.push_back(vertical ? r.x0 : r.y0);
        cs.push_back(vertical ? r.x1 : r.y1);
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    for (const auto& c : cs) {
        std::vector<Interval> lo_side, hi_side;
        for (const auto& r : rects) {
            const Rat& a0 = vertical ? r.x0 : r.y0;
            const Rat& a1 = vertical ? r.x1 : r.y1;
            Interval span = vertical ? Interval{r.y0, r.y1} : Interval{r.x0, r.x1};
            if (a0 < c && c <= a1) lo_side.push_back(span);
            if (a0 <= c && c < a1) hi_side.push_back(span);
        }
        auto lo = merge_intervals(std::move(lo_side));
        auto hi = merge_intervals(std::move(hi_side));
        for (const auto& iv : intervals_subtract(lo, hi))
            out.push_back(Segment{vertical, c, iv.first, iv.second});
        for (const auto& iv : intervals_subtract(hi, lo))
            out.push_back(Segment{vertical, c, iv.first, iv.second});
    }
}

}  // namespace

std::vector<Segment> boundary_segments(const RectRegion& r) {
    std::vector<Segment> segs;
    axis_boundary(r.rects(), true, segs);
    axis_boundary(r.rects(), false, segs);
    std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) {
        if (a.vertical != b.vertical) return a.vertical > b.vertical;
        if (a.at != b.at) return a.at < b.at;
        return a.lo < b.lo;
    });
    return segs;
}

bool interior_meets_segments(const RectRegion& r, const std::vector<Segment>& segs) {
    for (const auto& rc : r.rects()) {
        for (const auto& s : segs) {
            if (s.vertical) {
                if (rc.x0 < s.at && s.at < rc.x1 && s.lo < rc.y1 && rc.y0 < s.hi)
                    return true;
            } else {
                if (rc.y0 < s.at && s.at < rc.y1 && s.lo < rc.x1 && rc.x0 < s.hi)
                    return true;
            }
        }
    }
    return false;
}

bool edge_connected(const RectRegion& r) {
    const auto& rects = r.rects();
    if (rects.size() <= 1) return true;
    std::vector<std::size_t> parent(rects.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    auto touch_len = [](const Rat& a0, const Rat& a1, const Rat& b0, const Rat& b1) {
        return rat_min(a1, b1) > rat_max(a0, b0);
    };
    for (std::size_t i = 0; i < rects.size(); ++i) {
        for (std::size_t j = i + 1; j < rects.size(); ++j) {
            const Rect& a = rects[i];
            const Rect& b = rects[j];
            bool adj = false;
            if (a.x1 == b.x0 || b.x1 == a.x0)
                adj = touch_len(a.y0, a.y1, b.y0, b.y1);
            if (!adj && (a.y1 == b.y0 || b.y1 == a.y0))
                adj = touch_len(a.x0, a.x1, b.x0, b.x1);
            if (adj) parent[find(i)] = find(j);
        }
    }
    std::size_t root = find(0);
    for (std::size_t i = 1; i < rects.size(); ++i)
        if (find(i) != root) return false;
    return true;
}

}  // namespace hypack
