#pragma once

#include <hypack/errors.hpp>
#include <hypack/rational.hpp>

#include <string>
#include <vector>

namespace hypack {

enum class Mode { Euclidean, Hyperbolic };

inline const char* mode_name(Mode m) {
    return m == Mode::Euclidean ? "euclidean" : "hyperbolic";
}

// Closed axis-aligned rectangle [x0,x1] x [y0,y1] with rational corners.
struct Rect {
    Rat x0, x1, y0, y1;

    bool operator==(const Rect& o) const {
        return x0 == o.x0 && x1 == o.x1 && y0 == o.y0 && y1 == o.y1;
    }
    Rat width() const { return x1 - x0; }
    Rat height() const { return y1 - y0; }
};

inline Rect make_rect(const Rat& x0, const Rat& x1, const Rat& y0, const Rat& y1) {
    return Rect{x0, x1, y0, y1};
}
inline Rect make_rect(long x0, long x1, long y0, long y1) {
    return Rect{Rat(x0), Rat(x1), Rat(y0), Rat(y1)};
}

// Axis-aligned segment: vertical ones sit at x = at with y in [lo,hi],
// horizontal ones at y = at with x in [lo,hi].
struct Segment {
    bool vertical;
    Rat at, lo, hi;
};

// Finite union of closed axis-aligned rectangles with rational coordinates,
// kept in a canonical normalized form: maximal vertical columns with
// interior-disjoint, non-touching y-intervals, sorted by (x0, y0). Two
// regions describe the same point set (up to measure zero) iff their
// normalized rect vectors are equal. Set semantics are area-level: interiors
// decide membership questions, boundaries carry no area.
class RectRegion {
  public:
    RectRegion() = default;
    explicit RectRegion(Mode m) : mode_(m) {}

    // Normalizes on entry. Degenerate rectangles (zero width or height) are
    // dropped; in hyperbolic mode any rectangle with y0 <= 0 is a DomainError.
    static RectRegion from_rects(Mode m, std::vector<Rect> raw);
    static RectRegion rect(Mode m, const Rect& r) { return from_rects(m, {r}); }

    Mode mode() const { return mode_; }
    const std::vector<Rect>& rects() const { return rects_; }
    bool empty() const { return rects_.empty(); }
    std::size_t size() const { return rects_.size(); }

    // Euclidean: sum of width*height. Hyperbolic: sum of (x1-x0)(1/y0-1/y1).
    Rat area() const;

    Rect bbox() const;  // DomainError when empty

    bool operator==(const RectRegion& o) const {
        return mode_ == o.mode_ && rects_ == o.rects_;
    }

  private:
    friend RectRegion unsafe_from_normalized(Mode, std::vector<Rect>);
    Mode mode_ = Mode::Euclidean;
    std::vector<Rect> rects_;
};

// Already-canonical input; used by canonical-form-preserving maps.
RectRegion unsafe_from_normalized(Mode m, std::vector<Rect> rects);

RectRegion region_union(const RectRegion& a, const RectRegion& b);
RectRegion region_intersect(const RectRegion& a, const RectRegion& b);
// a minus b at area level: the result's indicator agrees with 1_a(1 - 1_b)
// off a measure-zero set.
RectRegion region_difference(const RectRegion& a, const RectRegion& b);

// True iff the open interiors do not meet. Exact; boundary contact allowed.
bool interiors_disjoint(const RectRegion& a, const RectRegion& b);

// Closed-point membership, exact for rational points.
bool region_contains_point(const RectRegion& r, const Rat& x, const Rat& y);

// Image under (x,y) -> (scale*x + tx, scale*y + ty), scale > 0. Canonical
// form is preserved, so no renormalization happens.
RectRegion region_scaled_translated(const RectRegion& r, const Rat& scale,
                                    const Rat& tx, const Rat& ty);

// Boundary of the region as axis-aligned segments (the topological boundary
// of the closed union), sorted canonically.
std::vector<Segment> boundary_segments(const RectRegion& r);

// True iff the open interior of r meets any of the segments.
bool interior_meets_segments(const RectRegion& r, const std::vector<Segment>& segs);

// True iff the normalized rectangles form a single component under
// positive-length shared-edge adjacency. Empty regions count as connected.
bool edge_connected(const RectRegion& r);

}  // namespace hypack
