#include <hypack/region.hpp>

#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace hypack;

namespace {

RectRegion random_region(std::mt19937_64& rng, Mode mode, int max_rects) {
    std::uniform_int_distribution<long> num(0, 24), den(1, 6), span(1, 10);
    std::uniform_int_distribution<int> count(0, max_rects);
    std::vector<Rect> rects;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        Rat x0 = rat(num(rng), den(rng));
        Rat y0 = rat(num(rng) + (mode == Mode::Hyperbolic ? 6 : 0), den(rng));
        if (mode == Mode::Hyperbolic && y0 <= 0) y0 = rat(1, den(rng));
        rects.push_back(Rect{x0, x0 + rat(span(rng), den(rng)), y0,
                             y0 + rat(span(rng), den(rng))});
    }
    return RectRegion::from_rects(mode, std::move(rects));
}

std::vector<Rect> raw_rects(std::mt19937_64& rng, Mode mode, int n) {
    RectRegion r = random_region(rng, mode, n);
    return r.rects();
}

}  // namespace

TEST_CASE("normalize: duplicates, overlaps, empties") {
    RectRegion dup = RectRegion::from_rects(
        Mode::Euclidean, {make_rect(0, 1, 0, 1), make_rect(0, 1, 0, 1)});
    CHECK(dup.size() == 1);
    CHECK(dup.area() == Rat(1));

    RectRegion two = RectRegion::from_rects(
        Mode::Euclidean, {make_rect(0, 2, 0, 1), make_rect(1, 3, 0, 1)});
    CHECK(two.area() == Rat(3));
    CHECK(two.area() == oracle::inclusion_exclusion_area(
                            Mode::Euclidean, {make_rect(0, 2, 0, 1), make_rect(1, 3, 0, 1)}));
    CHECK(two.size() == 1);  // coalesced into one rectangle

    CHECK(RectRegion::from_rects(Mode::Euclidean, {}).empty());
    // degenerate rectangles carry no area and vanish
    CHECK(RectRegion::from_rects(Mode::Euclidean, {make_rect(1, 1, 0, 5)}).empty());
    CHECK_THROWS_AS(
        RectRegion::from_rects(Mode::Hyperbolic, {make_rect(0, 1, -1, 1)}), DomainError);
}

TEST_CASE("boolean operations on simple cases") {
    const RectRegion a = RectRegion::rect(Mode::Hyperbolic, make_rect(0, 2, 1, 3));
    CHECK(region_difference(a, a).empty());
    CHECK(region_intersect(RectRegion::rect(Mode::Euclidean, make_rect(0, 1, 0, 1)),
                           RectRegion::rect(Mode::Euclidean, make_rect(2, 3, 2, 3)))
              .empty());
    CHECK_THROWS_AS(
        region_union(a, RectRegion::rect(Mode::Euclidean, make_rect(0, 1, 0, 1))),
        ModeMismatchError);
}

TEST_CASE("areas: exact hyperbolic and euclidean values") {
    CHECK(RectRegion::rect(Mode::Hyperbolic, make_rect(0, 2, 1, 2)).area() == Rat(1));
    const RectRegion qp0 = RectRegion::rect(
        Mode::Hyperbolic, make_rect(rat(12, 25), rat(13, 25), Rat(1), rat(11, 10)));
    CHECK(qp0.area() == rat(1, 275));
    CHECK(RectRegion::rect(Mode::Euclidean, make_rect(0, 3, 0, 2)).area() == Rat(6));
}

TEST_CASE("interiors_disjoint: boundary contact allowed") {
    const RectRegion a = RectRegion::rect(Mode::Euclidean, make_rect(0, 1, 0, 1));
    const RectRegion b = RectRegion::rect(Mode::Euclidean, make_rect(1, 2, 0, 1));
    CHECK(interiors_disjoint(a, b));
    const RectRegion c = RectRegion::rect(Mode::Euclidean, make_rect(0, 2, 0, 2));
    const RectRegion d = RectRegion::rect(Mode::Euclidean, make_rect(1, 3, 1, 3));
    CHECK_FALSE(interiors_disjoint(c, d));
}

TEST_CASE("scaled_translated maps rectangles the affine way") {
    const RectRegion r = RectRegion::rect(Mode::Hyperbolic, make_rect(0, 1, 1, 2));
    const RectRegion shifted = region_scaled_translated(r, 1, Rat(2), 0);
    CHECK(shifted == RectRegion::rect(Mode::Hyperbolic, make_rect(2, 3, 1, 2)));
    const RectRegion identity = region_scaled_translated(r, 1, 0, 0);
    CHECK(identity == r);
    CHECK_THROWS_AS(region_scaled_translated(r, Rat(0), 0, 0), UnsupportedPlacementError);
}

TEST_CASE("property: modularity, disjointness, idempotence") {
    std::mt19937_64 rng(123456);
    for (int iter = 0; iter < 120; ++iter) {
        const Mode mode = iter % 2 == 0 ? Mode::Euclidean : Mode::Hyperbolic;
        const RectRegion x = random_region(rng, mode, 6);
        const RectRegion y = random_region(rng, mode, 6);
        const RectRegion u = region_union(x, y);
        const RectRegion i = region_intersect(x, y);
        CHECK(u.area() + i.area() == x.area() + y.area());
        CHECK(interiors_disjoint(x, y) == (i.area() == 0));
        // difference semantics: x = (x - y) ∪ (x ∩ y) at area level
        CHECK(region_difference(x, y).area() + i.area() == x.area());
        // normalize idempotent and canonical
        RectRegion renorm = RectRegion::from_rects(mode, x.rects());
        CHECK(renorm == x);
    }
}

TEST_CASE("property: area equals the inclusion-exclusion oracle") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 60; ++iter) {
        const Mode mode = iter % 2 == 0 ? Mode::Euclidean : Mode::Hyperbolic;
        std::vector<Rect> rects = raw_rects(rng, mode, 8);
        // shuffle some duplicates in
        if (!rects.empty()) rects.push_back(rects.front());
        const RectRegion r = RectRegion::from_rects(mode, rects);
        CHECK(r.area() == oracle::inclusion_exclusion_area(mode, rects));
    }
}

TEST_CASE("boundary segments of a square") {
    const RectRegion sq = RectRegion::rect(Mode::Euclidean, make_rect(0, 1, 0, 1));
    const auto segs = boundary_segments(sq);
    CHECK(segs.size() == 4);
    Rat length = 0;
    for (const auto& s : segs) length += s.hi - s.lo;
    CHECK(length == Rat(4));

    // interior of a crossing rectangle meets the boundary, a far one does not
    CHECK(interior_meets_segments(
        RectRegion::rect(Mode::Euclidean, make_rect(rat(1, 2), rat(3, 2), 0, 1)), segs));
    CHECK_FALSE(interior_meets_segments(
        RectRegion::rect(Mode::Euclidean, make_rect(5, 6, 5, 6)), segs));
    // a rect inside touching the boundary from inside does not cross it
    CHECK_FALSE(interior_meets_segments(
        RectRegion::rect(Mode::Euclidean, make_rect(0, 1, 0, rat(1, 2))), segs));
}

TEST_CASE("edge connectivity requires positive-length contact") {
    const RectRegion corner = RectRegion::from_rects(
        Mode::Euclidean, {make_rect(0, 1, 0, 1), make_rect(1, 2, 1, 2)});
    CHECK_FALSE(edge_connected(corner));
    const RectRegion edge = RectRegion::from_rects(
        Mode::Euclidean, {make_rect(0, 1, 0, 1), make_rect(1, 2, 0, 1)});
    CHECK(edge_connected(edge));
    CHECK(edge_connected(RectRegion(Mode::Euclidean)));
}

TEST_CASE("closed point membership") {
    const RectRegion r = RectRegion::from_rects(
        Mode::Euclidean, {make_rect(0, 1, 0, 1), make_rect(3, 4, 0, 1)});
    CHECK(region_contains_point(r, Rat(0), Rat(0)));
    CHECK(region_contains_point(r, Rat(1), Rat(1)));
    CHECK(region_contains_point(r, rat(7, 2), rat(1, 2)));
    CHECK_FALSE(region_contains_point(r, Rat(2), rat(1, 2)));
}
