#include <hypack/placement.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hypack;

namespace {

Placement random_hyp(std::mt19937_64& rng, int base = 2) {
    std::uniform_int_distribution<long> a(-3, 3), num(-12, 12), den(1, 8);
    return Placement::hyperbolic(base, a(rng), rat(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("compose and invert") {
    const Placement s2 = Placement::hyperbolic(2, 1, 0);
    const Placement s2inv = invert(s2);
    CHECK(compose(s2, s2inv).is_identity());

    // s2^-1 tau2 is z -> (z + 2)/2
    const Placement tau2 = Placement::hyperbolic(2, 0, 2);
    const Placement c = compose(s2inv, tau2);
    CHECK(c.a == -1);
    CHECK(c.t == Rat(1));
    double x = 0, y = 1;  // i
    apply(c, x, y);
    CHECK(x == doctest::Approx(1.0));
    CHECK(y == doctest::Approx(0.5));
    x = 1, y = 1;  // 1 + i
    apply(c, x, y);
    CHECK(x == doctest::Approx(1.5));
    CHECK(y == doctest::Approx(0.5));

    const Placement g = Placement::hyperbolic(2, 1, 3);
    const Placement gi = invert(g);
    CHECK(gi.a == -1);
    CHECK(gi.t == rat(-3, 2));
    CHECK(compose(g, gi).is_identity());
    CHECK(compose(gi, g).is_identity());
}

TEST_CASE("group axioms hold exactly on random triples") {
    std::mt19937_64 rng(321);
    for (int i = 0; i < 500; ++i) {
        const Placement g = random_hyp(rng), h = random_hyp(rng), k = random_hyp(rng);
        CHECK(compose(compose(g, h), k) == compose(g, compose(h, k)));
        CHECK(compose(g, invert(g)).is_identity());
        CHECK(compose(invert(g), g).is_identity());
        CHECK(compose(g, Placement::identity(Mode::Hyperbolic, 2)) == g);
    }
    CHECK_THROWS_AS(compose(Placement::hyperbolic(2, 0, 0), Placement::euclidean(0, 0)),
                    ModeMismatchError);
}

TEST_CASE("transform composes like the group") {
    std::mt19937_64 rng(654);
    const RectRegion r = RectRegion::rect(Mode::Hyperbolic, make_rect(0, 1, 1, 2));
    for (int i = 0; i < 100; ++i) {
        const Placement g = random_hyp(rng), h = random_hyp(rng);
        CHECK(transform(r, compose(g, h)) == transform(transform(r, h), g));
        CHECK(transform(r, g).area() == r.area());  // isometry
    }
    CHECK(transform(r, Placement::identity(Mode::Hyperbolic, 2)) == r);
}

TEST_CASE("placement distance: exact small-offset values") {
    const Placement e = Placement::identity(Mode::Hyperbolic, 2);
    const MetricValue d = placement_distance(e, Placement::hyperbolic(2, 0, rat(1, 10)));
    CHECK(d.exact);
    CHECK(d.lin == rat(1, 10));
    CHECK(d.lg == 0);

    // pure scaling: |a| log m
    const MetricValue ds = placement_distance(e, Placement::hyperbolic(2, 2, 0));
    CHECK(ds.exact);
    CHECK(ds.lin == 0);
    CHECK(ds.lg == Rat(2));
    CHECK(ds.value() == doctest::Approx(2 * std::log(2.0)).epsilon(1e-14));

    // euclidean: L1 translation distance, exact
    const MetricValue de = placement_distance(Placement::euclidean(0, 0),
                                              Placement::euclidean(rat(1, 3), rat(1, 4)));
    CHECK(de.exact);
    CHECK(de.lin == rat(1, 3) + rat(1, 4));
}

TEST_CASE("placement distance is a left-invariant metric") {
    std::mt19937_64 rng(987);
    for (int i = 0; i < 4000; ++i) {
        const Placement g = random_hyp(rng), h = random_hyp(rng), k = random_hyp(rng);
        const MetricValue dgh = placement_distance(g, h);
        // symmetry, bit-exact through the canonical relative form
        CHECK(dgh.value() == placement_distance(h, g).value());
        CHECK(placement_distance(g, g).is_zero());
        // triangle inequality (a geodesic length metric)
        CHECK(dgh.value() <=
              placement_distance(g, k).value() + placement_distance(k, h).value() + 1e-12);
        // left invariance, bit-exact
        const MetricValue moved = placement_distance(compose(k, g), compose(k, h));
        CHECK(moved.value() == dgh.value());
        CHECK(moved.exact == dgh.exact);
        if (moved.exact) {
            CHECK(moved.lin == dgh.lin);
            CHECK(moved.lg == dgh.lg);
        }
    }
}

TEST_CASE("scaling shortcut kicks in for long horizontal offsets") {
    const Placement e = Placement::identity(Mode::Hyperbolic, 2);
    // at the branch point the two formulas agree
    const MetricValue at2 = placement_distance(e, Placement::hyperbolic(2, 0, 2));
    CHECK(at2.exact);
    CHECK(at2.lin == Rat(2));
    const MetricValue far = placement_distance(e, Placement::hyperbolic(2, 0, 100));
    CHECK_FALSE(far.exact);
    CHECK(far.value() < 100.0);  // strictly cheaper than walking straight
    CHECK(far.value() == doctest::Approx(2.0 + 2.0 * std::log(50.0)).epsilon(1e-12));
}

TEST_CASE("metric value comparisons") {
    const MetricValue inf = MetricValue::infinity();
    const MetricValue one = MetricValue::from_exact(Rat(1));
    CHECK(compare(inf, one) > 0);
    CHECK(compare(one, inf) < 0);
    CHECK(compare(inf, inf) == 0);
    const MetricValue log2 = MetricValue::from_exact(Rat(0), Rat(1), 2);
    CHECK(compare(log2, one) < 0);  // log 2 < 1
    CHECK(compare(log2, MetricValue::from_exact(rat(1, 2))) > 0);
    CHECK(compare(one.divided_by(2), MetricValue::from_exact(rat(1, 2))) == 0);
}
