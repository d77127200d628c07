#include <hypack/geom.hpp>
#include <hypack/placement.hpp>

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

using namespace hypack;

namespace {

HPoint random_point(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> x(-5.0, 5.0), y(0.05, 8.0);
    return HPoint{x(rng), y(rng)};
}

}  // namespace

TEST_CASE("hyp_distance matches the closed form and the model") {
    CHECK(hyp_distance({0, 1}, {0, 1}) == 0.0);
    // vertical geodesic: distance equals the integral of dy/y
    const double d = hyp_distance({0, 1}, {0, 2});
    CHECK(d == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(d == doctest::Approx(oracle::integral_inv_y(1.0, 2.0)).epsilon(1e-9));
    CHECK(hyp_distance({0, 1}, {2, 1}) ==
          doctest::Approx(std::acosh(3.0)).epsilon(1e-12));
    CHECK_THROWS_AS(hyp_distance({0, 0}, {0, 1}), DomainError);
    CHECK_THROWS_AS(hyp_distance({0, 1}, {0, -2}), DomainError);
}

TEST_CASE("hyp_distance is a metric invariant under the affine maps") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> lam(0.1, 4.0), tr(-3.0, 3.0);
    int checked = 0;
    for (int i = 0; i < 10'000; ++i) {
        const HPoint p = random_point(rng), q = random_point(rng), r = random_point(rng);
        const double dpq = hyp_distance(p, q);
        CHECK(dpq == hyp_distance(q, p));  // symmetric, bit-exact
        CHECK(dpq + hyp_distance(q, r) + 1e-12 >= hyp_distance(p, r));
        const double l = lam(rng), t = tr(rng);
        const HPoint gp{l * p.x + t, l * p.y}, gq{l * q.x + t, l * q.y};
        CHECK(hyp_distance(gp, gq) == doctest::Approx(dpq).epsilon(1e-12));
        ++checked;
    }
    CHECK(checked == 10'000);
}

TEST_CASE("rect_hyp_area closed form agrees with numeric integration") {
    CHECK(rect_hyp_area(Rat(0), Rat(2), Rat(1), Rat(2)) == Rat(1));
    CHECK(rect_hyp_area(0.0, 2.0, 1.0, 2.0) ==
          doctest::Approx(oracle::hyp_rect_area_numeric(0, 2, 1, 2)).epsilon(1e-10));
    const double v = rect_hyp_area(0.1, 0.9, 1.1, 1.9);
    CHECK(v == doctest::Approx(0.8 * (1 / 1.1 - 1 / 1.9)).epsilon(1e-14));
    CHECK(v == doctest::Approx(oracle::hyp_rect_area_numeric(0.1, 0.9, 1.1, 1.9))
                   .epsilon(1e-10));
    CHECK_THROWS_AS(rect_hyp_area(0.0, 1.0, -1.0, 2.0), DomainError);
    CHECK_THROWS_AS(rect_hyp_area(1.0, 1.0, 1.0, 2.0), DomainError);
}

TEST_CASE("rect area is invariant under z -> lambda z + t, exactly") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 9), sc(1, 5);
    for (int i = 0; i < 200; ++i) {
        Rat a = rat(num(rng), den(rng));
        Rat b = a + rat(1 + (num(rng) & 7), den(rng));
        Rat c = rat(1 + (num(rng) & 15), den(rng));
        Rat d = c + rat(1 + (num(rng) & 7), den(rng));
        const Rat lambda = rat(sc(rng), den(rng));
        const Rat t = rat(num(rng), den(rng));
        CHECK(rect_hyp_area(a, b, c, d) ==
              rect_hyp_area(lambda * a + t, lambda * b + t, lambda * c, lambda * d));
    }
}

TEST_CASE("ball_area against a Monte Carlo oracle") {
    CHECK(ball_area(0.0) == 0.0);
    // frozen from the Monte Carlo oracle below
    const double b1 = ball_area(1.0);
    CHECK(b1 == doctest::Approx(3.412287).epsilon(1e-6));
    const auto mc1 = oracle::mc_hyp_ball_area(1.0, 500'000, 42);
    CHECK(std::abs(mc1.value - b1) < 0.01 * b1);
    const double b3 = ball_area(3.0);
    CHECK(b3 == doctest::Approx(56.97393).epsilon(1e-6));
    const auto mc3 = oracle::mc_hyp_ball_area(3.0, 2'000'000, 43);
    CHECK(std::abs(mc3.value - b3) < 0.01 * b3);
    CHECK_THROWS_AS(ball_area(-0.1), DomainError);
}

TEST_CASE("hyp_ball euclidean realization") {
    const HBall point_ball = hyp_ball({0, 1}, 0.0);
    CHECK(point_ball.euclidean_radius == 0.0);
    CHECK(point_ball.euclidean_center.y == 1.0);

    const HBall b = hyp_ball({0, 1}, std::log(2.0));
    CHECK(b.euclidean_center.x == 0.0);
    CHECK(b.euclidean_center.y == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(b.euclidean_radius == doctest::Approx(0.75).epsilon(1e-14));

    const HBall c = hyp_ball({2, 3}, 1.0);
    CHECK(c.euclidean_center.x == 2.0);
    CHECK(c.euclidean_center.y == doctest::Approx(3 * std::cosh(1.0)).epsilon(1e-14));
    CHECK(c.euclidean_radius == doctest::Approx(3 * std::sinh(1.0)).epsilon(1e-14));
    // boundary samples sit at hyperbolic distance r
    for (int k = 0; k < 16; ++k) {
        const double th = k * 0.39269908169872414;
        const HPoint p{c.euclidean_center.x + c.euclidean_radius * std::cos(th),
                       c.euclidean_center.y + c.euclidean_radius * std::sin(th)};
        CHECK(hyp_distance(c.center, p) == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(hyp_ball({0, 1}, -1.0), DomainError);
}

TEST_CASE("disk membership agrees with the distance test") {
    std::mt19937_64 rng(99);
    const HBall b = hyp_ball({0.5, 2.0}, 1.25);
    int agreements = 0;
    for (int i = 0; i < 20'000; ++i) {
        const HPoint p = random_point(rng);
        const double d = hyp_distance(b.center, p);
        if (std::abs(d - b.radius) < 1e-9) continue;  // boundary: either answer fine
        CHECK(ball_contains(b, p) == (d <= b.radius));
        ++agreements;
    }
    CHECK(agreements > 19'000);
}
