#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "hagakit/haga_fold.hpp"
#include "hagakit/prng.hpp"

using namespace hagakit;

TEST_CASE("fold at the side midpoint") {
    const HagaFigure fig = fold_from_e(1.0, 0.5);
    REQUIRE(fig.F.has_value());
    CHECK(fig.F->x == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(fig.F->y == doctest::Approx(0.0));
    CHECK(distance(fig.A, *fig.F) ==
          doctest::Approx(2.0 * distance(*fig.F, fig.B)).epsilon(1e-12));
    REQUIRE(fig.n.is_real());
    CHECK(fig.n.value() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fig.case_label == HagaCase::H5);
    CHECK(fig.gamma.radius == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(distance(fig.K, fig.A) <= 1e-15);  // contact at the corner
    CHECK(fig.crease_interior);
}

TEST_CASE("fold at the two-thirds point") {
    const HagaFigure fig = fold_from_e(1.0, 2.0 / 3.0);
    REQUIRE(fig.F.has_value());
    CHECK(fig.F->x == doctest::Approx(0.5).epsilon(1e-12));  // midpoint of AB
    REQUIRE(fig.n.is_real());
    CHECK(fig.n.value() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fig.K.y == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    // E and K trisect the side from D to A.
    CHECK(distance(fig.D, fig.E) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(distance(fig.E, fig.K) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(distance(fig.K, fig.A) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(fig.gamma.radius == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("fold onto the near corner") {
    const HagaFigure fig = fold_from_e(1.0, 0.0);
    CHECK(distance(fig.E, fig.A) == 0.0);
    REQUIRE(fig.F.has_value());
    CHECK(distance(*fig.F, fig.B) == 0.0);  // defined as B for this fold
    CHECK(distance(fig.G, fig.B) <= 1e-15); // B lies on the crease
    REQUIRE(fig.n.is_real());
    CHECK(fig.n.value() == 0.0);
    CHECK(fig.case_label == HagaCase::H6);
    CHECK(fig.gamma.radius == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fig.K.y == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(fig.gamma.center.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fig.gamma.center.y == doctest::Approx(-1.0).epsilon(1e-14));
    REQUIRE(fig.T.has_value());
    CHECK(distance(*fig.T, fig.B) <= 1e-14);
    CHECK(fig.crease_interior);
}

TEST_CASE("fold onto the far corner") {
    const HagaFigure fig = fold_from_e(1.0, 1.0);
    CHECK(fig.n.is_zero_bar());
    CHECK(fig.case_label == HagaCase::H4);
    CHECK(fig.gamma.radius == 0.0);
    CHECK(distance(fig.gamma.center, fig.D) == 0.0);
    CHECK(distance(fig.K, fig.D) == 0.0);
    CHECK_FALSE(fig.F.has_value());
    CHECK_FALSE(fig.T.has_value());
    CHECK(fig.crease_interior);  // the crease is the vertical midline
}

TEST_CASE("fold with the far corner as midpoint") {
    const HagaFigure fig = fold_from_e(1.0, 2.0);
    REQUIRE(fig.n.is_real());
    CHECK(fig.n.value() == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(fig.case_label == HagaCase::H2);
    CHECK(distance(fig.D, midpoint(fig.E, fig.A)) <= 1e-15);
    // The folded edge runs parallel to the base, so no F exists.
    CHECK_FALSE(fig.F.has_value());
    CHECK(fig.G.x == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fig.G.y == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(fig.crease_interior);  // touches only the corner D
}

TEST_CASE("fold cases by position") {
    CHECK(fold_from_e(1.0, 1.5).case_label == HagaCase::H3);
    CHECK(fold_from_e(1.0, 1.5).n.value() == doctest::Approx(-4.5).epsilon(1e-12));
    CHECK(fold_from_e(1.0, 3.0).case_label == HagaCase::H1);
    CHECK(fold_from_e(1.0, 3.0).n.value() == doctest::Approx(-1.125).epsilon(1e-12));
    CHECK(fold_from_e(1.0, -1.0).case_label == HagaCase::H7);
    CHECK(fold_from_e(1.0, -1.0).n.value() == doctest::Approx(-0.125).epsilon(1e-12));
    CHECK(fold_from_e(1.0, 0.25).case_label == HagaCase::H5);
    CHECK_THROWS_AS(fold_from_e(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(fold_from_e(-2.0, 0.5), std::domain_error);
}

TEST_CASE("associated circle from the fold point") {
    SUBCASE("midpoint fold") {
        const GammaContact c = gamma_from_e(1.0, 0.5);
        CHECK(c.gamma.radius == doctest::Approx(0.25).epsilon(1e-14));
        CHECK(distance(c.K, {0.0, 0.0}) <= 1e-15);
        CHECK(1.0 == doctest::Approx(4.0 * c.gamma.radius));  // d = 4r
    }
    SUBCASE("corner fold contact is the square corner") {
        const GammaContact c = gamma_from_e(1.0, 0.0);
        CHECK(c.gamma.radius == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(c.K.y == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(distance(c.T, {1.0, 0.0}) <= 1e-14);
    }
    SUBCASE("trisection fold") {
        const GammaContact c = gamma_from_e(1.0, 2.0 / 3.0);
        CHECK(c.gamma.radius == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
        CHECK(c.K.y == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("touches the fixed circle externally for any fold point") {
        SplitMix64 rng(4242);
        const Circle delta{{1.0, 1.0}, 1.0};
        const Point corner_d{0.0, 1.0};
        for (int i = 0; i < 200; ++i) {
            double e = rng.uniform(-10.0, 10.0);
            if (e == 1.0) e = 0.5;
            const GammaContact c = gamma_from_e(1.0, e);
            CHECK(std::abs(distance(c.gamma.center, delta.center) -
                           (c.gamma.radius + delta.radius)) <=
                  1e-9 * std::max(1.0, c.gamma.radius));
            // Contact point is on both circles.
            CHECK(std::abs(distance(c.T, delta.center) - delta.radius) <= 1e-9);
            // T is the contact of the remaining tangent from E: the tangent
            // lengths |ET| and |ED| agree, and T is one of the two contacts.
            const Point fold_target{0.0, e};
            const double scale = std::max(1.0, std::abs(e));
            CHECK(std::abs(distance(fold_target, c.T) -
                           distance(fold_target, corner_d)) <= 1e-9 * scale);
            const auto [t1, t2] =
                tangent_contacts_from_external_point(fold_target, delta);
            CHECK(std::min(distance(c.T, t1), distance(c.T, t2)) <= 1e-9 * scale);
        }
    }
    CHECK_THROWS_AS(gamma_from_e(1.0, 1.0), std::domain_error);
}

TEST_CASE("parameter from the circle data") {
    SUBCASE("contact at the base corner gives zero") {
        const GammaContact c = gamma_from_e(1.0, 0.0);
        const HagaParam n = n_from_gamma(1.0, c.gamma, c.K, c.T);
        REQUIRE(n.is_real());
        CHECK(n.value() == 0.0);
    }
    SUBCASE("midpoint fold gives one half") {
        const GammaContact c = gamma_from_e(1.0, 0.5);
        const HagaParam n = n_from_gamma(1.0, c.gamma, c.K, c.T);
        CHECK(n.value() == doctest::Approx(0.5).epsilon(1e-14));
    }
    SUBCASE("negative side fold lands between -1/2 and 0") {
        const GammaContact c = gamma_from_e(1.0, -1.0);
        CHECK(c.gamma.radius == doctest::Approx(4.0).epsilon(1e-14));
        const HagaParam n = n_from_gamma(1.0, c.gamma, c.K, c.T);
        CHECK(n.value() == doctest::Approx(-0.125).epsilon(1e-14));
        CHECK(n.value() > -0.5);
        CHECK(n.value() < 0.0);
    }
    CHECK_THROWS_AS(n_from_gamma(1.0, Circle{{0.0, 0.0}, 0.0}, {0.0, 0.0}, {0.0, 0.0}),
                    std::domain_error);
}

TEST_CASE("fold point from the parameter") {
    CHECK(e_from_n(1.0, HagaParam::real(2.0)) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(e_from_n(1.0, HagaParam::zero_bar()) == 1.0);
    CHECK(e_from_n(1.0, HagaParam::real(-2.0)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(e_from_n(1.0, HagaParam::real(0.0)) == 0.0);
    CHECK(e_from_n(1.0, HagaParam::real(-0.125)) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK_THROWS_AS(e_from_n(1.0, HagaParam::real(-0.5)), std::domain_error);
    CHECK_THROWS_WITH_AS(e_from_n(1.0, HagaParam::real(-0.5)),
                         doctest::Contains("-1/2"), std::domain_error);

    SUBCASE("round trip across all cases") {
        SplitMix64 rng(0xd1ce);
        for (int i = 0; i < 400; ++i) {
            const double d = rng.uniform_half_open(0.0, 10.0);
            const double e = rng.uniform(-10.0 * d, 10.0 * d);
            const HagaFigure fig = fold_from_e(d, e);
            CHECK(std::abs(e_from_n(d, fig.n) - e) <=
                  1e-9 * std::max(d, std::abs(e)));
        }
    }
}

TEST_CASE("case classification matches the between-ness predicates") {
    SplitMix64 rng(0xca5e);
    for (int i = 0; i < 500; ++i) {
        const double d = rng.uniform_half_open(0.0, 5.0);
        const double e = rng.uniform(-8.0 * d, 8.0 * d);
        const HagaFigure fig = fold_from_e(d, e);
        // Direct geometric reading of the seven cases.
        HagaCase expected;
        if (e == d) {
            expected = HagaCase::H4;
        } else if (e == 0.0) {
            expected = HagaCase::H6;
        } else if (e == 2.0 * d) {
            expected = HagaCase::H2;
        } else if (e > 0.0 && e < d) {
            expected = HagaCase::H5;  // E between D and A
        } else if (e < 0.0) {
            expected = HagaCase::H7;  // A between D and E
        } else {
            // D between E and A; split by the parameter threshold.
            expected = e < 2.0 * d ? HagaCase::H3 : HagaCase::H1;
        }
        CHECK(classify_case(fig) == expected);
        CHECK(fig.case_label == expected);
    }
    // Equality cases win over the surrounding intervals.
    CHECK(fold_from_e(1.0, 2.0).case_label == HagaCase::H2);
    CHECK(fold_from_e(1.0, 1.0).case_label == HagaCase::H4);
    CHECK(fold_from_e(1.0, 0.0).case_label == HagaCase::H6);
}

TEST_CASE("crease interior criterion") {
    CHECK(fold_from_e(1.0, e_from_n(1.0, HagaParam::real(1.0))).crease_interior);
    CHECK_FALSE(fold_from_e(1.0, e_from_n(1.0, HagaParam::real(-1.0))).crease_interior);

    CHECK(kRho == doctest::Approx(3.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-15));
    CHECK(kRhoInverse == doctest::Approx(1.0 / kRho).epsilon(1e-15));
    CHECK(kRhoInverse == doctest::Approx(0.17157287525381).epsilon(1e-12));

    // Boundary fold: the crease passes through the corner A exactly when the
    // fold target sits sqrt(2)*d below A; classified not-interior.
    const HagaFigure boundary = fold_from_e(1.0, -std::sqrt(2.0));
    CHECK(distance(boundary.E, boundary.A) == doctest::Approx(std::sqrt(2.0)));
    CHECK(std::abs(boundary.m.signed_distance(boundary.A)) <= 1e-12);
    CHECK(boundary.n.value() == doctest::Approx(-kRhoInverse).epsilon(1e-12));
    CHECK_FALSE(boundary.crease_interior);

    // Just inside / outside the threshold.
    CHECK(fold_from_e(1.0, e_from_n(1.0, HagaParam::real(-kRhoInverse + 1e-6)))
              .crease_interior);
    CHECK_FALSE(fold_from_e(1.0, e_from_n(1.0, HagaParam::real(-kRhoInverse - 1e-6)))
                    .crease_interior);

    // Case-level statement: interior for h3-h6, never for h1/h2, split h7.
    CHECK(fold_from_e(1.0, 1.5).crease_interior);    // h3
    CHECK(fold_from_e(1.0, 1.0).crease_interior);    // h4
    CHECK(fold_from_e(1.0, 0.3).crease_interior);    // h5
    CHECK(fold_from_e(1.0, 0.0).crease_interior);    // h6
    CHECK_FALSE(fold_from_e(1.0, 3.0).crease_interior);  // h1
    CHECK_FALSE(fold_from_e(1.0, 2.0).crease_interior);  // h2
}

TEST_CASE("fold isometries hold for any target") {
    SplitMix64 rng(0x15031805ULL);
    for (int i = 0; i < 300; ++i) {
        const double d = rng.uniform_half_open(0.0, 10.0);
        const double e = rng.uniform(-10.0 * d, 10.0 * d);
        const HagaFigure fig = fold_from_e(d, e);
        CHECK(std::abs(distance(fig.G, fig.E) - d) <= 1e-9 * std::max(1.0, d));
        CHECK(distance(reflect_point(fig.C, fig.m), fig.E) <= 1e-9 * std::max(1.0, d));
        CHECK(distance(fig.E, midpoint(fig.D, fig.K)) <= 1e-9 * std::max(1.0, d));
    }
}

TEST_CASE("parameter decreases along the fold direction") {
    const auto sweep = [](double hi, double lo, int steps) {
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 0; i < steps; ++i) {
            const double e = hi + (lo - hi) * i / (steps - 1.0);
            const double n = fold_from_e(1.0, e).n.value();
            CHECK(n < prev);
            prev = n;
        }
    };
    sweep(9.0, 2.05, 40);
    sweep(1.95, 1.05, 40);
    sweep(0.98, 0.02, 40);
    sweep(-0.02, -9.0, 40);
}

TEST_CASE("first theorem report") {
    for (double d : {1.0, 2.5, 0.125}) {
        const CheckReport report = haga_first_check(d);
        CHECK(report.items.size() == 4);
        CHECK(report.all_pass());
    }
}

TEST_CASE("third theorem report") {
    for (double d : {1.0, 3.0}) {
        const CheckReport report = haga_third_check(d);
        CHECK(report.items.size() == 6);
        for (const CheckItem& item : report.items) {
            INFO(item.name, " residual=", item.residual);
            CHECK(item.pass);
        }
    }
}
