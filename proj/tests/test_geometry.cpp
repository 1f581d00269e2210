#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "hagakit/geometry.hpp"
#include "hagakit/prng.hpp"

using namespace hagakit;

namespace {

// Independent oracle for the common-tangent chord: lay both circles on the
// x-axis (centers (0, r) and (x, s)), find the offset x that makes them touch
// by bisection on the center distance, and read the chord off the tangency
// abscissas. Shares no algebra with the formula under test.
double chord_by_bisection(double r, double s) {
    const auto gap = [&](double x) { return std::hypot(x, s - r) - (r + s); };
    double lo = 0.0, hi = 2.0 * (r + s) + 1.0;
    REQUIRE(gap(lo) < 0.0);
    REQUIRE(gap(hi) > 0.0);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (gap(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("tangent chord length") {
    CHECK(external_tangent_chord(1.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(external_tangent_chord(4.0, 0.0) == 0.0);

    // Frozen from the bisection oracle at (2.3, 0.7).
    CHECK(external_tangent_chord(2.3, 0.7) ==
          doctest::Approx(2.537715508089904).epsilon(1e-12));
    CHECK(chord_by_bisection(2.3, 0.7) ==
          doctest::Approx(external_tangent_chord(2.3, 0.7)).epsilon(1e-9));

    CHECK_THROWS_AS(external_tangent_chord(-1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(external_tangent_chord(2.0, -0.5), std::domain_error);
}

TEST_CASE("tangent chord formula matches the constructive oracle") {
    SplitMix64 rng(0x5eedULL);
    for (int i = 0; i < 200; ++i) {
        const double r = rng.uniform_half_open(0.0, 10.0);
        const double s = rng.uniform_half_open(0.0, 10.0);
        const double formula = external_tangent_chord(r, s);
        CHECK(std::abs(chord_by_bisection(r, s) - formula) <=
              1e-9 * std::max(1.0, formula));
    }
}

TEST_CASE("point reflection") {
    const Line y_axis = Line::from_coefficients(1.0, 0.0, 0.0);
    const Point image = reflect_point({1.0, 0.0}, y_axis);
    CHECK(image.x == doctest::Approx(-1.0));
    CHECK(image.y == doctest::Approx(0.0));

    const Line diag = Line::through({0.0, 0.0}, {1.0, 1.0});
    const Point fixed = reflect_point({2.0, 2.0}, diag);
    CHECK(distance(fixed, {2.0, 2.0}) <= 1e-15);

    // Folding a unit square's corner onto the midpoint of the far side moves
    // the adjacent corner to distance 1 from the target (reflection is an
    // isometry and the two points sit one side length apart).
    const Line crease = perpendicular_bisector({1.0, 1.0}, {0.0, 0.5});
    const Point g = reflect_point({1.0, 0.0}, crease);
    CHECK(distance(g, {0.0, 0.5}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("reflection involution and isometry properties") {
    SplitMix64 rng(0xfadedULL);
    for (int i = 0; i < 200; ++i) {
        const Point p{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const Point q{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const Point a{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const Point b{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        if (distance(a, b) < 1e-6) continue;
        const Line m = Line::through(a, b);
        CHECK(distance(reflect_point(reflect_point(p, m), m), p) <= 1e-9);
        CHECK(std::abs(distance(reflect_point(p, m), reflect_point(q, m)) -
                       distance(p, q)) <= 1e-9 * std::max(1.0, distance(p, q)));
    }
}

TEST_CASE("perpendicular bisector") {
    const Line v = perpendicular_bisector({0.0, 0.0}, {2.0, 0.0});
    CHECK(std::abs(v.signed_distance({1.0, 0.0})) <= 1e-15);
    CHECK(std::abs(v.signed_distance({1.0, 5.0})) <= 1e-15);

    const Line h = perpendicular_bisector({0.0, 0.0}, {0.0, 2.0});
    CHECK(std::abs(h.signed_distance({7.0, 1.0})) <= 1e-14);

    // Midpoint lies on the line and the normal is parallel to the segment.
    const Point p{1.0, 1.0}, q{0.0, 0.5};
    const Line m = perpendicular_bisector(p, q);
    CHECK(std::abs(m.signed_distance(midpoint(p, q))) <= 1e-15);
    CHECK(std::abs(cross({m.a, m.b}, q - p)) <= 1e-15);

    SplitMix64 rng(77);
    for (int i = 0; i < 100; ++i) {
        const Point a{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
        const Point b{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
        if (distance(a, b) < 1e-6) continue;
        const Line bis = perpendicular_bisector(a, b);
        const Point probe = midpoint(a, b) + rng.uniform(-3.0, 3.0) * bis.direction();
        CHECK(std::abs(distance(probe, a) - distance(probe, b)) <= 1e-12);
    }

    CHECK_THROWS_AS(perpendicular_bisector({1.0, 2.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("line intersection") {
    const Line x0 = Line::from_coefficients(1.0, 0.0, 0.0);
    const Line y0 = Line::from_coefficients(0.0, 1.0, 0.0);
    const auto origin = line_line_intersection(x0, y0);
    REQUIRE(origin.has_value());
    CHECK(distance(*origin, {0.0, 0.0}) <= 1e-15);

    const Line y1 = Line::from_coefficients(0.0, 1.0, -1.0);
    CHECK_FALSE(line_line_intersection(y0, y1).has_value());

    // Fold of the unit square carrying the far corner onto the midpoint of
    // the opposite side: the folded edge crosses the base at x = 2/3.
    const Line crease = perpendicular_bisector({1.0, 1.0}, {0.0, 0.5});
    const Point g = reflect_point({1.0, 0.0}, crease);
    const auto f = line_line_intersection(Line::through({0.0, 0.5}, g), y0);
    REQUIRE(f.has_value());
    CHECK(f->x == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(f->y == doctest::Approx(0.0));
}

TEST_CASE("external tangency predicate") {
    const Circle a{{0.0, 0.0}, 1.0};
    CHECK(circles_externally_tangent(a, {{2.0, 0.0}, 1.0}));
    CHECK_FALSE(circles_externally_tangent(a, {{1.0, 0.0}, 1.0}));
    CHECK(circles_externally_tangent(a, {{1.0, 0.0}, 0.0}));  // point on boundary
}

TEST_CASE("line tangency foot") {
    const Line y0 = Line::from_coefficients(0.0, 1.0, 0.0);
    const auto foot = line_tangent_to_circle(y0, {{3.0, 1.0}, 1.0});
    REQUIRE(foot.has_value());
    CHECK(distance(*foot, {3.0, 0.0}) <= 1e-15);
    CHECK_FALSE(line_tangent_to_circle(y0, {{0.0, 2.0}, 1.0}).has_value());
}

TEST_CASE("internal common tangent at the contact point") {
    const Line mid = internal_common_tangent_at_contact({{0.0, 0.0}, 1.0},
                                                        {{2.0, 0.0}, 1.0});
    CHECK(std::abs(std::abs(mid.signed_distance({0.0, 0.0})) - 1.0) <= 1e-15);
    CHECK(std::abs(mid.signed_distance({1.0, 0.0})) <= 1e-15);
    CHECK(std::abs(mid.signed_distance({1.0, 7.0})) <= 1e-14);

    // Radii 1 and 4, both resting on the x-axis and touching each other: the
    // contact divides the center segment 1:4.
    const Circle small{{0.0, 1.0}, 1.0};
    const Circle large{{4.0, 4.0}, 4.0};
    const Line tangent = internal_common_tangent_at_contact(small, large);
    CHECK(std::abs(tangent.signed_distance({0.8, 1.6})) <= 1e-14);
    CHECK(std::abs(std::abs(tangent.signed_distance(small.center)) - 1.0) <= 1e-14);
    CHECK(std::abs(std::abs(tangent.signed_distance(large.center)) - 4.0) <= 1e-14);
    // Normal direction is the center direction (3-4-5 triangle).
    CHECK(tangent.a == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(tangent.b == doctest::Approx(0.6).epsilon(1e-14));

    CHECK_THROWS_AS(
        internal_common_tangent_at_contact({{0.0, 0.0}, 1.0}, {{5.0, 0.0}, 1.0}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        internal_common_tangent_at_contact({{0.0, 0.0}, 0.0}, {{1.0, 0.0}, 1.0}),
        std::invalid_argument);
}

TEST_CASE("tangent contacts from an outside point") {
    const Circle unit{{0.0, 0.0}, 1.0};
    const auto [left, right] = tangent_contacts_from_external_point({0.0, 2.0}, unit);
    CHECK(left.x == doctest::Approx(-std::sqrt(3.0) / 2.0).epsilon(1e-14));
    CHECK(left.y == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(right.x == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
    CHECK(right.y == doctest::Approx(0.5).epsilon(1e-14));

    // A point on the circle is its own degenerate contact.
    const Circle delta{{1.0, 1.0}, 1.0};
    const auto [c1, c2] = tangent_contacts_from_external_point({0.0, 1.0}, delta);
    CHECK(distance(c1, {0.0, 1.0}) <= 1e-12);
    CHECK(distance(c2, {0.0, 1.0}) <= 1e-12);

    // Equal tangent lengths: from (0, 2/3) both contacts of the unit circle
    // at (1, 1) sit at distance 1/3.
    const auto [t1, t2] = tangent_contacts_from_external_point({0.0, 2.0 / 3.0}, delta);
    CHECK(distance(t1, {0.0, 2.0 / 3.0}) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(distance(t2, {0.0, 2.0 / 3.0}) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // One of them is the foot of the vertical tangent.
    CHECK(std::min(distance(t1, {0.0, 1.0}), distance(t2, {0.0, 1.0})) <= 1e-12);

    CHECK_THROWS_AS(tangent_contacts_from_external_point({0.2, 0.1}, unit),
                    std::domain_error);

    SplitMix64 rng(0xabcdefULL);
    for (int i = 0; i < 200; ++i) {
        const Circle c{{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)},
                       rng.uniform_half_open(0.0, 5.0)};
        const double angle = rng.uniform(0.0, 6.28318);
        const Point p =
            c.center + (c.radius * (1.5 + rng.uniform(0.0, 5.0))) *
                           Point{std::cos(angle), std::sin(angle)};
        const auto [u, v] = tangent_contacts_from_external_point(p, c);
        CHECK(std::abs(distance(u, c.center) - c.radius) <= 1e-12 * std::max(1.0, c.radius));
        CHECK(std::abs(distance(p, u) - distance(p, v)) <=
              1e-9 * std::max(1.0, distance(p, u)));
    }
}

TEST_CASE("line canonical form") {
    const Line a = Line::through({0.0, 0.0}, {1.0, 0.0});
    CHECK(a.a == 0.0);
    CHECK(a.b == 1.0);
    CHECK(a.c == 0.0);
    const Line b = Line::through({5.0, -1.0}, {5.0, 3.0});
    CHECK(b.a == 1.0);
    CHECK(b.b == 0.0);
    CHECK(b.c == -5.0);
    // Same locus from swapped points yields identical coefficients.
    const Line c = Line::through({1.0, 0.0}, {0.0, 0.0});
    CHECK(a.a == c.a);
    CHECK(a.b == c.b);
    CHECK(a.c == c.c);
    CHECK_THROWS_AS(Line::from_coefficients(0.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("tolerance guards") {
    CHECK_THROWS_AS(Tolerance::validated(0.0, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(Tolerance::validated(1e-9, -1.0), std::invalid_argument);
    const Tolerance tol = Tolerance::validated(1e-6, 1e-6);
    CHECK(tol.near(1.0, 1.0 + 5e-7, 1.0));
    CHECK_FALSE(tol.near(1.0, 1.0 + 5e-6, 1.0));
}
