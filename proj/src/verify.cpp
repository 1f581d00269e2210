#include "hagakit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "hagakit/ct_figure.hpp"
#include "hagakit/haga_fold.hpp"
#include "hagakit/prng.hpp"
#include "hagakit/svg_render.hpp"

namespace hagakit {

namespace {

/// Accumulates the worst residual of one check.
struct ResidualTracker {
    double worst = 0.0;
    bool ok = true;

    void expect(double residual, double limit) {
        worst = std::max(worst, residual);
        if (!(residual <= limit)) ok = false;
    }

    void expect_true(bool condition) {
        if (!condition) {
            ok = false;
            worst = std::max(worst, 1.0);
        }
    }

    CheckResult result(std::string name, int samples, double tolerance) const {
        return CheckResult{std::move(name), samples, worst, tolerance, ok};
    }
};

struct Sweep {
    const VerifyOptions& opt;
    std::vector<CheckResult> results;

    int scaled(double factor) const {
        return std::max(1, static_cast<int>(opt.samples * factor));
    }

    SplitMix64 rng(std::uint64_t stream) const {
        return SplitMix64(opt.seed * 0x2545F4914F6CDD1DULL + stream);
    }

    double rel_err(double measured, double expected) const {
        const double scale = std::max({std::abs(measured), std::abs(expected), 1e-30});
        return std::abs(measured - expected) / scale;
    }

    /// Corruption hook: nonzero --perturb shifts measured quantities so the
    /// suite demonstrably fails.
    double corrupt(double measured) const { return measured + opt.perturb; }
};

CtFigure perturbed(CtFigure fig, double perturb) {
    fig.gamma.center.x += perturb * std::max(1.0, fig.gamma.radius);
    return fig;
}

// ---------------------------------------------------------------------------
// geometry checks

void check_reflection_involution(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(1);
    for (int i = 0; i < count; ++i) {
        const Point p{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const Point q0{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const Point q1{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        if (distance(q0, q1) < 1e-6) continue;
        const Line m = Line::through(q0, q1);
        const Point back = reflect_point(reflect_point(p, m), m);
        t.expect(s.corrupt(distance(back, p)), s.opt.eps_abs);
    }
    s.results.push_back(t.result("reflection involution", count, s.opt.eps_abs));
}

void check_reflection_isometry(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(2);
    for (int i = 0; i < count; ++i) {
        const Point p{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const Point q{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const Point m0{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const Point m1{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        if (distance(m0, m1) < 1e-6) continue;
        const Line m = Line::through(m0, m1);
        const double before = distance(p, q);
        const double after =
            s.corrupt(distance(reflect_point(p, m), reflect_point(q, m)));
        t.expect(s.rel_err(after, before), s.opt.eps_rel);
    }
    s.results.push_back(t.result("reflection isometry", count, s.opt.eps_rel));
}

void check_tangent_chord_oracle(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(0.5);
    auto rng = s.rng(3);
    for (int i = 0; i < count; ++i) {
        const double r = rng.uniform_half_open(0.0, 10.0);
        const double q = rng.uniform_half_open(0.0, 10.0);
        // Constructive layout: both circles tangent to the x-axis and to each
        // other; the chord is the gap between the tangency abscissas, found
        // by solving |centers| = r + q for the horizontal offset.
        const double sum = r + q;
        const double diff = r - q;
        const double offset = std::sqrt(sum * sum - diff * diff);
        const Circle c1{{0.0, r}, r};
        const Circle c2{{offset, q}, q};
        const Line axis = Line::from_coefficients(0.0, 1.0, 0.0);
        const Point p_contact = axis.project(c1.center);
        const Point q_contact = axis.project(c2.center);
        const double layout = s.corrupt(distance(p_contact, q_contact));
        t.expect(s.rel_err(layout, external_tangent_chord(r, q)), s.opt.eps_rel);
    }
    s.results.push_back(t.result("tangent chord formula vs layout", count, s.opt.eps_rel));
}

void check_equal_tangent_lengths(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(4);
    for (int i = 0; i < count; ++i) {
        const Circle c{{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)},
                       rng.uniform_half_open(0.0, 5.0)};
        const double angle = rng.uniform(0.0, 6.283185307179586);
        const double reach = c.radius * (1.1 + rng.uniform(0.0, 8.0));
        const Point p = c.center + reach * Point{std::cos(angle), std::sin(angle)};
        const auto [c1, c2] = tangent_contacts_from_external_point(p, c);
        t.expect(s.rel_err(s.corrupt(distance(p, c1)), distance(p, c2)),
                 s.opt.eps_rel);
    }
    s.results.push_back(t.result("equal tangent lengths", count, s.opt.eps_rel));
}

void check_internal_tangent_distances(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(5);
    for (int i = 0; i < count; ++i) {
        const double r1 = rng.uniform_half_open(0.0, 5.0);
        const double r2 = rng.uniform_half_open(0.0, 5.0);
        const double angle = rng.uniform(0.0, 6.283185307179586);
        const Circle c1{{rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)}, r1};
        const Circle c2{c1.center + (r1 + r2) * Point{std::cos(angle), std::sin(angle)}, r2};
        const Line tangent = internal_common_tangent_at_contact(c1, c2);
        t.expect(s.rel_err(s.corrupt(std::abs(tangent.signed_distance(c1.center))), r1),
                 s.opt.eps_rel);
        t.expect(s.rel_err(std::abs(tangent.signed_distance(c2.center)), r2),
                 s.opt.eps_rel);
    }
    s.results.push_back(t.result("contact tangent distances", count, s.opt.eps_rel));
}

// ---------------------------------------------------------------------------
// tangent-circle figure checks

void check_ct_parameter_round_trip(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(6);
    for (int i = 0; i < count; ++i) {
        const double n = rng.uniform_half_open(0.0, 50.0);
        const double r = rng.uniform_half_open(0.0, 10.0);
        const CtFigure fig = perturbed(build_ct(r, CtParam::real(n)), s.opt.perturb);
        const double recovered = fig.tau * fig.ak() / (2.0 * r) + 0.5;
        t.expect(s.rel_err(recovered, n), s.opt.eps_rel);
    }
    s.results.push_back(t.result("ct parameter round trip", count, s.opt.eps_rel));
}

void check_ct_tangency_residuals(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(7);
    for (int i = 0; i < count; ++i) {
        const double n = rng.uniform_half_open(0.0, 50.0);
        const double r = rng.uniform_half_open(0.0, 10.0);
        const CtFigure fig = perturbed(build_ct(r, CtParam::real(n)), s.opt.perturb);
        const double scale = std::max(1.0, fig.d1());
        t.expect(tangency_residuals(fig).max() / scale, s.opt.eps_abs);
    }
    // Degenerate figures obey the same incidences.
    for (double size : {0.5, 1.0, 7.5}) {
        t.expect(tangency_residuals(build_ct(size, CtParam::zero_bar())).max(),
                 s.opt.eps_abs);
        t.expect(tangency_residuals(build_ct(size, CtParam::real(0.5))).max(),
                 s.opt.eps_abs);
    }
    s.results.push_back(t.result("ct tangency residuals", count, s.opt.eps_abs));
}

void check_ct_contact_length(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(8);
    for (int i = 0; i < count; ++i) {
        const double n = rng.uniform_half_open(0.0, 50.0);
        const double r = rng.uniform_half_open(0.0, 10.0);
        const CtFigure fig = perturbed(build_ct(r, CtParam::real(n)), s.opt.perturb);
        t.expect(s.rel_err(fig.ak(), ak_length(fig.d1(), fig.d2())), s.opt.eps_rel);
    }
    s.results.push_back(t.result("ct contact length identity", count, s.opt.eps_rel));
}

void check_ct_radius_branches(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(9);
    for (int i = 0; i < count; ++i) {
        const double n = rng.uniform_half_open(0.0, 50.0);
        const double r = rng.uniform_half_open(0.0, 10.0);
        const auto [d1, d2] = radii_from_n(CtParam::real(n), r);
        const RadiusBranch branch = n <= 0.5 ? RadiusBranch::Low : RadiusBranch::High;
        t.expect(s.rel_err(s.corrupt(gamma_radius_from_radii(d1, d2, branch)), r),
                 s.opt.eps_rel);
    }
    // Both branches agree where d2 vanishes.
    const auto [d1, d2] = radii_from_n(CtParam::real(0.5), 1.0);
    t.expect(s.rel_err(gamma_radius_from_radii(d1, d2, RadiusBranch::Low),
                       gamma_radius_from_radii(d1, d2, RadiusBranch::High)),
             s.opt.eps_rel);
    s.results.push_back(t.result("ct radius branch inverses", count, s.opt.eps_rel));
}

void check_ct_division_ratios(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(10);
    for (int i = 0; i < count; ++i) {
        // Cover both sub-cases: gamma's contact on either side of l.
        double n = (i % 2 == 0) ? rng.uniform_half_open(0.0, 0.5)
                                : rng.uniform_half_open(0.5, 50.0);
        if (std::abs(n - 0.5) < 1e-4) n = 0.45;
        const double r = rng.uniform_half_open(0.0, 10.0);
        const CtFigure fig = build_ct(r, CtParam::real(n));
        const TangentFeet feet = internal_tangent_feet(fig);
        const double expected = 1.0 / std::sqrt(2.0 * n);
        t.expect(s.rel_err(s.corrupt(feet.ratio1), expected), s.opt.eps_rel);
        // Internal foot lies between D1 and A.
        t.expect_true(feet.e1.x > 0.0 && feet.e1.x < fig.D1.x);
        if (feet.e2 && feet.ratio2) {
            t.expect(s.rel_err(*feet.ratio2, expected), s.opt.eps_rel);
            // The external foot halves the contact gap on k.
            t.expect(s.rel_err(distance(fig.D2, *feet.e2), distance(*feet.e2, fig.K)),
                     s.opt.eps_rel);
            // External division: A or D2 ends up in the middle depending on
            // the side of l.
            if (n > 0.5) {
                t.expect_true(fig.D2.x > 0.0 && feet.e2->x > fig.D2.x);
            } else {
                t.expect_true(feet.e2->x < 0.0 && fig.D2.x > 0.0);
            }
        }
    }
    s.results.push_back(t.result("ct division ratios", count, s.opt.eps_rel));
}

void check_ct_companion(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(11);
    for (int i = 0; i < count; ++i) {
        const double n = rng.uniform_half_open(0.0, 50.0);
        const double r = rng.uniform_half_open(0.0, 10.0);
        const CtFigure fig = build_ct(r, CtParam::real(n));
        const CompanionPair pair = companion(fig);
        const double scale = std::max(1.0, fig.d1());

        // Involution: the companion's companion restores gamma.
        const CtFigure back = companion(pair.companion).companion;
        const double inv_res =
            std::max(distance(back.gamma.center, fig.gamma.center),
                     std::abs(back.gamma.radius - fig.gamma.radius));
        t.expect(s.corrupt(inv_res) / scale, s.opt.eps_abs);

        // Equal contact distances and the radius sum identity.
        t.expect(s.rel_err(s.corrupt(pair.companion.ak()), fig.ak()), s.opt.eps_rel);
        t.expect(s.rel_err(2.0 * (fig.r() + pair.r_bar()), fig.d1() + fig.d2()),
                 s.opt.eps_rel);

        if (n > 0.0) {
            t.expect(s.rel_err(4.0 * n * pair.companion.n.value(), 1.0), s.opt.eps_rel);
        }
        if (n > 0.5) {
            // Contact points fall in the order K, D2, A, K-bar along k.
            t.expect_true(fig.K.x > fig.D2.x && fig.D2.x > 0.0 &&
                          pair.companion.K.x < 0.0);
        }
    }

    // Degenerate parameters: both sides of 2n = 1/(2 n-bar) evaluate to 0.
    for (const CtFigure& fig :
         {build_ct(1.0, CtParam::real(0.0)), build_ct(1.0, CtParam::zero_bar())}) {
        const CompanionPair pair = companion(fig);
        const double lhs = 2.0 * fig.n.value();
        const double rhs = safe_div(1.0, 2.0 * pair.companion.n.value());
        t.expect(std::abs(lhs - rhs), s.opt.eps_abs);
        t.expect(std::abs(lhs), s.opt.eps_abs);
        t.expect(s.rel_err(2.0 * (fig.r() + pair.r_bar()), fig.d1() + fig.d2()),
                 s.opt.eps_rel);
        t.expect(s.rel_err(pair.companion.ak(), fig.ak()), s.opt.eps_rel);
    }
    // The half-parameter figure is its own companion.
    const CtFigure half = build_ct(1.0, CtParam::real(0.5));
    const CompanionPair half_pair = companion(half);
    t.expect(distance(half_pair.gamma_bar().center, half.gamma.center), s.opt.eps_abs);
    s.results.push_back(t.result("ct companion identities", count, s.opt.eps_rel));
}

// ---------------------------------------------------------------------------
// fold checks

void check_fold_isometry(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(12);
    for (int i = 0; i < count; ++i) {
        const double d = rng.uniform_half_open(0.0, 10.0);
        const double e = rng.uniform(-10.0 * d, 10.0 * d);
        const HagaFigure fig = fold_from_e(d, e);
        const double scale = std::max(1.0, d);
        t.expect(s.corrupt(std::abs(distance(fig.G, fig.E) - d)), s.opt.eps_abs * scale);
        t.expect(distance(reflect_point(fig.C, fig.m), fig.E), s.opt.eps_abs * scale);
    }
    s.results.push_back(t.result("fold isometry", count, s.opt.eps_abs));
}

void check_fold_midpoint_law(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(13);
    for (int i = 0; i < count; ++i) {
        const double d = rng.uniform_half_open(0.0, 10.0);
        const double e = rng.uniform(-10.0 * d, 10.0 * d);
        const HagaFigure fig = fold_from_e(d, e);
        t.expect(s.corrupt(distance(fig.E, midpoint(fig.D, fig.K))),
                 s.opt.eps_abs * std::max(1.0, d));
    }
    s.results.push_back(t.result("fold midpoint law", count, s.opt.eps_abs));
}

void check_fold_monotonicity(Sweep& s) {
    ResidualTracker t;
    const int grid = std::max(2, s.scaled(0.05));
    const double d = 1.0;
    // Sample each real-parameter interval in the direction D -> A (e
    // decreasing); n must strictly decrease.
    const auto sweep_interval = [&](double hi, double lo) {
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 0; i < grid; ++i) {
            const double e = hi + (lo - hi) * i / (grid - 1.0);
            const HagaFigure fig = fold_from_e(d, e);
            t.expect_true(fig.n.value() < prev);
            prev = fig.n.value();
        }
    };
    sweep_interval(10.0, 2.01);     // above the doubled side
    sweep_interval(1.99, 1.01);     // between D and its double
    sweep_interval(0.999, 0.001);   // E inside the side
    sweep_interval(-0.001, -10.0);  // E below A
    s.results.push_back(t.result("fold parameter monotonicity", 4 * grid, 0.0));
}

void check_fold_round_trip(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(14);
    for (int i = 0; i < count; ++i) {
        const double d = rng.uniform_half_open(0.0, 10.0);
        const double e = rng.uniform(-10.0 * d, 10.0 * d);
        const HagaFigure fig = fold_from_e(d, e);
        const double recovered = s.corrupt(e_from_n(d, fig.n));
        t.expect(std::abs(recovered - e) / std::max(d, std::abs(e)), s.opt.eps_rel);
    }
    // The degenerate fold round-trips through the sentinel.
    const HagaFigure at_d = fold_from_e(1.0, 1.0);
    t.expect_true(at_d.n.is_zero_bar());
    t.expect(std::abs(e_from_n(1.0, at_d.n) - 1.0), s.opt.eps_abs);
    s.results.push_back(t.result("fold round trip", count, s.opt.eps_rel));
}

void check_fold_unattained_value(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(15);
    for (int i = 0; i < count; ++i) {
        const double e = rng.uniform(-10.0, 10.0);
        const HagaFigure fig = fold_from_e(1.0, e);
        if (fig.n.is_real()) {
            t.expect_true(std::abs(fig.n.value() + 0.5) > 1e-6);
        }
    }
    // The parameter approaches -1/2 from both sides as the circle grows.
    double prev_above = 1.0, prev_below = 1.0;
    for (double ratio : {1e2, 1e4, 1e6}) {
        const double root = std::sqrt(ratio);
        const HagaFigure upper = fold_from_e(1.0, 1.0 + root);  // fold target far above D
        const HagaFigure lower = fold_from_e(1.0, 1.0 - root);  // fold target far below A
        const double gap_below = -0.5 - upper.n.value();
        const double gap_above = lower.n.value() + 0.5;
        t.expect_true(gap_below > 0.0 && gap_below < prev_below);
        t.expect_true(gap_above > 0.0 && gap_above < prev_above);
        prev_below = gap_below;
        prev_above = gap_above;
    }
    s.results.push_back(t.result("fold unattained parameter", count, 1e-6));
}

void check_fold_negative_ranges(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(16);
    for (int i = 0; i < count; ++i) {
        const double d = rng.uniform_half_open(0.0, 10.0);
        const double e = rng.uniform(1.0001 * d, 10.0 * d);
        const HagaFigure fig = fold_from_e(d, e);
        const double n = fig.n.value();
        if (e < 2.0 * d) {
            t.expect_true(n < -2.0);
        } else if (e > 2.0 * d) {
            t.expect_true(n > -2.0 && n < -0.5);
        }
    }
    const HagaFigure doubled = fold_from_e(1.0, 2.0);
    t.expect(s.corrupt(std::abs(doubled.n.value() + 2.0)), s.opt.eps_abs);
    t.expect_true(distance(doubled.D, midpoint(doubled.E, doubled.A)) <= s.opt.eps_abs);
    s.results.push_back(t.result("fold negative ranges", count, s.opt.eps_abs));
}

void check_fold_parameter_definitions(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(1.0);
    auto rng = s.rng(17);
    for (int i = 0; i < count; ++i) {
        const double d = rng.uniform_half_open(0.0, 10.0);
        double e;
        double expected;
        const int branch = i % 3;
        if (branch == 0) {
            // Fold target beyond D: n = -(d + 2*sqrt(d*r))/(2r) - 1/2.
            e = rng.uniform(1.001 * d, 10.0 * d);
            const double r = (d - e) * (d - e) / d;
            expected = -(d + 2.0 * std::sqrt(d * r)) / (2.0 * r) - 0.5;
        } else if (branch == 1) {
            // Fold target below A: n = (2*sqrt(d*r) - d)/(2r) - 1/2.
            e = rng.uniform(-10.0 * d, -0.001 * d);
            const double r = (d - e) * (d - e) / d;
            expected = (2.0 * std::sqrt(d * r) - d) / (2.0 * r) - 0.5;
        } else {
            e = rng.uniform(0.001 * d, 0.999 * d);
            expected = e * e / (2.0 * (d - e) * (d - e));
        }
        const HagaFigure fig = fold_from_e(d, e);
        t.expect(s.rel_err(s.corrupt(fig.n.value()), expected), s.opt.eps_rel);
    }
    s.results.push_back(t.result("fold parameter definitions agree", count, s.opt.eps_rel));
}

/// Independent route: clip the crease to the open square as a parametric
/// interval and ask for positive length.
bool crease_interior_clip_oracle(const HagaFigure& fig) {
    const Point origin = fig.m.project({0.5 * fig.d, 0.5 * fig.d});
    const Point dir = fig.m.direction();
    double t0 = -std::numeric_limits<double>::infinity();
    double t1 = std::numeric_limits<double>::infinity();
    const auto narrow = [&](double base, double step, double lo, double hi) {
        if (std::abs(step) < 1e-300) {
            return base > lo && base < hi;
        }
        double ta = (lo - base) / step;
        double tb = (hi - base) / step;
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        return true;
    };
    if (!narrow(origin.x, dir.x, 0.0, fig.d)) return false;
    if (!narrow(origin.y, dir.y, 0.0, fig.d)) return false;
    return t1 - t0 > 1e-12 * fig.d;
}

void check_crease_interior_oracle(Sweep& s) {
    ResidualTracker t;
    const int count = s.scaled(10.0);
    auto rng = s.rng(18);
    int mismatches = 0;
    for (int i = 0; i < count; ++i) {
        const double e = rng.uniform(-10.0, 10.0);
        const HagaFigure fig = fold_from_e(1.0, e);
        if (crease_passes_interior(fig) != crease_interior_clip_oracle(fig)) {
            ++mismatches;
        }
    }
    t.expect(static_cast<double>(mismatches), 0.5);
    s.results.push_back(t.result("crease interior vs clip oracle", count, 0.5));
}

// ---------------------------------------------------------------------------
// rendering checks

void check_render_determinism(Sweep& s) {
    ResidualTracker t;
    const RenderStyle style;
    const CtFigure ct = build_ct(1.0, CtParam::real(2.0));
    t.expect_true(render_ct(ct, style, true).to_string() ==
                  render_ct(ct, style, true).to_string());
    const HagaFigure haga = fold_from_e(1.0, 0.25);
    t.expect_true(render_haga(haga, style).to_string() ==
                  render_haga(haga, style).to_string());
    s.results.push_back(t.result("render determinism", 2, 0.0));
}

struct ParsedCircle {
    double cx, cy, r;
};

std::vector<ParsedCircle> parse_svg_circles(const std::string& svg) {
    std::vector<ParsedCircle> out;
    std::size_t pos = 0;
    const auto attr = [&](std::size_t from, const char* name) {
        const std::size_t at = svg.find(std::string(name) + "=\"", from);
        return std::strtod(svg.c_str() + at + std::string(name).size() + 2, nullptr);
    };
    while ((pos = svg.find("<circle ", pos)) != std::string::npos) {
        out.push_back({attr(pos, "cx"), attr(pos, "cy"), attr(pos, "r")});
        ++pos;
    }
    return out;
}

void check_render_fidelity(Sweep& s) {
    ResidualTracker t;
    const RenderStyle style;
    const double size = 1.0;
    const CtFigure fig = build_ct(size, CtParam::zero_bar());
    const std::string svg = render_ct(fig, style, false).to_string();
    const std::vector<ParsedCircle> circles = parse_svg_circles(svg);

    // Re-derive the documented transform: margins, centered uniform scale,
    // y flip. This figure's world box is [0, 2*size] x [0, 2*size].
    const double avail_w = style.width - 2.0 * style.margin;
    const double avail_h = style.height - 2.0 * style.margin;
    const double scale = std::min(avail_w, avail_h) / (2.0 * size);
    const double ox = style.margin + 0.5 * (avail_w - 2.0 * size * scale);
    const double oy = style.margin + 0.5 * (avail_h - 2.0 * size * scale);
    const auto map_x = [&](double x) { return ox + x * scale; };
    const auto map_y = [&](double y) { return style.height - (oy + y * scale); };

    t.expect_true(circles.size() == 2);
    if (circles.size() == 2) {
        // Emission order: the degenerate gamma dot, then the delta outline.
        t.expect(s.corrupt(std::abs(circles[0].cx - map_x(size))), 1e-6);
        t.expect(std::abs(circles[0].cy - map_y(0.0)), 1e-6);
        t.expect(std::abs(circles[1].cx - map_x(size)), 1e-6);
        t.expect(std::abs(circles[1].cy - map_y(size)), 1e-6);
        t.expect(std::abs(circles[1].r - size * scale), 1e-6);
    }
    s.results.push_back(t.result("render geometry fidelity", 2, 1e-6));
}

void check_render_element_counts(Sweep& s) {
    ResidualTracker t;
    const RenderStyle style;

    const SvgDocument half = render_ct(build_ct(1.0, CtParam::real(0.5)), style, false);
    t.expect_true(half.lines.size() == 2 && half.circle_count() == 2 &&
                  half.dot_count() == 1);

    CtRenderOptions chain_options;
    chain_options.chain = toyoyoshi_chain(4, 1.0).circles;
    const SvgDocument chained =
        render_ct(build_ct(1.0, CtParam::real(4.0)), style, chain_options);
    t.expect_true(chained.circle_count() == 6 && chained.dot_count() == 0);

    const SvgDocument degenerate =
        render_ct(build_ct(1.0, CtParam::zero_bar()), style, false);
    t.expect_true(degenerate.lines.size() == 2 && degenerate.circle_count() == 1 &&
                  degenerate.dot_count() == 1);

    const SvgDocument fold = render_haga(fold_from_e(1.0, 0.5), style);
    t.expect_true(fold.lines.size() == 5 && fold.circle_count() == 2 &&
                  fold.dot_count() == 0);

    const SvgDocument fold_bar = render_haga(fold_from_e(1.0, 1.0), style);
    t.expect_true(fold_bar.circle_count() == 1 && fold_bar.dot_count() == 1);
    s.results.push_back(t.result("render element counts", 5, 0.0));
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    Sweep sweep{options, {}};
    check_reflection_involution(sweep);
    check_reflection_isometry(sweep);
    check_tangent_chord_oracle(sweep);
    check_equal_tangent_lengths(sweep);
    check_internal_tangent_distances(sweep);
    check_ct_parameter_round_trip(sweep);
    check_ct_tangency_residuals(sweep);
    check_ct_contact_length(sweep);
    check_ct_radius_branches(sweep);
    check_ct_division_ratios(sweep);
    check_ct_companion(sweep);
    check_fold_isometry(sweep);
    check_fold_midpoint_law(sweep);
    check_fold_monotonicity(sweep);
    check_fold_round_trip(sweep);
    check_fold_unattained_value(sweep);
    check_fold_negative_ranges(sweep);
    check_fold_parameter_definitions(sweep);
    check_crease_interior_oracle(sweep);
    check_render_determinism(sweep);
    check_render_fidelity(sweep);
    check_render_element_counts(sweep);
    return sweep.results;
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

}  // namespace hagakit
