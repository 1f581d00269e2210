#include "hagakit/haga_fold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hagakit {

const double kRho = (1.0 + std::sqrt(2.0)) * (1.0 + std::sqrt(2.0));
const double kRhoInverse = 3.0 - 2.0 * std::sqrt(2.0);

HagaParam HagaParam::real(double value) {
    if (!std::isfinite(value)) {
        throw std::domain_error("HagaParam: parameter must be finite");
    }
    return HagaParam(value, false);
}

HagaParam HagaParam::zero_bar() { return HagaParam(0.0, true); }

const char* to_string(HagaCase c) {
    switch (c) {
        case HagaCase::H1: return "h1";
        case HagaCase::H2: return "h2";
        case HagaCase::H3: return "h3";
        case HagaCase::H4: return "h4";
        case HagaCase::H5: return "h5";
        case HagaCase::H6: return "h6";
        case HagaCase::H7: return "h7";
    }
    return "?";
}

bool CheckReport::all_pass() const {
    for (const auto& item : items) {
        if (!item.pass) return false;
    }
    return true;
}

namespace {

HagaCase classify_from_param(const HagaParam& n, const Tolerance& tol) {
    if (n.is_zero_bar()) return HagaCase::H4;
    const double v = n.value();
    // Equality cases win over the surrounding intervals.
    if (std::abs(v) <= tol.eps_abs) return HagaCase::H6;
    if (std::abs(v + 2.0) <= tol.eps_abs) return HagaCase::H2;
    if (v > 0.0) return HagaCase::H5;
    if (v > -0.5) return HagaCase::H7;
    if (v > -2.0) return HagaCase::H1;
    return HagaCase::H3;
}

void require_side(double d) {
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw std::domain_error("square side must be positive");
    }
}

}  // namespace

GammaContact gamma_from_e(double d, double e) {
    require_side(d);
    if (!std::isfinite(e)) {
        throw std::domain_error("gamma_from_e: e must be finite");
    }
    if (e == d) {
        throw std::domain_error("gamma_from_e: e = d degenerates to the point D");
    }
    // Equal tangent lengths from E force E to be the midpoint of D and K,
    // so |DK| = 2*|d - e| = 2*sqrt(d*r).
    const double r = (d - e) * (d - e) / d;
    GammaContact out;
    out.K = {0.0, 2.0 * e - d};
    out.gamma = Circle{{r, 2.0 * e - d}, r};
    const Point c{d, d};
    const double t = d / (d + r);
    out.T = {c.x + t * (out.gamma.center.x - c.x), c.y + t * (out.gamma.center.y - c.y)};
    return out;
}

HagaParam n_from_gamma(double d, const Circle& gamma, Point K, Point T,
                       const Tolerance& tol) {
    require_side(d);
    if (!(gamma.radius > 0.0)) {
        throw std::domain_error("n_from_gamma: gamma must be a proper circle");
    }
    // tau * |AK| is just the signed coordinate of K along DA.
    const double magnitude = K.y / (2.0 * gamma.radius) + 0.5;
    const Point b{d, 0.0};
    if (tol.near(distance(T, b), 0.0, d)) {
        return HagaParam::real(0.0);
    }
    const bool outside = T.x < 0.0 || T.x > d || T.y < 0.0 || T.y > d;
    return HagaParam::real(outside ? -magnitude : magnitude);
}

double e_from_n(double d, const HagaParam& n) {
    require_side(d);
    if (n.is_zero_bar()) return d;
    const double v = n.value();
    if (v == -0.5) {
        throw std::domain_error(
            "e_from_n: n = -1/2 is unattained (no fold produces it)");
    }
    if (v >= 0.0) {
        const double s = std::sqrt(2.0 * v);
        return s * d / (1.0 + s);
    }
    // Negative parameters: e = s*d/(s-1) lands above D for s > 1 (n < -1/2)
    // and below A for s < 1 (-1/2 < n < 0).
    const double s = std::sqrt(-2.0 * v);
    return s * d / (s - 1.0);
}

HagaCase classify_case(const HagaFigure& fig, const Tolerance& tol) {
    return classify_from_param(fig.n, tol);
}

bool crease_passes_interior(const HagaFigure& fig, const Tolerance& tol) {
    // A line meets the open square iff some corners lie strictly on both
    // sides of it. Corners within the tolerance band count as on the line.
    const double band = std::max(tol.eps_abs, tol.eps_rel * fig.d);
    bool above = false, below = false;
    for (const Point& corner : {fig.A, fig.B, fig.C, fig.D}) {
        const double sd = fig.m.signed_distance(corner);
        if (sd > band) above = true;
        if (sd < -band) below = true;
    }
    return above && below;
}

HagaFigure fold_from_e(double d, double e) {
    require_side(d);
    if (!std::isfinite(e)) {
        throw std::domain_error("fold_from_e: e must be finite");
    }

    HagaFigure fig;
    fig.d = d;
    fig.A = {0.0, 0.0};
    fig.B = {d, 0.0};
    fig.C = {d, d};
    fig.D = {0.0, d};
    fig.e = e;
    fig.E = {0.0, e};
    fig.delta = Circle{fig.C, d};

    fig.m = perpendicular_bisector(fig.C, fig.E);
    fig.G = reflect_point(fig.B, fig.m);

    if (e == d) {
        fig.gamma = Circle{fig.D, 0.0};
        fig.K = fig.D;
        fig.n = HagaParam::zero_bar();
        // F is left undefined for the E = D fold.
    } else {
        const GammaContact contact = gamma_from_e(d, e);
        fig.gamma = contact.gamma;
        fig.K = contact.K;
        fig.T = contact.T;
        fig.n = n_from_gamma(d, fig.gamma, fig.K, contact.T);
        if (e == 0.0) {
            fig.F = fig.B;
        } else {
            const Line ab = Line::from_coefficients(0.0, 1.0, 0.0);
            fig.F = line_line_intersection(Line::through(fig.E, fig.G), ab);
        }
    }

    fig.case_label = classify_from_param(fig.n, Tolerance{});
    fig.crease_interior = crease_passes_interior(fig);
    return fig;
}

CheckReport haga_first_check(double d, const Tolerance& tol) {
    require_side(d);
    const HagaFigure fig = fold_from_e(d, 0.5 * d);
    CheckReport report;
    const double scale = d;

    const double f_res = fig.F ? std::abs(fig.F->x - 2.0 * d / 3.0)
                               : std::numeric_limits<double>::infinity();
    report.items.push_back({"F divides AB in the ratio 2:1",
                            fig.F && tol.near(f_res, 0.0, scale), f_res});

    const double ratio_res =
        fig.F ? std::abs(distance(fig.A, *fig.F) - 2.0 * distance(*fig.F, fig.B))
              : std::numeric_limits<double>::infinity();
    report.items.push_back({"|AF| = 2 |FB|",
                            fig.F && tol.near(ratio_res, 0.0, scale), ratio_res});

    const double n_res = fig.n.is_real() ? std::abs(fig.n.value() - 0.5) : 1.0;
    report.items.push_back({"n = 1/2", fig.n.is_real() && tol.near(n_res, 0.0, 1.0), n_res});

    const double r_res = std::abs(d - 4.0 * fig.gamma.radius);
    report.items.push_back({"d = 4r", tol.near(r_res, 0.0, scale), r_res});
    return report;
}

CheckReport haga_third_check(double d, const Tolerance& tol) {
    require_side(d);
    CheckReport report;
    const double scale = d;

    // Solve for the fold whose F is the midpoint of AB; F.x is monotone
    // decreasing in e on (0, d), so bisection is safe.
    double lo = 0.05 * d, hi = 0.95 * d;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const HagaFigure fig = fold_from_e(d, mid);
        if (!fig.F) {
            throw std::runtime_error("haga_third_check: fold lost its F point");
        }
        (fig.F->x > 0.5 * d ? lo : hi) = mid;
    }
    const double e_solved = 0.5 * (lo + hi);
    const HagaFigure fig = fold_from_e(d, e_solved);

    const double e_res = std::abs(e_solved - 2.0 * d / 3.0);
    report.items.push_back({"E divides DA in the ratio 1:2", tol.near(e_res, 0.0, scale), e_res});

    const double n_res = fig.n.is_real() ? std::abs(fig.n.value() - 2.0) : 4.0;
    report.items.push_back({"n = 2", fig.n.is_real() && tol.near(n_res, 0.0, 1.0), n_res});

    const double k_res = std::abs(fig.K.y - d / 3.0);
    const double trisect_res =
        std::max({std::abs(distance(fig.D, fig.E) - d / 3.0),
                  std::abs(distance(fig.E, fig.K) - d / 3.0),
                  std::abs(distance(fig.K, fig.A) - d / 3.0)});
    report.items.push_back({"E and K trisect DA",
                            tol.near(k_res, 0.0, scale) && tol.near(trisect_res, 0.0, scale),
                            std::max(k_res, trisect_res)});

    // The other circle touching DA and delta in this configuration has
    // parameter 1/8; fetch it through the fold correspondence and through the
    // companion construction of the equivalent tangent-circle figure (the
    // frames differ by swapping coordinates) and require they agree.
    const GammaContact bar = gamma_from_e(d, e_from_n(d, HagaParam::real(0.125)));
    const HagaParam n_bar = n_from_gamma(d, bar.gamma, bar.K, bar.T);
    const double nbar_res = n_bar.is_real() ? std::abs(n_bar.value() - 0.125) : 1.0;
    report.items.push_back({"companion parameter is 1/8",
                            n_bar.is_real() && tol.near(nbar_res, 0.0, 1.0), nbar_res});

    const CompanionPair ct_pair =
        companion(build_ct(fig.gamma.radius, CtParam::real(2.0)));
    const Circle swapped{{ct_pair.gamma_bar().center.y, ct_pair.gamma_bar().center.x},
                         ct_pair.gamma_bar().radius};
    const double comp_res =
        std::max(distance(swapped.center, bar.gamma.center),
                 std::abs(swapped.radius - bar.gamma.radius));
    report.items.push_back({"companion circle matches the tangent-circle construction",
                            tol.near(comp_res, 0.0, scale), comp_res});

    const Line tangent = internal_common_tangent_at_contact(bar.gamma, fig.delta);
    const Line da = Line::from_coefficients(1.0, 0.0, 0.0);
    const auto foot = line_line_intersection(tangent, da);
    const double foot_res = foot ? distance(*foot, fig.K)
                                 : std::numeric_limits<double>::infinity();
    report.items.push_back({"internal common tangent meets DA at K",
                            foot && tol.near(foot_res, 0.0, scale), foot_res});
    return report;
}

}  // namespace hagakit
