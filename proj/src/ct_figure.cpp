#include "hagakit/ct_figure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hagakit {

namespace {

double line_circle_residual(const Line& line, const Circle& c) {
    return std::abs(std::abs(line.signed_distance(c.center)) - c.radius);
}

double external_tangency_residual(const Circle& a, const Circle& b) {
    return std::abs(distance(a.center, b.center) - (a.radius + b.radius));
}

const Line kAxisX = Line::from_coefficients(0.0, 1.0, 0.0);
const Line kAxisY = Line::from_coefficients(1.0, 0.0, 0.0);

}  // namespace

CtParam CtParam::real(double value) {
    if (!std::isfinite(value) || value < 0.0) {
        throw std::domain_error("CtParam: real parameter must be finite and >= 0");
    }
    return CtParam(value, false);
}

CtParam CtParam::zero_bar() { return CtParam(0.0, true); }

double CtResiduals::max() const {
    return std::max({gamma_k, gamma_delta1, gamma_delta2, delta1_k, delta1_l,
                     delta2_k, delta2_l});
}

std::pair<double, double> radii_from_n(const CtParam& n, double r) {
    if (n.is_zero_bar()) {
        throw std::domain_error("radii_from_n: not defined for the zero-bar parameter");
    }
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::domain_error("radii_from_n: r must be positive");
    }
    const double s = std::sqrt(2.0 * n.value());
    return {(s + 1.0) * (s + 1.0) * r, (s - 1.0) * (s - 1.0) * r};
}

CtFigure build_ct(double size, const CtParam& n) {
    if (!(size > 0.0) || !std::isfinite(size)) {
        throw std::domain_error("build_ct: size must be positive");
    }

    CtFigure fig;
    fig.A = {0.0, 0.0};
    fig.k = kAxisX;
    fig.l = kAxisY;
    fig.n = n;

    if (n.is_zero_bar()) {
        // gamma is the point K = (|AK|, 0); both deltas coincide and touch k
        // there, which forces d1 = d2 = |AK|.
        const double a = size;
        fig.gamma = Circle{{a, 0.0}, 0.0};
        fig.K = {a, 0.0};
        fig.delta1 = Circle{{a, a}, a};
        fig.delta2 = fig.delta1;
        fig.D1 = {a, 0.0};
        fig.D2 = fig.D1;
        fig.tau = 1;
        return fig;
    }

    const double r = size;
    const double nv = n.value();
    const auto [d1, d2] = radii_from_n(n, r);
    const double kx = (2.0 * nv - 1.0) * r;  // tau * |AK|

    fig.gamma = Circle{{kx, r}, r};
    fig.K = {kx, 0.0};
    fig.delta1 = Circle{{d1, d1}, d1};
    fig.D1 = {d1, 0.0};
    if (d2 == 0.0) {
        // n = 1/2: delta2 is the point A.
        fig.delta2 = Circle{{0.0, 0.0}, 0.0};
        fig.D2 = {0.0, 0.0};
    } else {
        fig.delta2 = Circle{{d2, d2}, d2};
        fig.D2 = {d2, 0.0};
    }
    fig.tau = (2.0 * nv - 1.0) >= 0.0 ? 1 : -1;  // +1 at the indeterminate n = 1/2
    return fig;
}

double ak_length(double d1, double d2) {
    if (d1 < 0.0 || d2 < 0.0) {
        throw std::domain_error("ak_length: radii must be nonnegative");
    }
    return std::sqrt(d1 * d2);
}

double gamma_radius_from_radii(double d1, double d2, RadiusBranch branch) {
    if (d2 < 0.0 || d2 > d1) {
        throw std::domain_error("gamma_radius_from_radii: need 0 <= d2 <= d1");
    }
    const double s1 = std::sqrt(d1);
    const double s2 = std::sqrt(d2);
    const double sr = branch == RadiusBranch::Low ? 0.5 * (s1 + s2) : 0.5 * (s1 - s2);
    return sr * sr;
}

TangentFeet internal_tangent_feet(const CtFigure& fig) {
    if (fig.n.is_zero_bar() || fig.n.value() == 0.0) {
        throw std::domain_error("internal_tangent_feet: n must not be 0 or zero-bar");
    }

    TangentFeet feet;
    const Line t1 = internal_common_tangent_at_contact(fig.delta1, fig.gamma);
    const auto e1 = line_line_intersection(t1, fig.k);
    if (!e1) {
        throw std::runtime_error("internal_tangent_feet: tangent parallel to k");
    }
    feet.e1 = *e1;
    feet.ratio1 = distance(fig.D1, feet.e1) / distance(fig.A, feet.e1);

    if (fig.delta2.radius > 0.0) {
        const Line t2 = internal_common_tangent_at_contact(fig.delta2, fig.gamma);
        if (const auto e2 = line_line_intersection(t2, fig.k)) {
            feet.e2 = *e2;
            feet.ratio2 = distance(fig.D2, *e2) / distance(fig.A, *e2);
        }
    }
    return feet;
}

CompanionPair companion(const CtFigure& fig) {
    CompanionPair pair;
    pair.base = fig;

    CtFigure& comp = pair.companion;
    comp = fig;  // shares A, k, l, delta1, delta2, D1, D2 exactly

    if (fig.n.is_zero_bar()) {
        // Companion of the degenerate figure: the reflection of delta1 in l.
        const double d = fig.d1();
        comp.gamma = Circle{{-d, d}, d};
        comp.K = {-d, 0.0};
        comp.tau = -1;
        comp.n = CtParam::real(0.0);
        return pair;
    }

    const double nv = fig.n.value();
    if (nv == 0.0) {
        // Companion degenerates to the point D1.
        comp.gamma = Circle{fig.D1, 0.0};
        comp.K = fig.D1;
        comp.tau = 1;
        comp.n = CtParam::zero_bar();
        return pair;
    }

    // Proper case: the circles touching k from above and both deltas
    // externally have radii (sqrt(d1) +/- sqrt(d2))^2 / 4 and contact
    // abscissa (d1 + d2)/2 - 2*rho; the companion takes the root the base
    // figure does not occupy.
    const double d1 = fig.d1();
    const double d2 = fig.d2();
    const double s1 = std::sqrt(d1);
    const double s2 = std::sqrt(d2);
    const double lo = 0.25 * (s1 - s2) * (s1 - s2);
    const double hi = 0.25 * (s1 + s2) * (s1 + s2);
    const double r = fig.r();
    const double r_bar = std::abs(r - lo) <= std::abs(r - hi) ? hi : lo;
    const double kx_bar = 0.5 * (d1 + d2) - 2.0 * r_bar;

    comp.gamma = Circle{{kx_bar, r_bar}, r_bar};
    comp.K = {kx_bar, 0.0};
    comp.tau = kx_bar >= 0.0 ? 1 : -1;
    comp.n = CtParam::real(safe_div(1.0, 4.0 * nv));
    return pair;
}

double safe_div(double a, double b) { return b == 0.0 ? 0.0 : a / b; }

ChainResult toyoyoshi_chain(int count, double r) {
    if (count < 1) {
        throw std::domain_error("toyoyoshi_chain: need at least one circle");
    }
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::domain_error("toyoyoshi_chain: r must be positive");
    }
    ChainResult result;
    result.circles.reserve(static_cast<std::size_t>(count));
    // First circle is gamma of CT(count); each next one steps 2r toward l, so
    // the last ends up tangent to l and the row closes against delta1.
    for (int i = 1; i <= count; ++i) {
        const double cx = (2.0 * count - 2.0 * i + 1.0) * r;
        result.circles.push_back(Circle{{cx, r}, r});
    }
    const double s = std::sqrt(2.0 * count);
    result.d1 = (s + 1.0) * (s + 1.0) * r;
    return result;
}

double solve_problem_1_2(double d) {
    if (!(d > 0.0)) {
        throw std::domain_error("solve_problem_1_2: d must be positive");
    }
    return d / 9.0;
}

RefutationReport refute_problem_3(double d) {
    if (!(d > 0.0)) {
        throw std::domain_error("refute_problem_3: d must be positive");
    }
    // d = 2*sqrt(r*d) + sqrt(2)*r + r, a quadratic in v = sqrt(d/r):
    // v^2 - 2v - (1 + sqrt(2)) = 0.
    const double v = 1.0 + std::sqrt(2.0 + std::sqrt(2.0));
    RefutationReport report;
    report.ratio = v * v;
    report.claimed = 9.0;
    report.consistent = false;
    return report;
}

CtResiduals tangency_residuals(const CtFigure& fig) {
    CtResiduals res;
    res.gamma_k = line_circle_residual(fig.k, fig.gamma);
    res.gamma_delta1 = external_tangency_residual(fig.gamma, fig.delta1);
    res.gamma_delta2 = external_tangency_residual(fig.gamma, fig.delta2);
    res.delta1_k = line_circle_residual(fig.k, fig.delta1);
    res.delta1_l = line_circle_residual(fig.l, fig.delta1);
    res.delta2_k = line_circle_residual(fig.k, fig.delta2);
    res.delta2_l = line_circle_residual(fig.l, fig.delta2);
    return res;
}

}  // namespace hagakit
