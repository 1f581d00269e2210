#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hagakit/geometry.hpp"

namespace hagakit {

/// Parameter of a CT figure: a nonnegative real n, or the sentinel "zero-bar"
/// marking the degenerate figure whose inner circle is a point K != A on k.
/// The sentinel's numeric value is defined to be 0, but it is distinct from
/// the real parameter 0.
class CtParam {
public:
    static CtParam real(double value);
    static CtParam zero_bar();

    bool is_zero_bar() const { return zero_bar_; }
    bool is_real() const { return !zero_bar_; }
    /// Numeric value; 0 for zero-bar.
    double value() const { return zero_bar_ ? 0.0 : value_; }

private:
    CtParam(double value, bool zero_bar) : value_(value), zero_bar_(zero_bar) {}
    double value_;
    bool zero_bar_;
};

/// Which root of the two-valued inverse (d1, d2) -> r to take. The pair of
/// radii alone cannot tell a figure from its companion, so the caller states
/// the branch explicitly.
enum class RadiusBranch {
    Low,   // 0 <= n <= 1/2:        sqrt(r) = (sqrt(d1) + sqrt(d2)) / 2
    High,  // n > 1/2 or zero-bar:  sqrt(r) = (sqrt(d1) - sqrt(d2)) / 2
};

/// The tangent-circle figure CT(n).
///
/// Canonical frame: A = (0,0), k = x-axis, l = y-axis. gamma and both deltas
/// touch k from above; the deltas touch l from the x > 0 side, so
/// center(delta_i) = (d_i, d_i) and center(gamma) = ((2n-1)*r, r).
///
/// The parameter satisfies n = tau*|AK|/(2r) + 1/2 (for proper gamma), where
/// K is the contact of gamma with k and tau = +1 iff K and delta1 lie on the
/// same side of l (tau := +1 when K = A).
struct CtFigure {
    Point A;
    Line k;
    Line l;
    Circle gamma;   // point-circle for zero-bar
    Point K;        // contact of gamma and k
    Circle delta1;  // radius d1
    Circle delta2;  // radius d2 <= d1; point-circle at A when n = 1/2
    Point D1;       // contact of delta1 and k
    Point D2;       // contact of delta2 and k
    int tau = 1;    // +1 or -1
    CtParam n = CtParam::real(0.0);

    double r() const { return gamma.radius; }
    double d1() const { return delta1.radius; }
    double d2() const { return delta2.radius; }
    double ak() const { return distance(A, K); }
};

/// Signed tangency defects of all incidences a CT figure asserts. Each value
/// is |measured - required|; a perfectly built figure has all zeros.
struct CtResiduals {
    double gamma_k = 0.0;
    double gamma_delta1 = 0.0;
    double gamma_delta2 = 0.0;
    double delta1_k = 0.0;
    double delta1_l = 0.0;
    double delta2_k = 0.0;
    double delta2_l = 0.0;

    double max() const;
};

/// Feet of the internal common tangents of (delta_i, gamma) on k, together
/// with the measured division ratios |D_i E_i| / |A E_i| (each expected to be
/// 1/sqrt(2n): internal division of D1 A, external division of D2 A).
/// e2 is absent when n = 1/2 (delta2 degenerates to a point).
struct TangentFeet {
    Point e1;
    double ratio1 = 0.0;
    std::optional<Point> e2;
    std::optional<double> ratio2;
};

/// A figure together with its companion: the figure on the same delta1,
/// delta2, k, l whose circle is the other circle touching k and both deltas
/// externally. Parameters satisfy 2n = 1/(2 n-bar) under safe_div.
struct CompanionPair {
    CtFigure base;
    CtFigure companion;

    const Circle& gamma_bar() const { return companion.gamma; }
    const Point& k_bar() const { return companion.K; }
    double r_bar() const { return companion.gamma.radius; }
};

/// d1 = (sqrt(2n)+1)^2 * r, d2 = (sqrt(2n)-1)^2 * r. Requires r > 0 and a
/// real parameter; the zero-bar figure is not covered by the formula.
std::pair<double, double> radii_from_n(const CtParam& n, double r);

/// Construct CT(n) in the canonical frame. For real n, `size` is the radius
/// of gamma (must be > 0). For zero-bar, gamma is a point and `size` is the
/// placement length |AK| > 0 instead.
CtFigure build_ct(double size, const CtParam& n);

/// |AK| = sqrt(d1*d2).
double ak_length(double d1, double d2);

/// Recover r from the delta radii on the stated branch. Requires 0 <= d2 <= d1.
double gamma_radius_from_radii(double d1, double d2, RadiusBranch branch);

/// Requires n not in {0, zero-bar}.
TangentFeet internal_tangent_feet(const CtFigure& fig);

/// Companion figure construction. Special cases: the companion of CT(1/2) is
/// the figure itself, of CT(0) the point D1 (a zero-bar figure), of
/// CT(zero-bar) the reflection of delta1 in l (a CT(0) figure).
CompanionPair companion(const CtFigure& fig);

/// Total division: a/b for b != 0, and 0 when b = 0 (for any numerator).
double safe_div(double a, double b);

struct ChainResult {
    std::vector<Circle> circles;  // congruent radius-r circles, first = gamma
    double d1 = 0.0;              // radius of the large circle tangent to l and the chain end
};

/// Row of `count` congruent circles of radius r touching k, consecutive ones
/// tangent, the first being gamma of CT(count); l is the external common
/// tangent of the last chain circle and delta1. Answers the chain problem
/// with d1 = (sqrt(2*count)+1)^2 * r.
ChainResult toyoyoshi_chain(int count, double r);

/// Common answer of the two equivalent curvilinear-triangle problems: both
/// reduce to the n = 2 instance, giving r = d/9 for a large circle of
/// radius d.
double solve_problem_1_2(double d);

struct RefutationReport {
    double ratio = 0.0;    // exact d/r of the described tangency configuration
    double claimed = 9.0;  // the handed-down answer d/r = 9
    bool consistent = false;
};

/// The tablet problem asserting r = d/9 for its configuration is wrong: the
/// tangency condition d = 2*sqrt(r*d) + sqrt(2)*r + r forces
/// d/r = 3 + sqrt(2) + 2*sqrt(2+sqrt(2)) ~ 8.11, not 9.
RefutationReport refute_problem_3(double d);

/// Tangency defects of a built figure; test and verification helper.
CtResiduals tangency_residuals(const CtFigure& fig);

}  // namespace hagakit
