#pragma once

#include <optional>

#include "hagakit/ct_figure.hpp"
#include "hagakit/geometry.hpp"

namespace hagakit {

/// Parameter of a Haga fold figure: any real n, or the zero-bar sentinel for
/// the fold with E = D (whose associated circle is the point D). The
/// sentinel's numeric value is 0 but it is distinct from the real 0.
class HagaParam {
public:
    static HagaParam real(double value);
    static HagaParam zero_bar();

    bool is_zero_bar() const { return zero_bar_; }
    bool is_real() const { return !zero_bar_; }
    double value() const { return zero_bar_ ? 0.0 : value_; }

private:
    HagaParam(double value, bool zero_bar) : value_(value), zero_bar_(zero_bar) {}
    double value_;
    bool zero_bar_;
};

/// The seven positions of the fold point E on the line DA.
enum class HagaCase {
    H1,  // D between E and A, -2 < n < -1/2
    H2,  // D is the midpoint of EA, n = -2
    H3,  // D between E and A, n < -2
    H4,  // D = E, n = zero-bar
    H5,  // E between D and A, n > 0
    H6,  // E = A, n = 0
    H7,  // A between D and E, -1/2 < n < 0
};

const char* to_string(HagaCase c);

/// rho = (1 + sqrt(2))^2; the crease passes through the open square in case
/// H7 exactly when -1/rho < n < 0.
extern const double kRho;
extern const double kRhoInverse;  // 3 - 2*sqrt(2)

/// A generalized Haga fold: corner C of the square ABCD is carried onto a
/// point E of the line DA, the crease being the perpendicular bisector of CE.
///
/// Canonical frame: A = (0,0), B = (d,0), C = (d,d), D = (0,d); the line DA
/// is x = 0 and E = (0, e) for any real e. delta is the circle with center C
/// through B and D; gamma is the circle touching the line DA and delta at the
/// contact point T of the remaining tangent of delta from E, with
/// r = (d-e)^2/d and contact K = (0, 2e-d) on DA.
struct HagaFigure {
    double d = 1.0;  // side length
    Point A, B, C, D;
    double e = 0.0;  // signed coordinate of E along DA (A at 0, D at d)
    Point E;
    Line m;                  // crease
    Point G;                 // reflection of B in m
    std::optional<Point> F;  // intersection of lines AB and EG; B when E = A;
                             // absent when the lines are parallel or n = zero-bar
    Circle delta;
    Circle gamma;            // point-circle at D when n = zero-bar
    Point K;                 // contact of gamma and the line DA
    std::optional<Point> T;  // contact of gamma and delta; absent for zero-bar
    HagaParam n = HagaParam::real(0.0);
    HagaCase case_label = HagaCase::H5;
    bool crease_interior = false;
};

struct GammaContact {
    Circle gamma;
    Point K;
    Point T;
};

/// Build the full fold figure from the position of E. Requires d > 0.
HagaFigure fold_from_e(double d, double e);

/// The circle touching the line DA and delta externally that corresponds to
/// the fold with target (0, e). Requires e != d (that fold's circle is the
/// point D and carries no proper contact data).
GammaContact gamma_from_e(double d, double e);

/// Parameter of a proper circle touching DA and delta: magnitude from
/// n = tau*|AK|/(2r) + 1/2 with tau = +1 iff K lies on the interior side of
/// line AB, negated when T lies strictly outside the square; T = B gives 0.
HagaParam n_from_gamma(double d, const Circle& gamma, Point K, Point T,
                       const Tolerance& tol = {});

/// Inverse of the fold -> parameter map. Every real n != -1/2 (and zero-bar)
/// is attained by exactly one e; n = -1/2 is unattained and throws.
double e_from_n(double d, const HagaParam& n);

/// Case label per the parameter ranges (equalities take priority over the
/// surrounding intervals, compared at tolerance).
HagaCase classify_case(const HagaFigure& fig, const Tolerance& tol = {});

/// True iff the crease meets the open square (corner or edge contact does not
/// count). Equivalent to: case H3/H4/H5/H6, or H7 with -1/rho < n < 0.
bool crease_passes_interior(const HagaFigure& fig, const Tolerance& tol = {});

struct CheckItem {
    const char* name;
    bool pass;
    double residual;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass() const;
};

/// Fold at e = d/2 and verify the first-theorem facts: F divides AB in the
/// ratio 2:1 internally, n = 1/2, and d = 4r.
CheckReport haga_first_check(double d, const Tolerance& tol = {});

/// Solve for the fold whose F is the midpoint of AB and verify the
/// third-theorem facts: e = 2d/3, n = 2, E and K trisect DA, the companion
/// parameter is 1/8, and K is the foot on DA of the internal common tangent
/// of the companion circle and delta.
CheckReport haga_third_check(double d, const Tolerance& tol = {});

}  // namespace hagakit
