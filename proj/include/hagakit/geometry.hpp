#pragma once

#include <optional>
#include <utility>

namespace hagakit {

/// Absolute/relative comparison tolerances used by the tolerant predicates.
/// Both must be positive.
struct Tolerance {
    double eps_abs = 1e-9;
    double eps_rel = 1e-9;

    /// |a - b| <= max(eps_abs, eps_rel * scale)
    bool near(double a, double b, double scale) const;
    /// Relative comparison with the larger magnitude as scale.
    bool near_rel(double a, double b) const;

    static Tolerance validated(double eps_abs, double eps_rel);
};

struct Point {
    double x = 0.0;
    double y = 0.0;
};

Point operator+(Point p, Point q);
Point operator-(Point p, Point q);
Point operator*(double s, Point p);
double dot(Point p, Point q);
double cross(Point p, Point q);
double norm(Point p);
double distance(Point p, Point q);
Point midpoint(Point p, Point q);

/// Oriented line a*x + b*y + c = 0, stored normalized: a^2 + b^2 = 1 and the
/// sign fixed lexicographically (a > 0, or a = 0 and b > 0) so that equal loci
/// compare equal componentwise.
struct Line {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;

    static Line from_coefficients(double a, double b, double c);
    static Line through(Point p, Point q);
    /// Line through p with normal direction n (need not be unit).
    static Line with_normal(Point p, Point n);

    double signed_distance(Point p) const { return a * p.x + b * p.y + c; }
    /// Foot of the perpendicular from p.
    Point project(Point p) const;
    /// Unit direction vector (perpendicular to the normal).
    Point direction() const { return {-b, a}; }
};

/// radius = 0 is a legal point-circle; tangency predicates treat it as a point
/// required to sit on the partner's boundary.
struct Circle {
    Point center;
    double radius = 0.0;
};

/// Length of the chord PQ cut on an external common tangent of two externally
/// touching circles of radii r and s: |PQ| = 2*sqrt(r*s).
double external_tangent_chord(double r, double s);

/// Mirror image of p in m. Applying it twice gives p back.
Point reflect_point(Point p, const Line& m);

/// Throws on coincident input points (distance <= eps_abs).
Line perpendicular_bisector(Point p, Point q, const Tolerance& tol = {});

/// Empty when the lines are parallel within tolerance; parallel input is a
/// legal result, not an error.
std::optional<Point> line_line_intersection(const Line& u, const Line& v,
                                            const Tolerance& tol = {});

/// True iff |center distance - (r1+r2)| <= max(eps_abs, eps_rel*(r1+r2)).
bool circles_externally_tangent(const Circle& c1, const Circle& c2,
                                const Tolerance& tol = {});

/// Foot of tangency when the line touches the circle within tolerance.
std::optional<Point> line_tangent_to_circle(const Line& line, const Circle& c,
                                            const Tolerance& tol = {});

/// The common tangent line through the contact point of two externally
/// tangent proper circles, perpendicular to their center line.
/// Throws when the circles are not externally tangent or either radius is 0.
Line internal_common_tangent_at_contact(const Circle& c1, const Circle& c2,
                                        const Tolerance& tol = {});

/// Contact points of the two tangent lines from p to c, ordered
/// lexicographically by (x, y). A point on the circle (within tolerance) is
/// its own degenerate contact and is returned twice; a point strictly inside
/// throws a domain error.
std::pair<Point, Point> tangent_contacts_from_external_point(
    Point p, const Circle& c, const Tolerance& tol = {});

}  // namespace hagakit
