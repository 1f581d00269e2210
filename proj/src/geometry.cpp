#include "hagakit/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace hagakit {

namespace {

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

void require_finite(Point p, const char* what) {
    require_finite(p.x, what);
    require_finite(p.y, what);
}

}  // namespace

bool Tolerance::near(double a, double b, double scale) const {
    return std::abs(a - b) <= std::max(eps_abs, eps_rel * std::abs(scale));
}

bool Tolerance::near_rel(double a, double b) const {
    return near(a, b, std::max(std::abs(a), std::abs(b)));
}

Tolerance Tolerance::validated(double eps_abs, double eps_rel) {
    if (!(eps_abs > 0.0) || !(eps_rel > 0.0)) {
        throw std::invalid_argument("tolerances must be positive");
    }
    return Tolerance{eps_abs, eps_rel};
}

Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
double norm(Point p) { return std::sqrt(dot(p, p)); }
double distance(Point p, Point q) { return norm(p - q); }
Point midpoint(Point p, Point q) { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }

Line Line::from_coefficients(double a, double b, double c) {
    require_finite(a, "line coefficient");
    require_finite(b, "line coefficient");
    require_finite(c, "line coefficient");
    const double len = std::hypot(a, b);
    if (len == 0.0) {
        throw std::invalid_argument("line normal must be nonzero");
    }
    double na = a / len, nb = b / len, nc = c / len;
    // Canonical sign: a > 0, or a = 0 and b > 0.
    if (na < 0.0 || (na == 0.0 && nb < 0.0)) {
        na = -na;
        nb = -nb;
        nc = -nc;
    }
    Line out;
    out.a = na;
    out.b = nb;
    out.c = nc;
    return out;
}

Line Line::through(Point p, Point q) {
    require_finite(p, "line point");
    require_finite(q, "line point");
    const Point d = q - p;
    // Normal is the direction rotated a quarter turn.
    return from_coefficients(-d.y, d.x, d.y * p.x - d.x * p.y);
}

Line Line::with_normal(Point p, Point n) {
    require_finite(p, "line point");
    require_finite(n, "line normal");
    return from_coefficients(n.x, n.y, -(n.x * p.x + n.y * p.y));
}

Point Line::project(Point p) const {
    const double sd = signed_distance(p);
    return {p.x - sd * a, p.y - sd * b};
}

double external_tangent_chord(double r, double s) {
    require_finite(r, "radius");
    require_finite(s, "radius");
    if (r < 0.0 || s < 0.0) {
        throw std::domain_error("external_tangent_chord: radii must be nonnegative");
    }
    return 2.0 * std::sqrt(r * s);
}

Point reflect_point(Point p, const Line& m) {
    require_finite(p, "point");
    const double sd = m.signed_distance(p);
    return {p.x - 2.0 * sd * m.a, p.y - 2.0 * sd * m.b};
}

Line perpendicular_bisector(Point p, Point q, const Tolerance& tol) {
    require_finite(p, "point");
    require_finite(q, "point");
    if (distance(p, q) <= tol.eps_abs) {
        throw std::invalid_argument("perpendicular_bisector: points coincide");
    }
    return Line::with_normal(midpoint(p, q), q - p);
}

std::optional<Point> line_line_intersection(const Line& u, const Line& v,
                                            const Tolerance& tol) {
    // Normals are unit, so the determinant is sin of the angle between them.
    const double det = u.a * v.b - v.a * u.b;
    if (std::abs(det) <= tol.eps_abs) {
        return std::nullopt;
    }
    return Point{(u.b * v.c - v.b * u.c) / det, (v.a * u.c - u.a * v.c) / det};
}

bool circles_externally_tangent(const Circle& c1, const Circle& c2,
                                const Tolerance& tol) {
    const double sum = c1.radius + c2.radius;
    return tol.near(distance(c1.center, c2.center), sum, sum);
}

std::optional<Point> line_tangent_to_circle(const Line& line, const Circle& c,
                                            const Tolerance& tol) {
    if (!tol.near(std::abs(line.signed_distance(c.center)), c.radius, c.radius)) {
        return std::nullopt;
    }
    return line.project(c.center);
}

Line internal_common_tangent_at_contact(const Circle& c1, const Circle& c2,
                                        const Tolerance& tol) {
    if (c1.radius <= 0.0 || c2.radius <= 0.0) {
        throw std::invalid_argument(
            "internal_common_tangent_at_contact: circles must be proper");
    }
    if (!circles_externally_tangent(c1, c2, tol)) {
        throw std::invalid_argument(
            "internal_common_tangent_at_contact: circles are not externally tangent");
    }
    const Point axis = c2.center - c1.center;
    // Contact point divides the center segment in the ratio r1 : r2.
    const double t = c1.radius / (c1.radius + c2.radius);
    const Point contact = c1.center + t * axis;
    return Line::with_normal(contact, axis);
}

std::pair<Point, Point> tangent_contacts_from_external_point(
    Point p, const Circle& c, const Tolerance& tol) {
    require_finite(p, "point");
    const Point v = p - c.center;
    const double dist = norm(v);
    if (dist < c.radius - tol.eps_abs) {
        throw std::domain_error(
            "tangent_contacts_from_external_point: point lies inside the circle");
    }
    if (dist <= c.radius + tol.eps_abs) {
        // On the circle: the two tangents degenerate to one line touching at p.
        const Point q = dist > 0.0 ? c.center + (c.radius / dist) * v : p;
        return {q, q};
    }
    const double d2 = dist * dist;
    const double tangent_len = std::sqrt(d2 - c.radius * c.radius);
    const Point base = c.center + (c.radius * c.radius / d2) * v;
    const Point offset = (c.radius * tangent_len / d2) * Point{-v.y, v.x};
    Point first = base + offset;
    Point second = base - offset;
    if (second.x < first.x || (second.x == first.x && second.y < first.y)) {
        std::swap(first, second);
    }
    return {first, second};
}

}  // namespace hagakit
