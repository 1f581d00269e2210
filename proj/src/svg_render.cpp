#include "hagakit/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace hagakit {

namespace {

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // avoid "-0.000000"
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

constexpr double kDotRadius = 3.0;
constexpr double kLabelOffsetX = 5.0;
constexpr double kLabelOffsetY = -5.0;

struct BoundingBox {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
    bool empty = true;

    void add(Point p) {
        if (empty) {
            x0 = x1 = p.x;
            y0 = y1 = p.y;
            empty = false;
            return;
        }
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }

    void add(const Circle& c) {
        add(Point{c.center.x - c.radius, c.center.y - c.radius});
        add(Point{c.center.x + c.radius, c.center.y + c.radius});
    }
};

/// World -> canvas: uniform scale, centered, y axis flipped.
struct Mapper {
    double s = 1.0;
    double ox = 0.0;
    double oy = 0.0;
    double canvas_h = 0.0;

    static Mapper fit(const BoundingBox& box, const RenderStyle& style) {
        Mapper m;
        m.canvas_h = style.height;
        const double avail_w = style.width - 2.0 * style.margin;
        const double avail_h = style.height - 2.0 * style.margin;
        const double w = box.x1 - box.x0;
        const double h = box.y1 - box.y0;
        double sx = w > 0.0 ? avail_w / w : std::numeric_limits<double>::infinity();
        double sy = h > 0.0 ? avail_h / h : std::numeric_limits<double>::infinity();
        m.s = std::min(sx, sy);
        if (!std::isfinite(m.s)) m.s = 1.0;  // degenerate (point-like) content
        m.ox = style.margin + 0.5 * (avail_w - w * m.s) - box.x0 * m.s;
        m.oy = style.margin + 0.5 * (avail_h - h * m.s) - box.y0 * m.s;
        return m;
    }

    Point map(Point world) const {
        return {ox + world.x * s, canvas_h - (oy + world.y * s)};
    }
    double map_radius(double r) const { return r * s; }
};

/// Clip the infinite line through canvas points p0, p1 to the canvas
/// rectangle; returns false when the line misses it.
bool clip_to_canvas(Point p0, Point p1, double w, double h, Point& a, Point& b) {
    const double dx = p1.x - p0.x;
    const double dy = p1.y - p0.y;
    double t0 = -1e18, t1 = 1e18;
    const auto narrow = [&](double d, double lo, double hi, double origin) {
        if (std::abs(d) < 1e-30) {
            return origin >= lo && origin <= hi;
        }
        double ta = (lo - origin) / d;
        double tb = (hi - origin) / d;
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        return true;
    };
    if (!narrow(dx, 0.0, w, p0.x)) return false;
    if (!narrow(dy, 0.0, h, p0.y)) return false;
    if (t0 >= t1) return false;
    a = {p0.x + t0 * dx, p0.y + t0 * dy};
    b = {p0.x + t1 * dx, p0.y + t1 * dy};
    return true;
}

class FigureCanvas {
public:
    FigureCanvas(const BoundingBox& box, const RenderStyle& style)
        : style_(style), mapper_(Mapper::fit(box, style)) {
        doc_.width = style.width;
        doc_.height = style.height;
        doc_.stroke_width = style.stroke_width;
    }

    void add_infinite_line(const Line& line, bool dashed = false) {
        const Point p0 = line.project({0.0, 0.0});
        const Point p1 = p0 + line.direction();
        Point a, b;
        if (clip_to_canvas(mapper_.map(p0), mapper_.map(p1), style_.width,
                           style_.height, a, b)) {
            doc_.lines.push_back({a.x, a.y, b.x, b.y, dashed});
        }
    }

    void add_segment(Point p, Point q, bool dashed = false) {
        const Point a = mapper_.map(p);
        const Point b = mapper_.map(q);
        doc_.lines.push_back({a.x, a.y, b.x, b.y, dashed});
    }

    void add_circle(const Circle& c, bool dashed = false) {
        const Point ctr = mapper_.map(c.center);
        if (c.radius > 0.0) {
            doc_.circles.push_back({ctr.x, ctr.y, mapper_.map_radius(c.radius), dashed, false});
        } else {
            doc_.circles.push_back({ctr.x, ctr.y, kDotRadius, false, true});
        }
    }

    void add_label(Point world, const std::string& text) {
        if (!style_.labels) return;
        const Point p = mapper_.map(world);
        doc_.texts.push_back({p.x + kLabelOffsetX, p.y + kLabelOffsetY, text});
    }

    void add_caption(const std::string& text) {
        doc_.texts.push_back(
            {0.5 * style_.margin, style_.height - 0.5 * style_.margin, text});
    }

    SvgDocument take() { return std::move(doc_); }

private:
    RenderStyle style_;
    Mapper mapper_;
    SvgDocument doc_;
};

bool same_circle(const Circle& a, const Circle& b) {
    return a.center.x == b.center.x && a.center.y == b.center.y &&
           a.radius == b.radius;
}

}  // namespace

void RenderStyle::validate() const {
    if (!(stroke_width > 0.0) || !(width > 0.0) || !(height > 0.0) ||
        !(margin > 0.0) || width <= 2.0 * margin || height <= 2.0 * margin) {
        throw std::invalid_argument("RenderStyle: dimensions must be positive");
    }
}

int SvgDocument::circle_count() const {
    return static_cast<int>(
        std::count_if(circles.begin(), circles.end(),
                      [](const SvgCircle& c) { return !c.dot; }));
}

int SvgDocument::dot_count() const {
    return static_cast<int>(std::count_if(
        circles.begin(), circles.end(), [](const SvgCircle& c) { return c.dot; }));
}

std::string SvgDocument::to_string() const {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt(width) + "\" height=\"" + fmt(height) + "\" viewBox=\"0 0 " +
           fmt(width) + " " + fmt(height) + "\">\n";
    for (const SvgLine& l : lines) {
        out += "<line x1=\"" + fmt(l.x1) + "\" y1=\"" + fmt(l.y1) + "\" x2=\"" +
               fmt(l.x2) + "\" y2=\"" + fmt(l.y2) +
               "\" stroke=\"black\" stroke-width=\"" + fmt(stroke_width) + "\"";
        if (l.dashed) out += " stroke-dasharray=\"6 4\"";
        out += "/>\n";
    }
    for (const SvgCircle& c : circles) {
        out += "<circle cx=\"" + fmt(c.cx) + "\" cy=\"" + fmt(c.cy) + "\" r=\"" +
               fmt(c.r) + "\"";
        if (c.dot) {
            out += " fill=\"black\" stroke=\"none\"";
        } else {
            out += " fill=\"none\" stroke=\"black\" stroke-width=\"" +
                   fmt(stroke_width) + "\"";
            if (c.dashed) out += " stroke-dasharray=\"6 4\"";
        }
        out += "/>\n";
    }
    for (const SvgText& t : texts) {
        out += "<text x=\"" + fmt(t.x) + "\" y=\"" + fmt(t.y) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + t.content +
               "</text>\n";
    }
    out += "</svg>\n";
    return out;
}

SvgDocument render_ct(const CtFigure& fig, const RenderStyle& style,
                      const CtRenderOptions& options) {
    style.validate();

    std::optional<CompanionPair> pair;
    if (options.with_companion) pair = companion(fig);

    std::optional<TangentFeet> feet;
    if (fig.n.is_real() && fig.n.value() > 0.0) {
        feet = internal_tangent_feet(fig);
    }

    BoundingBox box;
    box.add(fig.A);
    box.add(fig.K);
    box.add(fig.gamma);
    box.add(fig.delta1);
    box.add(fig.delta2);
    if (pair) box.add(pair->gamma_bar());
    if (options.chain) {
        for (const Circle& c : *options.chain) box.add(c);
    }
    if (feet) {
        box.add(feet->e1);
        if (feet->e2) box.add(*feet->e2);
    }

    FigureCanvas canvas(box, style);
    canvas.add_infinite_line(fig.k);
    canvas.add_infinite_line(fig.l);

    if (options.chain) {
        for (const Circle& c : *options.chain) canvas.add_circle(c);
    } else {
        canvas.add_circle(fig.gamma);
    }
    canvas.add_circle(fig.delta1);
    if (!same_circle(fig.delta1, fig.delta2)) canvas.add_circle(fig.delta2);
    if (pair) canvas.add_circle(pair->gamma_bar(), /*dashed=*/true);

    canvas.add_label(fig.A, "A");
    canvas.add_label(fig.K, "K");
    canvas.add_label(fig.D1, "D1");
    canvas.add_label(fig.D2, "D2");
    if (feet) {
        canvas.add_label(feet->e1, "E1");
        if (feet->e2) canvas.add_label(*feet->e2, "E2");
    }
    return canvas.take();
}

SvgDocument render_ct(const CtFigure& fig, const RenderStyle& style,
                      bool with_companion) {
    CtRenderOptions options;
    options.with_companion = with_companion;
    return render_ct(fig, style, options);
}

SvgDocument render_haga(const HagaFigure& fig, const RenderStyle& style) {
    style.validate();

    BoundingBox box;
    box.add(fig.A);
    box.add(fig.B);
    box.add(fig.C);
    box.add(fig.D);
    box.add(fig.E);
    box.add(fig.G);
    box.add(fig.K);
    box.add(fig.delta);
    box.add(fig.gamma);
    if (fig.F) box.add(*fig.F);
    if (fig.T) box.add(*fig.T);

    FigureCanvas canvas(box, style);
    canvas.add_segment(fig.A, fig.B);
    canvas.add_segment(fig.B, fig.C);
    canvas.add_segment(fig.C, fig.D);
    canvas.add_segment(fig.D, fig.A);
    canvas.add_infinite_line(fig.m, /*dashed=*/true);

    canvas.add_circle(fig.delta);
    canvas.add_circle(fig.gamma);

    canvas.add_label(fig.E, "E");
    canvas.add_label(fig.G, "G");
    if (fig.F) canvas.add_label(*fig.F, "F");
    canvas.add_label(fig.K, "K");
    if (fig.T) canvas.add_label(*fig.T, "T");
    canvas.add_caption(to_string(fig.case_label));
    return canvas.take();
}

}  // namespace hagakit
