#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hagakit/ct_figure.hpp"
#include "hagakit/haga_fold.hpp"

namespace hagakit {

struct RenderStyle {
    double stroke_width = 1.0;
    bool labels = true;
    double margin = 24.0;
    double width = 480.0;   // canvas size in user units
    double height = 360.0;

    void validate() const;
};

/// One drawable item in canvas coordinates. "circle" elements are outlines;
/// "dot" elements mark point-circles and carry a fixed screen radius.
struct SvgLine {
    double x1, y1, x2, y2;
    bool dashed = false;
};

struct SvgCircle {
    double cx, cy, r;
    bool dashed = false;
    bool dot = false;
};

struct SvgText {
    double x, y;
    std::string content;
};

/// Canonical SVG 1.1 document. Emission is byte-deterministic: elements keep
/// their construction order grouped by kind (lines, circles, texts), every
/// coordinate is printed with six decimals, attributes appear in a fixed
/// order, lines end with LF.
struct SvgDocument {
    double width = 0.0;
    double height = 0.0;
    double stroke_width = 1.0;
    std::vector<SvgLine> lines;
    std::vector<SvgCircle> circles;
    std::vector<SvgText> texts;

    std::string to_string() const;

    int circle_count() const;  // proper circles only
    int dot_count() const;
};

struct CtRenderOptions {
    bool with_companion = false;
    /// Extra congruent circles drawn instead of gamma (gamma is their first
    /// member), as produced by toyoyoshi_chain.
    std::optional<std::vector<Circle>> chain;
};

SvgDocument render_ct(const CtFigure& fig, const RenderStyle& style,
                      const CtRenderOptions& options = {});
SvgDocument render_ct(const CtFigure& fig, const RenderStyle& style,
                      bool with_companion);

SvgDocument render_haga(const HagaFigure& fig, const RenderStyle& style);

}  // namespace hagakit
