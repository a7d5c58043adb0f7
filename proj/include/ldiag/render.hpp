#pragma once

#include "ldiag/grid.hpp"

#include <string>

namespace ldiag {

struct RenderStyle {
    int cell_px = 40;
    std::string grid_stroke = "black";
    std::string diagonal_stroke = "red";
    bool show_anchors = false;
};

/// Text picture with 2n + 1 lines: '+' at lattice points, '-' and '|' on
/// grid lines, '/' inside every unit square crossed by a diagonal.
/// Throws PreconditionError for arrangements that do not validate.
std::string render_ascii(const Arrangement& a);

/// SVG 1.1 using only <line> and <rect>. Lattice y points up; image y points
/// down. The viewBox carries the margin so that lattice point (x, y) sits at
/// image coordinates (x * cell, (n - y) * cell).
std::string render_svg(const Arrangement& a, const RenderStyle& style = {});

} // namespace ldiag
