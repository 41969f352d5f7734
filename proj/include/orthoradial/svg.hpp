#pragma once

#include <string>

#include "orthoradial/io.hpp"

namespace orthoradial {

enum class SvgView { Polar, Unrolled };

// Renders a drawing as SVG.  The polar view maps layers to concentric
// circles of matching radius and columns to spokes (column 0 at twelve
// o'clock, increasing clockwise); horizontal edges become circular arcs.
// The unrolled view is the orthogonal drawing on the cut-open cylinder, with
// edges that cross the cut drawn in two marked pieces.
std::string render_svg(const DrawingDoc& doc, SvgView view);

} // namespace orthoradial
