#pragma once

#include "itm/map.hpp"

#include <string>

namespace itm {

// Deterministic SVG diagram of a map: the domain sits on a horizontal
// baseline with ticks at the breakpoints, one arc above the line per
// domain piece and one arc below it per translated image, colored by
// piece. Horizontal pixel position is 40 + 720 * x; all coordinates are
// rounded to hundredths of a pixel, halves up, so equal inputs produce
// byte-identical output.
std::string render_svg(const Map& map);

}  // namespace itm
