#pragma once

#include <string>

#include "maxdist/certify.hpp"

// Layered SVG picture of a run: r-disks along the curve at the bottom, the
// hull tree one group per generation, the curve, and the input points on
// top. Output is deterministic (fixed order, fixed number formatting).

namespace maxdist {

std::string render_svg(const PointSet& e, const HullTree& tree, const Curve& curve, double r);

}  // namespace maxdist
