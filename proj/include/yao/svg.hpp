#pragma once

#include <string>

#include "yao/walk.hpp"

namespace yao {

/// Deterministic SVG of the graph: nodes as circles, directed edges as
/// arrows, and the optional overlay walk as one highlighted polyline. The
/// viewBox is the bounding box plus a 5% margin; y grows upwards.
std::string render_svg(const YaoGraph& g, const Walk* overlay = nullptr);

}  // namespace yao
