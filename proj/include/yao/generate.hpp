#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "yao/geometry.hpp"

namespace yao {

enum class Distribution {
  Uniform,     // integer coordinates uniform in [0, 10^6]^2
  Grid,        // unit integer grid, row-major, ceil(sqrt(n)) columns
  GridJitter,  // grid with spacing 1000, each point moved by up to 250
  Convex,      // jittered angles on a circle of radius 10^6, strictly convex
  Cluster,     // tight Gaussian clusters on the integer lattice (many ties)
};

Distribution parse_distribution(const std::string& s);
const char* to_string(Distribution d);

/// Deterministic for a fixed (n, distribution, seed).
PointSet generate_points(std::size_t n, Distribution dist, std::uint64_t seed);

/// True iff every point is a vertex of the convex hull and no three are
/// collinear.
bool in_strictly_convex_position(const PointSet& points);

}  // namespace yao
