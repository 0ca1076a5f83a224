#include "yao/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <fmt/format.h>

#include "yao/error.hpp"

namespace yao {

Distribution parse_distribution(const std::string& s) {
  if (s == "uniform") return Distribution::Uniform;
  if (s == "grid") return Distribution::Grid;
  if (s == "grid-jitter") return Distribution::GridJitter;
  if (s == "convex") return Distribution::Convex;
  if (s == "cluster") return Distribution::Cluster;
  throw InputError(fmt::format("unknown distribution '{}'", s));
}

const char* to_string(Distribution d) {
  switch (d) {
    case Distribution::Uniform: return "uniform";
    case Distribution::Grid: return "grid";
    case Distribution::GridJitter: return "grid-jitter";
    case Distribution::Convex: return "convex";
    case Distribution::Cluster: return "cluster";
  }
  return "unknown";
}

namespace {

using Coords = std::vector<std::pair<double, double>>;
using Rng = std::mt19937_64;

long long uniform_int(Rng& rng, long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

// Draws points until n distinct ones have been produced.
template <typename Draw>
Coords distinct(std::size_t n, Draw&& draw) {
  Coords out;
  std::set<std::pair<double, double>> seen;
  while (out.size() < n) {
    auto p = draw();
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

Coords grid(std::size_t n, long long spacing, long long jitter, Rng& rng) {
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  Coords out;
  for (std::size_t i = 0; i < n; ++i) {
    long long x = static_cast<long long>(i % cols) * spacing;
    long long y = static_cast<long long>(i / cols) * spacing;
    if (jitter > 0) {
      x += uniform_int(rng, -jitter, jitter);
      y += uniform_int(rng, -jitter, jitter);
    }
    out.emplace_back(static_cast<double>(x), static_cast<double>(y));
  }
  return out;
}

Coords convex(std::size_t n, Rng& rng) {
  constexpr double kRadius = 1e6;
  std::uniform_real_distribution<double> offset(0.1, 0.9);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Coords out;
    for (std::size_t i = 0; i < n; ++i) {
      double angle = (static_cast<double>(i) + offset(rng)) * 2.0 * std::numbers::pi / n;
      out.emplace_back(std::round(kRadius * std::cos(angle)), std::round(kRadius * std::sin(angle)));
    }
    if (n <= 3 || in_strictly_convex_position(PointSet(out))) return out;
  }
  throw InputError(fmt::format("could not place {} points in convex position", n));
}

Coords cluster(std::size_t n, Rng& rng) {
  const std::size_t clusters = std::max<std::size_t>(1, n / 20);
  Coords centres;
  for (std::size_t i = 0; i < clusters; ++i) {
    centres.emplace_back(static_cast<double>(uniform_int(rng, 0, 2000)),
                         static_cast<double>(uniform_int(rng, 0, 2000)));
  }
  std::normal_distribution<double> spread(0.0, 12.0);
  return distinct(n, [&] {
    const auto& c = centres[static_cast<std::size_t>(uniform_int(rng, 0, clusters - 1))];
    return std::pair{std::round(c.first + spread(rng)), std::round(c.second + spread(rng))};
  });
}

}  // namespace

PointSet generate_points(std::size_t n, Distribution dist, std::uint64_t seed) {
  if (n < 1) throw InputError("need at least one point");
  Rng rng(seed);
  switch (dist) {
    case Distribution::Uniform:
      return PointSet(distinct(n, [&] {
        return std::pair{static_cast<double>(uniform_int(rng, 0, 1'000'000)),
                         static_cast<double>(uniform_int(rng, 0, 1'000'000))};
      }));
    case Distribution::Grid: return PointSet(grid(n, 1, 0, rng));
    case Distribution::GridJitter: return PointSet(grid(n, 1000, 250, rng));
    case Distribution::Convex: return PointSet(convex(n, rng));
    case Distribution::Cluster: return PointSet(cluster(n, rng));
  }
  throw InputError("unknown distribution");
}

bool in_strictly_convex_position(const PointSet& points) {
  const std::size_t n = points.size();
  if (n <= 2) return true;
  // Sort by angle around the lowest point, then require strict left turns.
  std::vector<Point> pts(points.begin(), points.end());
  auto pivot = std::min_element(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  std::iter_swap(pts.begin(), pivot);
  const Point origin = pts.front();
  std::sort(pts.begin() + 1, pts.end(), [&](const Point& a, const Point& b) {
    return polar_angle_less(origin, a, b);
  });
  for (std::size_t i = 0; i < n; ++i) {
    if (orientation(pts[i], pts[(i + 1) % n], pts[(i + 2) % n]) <= 0) return false;
  }
  return true;
}

}  // namespace yao
