#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "yao/error.hpp"

namespace yao {

using NodeId = std::size_t;

class DuplicatePointError : public InputError {
 public:
  DuplicatePointError(NodeId first, NodeId second);
  NodeId first() const { return first_; }
  NodeId second() const { return second_; }

 private:
  NodeId first_;
  NodeId second_;
};

struct Point {
  double x = 0.0;
  double y = 0.0;
  NodeId id = 0;
};

enum class Metric { L2, Linf };

const char* to_string(Metric m);

struct Segment {
  Point a;
  Point b;
};

/// Closed axis-aligned rectangle spanned by two opposite corners.
class Rect {
 public:
  Rect(const Point& corner1, const Point& corner2);

  double min_x() const { return min_x_; }
  double max_x() const { return max_x_; }
  double min_y() const { return min_y_; }
  double max_y() const { return max_y_; }

 private:
  double min_x_, max_x_, min_y_, max_y_;
};

/// The vertex set. Ids are dense indices; coordinates are pairwise distinct.
///
/// Points ingested from decimal text are stored scaled by 10^decimal_scale so
/// that every coordinate is an integer and all predicates run exactly.
class PointSet {
 public:
  PointSet() = default;

  /// Takes raw coordinates; throws InputError on coincident points.
  explicit PointSet(const std::vector<std::pair<double, double>>& coords,
                    std::optional<int> decimal_scale = 0);

  /// Parses decimal strings, choosing the smallest power-of-ten scale that
  /// makes every coordinate integral. Falls back to binary doubles (no scale)
  /// when the scaled values would not be exactly representable.
  static PointSet from_decimal(
      const std::vector<std::pair<std::string, std::string>>& coords);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](NodeId id) const { return points_[id]; }
  std::span<const Point> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  /// Power of ten dividing stored coordinates back to input units; nullopt
  /// when the coordinates are raw doubles.
  std::optional<int> decimal_scale() const { return decimal_scale_; }

  /// Coordinate rendered in input units, losslessly.
  std::string format_coordinate(double stored) const;
  /// Distance converted to input units.
  double to_input_units(double stored_length) const;

  bool operator==(const PointSet& other) const;

 private:
  std::vector<Point> points_;
  std::optional<int> decimal_scale_ = 0;
};

double dist(const Point& p, const Point& q, Metric m);

/// Sign of |pq| - |rs| under the metric, computed exactly.
int compare_dist(const Point& p, const Point& q, const Point& r, const Point& s,
                 Metric m);

/// Exact squared Euclidean distance comparison against a scaled threshold:
/// sign of num * |pq|^2 - den * |rs|^2.
int compare_sq_dist_scaled(const Point& p, const Point& q, long num,
                           const Point& r, const Point& s, long den);

/// Orientation of (a, b, c): +1 left turn, -1 right turn, 0 collinear.
int orientation(const Point& a, const Point& b, const Point& c);

/// Sign of the dot product (b - a) . (c - a).
int dot_sign(const Point& a, const Point& b, const Point& c);

/// Half-open quadrant of p around origin: 1 = [0, pi/2), 2 = [pi/2, pi),
/// 3 = [pi, 3pi/2), 4 = [3pi/2, 2pi), angles CCW from +x.
int quadrant_of(const Point& origin, const Point& p);

/// Half-open cone [i 2pi/k, (i+1) 2pi/k) holding the direction of p - origin.
int cone_of(const Point& origin, const Point& p, int k);

/// Strict comparison of polar angles in [0, 2pi) of p - origin and q - origin.
bool polar_angle_less(const Point& origin, const Point& p, const Point& q);

/// True iff the segments share a point that is an endpoint of neither.
bool properly_cross(const Segment& s1, const Segment& s2);

bool in_rect(const Rect& r, const Point& p);
bool strictly_interior(const Rect& r, const Point& p);

/// strictly_interior(Rect(a, b), p) evaluated after an infinitesimal
/// counterclockwise rotation of the plane, the perturbation under which the
/// half-open quadrants are the ordinary open ones. A coordinate shared with a
/// corner is decided by the other coordinate; otherwise the two tests agree.
bool strictly_interior_tilted(const Point& a, const Point& b, const Point& p);

/// Open axis-aligned square with corner a whose boundary contains b.
bool in_open_square(const Point& a, const Point& b, const Point& p);

}  // namespace yao
