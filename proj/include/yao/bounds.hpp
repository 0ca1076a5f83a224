#pragma once

#include <numbers>
#include <optional>

namespace yao {

namespace bounds {
inline constexpr double kSqrt2 = std::numbers::sqrt2;
/// Stretch of the L-infinity Yao graph Y_4^inf, measured in L-infinity.
inline constexpr double kY4Inf = 8.0;
/// Y_4 path spanning a single Y_4^inf edge, relative to |ab|.
inline constexpr double kLinfEdge = 29.0 + 23.0 * kSqrt2;
/// Stretch of Y_4 in L2.
inline constexpr double kY4 = 8.0 * kLinfEdge;
/// p(x, y) between a shortest side of two crossing Y_4 edges.
inline constexpr double kRecross = 6.0 / (kSqrt2 - 1.0);
/// Total length of the two side paths meeting between x and y.
inline constexpr double kSidePaths = 3.0 * kSqrt2;
}  // namespace bounds

/// t(theta) = (1 + sqrt(2 - 2 cos theta)) / (2 cos theta - 1), the stretch of
/// a Yao graph whose cones have angle theta. Requires 0 < theta < pi/3.
double theta_bound(double theta);

/// 1 / (cos(2pi/k) - sin(2pi/k)), the older bound for Y_k, k >= 9.
double bose_bound(int k);

/// Best available L2 stretch bound for Y_k: theta_bound(2pi/k) for k >= 7,
/// bounds::kY4 for k = 4; nullopt otherwise.
std::optional<double> yao_l2_bound(int k);

struct BoundSpec {
  enum class Kind { Y4Inf, Y4, Theta };
  Kind kind;
  double value;
  std::optional<double> theta;

  static BoundSpec y4_inf() { return {Kind::Y4Inf, bounds::kY4Inf, std::nullopt}; }
  static BoundSpec y4() { return {Kind::Y4, bounds::kY4, std::nullopt}; }
  static BoundSpec for_theta(double theta) { return {Kind::Theta, theta_bound(theta), theta}; }
};

}  // namespace yao
