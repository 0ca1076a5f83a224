#include "yao/bounds.hpp"

#include <cmath>

#include <fmt/format.h>

#include "yao/error.hpp"

namespace yao {

double theta_bound(double theta) {
  const long double th = theta;
  const long double pole = std::numbers::pi_v<long double> / 3.0L;
  if (!(th > 0.0L) || !(th < pole)) {
    throw DomainError(fmt::format("theta_bound needs 0 < theta < pi/3, got {}", theta));
  }
  const long double c = std::cos(th);
  const long double denom = 2.0L * c - 1.0L;
  if (!(denom > 0.0L)) {
    throw DomainError(fmt::format("theta {} is too close to pi/3", theta));
  }
  return static_cast<double>((1.0L + std::sqrt(2.0L - 2.0L * c)) / denom);
}

double bose_bound(int k) {
  if (k < 9) throw DomainError(fmt::format("the cos - sin bound needs k >= 9, got {}", k));
  const long double th = 2.0L * std::numbers::pi_v<long double> / k;
  return static_cast<double>(1.0L / (std::cos(th) - std::sin(th)));
}

std::optional<double> yao_l2_bound(int k) {
  if (k == 4) return bounds::kY4;
  if (k >= 7) return theta_bound(2.0 * std::numbers::pi / k);
  return std::nullopt;
}

}  // namespace yao
