#pragma once

// Exact evaluation of low-degree polynomial predicates on point coordinates.
// Integral coordinates up to 2^53 run on __int128; anything else is lifted to
// arbitrary-precision rationals (every finite double is a dyadic rational).

#include <cmath>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "yao/geometry.hpp"

namespace yao::detail {

__extension__ using Wide = __int128;
using Rational = boost::multiprecision::cpp_rational;

inline bool exact_integral(double v) {
  return std::abs(v) <= 9007199254740992.0 && std::floor(v) == v;
}

template <typename... P>
bool all_integral(const P&... pts) {
  return ((exact_integral(pts.x) && exact_integral(pts.y)) && ...);
}

template <typename T>
T lift(double v) {
  if constexpr (std::is_same_v<T, Wide>) {
    return static_cast<Wide>(static_cast<long long>(v));
  } else {
    return T(v);
  }
}

template <typename T>
int sign(const T& v) {
  return (v > 0) - (v < 0);
}

// Calls fn(std::type_identity<T>{}) with the cheapest exact number type T for
// the given points.
template <typename Fn, typename... P>
int exact_eval(Fn&& fn, const P&... pts) {
  if (all_integral(pts...)) return fn(std::type_identity<Wide>{});
  return fn(std::type_identity<Rational>{});
}

}  // namespace yao::detail
