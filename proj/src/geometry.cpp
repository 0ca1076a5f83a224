#include "yao/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "exact.hpp"
#include "yao/error.hpp"

namespace yao {

using detail::exact_eval;
using detail::lift;
using detail::sign;

const char* to_string(Metric m) { return m == Metric::L2 ? "l2" : "linf"; }

Rect::Rect(const Point& corner1, const Point& corner2)
    : min_x_(std::min(corner1.x, corner2.x)),
      max_x_(std::max(corner1.x, corner2.x)),
      min_y_(std::min(corner1.y, corner2.y)),
      max_y_(std::max(corner1.y, corner2.y)) {}

namespace {

bool lex_less(const Point& p, const Point& q) {
  return p.x < q.x || (p.x == q.x && p.y < q.y);
}

bool same_location(const Point& p, const Point& q) {
  return p.x == q.x && p.y == q.y;
}

struct ParsedDecimal {
  bool negative = false;
  std::string digits;  // integer mantissa without sign or point
  int decimals = 0;
};

std::optional<ParsedDecimal> parse_plain_decimal(std::string_view s) {
  ParsedDecimal out;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    out.negative = s[i] == '-';
    ++i;
  }
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (ch >= '0' && ch <= '9') {
      out.digits.push_back(ch);
      seen_digit = true;
      if (seen_point) ++out.decimals;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  while (out.decimals > 0 && out.digits.back() == '0') {
    out.digits.pop_back();
    --out.decimals;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view s) {
  std::string owned(s);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw InputError(fmt::format("invalid coordinate '{}'", owned));
  }
  if (used != owned.size() || !std::isfinite(v)) {
    throw InputError(fmt::format("invalid coordinate '{}'", owned));
  }
  return v;
}

}  // namespace

PointSet::PointSet(const std::vector<std::pair<double, double>>& coords,
                   std::optional<int> decimal_scale)
    : decimal_scale_(decimal_scale) {
  points_.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto& [x, y] = coords[i];
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw InputError(fmt::format("point {} has a non-finite coordinate", i));
    }
    points_.push_back(Point{x, y, i});
  }
  std::vector<Point> sorted = points_;
  std::sort(sorted.begin(), sorted.end(), [](const Point& p, const Point& q) {
    return lex_less(p, q) || (same_location(p, q) && p.id < q.id);
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (same_location(sorted[i - 1], sorted[i])) {
      throw DuplicatePointError(sorted[i - 1].id, sorted[i].id);
    }
  }
}

DuplicatePointError::DuplicatePointError(NodeId first, NodeId second)
    : InputError(fmt::format("points {} and {} coincide", first, second)),
      first_(first),
      second_(second) {}

PointSet PointSet::from_decimal(
    const std::vector<std::pair<std::string, std::string>>& coords) {
  std::vector<ParsedDecimal> parsed;
  parsed.reserve(coords.size() * 2);
  bool plain = true;
  int scale = 0;
  for (const auto& [xs, ys] : coords) {
    for (std::string_view s : {std::string_view(xs), std::string_view(ys)}) {
      auto p = parse_plain_decimal(trim(s));
      if (!p) {
        plain = false;
        break;
      }
      scale = std::max(scale, p->decimals);
      parsed.push_back(std::move(*p));
    }
    if (!plain) break;
  }

  constexpr double kExactLimit = 9007199254740992.0;  // 2^53
  if (plain && scale <= 18) {
    std::vector<std::pair<double, double>> values;
    values.reserve(coords.size());
    bool representable = true;
    for (std::size_t i = 0; i < parsed.size() && representable; i += 2) {
      double xy[2];
      for (int c = 0; c < 2; ++c) {
        const ParsedDecimal& d = parsed[i + c];
        std::string digits = d.digits + std::string(scale - d.decimals, '0');
        auto first = digits.find_first_not_of('0');
        digits = first == std::string::npos ? "0" : digits.substr(first);
        if (digits.size() > 16) {
          representable = false;
          break;
        }
        unsigned long long mag = 0;
        std::from_chars(digits.data(), digits.data() + digits.size(), mag);
        if (static_cast<double>(mag) > kExactLimit) {
          representable = false;
          break;
        }
        xy[c] = d.negative ? -static_cast<double>(mag) : static_cast<double>(mag);
      }
      if (representable) values.emplace_back(xy[0], xy[1]);
    }
    if (representable) return PointSet(values, scale);
  }

  std::vector<std::pair<double, double>> values;
  values.reserve(coords.size());
  for (const auto& [xs, ys] : coords) {
    values.emplace_back(parse_double(trim(xs)), parse_double(trim(ys)));
  }
  return PointSet(values, std::nullopt);
}

std::string PointSet::format_coordinate(double stored) const {
  if (!decimal_scale_) return fmt::format("{}", stored);
  auto value = static_cast<long long>(stored);
  bool negative = value < 0;
  std::string digits = std::to_string(negative ? -value : value);
  int scale = *decimal_scale_;
  if (scale > 0) {
    if (static_cast<int>(digits.size()) <= scale) {
      digits.insert(0, scale - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - scale, 1, '.');
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  }
  return negative && digits != "0" ? "-" + digits : digits;
}

double PointSet::to_input_units(double stored_length) const {
  if (!decimal_scale_ || *decimal_scale_ == 0) return stored_length;
  return stored_length / std::pow(10.0, *decimal_scale_);
}

bool PointSet::operator==(const PointSet& other) const {
  if (decimal_scale_ != other.decimal_scale_ || size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!same_location(points_[i], other.points_[i])) return false;
  }
  return true;
}

double dist(const Point& p, const Point& q, Metric m) {
  double dx = std::abs(p.x - q.x);
  double dy = std::abs(p.y - q.y);
  return m == Metric::L2 ? std::hypot(dx, dy) : std::max(dx, dy);
}

int compare_dist(const Point& p, const Point& q, const Point& r, const Point& s,
                 Metric m) {
  return exact_eval(
      [&]<typename T>(std::type_identity<T>) {
        T dx1 = lift<T>(p.x) - lift<T>(q.x);
        T dy1 = lift<T>(p.y) - lift<T>(q.y);
        T dx2 = lift<T>(r.x) - lift<T>(s.x);
        T dy2 = lift<T>(r.y) - lift<T>(s.y);
        if (m == Metric::L2) {
          return sign<T>(dx1 * dx1 + dy1 * dy1 - (dx2 * dx2 + dy2 * dy2));
        }
        auto absv = [](const T& v) { return v < 0 ? T(-v) : v; };
        T a = std::max(absv(dx1), absv(dy1));
        T b = std::max(absv(dx2), absv(dy2));
        return sign<T>(a - b);
      },
      p, q, r, s);
}

int compare_sq_dist_scaled(const Point& p, const Point& q, long num,
                           const Point& r, const Point& s, long den) {
  return exact_eval(
      [&]<typename T>(std::type_identity<T>) {
        T dx1 = lift<T>(p.x) - lift<T>(q.x);
        T dy1 = lift<T>(p.y) - lift<T>(q.y);
        T dx2 = lift<T>(r.x) - lift<T>(s.x);
        T dy2 = lift<T>(r.y) - lift<T>(s.y);
        return sign<T>(T(num) * (dx1 * dx1 + dy1 * dy1) -
                       T(den) * (dx2 * dx2 + dy2 * dy2));
      },
      p, q, r, s);
}

int orientation(const Point& a, const Point& b, const Point& c) {
  return exact_eval(
      [&]<typename T>(std::type_identity<T>) {
        T ux = lift<T>(b.x) - lift<T>(a.x);
        T uy = lift<T>(b.y) - lift<T>(a.y);
        T vx = lift<T>(c.x) - lift<T>(a.x);
        T vy = lift<T>(c.y) - lift<T>(a.y);
        return sign<T>(ux * vy - uy * vx);
      },
      a, b, c);
}

int dot_sign(const Point& a, const Point& b, const Point& c) {
  return exact_eval(
      [&]<typename T>(std::type_identity<T>) {
        T ux = lift<T>(b.x) - lift<T>(a.x);
        T uy = lift<T>(b.y) - lift<T>(a.y);
        T vx = lift<T>(c.x) - lift<T>(a.x);
        T vy = lift<T>(c.y) - lift<T>(a.y);
        return sign<T>(ux * vx + uy * vy);
      },
      a, b, c);
}

namespace {

int cmp(double a, double b) { return (a > b) - (a < b); }

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_of(int sx, int sy) { return (sy < 0 || (sy == 0 && sx < 0)) ? 1 : 0; }

// Exact test: is the polar angle of p - origin strictly below the angle of
// the integer direction (ux, uy)?
bool angle_below_direction(const Point& origin, const Point& p, int ux, int uy) {
  int sx = cmp(p.x, origin.x);
  int sy = cmp(p.y, origin.y);
  int hp = half_of(sx, sy);
  int hu = half_of(ux, uy);
  if (hp != hu) return hp < hu;
  int cross = exact_eval(
      [&]<typename T>(std::type_identity<T>) {
        T vx = lift<T>(p.x) - lift<T>(origin.x);
        T vy = lift<T>(p.y) - lift<T>(origin.y);
        return sign<T>(T(ux) * vy - T(uy) * vx);
      },
      origin, p);
  return cross < 0;
}

constexpr int kOctantDir[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1},
                                  {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};

}  // namespace

int quadrant_of(const Point& origin, const Point& p) {
  int sx = cmp(p.x, origin.x);
  int sy = cmp(p.y, origin.y);
  if (sx == 0 && sy == 0) throw DegenerateDirection();
  if (sx > 0 && sy >= 0) return 1;
  if (sx <= 0 && sy > 0) return 2;
  if (sx < 0 && sy <= 0) return 3;
  return 4;
}

int cone_of(const Point& origin, const Point& p, int k) {
  if (k < 1) throw PreconditionError("cone count must be positive");
  if (k == 4) return quadrant_of(origin, p) - 1;
  if (same_location(origin, p)) throw DegenerateDirection();
  if (k == 1) return 0;

  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double width = two_pi / k;
  long double dx = static_cast<long double>(p.x) - origin.x;
  long double dy = static_cast<long double>(p.y) - origin.y;
  long double angle = std::atan2(dy, dx);
  if (angle < 0) angle += two_pi;

  // Boundaries at multiples of pi/4 have integer directions and are decided
  // exactly; the others are irrational rays no rational point can lie on.
  auto below_boundary = [&](int i) {
    if ((8 * i) % k == 0) {
      int octant = 8 * i / k;
      if (octant >= 8) return true;
      return angle_below_direction(origin, p, kOctantDir[octant][0], kOctantDir[octant][1]);
    }
    return angle < width * i;
  };

  int cone = static_cast<int>(std::floor(angle / width));
  cone = std::clamp(cone, 0, k - 1);
  while (cone + 1 < k && !below_boundary(cone + 1)) ++cone;
  while (cone > 0 && below_boundary(cone)) --cone;
  return cone;
}

bool polar_angle_less(const Point& origin, const Point& p, const Point& q) {
  int hp = half_of(cmp(p.x, origin.x), cmp(p.y, origin.y));
  int hq = half_of(cmp(q.x, origin.x), cmp(q.y, origin.y));
  if (hp != hq) return hp < hq;
  return orientation(origin, p, q) > 0;
}

bool properly_cross(const Segment& s1, const Segment& s2) {
  const Point& a = s1.a;
  const Point& b = s1.b;
  const Point& c = s2.a;
  const Point& d = s2.b;
  // Bounding boxes must overlap.
  if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
      std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y)) {
    return false;
  }
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  if (o1 == 0 && o2 == 0) {
    // Collinear: the overlap must have positive length.
    const Point& lo1 = lex_less(a, b) ? a : b;
    const Point& hi1 = lex_less(a, b) ? b : a;
    const Point& lo2 = lex_less(c, d) ? c : d;
    const Point& hi2 = lex_less(c, d) ? d : c;
    const Point& lo = lex_less(lo1, lo2) ? lo2 : lo1;
    const Point& hi = lex_less(hi1, hi2) ? hi1 : hi2;
    return lex_less(lo, hi);
  }
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool in_rect(const Rect& r, const Point& p) {
  return p.x >= r.min_x() && p.x <= r.max_x() && p.y >= r.min_y() && p.y <= r.max_y();
}

bool strictly_interior(const Rect& r, const Point& p) {
  return p.x > r.min_x() && p.x < r.max_x() && p.y > r.min_y() && p.y < r.max_y();
}

namespace {

int sign_of(double v) { return (v > 0) - (v < 0); }

// Coordinate comparisons after an infinitesimal counterclockwise rotation.
int tilted_x_cmp(const Point& p, const Point& q) {
  const int s = sign_of(p.x - q.x);
  return s != 0 ? s : -sign_of(p.y - q.y);
}

int tilted_y_cmp(const Point& p, const Point& q) {
  const int s = sign_of(p.y - q.y);
  return s != 0 ? s : sign_of(p.x - q.x);
}

}  // namespace

bool strictly_interior_tilted(const Point& a, const Point& b, const Point& p) {
  return tilted_x_cmp(p, a) * tilted_x_cmp(p, b) < 0 && tilted_y_cmp(p, a) * tilted_y_cmp(p, b) < 0;
}

bool in_open_square(const Point& a, const Point& b, const Point& p) {
  int q = quadrant_of(a, b);
  int sx = (q == 1 || q == 4) ? 1 : -1;
  int sy = (q == 1 || q == 2) ? 1 : -1;
  double side = dist(a, b, Metric::Linf);
  double u = sx * (p.x - a.x);
  double v = sy * (p.y - a.y);
  return u > 0 && u < side && v > 0 && v < side;
}

}  // namespace yao
