#include "leecodes/lee.hpp"

#include <algorithm>
#include <stdexcept>

#include "leecodes/modular.hpp"

namespace leecodes::lee {

namespace {

u64 abs_diff(std::int64_t a, std::int64_t b) {
  return a > b ? static_cast<u64>(a) - static_cast<u64>(b) : static_cast<u64>(b) - static_cast<u64>(a);
}

u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("sphere size overflows 64 bits");
  return r;
}

u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("sphere size overflows 64 bits");
  return r;
}

u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  modular::u128 r = 1;
  for (u64 i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r >> 64) throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<u64>(r);
}

// Recursive radius-budget descent; values for coordinate `i` run from
// -budget to +budget so the output is lexicographic.
void descend(std::size_t i, std::int64_t budget, Point& current, std::vector<Point>& out) {
  if (i == current.size()) {
    out.push_back(current);
    return;
  }
  for (std::int64_t v = -budget; v <= budget; ++v) {
    current[i] = v;
    descend(i + 1, budget - (v < 0 ? -v : v), current, out);
  }
  current[i] = 0;
}

}  // namespace

u64 lee_distance_torus(const Point& x, const Point& y, u64 q) {
  if (x.size() != y.size()) throw std::invalid_argument("lee_distance_torus: dimension mismatch");
  u64 total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || y[i] < 0 || static_cast<u64>(x[i]) >= q || static_cast<u64>(y[i]) >= q) {
      throw std::invalid_argument("lee_distance_torus: coordinate not reduced mod q");
    }
    const u64 d = abs_diff(x[i], y[i]);
    total += std::min(d, q - d);
  }
  return total;
}

u64 lee_norm_z(const Point& x) {
  u64 total = 0;
  for (auto v : x) total += abs_diff(v, 0);
  return total;
}

LeeSphere enumerate_sphere(std::size_t n, u64 e, std::optional<u64> q) {
  if (n == 0) throw std::invalid_argument("enumerate_sphere: n must be positive");
  if (q && *q < 2 * e + 1) {
    throw std::invalid_argument("enumerate_sphere: q must be >= 2e+1 for the projection to be injective");
  }
  LeeSphere s;
  s.n = n;
  s.e = e;
  s.q = q;
  s.points.reserve(sphere_size(n, e));
  Point current(n, 0);
  descend(0, static_cast<std::int64_t>(e), current, s.points);
  if (q) {
    const auto m = static_cast<std::int64_t>(*q);
    for (auto& pt : s.points) {
      for (auto& c : pt) c = ((c % m) + m) % m;
    }
    std::sort(s.points.begin(), s.points.end());
  }
  return s;
}

u64 sphere_size(std::size_t n, u64 e) {
  u64 total = 0;
  const u64 top = std::min<u64>(n, e);
  for (u64 k = 0; k <= top; ++k) {
    if (k >= 64) throw std::overflow_error("sphere size overflows 64 bits");
    const u64 term = checked_mul(checked_mul(u64{1} << k, binomial(n, k)), binomial(e, k));
    total = checked_add(total, term);
  }
  return total;
}

}  // namespace leecodes::lee
