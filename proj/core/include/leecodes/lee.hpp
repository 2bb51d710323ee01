#pragma once

// Lee-metric geometry on Z^n and on the torus (Z/qZ)^n.

#include <cstdint>
#include <optional>
#include <vector>

namespace leecodes::lee {

using u64 = std::uint64_t;

/// Integer coordinates. In torus context every coordinate lies in [0, q).
using Point = std::vector<std::int64_t>;

/// Sum over i of min(|x_i - y_i|, q - |x_i - y_i|). Coordinates must already be
/// reduced mod q; throws std::invalid_argument on dimension mismatch or
/// unreduced input.
u64 lee_distance_torus(const Point& x, const Point& y, u64 q);

/// Sum of |x_i|.
u64 lee_norm_z(const Point& x);

struct LeeSphere {
  std::size_t n = 0;
  u64 e = 0;
  std::optional<u64> q;  // absent: ambient Z^n
  /// Lexicographic order on the stored coordinates.
  std::vector<Point> points;
};

/// Every point of Lee norm <= e, each once. With q present (q >= 2e + 1) the
/// points are the canonical residues of the Z^n sphere, re-sorted.
/// Throws std::invalid_argument if n == 0 or q < 2e + 1.
LeeSphere enumerate_sphere(std::size_t n, u64 e, std::optional<u64> q = std::nullopt);

/// |S(n, e)| = sum_{k=0}^{min(n,e)} 2^k C(n,k) C(e,k). Throws
/// std::overflow_error when the count does not fit in 64 bits.
u64 sphere_size(std::size_t n, u64 e);

}  // namespace leecodes::lee
