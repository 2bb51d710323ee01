#include "leecodes/codes.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "leecodes/modular.hpp"

namespace leecodes::codes {

namespace {

using modular::u128;
__extension__ typedef __int128 i128;

// q^n, or nullopt once it passes `limit`.
std::optional<u64> torus_size(u64 q, std::size_t n, u64 limit) {
  u64 total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (__builtin_mul_overflow(total, q, &total) || total > limit) return std::nullopt;
  }
  return total;
}

u64 require_torus_size(u64 q, std::size_t n, u64 limit) {
  const auto size = torus_size(q, n, limit);
  if (!size) {
    throw TooLargeError("q^n exceeds the point limit of " + std::to_string(limit) +
                        "; too large for direct verification");
  }
  return *size;
}

// Mixed radix with the first coordinate most significant, so index order is
// lexicographic order.
u64 encode(const Point& pt, u64 q) {
  u64 index = 0;
  for (auto c : pt) index = index * q + static_cast<u64>(c);
  return index;
}

Point decode(u64 index, u64 q, std::size_t n) {
  Point pt(n);
  for (std::size_t i = n; i-- > 0;) {
    pt[i] = static_cast<std::int64_t>(index % q);
    index /= q;
  }
  return pt;
}

std::int64_t reduce(std::int64_t v, u64 q) {
  const auto m = static_cast<std::int64_t>(q);
  return ((v % m) + m) % m;
}

Point reduce(const Point& pt, u64 q) {
  Point out(pt.size());
  std::transform(pt.begin(), pt.end(), out.begin(), [q](std::int64_t v) { return reduce(v, q); });
  return out;
}

void validate(const CodeSpec& code) {
  if (code.n == 0) throw std::invalid_argument("code dimension must be positive");
  if (code.q < 2 * code.e + 1) throw std::invalid_argument("code requires q >= 2e+1");
  if (code.q > (u64{1} << 62)) throw std::invalid_argument("code modulus too large");

  struct Check {
    const CodeSpec& c;
    void operator()(const Homomorphism& h) const {
      if (h.p != c.q) throw std::invalid_argument("homomorphism modulus must equal q");
      if (h.x.size() != c.n) throw std::invalid_argument("homomorphism needs n coefficients");
    }
    void operator()(const Centers& ct) const {
      if (ct.points.empty()) throw std::invalid_argument("code has no centers");
      for (const auto& pt : ct.points) {
        if (pt.size() != c.n) throw std::invalid_argument("center has wrong dimension");
      }
    }
    void operator()(const Lattice& l) const {
      if (l.basis.size() != c.n) throw std::invalid_argument("lattice basis needs n rows");
      for (const auto& row : l.basis) {
        if (row.size() != c.n) throw std::invalid_argument("lattice basis row has wrong length");
      }
    }
  };
  std::visit(Check{code}, code.repr);
}

// Fraction-free Gaussian elimination (Bareiss); exact for integer matrices
// whose minors fit in 127 bits.
i128 determinant(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::vector<i128>> a(n, std::vector<i128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
  }
  i128 sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Point> homomorphism_kernel(const CodeSpec& code, const Homomorphism& h, u64 limit) {
  require_torus_size(code.q, code.n, limit);
  const modular::Modulus m(h.p);
  const std::size_t n = code.n;
  const u64 last = h.x.back() % h.p;
  const u64 g = std::gcd(last, h.p);  // gcd(0, p) = p: every value works
  const u64 stride = h.p / g;

  std::vector<Point> out;
  Point current(n, 0);
  // Enumerate the first n-1 coordinates lexicographically; the last one
  // solves last * v = -partial (mod p), which has g solutions iff g | partial.
  auto rec = [&](auto&& self, std::size_t i, u64 partial) -> void {
    if (i + 1 == n) {
      const u64 need = modular::neg_mod(partial, m);
      if (need % g != 0) return;
      u64 base = 0;
      if (stride > 1) {
        // Solve (last/g) * v = need/g (mod p/g).
        const modular::Modulus ms(stride);
        const u64 unit = (last / g) % stride;
        // Extended Euclid for the inverse of `unit` modulo `stride`.
        std::int64_t t0 = 0, t1 = 1;
        std::int64_t r0 = static_cast<std::int64_t>(stride), r1 = static_cast<std::int64_t>(unit);
        while (r1 != 0) {
          const std::int64_t quot = r0 / r1;
          std::tie(t0, t1) = std::make_pair(t1, t0 - quot * t1);
          std::tie(r0, r1) = std::make_pair(r1, r0 - quot * r1);
        }
        const u64 inverse = static_cast<u64>(reduce(t0, stride));
        base = modular::mul_mod((need / g) % stride, inverse, ms);
      }
      for (u64 s = 0; s < g; ++s) {
        current[i] = static_cast<std::int64_t>(base + s * stride);
        out.push_back(current);
      }
      current[i] = 0;
      return;
    }
    for (u64 v = 0; v < h.p; ++v) {
      current[i] = static_cast<std::int64_t>(v);
      self(self, i + 1, modular::add_mod(partial, modular::mul_mod(v, h.x[i] % h.p, m), m));
    }
    current[i] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Point> lattice_points(const CodeSpec& code, const Lattice& l, u64 limit) {
  const u64 total = require_torus_size(code.q, code.n, limit);
  const i128 det = determinant(l.basis);
  if (det == 0) throw std::invalid_argument("lattice basis is singular");
  const u128 abs_det = static_cast<u128>(det < 0 ? -det : det);
  if (total % abs_det != 0) throw std::invalid_argument("|det B| does not divide q^n");

  const std::size_t n = code.n;
  const u64 q = code.q;
  std::vector<bool> seen(total, false);
  std::vector<u64> members{0};
  seen[0] = true;
  auto add = [&](u64 a, const Point& g) {
    Point pt = decode(a, q, n);
    for (std::size_t i = 0; i < n; ++i) pt[i] = reduce(pt[i] + g[i], q);
    return encode(pt, q);
  };
  // H <- H + <g> as the union of the cosets H + k*g up to the first k*g in H.
  for (const auto& row : l.basis) {
    const Point g = reduce(row, q);
    const std::vector<u64> base = members;
    u64 shift = encode(g, q);
    while (!seen[shift]) {
      for (u64 h : base) {
        const u64 v = add(h, decode(shift, q, n));
        if (!seen[v]) {
          seen[v] = true;
          members.push_back(v);
        }
      }
      shift = add(shift, g);
    }
  }
  if (members.size() != total / abs_det) {
    throw std::invalid_argument("lattice does not contain qZ^n");
  }
  std::sort(members.begin(), members.end());
  std::vector<Point> out;
  out.reserve(members.size());
  for (u64 idx : members) out.push_back(decode(idx, q, n));
  return out;
}

}  // namespace

std::vector<Point> materialize(const CodeSpec& code, u64 point_limit) {
  validate(code);
  struct Materialize {
    const CodeSpec& c;
    u64 limit;
    std::vector<Point> operator()(const Homomorphism& h) const { return homomorphism_kernel(c, h, limit); }
    std::vector<Point> operator()(const Centers& ct) const {
      std::vector<Point> out;
      out.reserve(ct.points.size());
      for (const auto& pt : ct.points) out.push_back(reduce(pt, c.q));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    std::vector<Point> operator()(const Lattice& l) const { return lattice_points(c, l, limit); }
  };
  return std::visit(Materialize{code, point_limit}, code.repr);
}

VerificationResult verify(const CodeSpec& code, u64 point_limit) {
  validate(code);
  const u64 total = require_torus_size(code.q, code.n, point_limit);
  const auto centers = materialize(code, point_limit);
  const auto sphere = lee::enumerate_sphere(code.n, code.e);
  const u64 q = code.q;
  const std::size_t n = code.n;

  std::vector<std::uint8_t> coverage(total, 0);
  Point shifted(n);
  for (const auto& c : centers) {
    for (const auto& offset : sphere.points) {
      for (std::size_t i = 0; i < n; ++i) shifted[i] = reduce(c[i] + offset[i], q);
      auto& cell = coverage[encode(shifted, q)];
      if (cell < 2) ++cell;
    }
  }

  VerificationResult result;
  const auto doubled = std::find_if(coverage.begin(), coverage.end(), [](std::uint8_t v) { return v >= 2; });
  if (doubled != coverage.end()) {
    VerificationWitness w;
    w.point = decode(static_cast<u64>(doubled - coverage.begin()), q, n);
    for (const auto& c : centers) {
      if (lee::lee_distance_torus(c, w.point, q) <= code.e) w.centers.push_back(c);
      if (w.centers.size() == 2) break;
    }
    result.status = Status::NotPacking;
    result.witness = std::move(w);
    return result;
  }
  const auto uncovered = std::find(coverage.begin(), coverage.end(), std::uint8_t{0});
  if (uncovered != coverage.end()) {
    result.status = Status::PackingOnly;
    result.witness = VerificationWitness{decode(static_cast<u64>(uncovered - coverage.begin()), q, n), {}};
    return result;
  }
  result.status = Status::Perfect;
  return result;
}

bool verify_homomorphism_bijective(u64 p, std::size_t n, std::span<const u64> x) {
  if (x.size() != n) throw std::invalid_argument("need exactly n values");
  if (n == 0 || p != lee::sphere_size(n, 2)) {
    throw std::invalid_argument("modulus must equal 2n^2+2n+1");
  }
  const modular::Modulus m(p);
  std::vector<bool> hit(p, false);
  auto mark = [&](u64 v) {
    if (hit[v]) return false;
    hit[v] = true;
    return true;
  };
  if (!mark(0)) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const u64 xi = x[i] % p;
    const u64 twice = modular::add_mod(xi, xi, m);
    if (!mark(xi) || !mark(modular::neg_mod(xi, m)) || !mark(twice) || !mark(modular::neg_mod(twice, m))) {
      return false;
    }
    for (std::size_t j = 0; j < i; ++j) {
      const u64 xj = x[j] % p;
      const u64 sum = modular::add_mod(xi, xj, m);
      const u64 diff = modular::sub_mod(xi, xj, m);
      if (!mark(sum) || !mark(modular::neg_mod(sum, m)) || !mark(diff) || !mark(modular::neg_mod(diff, m))) {
        return false;
      }
    }
  }
  return true;
}

CodeSpec construct_gw(GwFamily family, u64 param) {
  if (param == 0) throw std::invalid_argument("construction parameter must be >= 1");
  const auto s = static_cast<std::int64_t>(param);
  switch (family) {
    case GwFamily::Dim1:
      return CodeSpec{1, param, 2 * param + 1, Centers{{Point{0}}}};
    case GwFamily::Dim2:
      return CodeSpec{2, param, 2 * param * param + 2 * param + 1, Lattice{{{s + 1, s}, {-s, s + 1}}}};
    case GwFamily::Radius1: {
      Homomorphism h{2 * param + 1, {}};
      for (u64 i = 1; i <= param; ++i) h.x.push_back(i);
      return CodeSpec{static_cast<std::size_t>(param), 1, 2 * param + 1, std::move(h)};
    }
  }
  throw std::invalid_argument("unknown construction");
}

LiftedCode lift_code(const CodeSpec& code, u64 point_limit) {
  return LiftedCode{code.n, code.e, code.q, materialize(code, point_limit)};
}

bool contains(const LiftedCode& code, const Point& z) {
  if (z.size() != code.n) throw std::invalid_argument("point has wrong dimension");
  return std::binary_search(code.representatives.begin(), code.representatives.end(), reduce(z, code.q));
}

CodeSpec project_code(std::span<const Point> representatives, u64 q, std::size_t n, u64 e) {
  CodeSpec code{n, e, q, Centers{}};
  auto& pts = std::get<Centers>(code.repr).points;
  for (const auto& r : representatives) {
    if (r.size() != n) throw std::invalid_argument("representative has wrong dimension");
    pts.push_back(reduce(r, q));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  validate(code);
  return code;
}

}  // namespace leecodes::codes
