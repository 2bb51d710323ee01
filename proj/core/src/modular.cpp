#include "leecodes/modular.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <unordered_map>

namespace leecodes::modular {

u64 pow_mod(u64 base, u64 exp, Modulus m) noexcept {
  u64 result = 1 % m.value();
  base %= m.value();
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

// Strong-probable-prime test to base `witness`; v odd, v > 2.
bool strong_probable_prime(u64 v, u64 witness) {
  const Modulus m(v);
  witness %= v;
  if (witness == 0) return true;
  u64 d = v - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  u64 x = pow_mod(witness, d, m);
  if (x == 1 || x == v - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, m);
    if (x == v - 1) return true;
  }
  return false;
}

constexpr u64 kTrialLimit = 1'000'000;

// Brent's variant of Pollard rho. Deterministic: polynomial constants are
// tried in order 1, 2, 3, ... until a proper factor appears. v must be an odd
// composite.
u64 pollard_brent(u64 v) {
  const Modulus m(v);
  for (u64 c = 1;; ++c) {
    const auto f = [&](u64 x) { return add_mod(mul_mod(x, x, m), c, m); };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        const u64 steps = std::min(kBatch, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, m);
        }
        g = std::gcd(q, v);
        k += steps;
      }
      r <<= 1;
    }
    if (g == v) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, v);
      } while (g == 1);
    }
    if (g != v) return g;
  }
}

void split_into(u64 v, std::map<u64, unsigned>& out) {
  if (v == 1) return;
  if (is_prime(v)) {
    ++out[v];
    return;
  }
  const u64 d = pollard_brent(v);
  split_into(d, out);
  split_into(v / d, out);
}

void trial_divide_into(u64 v, std::map<u64, unsigned>& out) {
  for (u64 d = 2; d * d <= v && d <= kTrialLimit; d += (d == 2 ? 1 : 2)) {
    while (v % d == 0) {
      ++out[d];
      v /= d;
    }
  }
  split_into(v, out);
}

Factorization to_factorization(const std::map<u64, unsigned>& m) {
  Factorization f;
  f.reserve(m.size());
  for (const auto& [prime, exponent] : m) f.push_back({prime, exponent});
  return f;
}

}  // namespace

bool is_prime(u64 v) noexcept {
  if (v < 2) return false;
  for (u64 small : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (v % small == 0) return v == small;
  }
  if (v < 41 * 41) return true;
  // Seven-base set found by Jim Sinclair (2011); no composite below 2^64 is a
  // strong pseudoprime to all of them. See the "Deterministic variants"
  // records maintained at miller-rabin.appspot.com.
  for (u64 witness : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    if (!strong_probable_prime(v, witness)) return false;
  }
  return true;
}

Factorization factorize(u64 v) {
  if (v < 2) throw std::invalid_argument("factorize requires v >= 2");
  std::map<u64, unsigned> acc;
  trial_divide_into(v, acc);
  return to_factorization(acc);
}

Factorization factorize_two_n_n_plus_one(u64 n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  std::map<u64, unsigned> acc;
  ++acc[2];
  trial_divide_into(n, acc);
  trial_divide_into(n + 1, acc);
  return to_factorization(acc);
}

u64 expand(const Factorization& f) {
  u64 v = 1;
  for (const auto& [prime, exponent] : f) {
    for (unsigned i = 0; i < exponent; ++i) {
      if (__builtin_mul_overflow(v, prime, &v)) throw std::overflow_error("factorization exceeds 64 bits");
    }
  }
  return v;
}

u64 multiplicative_order(u64 g, Modulus p, const Factorization& group_order_factors) {
  g %= p.value();
  if (g == 0) throw std::domain_error("multiplicative_order: g is 0 mod p");
  u64 order = expand(group_order_factors);
  for (const auto& [prime, exponent] : group_order_factors) {
    for (unsigned i = 0; i < exponent && order % prime == 0; ++i) {
      if (pow_mod(g, order / prime, p) != 1) break;
      order /= prime;
    }
  }
  return order;
}

std::optional<u64> subgroup_dlog(u64 target, u64 g, u64 order_of_g, Modulus p) {
  target %= p.value();
  g %= p.value();
  if (order_of_g == 0) throw std::invalid_argument("subgroup_dlog: order must be positive");
  if (target == 1) return order_of_g;
  if (target == 0) return std::nullopt;

  const u64 step = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(order_of_g))));
  // baby[g^j] = j for 0 <= j < step; powers are distinct since step <= order.
  std::unordered_map<u64, u64> baby;
  baby.reserve(step * 2);
  u64 power = 1;
  for (u64 j = 0; j < step; ++j) {
    baby.emplace(power, j);
    power = mul_mod(power, g, p);
  }
  // Multiplying by g^-step walks target * g^(-i*step); the first hit in
  // ascending i gives the least exponent in [0, order).
  const u64 giant = pow_mod(g, (order_of_g - step % order_of_g) % order_of_g, p);
  u64 current = target;
  for (u64 i = 0; i * step < order_of_g; ++i) {
    if (auto it = baby.find(current); it != baby.end()) {
      const u64 k = i * step + it->second;
      if (k >= order_of_g) return std::nullopt;
      return k == 0 ? order_of_g : k;
    }
    current = mul_mod(current, giant, p);
  }
  return std::nullopt;
}

}  // namespace leecodes::modular
