#pragma once

// Exact 64-bit modular arithmetic, deterministic primality, factorization,
// multiplicative order and discrete logarithm inside a cyclic subgroup.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace leecodes::modular {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

/// A modulus m >= 2. Operations taking a Modulus return residues in [0, m).
class Modulus {
 public:
  explicit Modulus(u64 value) : value_(value) {
    if (value < 2) throw std::invalid_argument("modulus must be >= 2");
  }
  constexpr u64 value() const noexcept { return value_; }
  constexpr operator u64() const noexcept { return value_; }

 private:
  u64 value_;
};

struct PrimePower {
  u64 prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
using Factorization = std::vector<PrimePower>;

inline u64 mul_mod(u64 a, u64 b, Modulus m) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % m.value());
}

inline u64 add_mod(u64 a, u64 b, Modulus m) noexcept {
  const u64 s = a + b;
  return (s >= m.value() || s < a) ? s - m.value() : s;
}

inline u64 sub_mod(u64 a, u64 b, Modulus m) noexcept {
  return a >= b ? a - b : a + (m.value() - b);
}

inline u64 neg_mod(u64 a, Modulus m) noexcept { return a == 0 ? 0 : m.value() - a; }

u64 pow_mod(u64 base, u64 exp, Modulus m) noexcept;

/// Deterministic for every 64-bit input.
bool is_prime(u64 v) noexcept;

/// Complete factorization of v >= 2 (trial division, then Pollard rho).
Factorization factorize(u64 v);

/// Factorization of 2n(n+1) = 2n^2 + 2n, assembled from the factors of n and
/// n + 1 so that only numbers of size ~n are ever split.
Factorization factorize_two_n_n_plus_one(u64 n);

/// Product of prime^exponent; throws std::overflow_error past 2^64.
u64 expand(const Factorization& f);

/// Least b >= 1 with g^b = 1 (mod p), where group_order_factors factors p - 1.
/// Throws std::domain_error when g = 0 (mod p).
u64 multiplicative_order(u64 g, Modulus p, const Factorization& group_order_factors);

/// Least k >= 1 with g^k = target (mod p), or nullopt when target is not in <g>.
/// Baby-step giant-step over the subgroup of the given order; target = 1 yields
/// order_of_g.
std::optional<u64> subgroup_dlog(u64 target, u64 g, u64 order_of_g, Modulus p);

}  // namespace leecodes::modular
