#pragma once

// Power sums and elementary symmetric functions of the squares x_i^2 over
// Z/pZ, and instance checks of the identities a witness must satisfy.
//
// For a witness, the residues {0, +-x_i, +-2x_i, +-x_i +- x_j} are all of
// Z/pZ, so summing their 2k-th powers gives
//
//   (4^k + 4n + 2) S_2k + 2 sum_{t=1}^{k-1} C(2k, 2t) S_2t S_2(k-t)
//       = -1 if (p - 1) | 2k, else 0,
//
// with S_2k = sum_i x_i^{2k}. Writing X = { a*x + b*y : x >= 1, y >= 0 },
// induction on k then forces S_2k = 0 for k < (p-1)/2 outside X, and via
// Newton's identities e_k = 0 for k <= n outside X. Since e_n = (x_1...x_n)^2
// is nonzero, n must lie in X.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "leecodes/criterion.hpp"
#include "leecodes/witness.hpp"

namespace leecodes::symfun {

using u64 = std::uint64_t;

struct PowerSums {
  u64 p = 0;
  std::size_t n = 0;
  /// s[k] = S_2k mod p for k = 0..k_max (s[0] = n mod p).
  std::vector<u64> s;

  u64 k_max() const { return s.empty() ? 0 : s.size() - 1; }
  /// Throws std::out_of_range beyond k_max.
  u64 at(u64 k) const;
};

struct ElementarySymmetric {
  u64 p = 0;
  std::size_t n = 0;
  /// e[k] for k = 0..n, e[0] = 1, in the squares x_i^2.
  std::vector<u64> e;
};

PowerSums power_sums(std::span<const u64> x, u64 p, u64 k_max);

/// C(r, c) mod p for 0 <= c <= r <= max_row via Pascal's rule.
std::vector<std::vector<u64>> binomials_mod(u64 max_row, u64 p);

struct IdentityCheck {
  u64 k = 0;
  u64 lhs = 0;
  u64 rhs = 0;  // 0, or p - 1 when (p - 1) | 2k
  bool holds() const { return lhs == rhs; }
};

/// Evaluates both sides of the power-sum identity for k in [k_lo, k_hi].
/// Throws std::out_of_range when ps does not reach k_hi.
std::vector<IdentityCheck> check_master_identity(const PowerSums& ps, std::size_t n, u64 p, u64 k_lo, u64 k_hi);

/// k e_k = sum_{t=1}^{k} (-1)^{t-1} e_{k-t} S_2t, solved mod p. Requires
/// p prime, p > n, and ps.k_max() >= n.
ElementarySymmetric newton_elementary(const PowerSums& ps, std::size_t n, u64 p);

struct VanishingReport {
  /// k checked for S_2k = 0 (k < min((p-1)/2, k_cap), k not in X), and those
  /// where it failed.
  std::vector<u64> power_sum_checked;
  std::vector<u64> power_sum_failed;
  /// k <= n not in X checked for e_k = 0, and failures.
  std::vector<u64> elementary_checked;
  std::vector<u64> elementary_failed;
  bool e_n_nonzero = false;
  bool n_in_x = false;

  bool ok() const {
    return power_sum_failed.empty() && elementary_failed.empty() && e_n_nonzero && n_in_x;
  }
};

inline u64 default_k_cap(std::size_t n) { return 2 * n + 4; }

/// Vanishing checks evaluated on given power sums (which need k_max >= max(n,
/// k_cap - 1)); exposed separately so corrupted inputs can be examined.
VanishingReport check_vanishing(const PowerSums& ps, std::size_t n, criterion::Exponent a, u64 b, u64 k_cap);

/// Same on a concrete witness. Throws std::invalid_argument if w is invalid.
VanishingReport check_vanishing(const witness::Witness& w, criterion::Exponent a, u64 b, u64 k_cap);

/// Everything the verify-witness command reports for a candidate x. The
/// identity and vanishing checks run even when x is not bijective, so failures on
/// non-witnesses are visible.
struct WitnessAudit {
  bool bijective = false;
  std::vector<IdentityCheck> identity;  // k = 1..k_max
  VanishingReport vanishing;
};

/// p = 2n^2 + 2n + 1 must be prime (std::invalid_argument otherwise). a and b
/// come from criterion::check_n; k_max bounds both the identity range and the
/// power-sum vanishing range.
WitnessAudit audit(const witness::Witness& w, u64 k_max);

}  // namespace leecodes::symfun
