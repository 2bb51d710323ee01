#pragma once

// Number-theoretic nonexistence test for perfect 2-error-correcting Lee codes
// in Z^n. With p = 2n^2 + 2n + 1 prime, let a be the least positive exponent
// with 4^a = -(4n + 2) (mod p) and b the multiplicative order of 4 mod p.
// If a(x + 1) + b*y = n has no solution in nonnegative integers, no such code
// exists.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace leecodes::criterion {

using u64 = std::uint64_t;

/// Exponent a or b. `ExceedsN` is only produced by the bounded fast path and
/// means "no hit among 1..n"; it never asserts that the exponent is infinite.
class Exponent {
 public:
  enum class Kind { Finite, Infinite, ExceedsN };

  static constexpr Exponent finite(u64 v) { return Exponent(Kind::Finite, v); }
  static constexpr Exponent infinite() { return Exponent(Kind::Infinite, 0); }
  static constexpr Exponent exceeds_n() { return Exponent(Kind::ExceedsN, 0); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  /// Only meaningful when is_finite().
  constexpr u64 value() const noexcept { return value_; }

  friend constexpr bool operator==(const Exponent&, const Exponent&) = default;

 private:
  constexpr Exponent(Kind k, u64 v) : kind_(k), value_(v) {}
  Kind kind_;
  u64 value_;
};

enum class Verdict { CompositeP, CriterionSilent, NonexistenceProven };

std::string_view to_string(Verdict v) noexcept;

struct Solution {
  u64 x;
  u64 y;
  friend bool operator==(const Solution&, const Solution&) = default;
};

struct CriterionReport {
  u64 n = 0;
  u64 p = 0;
  bool p_is_prime = false;
  std::optional<Exponent> a;  // present iff p_is_prime
  std::optional<Exponent> b;  // present iff p_is_prime
  std::optional<Solution> solution;
  Verdict verdict = Verdict::CompositeP;

  friend bool operator==(const CriterionReport&, const CriterionReport&) = default;
};

/// Largest n accepted: keeps 2n^2 + 2n + 1 below 2^63.
inline constexpr u64 kMaxN = 2'147'483'647;

/// 2n^2 + 2n + 1, i.e. |S(n, 2)|.
u64 sphere_prime_candidate(u64 n);

/// Exact report: b by factoring p - 1 = 2n(n+1), a by discrete log in <4>.
/// Throws std::invalid_argument for n == 0 or n > kMaxN.
CriterionReport check_n(u64 n);

/// Same verdict and solution as check_n at O(n) multiplications. Only the
/// exponents 1..n of 4 are examined: a solution needs a <= n, and when b > n
/// it needs y = 0, so exponents beyond n never change the answer. a and b
/// above n are reported as Exponent::exceeds_n().
CriterionReport check_n_fast(u64 n);

/// First solution (x, y >= 0, x ascending) of a(x + 1) + b*y = n, if any.
/// A non-finite a admits no solution; a non-finite b restricts to y = 0.
std::optional<Solution> solve(u64 n, Exponent a, Exponent b);

/// k in X = { a*x + b*y : x >= 1, y >= 0 }. Infinite a gives false.
/// Throws std::invalid_argument when a is ExceedsN or b == 0.
bool x_set_member(u64 k, Exponent a, u64 b);

struct ScanTable {
  std::vector<u64> thresholds;
  std::vector<u64> prime_counts;
  std::vector<u64> applicable_counts;

  friend bool operator==(const ScanTable&, const ScanTable&) = default;
};

struct ScanOptions {
  unsigned threads = 1;
  bool collect_reports = false;
};

struct ScanResult {
  ScanTable table;
  /// One report per n in 1..x_max in ascending n, when collect_reports is set.
  std::vector<CriterionReport> reports;
};

/// Counts, for each threshold t, the n <= t with p prime and the n <= t with
/// verdict NonexistenceProven. Thresholds must be ascending and <= x_max.
/// Results do not depend on the thread count.
ScanResult scan(u64 x_max, std::span<const u64> thresholds, const ScanOptions& options = {});

}  // namespace leecodes::criterion
