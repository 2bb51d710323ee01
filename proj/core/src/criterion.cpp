#include "leecodes/criterion.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "leecodes/modular.hpp"

namespace leecodes::criterion {

namespace {

void require_valid_n(u64 n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (n > kMaxN) throw std::invalid_argument("n too large: 2n^2+2n+1 must stay below 2^63");
}

CriterionReport finish(u64 n, u64 p, Exponent a, Exponent b) {
  CriterionReport r;
  r.n = n;
  r.p = p;
  r.p_is_prime = true;
  r.a = a;
  r.b = b;
  r.solution = solve(n, a, b);
  r.verdict = r.solution ? Verdict::CriterionSilent : Verdict::NonexistenceProven;
  return r;
}

CriterionReport composite(u64 n, u64 p) {
  CriterionReport r;
  r.n = n;
  r.p = p;
  r.verdict = Verdict::CompositeP;
  return r;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::CompositeP: return "composite_p";
    case Verdict::CriterionSilent: return "criterion_silent";
    case Verdict::NonexistenceProven: return "nonexistence_proven";
  }
  return "unknown";
}

u64 sphere_prime_candidate(u64 n) {
  require_valid_n(n);
  return 2 * n * n + 2 * n + 1;
}

std::optional<Solution> solve(u64 n, Exponent a, Exponent b) {
  if (!a.is_finite() || a.value() == 0) return std::nullopt;
  const u64 av = a.value();
  for (u64 x = 0; av * (x + 1) <= n; ++x) {
    const u64 rest = n - av * (x + 1);
    if (b.is_finite()) {
      if (rest % b.value() == 0) return Solution{x, rest / b.value()};
    } else if (rest == 0) {
      return Solution{x, 0};
    }
  }
  return std::nullopt;
}

bool x_set_member(u64 k, Exponent a, u64 b) {
  if (b == 0) throw std::invalid_argument("x_set_member: b must be positive");
  if (a.kind() == Exponent::Kind::ExceedsN) {
    throw std::invalid_argument("x_set_member: exponent a is not resolved");
  }
  if (!a.is_finite()) return false;
  for (u64 x = 1; a.value() * x <= k; ++x) {
    if ((k - a.value() * x) % b == 0) return true;
  }
  return false;
}

CriterionReport check_n(u64 n) {
  const u64 p = sphere_prime_candidate(n);
  if (!modular::is_prime(p)) return composite(n, p);

  const modular::Modulus m(p);
  const u64 b = modular::multiplicative_order(4, m, modular::factorize_two_n_n_plus_one(n));
  const u64 target = modular::neg_mod((4 * n + 2) % p, m);
  const auto a = modular::subgroup_dlog(target, 4, b, m);
  return finish(n, p, a ? Exponent::finite(*a) : Exponent::infinite(), Exponent::finite(b));
}

CriterionReport check_n_fast(u64 n) {
  const u64 p = sphere_prime_candidate(n);
  if (!modular::is_prime(p)) return composite(n, p);

  const modular::Modulus m(p);
  const u64 target = modular::neg_mod((4 * n + 2) % p, m);
  std::optional<u64> a, b;
  u64 power = 1;
  // Powers repeat with period b, so nothing new appears after the first 1.
  for (u64 k = 1; k <= n && !b; ++k) {
    power = modular::mul_mod(power, 4, m);
    if (!a && power == target) a = k;
    if (power == 1) b = k;
  }
  return finish(n, p, a ? Exponent::finite(*a) : Exponent::exceeds_n(),
                b ? Exponent::finite(*b) : Exponent::exceeds_n());
}

ScanResult scan(u64 x_max, std::span<const u64> thresholds, const ScanOptions& options) {
  if (x_max == 0) throw std::invalid_argument("scan: x_max must be positive");
  if (!std::is_sorted(thresholds.begin(), thresholds.end()) ||
      std::adjacent_find(thresholds.begin(), thresholds.end()) != thresholds.end()) {
    throw std::invalid_argument("scan: thresholds must be strictly ascending");
  }
  if (!thresholds.empty() && (thresholds.front() == 0 || thresholds.back() > x_max)) {
    throw std::invalid_argument("scan: thresholds must lie in [1, x_max]");
  }
  if (x_max > kMaxN) throw std::invalid_argument("scan: x_max too large");

  const unsigned workers = std::max(1u, options.threads);
  // Per-n verdict bytes: 0 composite, 1 silent, 2 proven. Workers take n in
  // strides so the expensive large-n tail is shared evenly.
  std::vector<std::uint8_t> verdicts(x_max + 1, 0);
  std::vector<CriterionReport> reports(options.collect_reports ? x_max : 0);

  auto work = [&](unsigned id) {
    for (u64 n = 1 + id; n <= x_max; n += workers) {
      const CriterionReport r = check_n_fast(n);
      verdicts[n] = static_cast<std::uint8_t>(r.verdict);
      if (options.collect_reports) reports[n - 1] = r;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }

  ScanResult result;
  result.table.thresholds.assign(thresholds.begin(), thresholds.end());
  u64 primes = 0, applicable = 0;
  std::size_t next = 0;
  for (u64 n = 1; n <= x_max && next < thresholds.size(); ++n) {
    const auto v = static_cast<Verdict>(verdicts[n]);
    if (v != Verdict::CompositeP) ++primes;
    if (v == Verdict::NonexistenceProven) ++applicable;
    while (next < thresholds.size() && thresholds[next] == n) {
      result.table.prime_counts.push_back(primes);
      result.table.applicable_counts.push_back(applicable);
      ++next;
    }
  }
  result.reports = std::move(reports);
  return result;
}

}  // namespace leecodes::criterion
