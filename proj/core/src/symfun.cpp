#include "leecodes/symfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "leecodes/modular.hpp"

namespace leecodes::symfun {

u64 PowerSums::at(u64 k) const {
  if (k >= s.size()) throw std::out_of_range("power sum S_" + std::to_string(2 * k) + " not computed");
  return s[k];
}

PowerSums power_sums(std::span<const u64> x, u64 p, u64 k_max) {
  const modular::Modulus m(p);
  PowerSums ps{p, x.size(), std::vector<u64>(k_max + 1, 0)};
  ps.s[0] = x.size() % p;
  for (u64 xi : x) {
    const u64 sq = modular::mul_mod(xi % p, xi % p, m);
    u64 power = 1;
    for (u64 k = 1; k <= k_max; ++k) {
      power = modular::mul_mod(power, sq, m);
      ps.s[k] = modular::add_mod(ps.s[k], power, m);
    }
  }
  return ps;
}

std::vector<std::vector<u64>> binomials_mod(u64 max_row, u64 p) {
  const modular::Modulus m(p);
  std::vector<std::vector<u64>> c(max_row + 1);
  for (u64 r = 0; r <= max_row; ++r) {
    c[r].assign(r + 1, 1 % p);
    for (u64 j = 1; j < r; ++j) c[r][j] = modular::add_mod(c[r - 1][j - 1], c[r - 1][j], m);
  }
  return c;
}

std::vector<IdentityCheck> check_master_identity(const PowerSums& ps, std::size_t n, u64 p, u64 k_lo, u64 k_hi) {
  if (k_lo == 0) throw std::invalid_argument("identity is stated for k >= 1");
  if (ps.p != p) throw std::invalid_argument("power sums computed for a different modulus");
  if (k_hi > ps.k_max()) throw std::out_of_range("power sums do not cover k = " + std::to_string(k_hi));

  const modular::Modulus m(p);
  const auto binom = binomials_mod(2 * k_hi, p);
  const u64 linear = (4 * (n % p) + 2) % p;
  std::vector<IdentityCheck> out;
  for (u64 k = k_lo; k <= k_hi; ++k) {
    const u64 coeff = modular::add_mod(modular::pow_mod(4, k, m), linear, m);
    u64 cross = 0;
    for (u64 t = 1; t < k; ++t) {
      const u64 term = modular::mul_mod(binom[2 * k][2 * t], modular::mul_mod(ps.at(t), ps.at(k - t), m), m);
      cross = modular::add_mod(cross, term, m);
    }
    IdentityCheck c;
    c.k = k;
    c.lhs = modular::add_mod(modular::mul_mod(coeff, ps.at(k), m), modular::add_mod(cross, cross, m), m);
    c.rhs = (2 * k) % (p - 1) == 0 ? p - 1 : 0;
    out.push_back(c);
  }
  return out;
}

ElementarySymmetric newton_elementary(const PowerSums& ps, std::size_t n, u64 p) {
  if (p <= n || !modular::is_prime(p)) throw std::invalid_argument("Newton recurrence needs a prime p > n");
  if (ps.k_max() < n) throw std::out_of_range("power sums must reach k = n");
  const modular::Modulus m(p);
  ElementarySymmetric es{p, n, std::vector<u64>(n + 1, 0)};
  es.e[0] = 1;
  for (u64 k = 1; k <= n; ++k) {
    u64 acc = 0;
    for (u64 t = 1; t <= k; ++t) {
      const u64 term = modular::mul_mod(es.e[k - t], ps.at(t), m);
      acc = (t % 2 == 1) ? modular::add_mod(acc, term, m) : modular::sub_mod(acc, term, m);
    }
    es.e[k] = modular::mul_mod(acc, modular::pow_mod(k % p, p - 2, m), m);
  }
  return es;
}

VanishingReport check_vanishing(const PowerSums& ps, std::size_t n, criterion::Exponent a, u64 b, u64 k_cap) {
  const u64 p = ps.p;
  const u64 half = (p - 1) / 2;
  const u64 power_sum_end = std::min(half, k_cap);  // exclusive
  if (ps.k_max() + 1 < power_sum_end || ps.k_max() < n) {
    throw std::out_of_range("power sums do not cover the checked ranges");
  }

  VanishingReport r;
  for (u64 k = 1; k < power_sum_end; ++k) {
    if (criterion::x_set_member(k, a, b)) continue;
    r.power_sum_checked.push_back(k);
    if (ps.at(k) != 0) r.power_sum_failed.push_back(k);
  }
  const auto es = newton_elementary(ps, n, p);
  for (u64 k = 1; k <= n; ++k) {
    if (criterion::x_set_member(k, a, b)) continue;
    r.elementary_checked.push_back(k);
    if (es.e[k] != 0) r.elementary_failed.push_back(k);
  }
  r.e_n_nonzero = es.e[n] != 0;
  r.n_in_x = criterion::x_set_member(n, a, b);
  return r;
}

VanishingReport check_vanishing(const witness::Witness& w, criterion::Exponent a, u64 b, u64 k_cap) {
  if (!witness::is_valid(w)) throw std::invalid_argument("not a witness");
  const u64 k_max = std::max<u64>(w.n, k_cap == 0 ? 0 : k_cap - 1);
  return check_vanishing(power_sums(w.x, w.p, k_max), w.n, a, b, k_cap);
}

WitnessAudit audit(const witness::Witness& w, u64 k_max) {
  if (w.n == 0 || w.x.size() != w.n) throw std::invalid_argument("need exactly n values");
  if (k_max == 0) throw std::invalid_argument("k_max must be positive");
  const auto report = criterion::check_n(w.n);
  if (!report.p_is_prime) {
    throw std::invalid_argument("2n^2+2n+1 = " + std::to_string(report.p) + " is not prime");
  }
  WitnessAudit out;
  out.bijective = witness::is_valid(witness::Witness{w.n, report.p, w.x});
  const auto ps = power_sums(w.x, report.p, std::max<u64>(k_max, w.n));
  out.identity = check_master_identity(ps, w.n, report.p, 1, k_max);
  out.vanishing = check_vanishing(ps, w.n, *report.a, report.b->value(), k_max + 1);
  return out;
}

}  // namespace leecodes::symfun
