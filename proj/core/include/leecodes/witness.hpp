#pragma once

// Exhaustive search for x in (Z/pZ)^n, p = 2n^2 + 2n + 1 prime, such that the
// homomorphism e_i -> x_i maps S(n, 2) bijectively onto Z/pZ. Such an x exists
// iff Z^n admits a tiling by S(n, 2) (p prime, so the cluster has prime
// size), so an exhausted search with no hits is a nonexistence proof.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leecodes/codes.hpp"

namespace leecodes::witness {

using u64 = std::uint64_t;

struct Witness {
  std::size_t n = 0;
  u64 p = 0;
  std::vector<u64> x;

  friend bool operator==(const Witness&, const Witness&) = default;
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct SearchOptions {
  bool find_all = false;
  /// Stop after this many placements; the outcome then reports exhausted = false.
  std::optional<u64> node_limit;
  /// When false, every ordered tuple in ((Z/pZ) \ {0})^n is searched and raw
  /// (non-canonical) witnesses are returned.
  bool symmetry = true;
  /// Parallel over choices of the second coordinate. Ignored when node_limit
  /// is set, so truncated runs stay reproducible.
  unsigned threads = 1;
};

struct SearchOutcome {
  /// Sorted. Canonical forms when symmetry reduction is on.
  std::vector<Witness> witnesses;
  /// The whole (reduced) search space was traversed.
  bool exhausted = false;
  /// Successful placements of a coordinate value.
  u64 nodes_explored = 0;
  std::string symmetry_classes_note;
};

/// Throws std::invalid_argument if n == 0 or 2n^2 + 2n + 1 is not prime.
SearchOutcome search(std::size_t n, const SearchOptions& options = {});

/// Orbit representative under scaling by units, coordinate permutations and
/// per-coordinate sign flips: over all scalings c, fold each c*x_i to
/// min(c*x_i, p - c*x_i), sort ascending, and keep the lexicographically least
/// vector. The result always starts with 1.
Witness canonicalize(const Witness& w);

bool is_valid(const Witness& w);

/// Homomorphism code over (Z/pZ)^n with e = 2. Throws std::invalid_argument if
/// w is not a witness.
codes::CodeSpec witness_to_code(const Witness& w);

}  // namespace leecodes::witness
