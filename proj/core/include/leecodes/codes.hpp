#pragma once

// Lee codes in (Z/qZ)^n: three representations, exact tiling verification,
// the Golomb-Welch constructions, and lifting to / projecting from Z^n.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "leecodes/lee.hpp"

namespace leecodes::codes {

using u64 = std::uint64_t;
using lee::Point;

/// Kernel of v -> sum_i v_i * x_i (mod p) in (Z/pZ)^n. The modulus is the
/// code's q; it need not be prime (the radius-1 family uses 2n + 1).
struct Homomorphism {
  u64 p = 0;
  std::vector<u64> x;
};

struct Centers {
  std::vector<Point> points;
};

/// Integer combinations of the basis rows, reduced mod q. Valid only when the
/// lattice contains qZ^n.
struct Lattice {
  std::vector<std::vector<std::int64_t>> basis;
};

using Representation = std::variant<Homomorphism, Centers, Lattice>;

struct CodeSpec {
  std::size_t n = 0;
  u64 e = 0;
  u64 q = 0;
  Representation repr;
};

enum class Status { Perfect, PackingOnly, NotPacking };

struct VerificationWitness {
  Point point;
  /// Two distinct centers within distance e of `point` (NotPacking only).
  std::vector<Point> centers;
};

struct VerificationResult {
  Status status = Status::Perfect;
  /// Lexicographically least violating point; absent when Perfect.
  std::optional<VerificationWitness> witness;
};

/// Raised when q^n exceeds the configured point limit. Distinct from a verdict.
class TooLargeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr u64 kDefaultPointLimit = 1'000'000'000;

/// Sorted, duplicate-free centers in canonical residues. Throws
/// std::invalid_argument for malformed specs (wrong dimensions, q < 2e + 1,
/// lattice not containing qZ^n, empty center list) and TooLargeError when a
/// torus-sized bitmap would exceed point_limit.
std::vector<Point> materialize(const CodeSpec& code, u64 point_limit = kDefaultPointLimit);

/// Exact coverage count of every torus point by the translated spheres
/// S(n, e, q), saturating at 2. Throws TooLargeError when q^n > point_limit.
VerificationResult verify(const CodeSpec& code, u64 point_limit = kDefaultPointLimit);

/// For p = 2n^2 + 2n + 1: whether {0}, {+-x_i}, {+-2x_i}, {+-x_i +- x_j}
/// (i < j) are p distinct residues, i.e. whether the homomorphism sends
/// S(n, 2) bijectively onto Z/pZ. Since the kernel has index p and
/// |S(n, 2)| = p, bijectivity is equivalent to the kernel being a perfect
/// code, which makes this an O(n^2) substitute for verify() when p^n is out of
/// reach. Throws std::invalid_argument if p != 2n^2 + 2n + 1 or |x| != n.
bool verify_homomorphism_bijective(u64 p, std::size_t n, std::span<const u64> x);

enum class GwFamily {
  Dim1,     // PL(1, e, 2e+1): centers {0}
  Dim2,     // PL(2, e, 2e^2+2e+1): lattice rows (e+1, e), (-e, e+1)
  Radius1,  // PL(n, 1, 2n+1): kernel of v -> sum_i i*v_i mod 2n+1
};

/// `param` is e for Dim1/Dim2 and n for Radius1; must be >= 1.
CodeSpec construct_gw(GwFamily family, u64 param);

/// A code in Z^n that is a union of cosets r + qZ^n.
struct LiftedCode {
  std::size_t n = 0;
  u64 e = 0;
  u64 q = 0;
  std::vector<Point> representatives;  // canonical residues, sorted
};

LiftedCode lift_code(const CodeSpec& code, u64 point_limit = kDefaultPointLimit);

/// Whether the integer point z belongs to the lifted code.
bool contains(const LiftedCode& code, const Point& z);

/// Centers code from coset representatives (reduced mod q, deduplicated).
CodeSpec project_code(std::span<const Point> representatives, u64 q, std::size_t n, u64 e);

}  // namespace leecodes::codes
