#ifndef DWKIT_LENS_HPP
#define DWKIT_LENS_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dwkit/fields.hpp"
#include "dwkit/invariant.hpp"

namespace dwkit {

/// L(p, q) with p >= 1 and gcd(p, q) = 1; q is kept reduced into [0, p).
class LensSpace {
 public:
  LensSpace(std::int64_t p, std::int64_t q);
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  /// q^{-1} mod p.
  std::int64_t q_inverse() const;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

/// (1/p) sum_{l=0}^{p-1} exp(2 pi i k qbar l^2 / p), with exact phases.
InvariantValue lens_invariant(std::int64_t p, std::int64_t q, std::int64_t k);

/**
 * Flat Z/p colouring of build_lens(p, q) whose holonomy around the axis is
 * l: tetrahedron i carries l, i qbar l and qbar l on its ascending edges.
 */
Colouring lens_colouring(std::int64_t p, std::int64_t q, std::int64_t l);

/// qq' = a^2 mod p for some a; with oriented = false also qq' = -a^2.
bool homotopy_equivalent(std::int64_t p, std::int64_t q, std::int64_t q2, bool oriented = true);

/// Legendre signs of q at the odd primes of p, plus q mod 4 or mod 8 when 4 | p or 8 | p.
struct HomotopyClassLabel {
  std::int64_t p = 1;
  std::vector<std::pair<std::int64_t, int>> legendre;
  std::int64_t two_modulus = 1;
  std::int64_t two_residue = 0;

  std::string to_string() const;
  friend bool operator==(const HomotopyClassLabel&, const HomotopyClassLabel&) = default;
};

HomotopyClassLabel homotopy_label(std::int64_t p, std::int64_t q);

struct HomotopyClass {
  HomotopyClassLabel label;
  std::vector<std::int64_t> members;
};

/// Units mod p partitioned by homotopy_equivalent, ordered by smallest member.
std::vector<HomotopyClass> homotopy_classes(std::int64_t p);

/// 2^m, 2^{m+1} or 2^{m+2} for m odd primes of p and 2^e || p with e <= 1, e = 2, e >= 3.
std::int64_t expected_class_count(std::int64_t p);

/// p/p_i for the odd primes, then p/4 (4 || p) or p/8 (8 | p), then p; no repeats.
std::vector<std::int64_t> distinguishing_levels(std::int64_t p);

/// (Z^k(L(p, q)))_k over the given levels.
std::vector<std::complex<double>> fingerprint(std::int64_t p, std::int64_t q, const std::vector<std::int64_t>& levels);

/// Units mod p grouped by equal fingerprints (componentwise within tolerance), ordered by smallest member.
std::vector<std::vector<std::int64_t>> fingerprint_partition(std::int64_t p, const std::vector<std::int64_t>& levels,
                                                             double tolerance = kDefaultTolerance);

}  // namespace dwkit

#endif  // DWKIT_LENS_HPP
