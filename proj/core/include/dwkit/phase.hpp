#ifndef DWKIT_PHASE_HPP
#define DWKIT_PHASE_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <ostream>

namespace dwkit {

/**
 * An element of Q/Z, standing for the unit complex number exp(2 pi i num/den).
 *
 * Always stored reduced with 0 <= num < den. All U(1)-valued quantities the
 * library handles are roots of unity, so this representation is exact.
 */
class RationalPhase {
 public:
  RationalPhase() = default;
  RationalPhase(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  /// num/den as a double in [0, 1).
  double turns() const;
  std::complex<double> value() const;

  RationalPhase operator-() const;
  RationalPhase& operator+=(const RationalPhase& other);
  RationalPhase& operator-=(const RationalPhase& other);
  RationalPhase& operator*=(std::int64_t factor);

  friend RationalPhase operator+(RationalPhase a, const RationalPhase& b) { return a += b; }
  friend RationalPhase operator-(RationalPhase a, const RationalPhase& b) { return a -= b; }
  friend RationalPhase operator*(RationalPhase a, std::int64_t k) { return a *= k; }
  friend RationalPhase operator*(std::int64_t k, RationalPhase a) { return a *= k; }

  friend bool operator==(const RationalPhase&, const RationalPhase&) = default;
  /// Orders by the real number num/den.
  friend bool operator<(const RationalPhase& a, const RationalPhase& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const RationalPhase& phase);

/**
 * Exact multiset of phases. Summation happens only in value(), always in
 * increasing phase order, so the floating-point result does not depend on
 * insertion order.
 */
class PhaseMultiset {
 public:
  void add(const RationalPhase& phase, std::int64_t multiplicity = 1);
  void merge(const PhaseMultiset& other, std::int64_t scale = 1);

  /// Pairwise sums: the multiset of products of the underlying roots of unity.
  PhaseMultiset convolve(const PhaseMultiset& other) const;

  std::int64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const std::map<RationalPhase, std::int64_t>& counts() const { return counts_; }

  /// Sum of exp(2 pi i phase) with multiplicity.
  std::complex<double> sum() const;

  friend bool operator==(const PhaseMultiset&, const PhaseMultiset&) = default;

 private:
  std::map<RationalPhase, std::int64_t> counts_;
  std::int64_t size_ = 0;
};

}  // namespace dwkit

#endif  // DWKIT_PHASE_HPP
