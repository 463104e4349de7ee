#ifndef DWKIT_INVARIANT_HPP
#define DWKIT_INVARIANT_HPP

#include <complex>
#include <cstdint>
#include <span>

#include "dwkit/cobordism.hpp"
#include "dwkit/cocycles.hpp"
#include "dwkit/fields.hpp"
#include "dwkit/phase.hpp"

namespace dwkit {

inline constexpr double kDefaultTolerance = 1e-9;

/// (1/denominator) * sum of exp(2 pi i phase) over an exact multiset of phases.
class InvariantValue {
 public:
  /// The zero value (no terms).
  InvariantValue() = default;
  InvariantValue(PhaseMultiset phases, std::int64_t denominator);
  static InvariantValue one();

  const PhaseMultiset& phases() const { return phases_; }
  std::int64_t denominator() const { return denominator_; }
  std::int64_t terms() const { return phases_.size(); }
  std::complex<double> value() const;
  bool near(std::complex<double> z, double tolerance = kDefaultTolerance) const;

  friend InvariantValue operator*(const InvariantValue& x, const InvariantValue& y);
  /// Uniform average; exact, over the lcm of the denominators. Empty input gives zero.
  static InvariantValue average(std::span<const InvariantValue> values);

 private:
  PhaseMultiset phases_;
  std::int64_t denominator_ = 1;
};

/// sum_t eps_t w(colours of the ascending edges of t); w must have degree dim c.
RationalPhase weight(const DeltaComplex& c, const FundamentalCycle& orientation, const FiniteAbelianGroup& a,
                     const GroupCochain& w, const Colouring& colouring);

/// Average of exp(2 pi i weight) over all field classes. jobs <= 1 runs inline.
InvariantValue state_sum_closed(const Cobordism& closed, const FiniteAbelianGroup& a, const GroupCochain& w,
                                int jobs = 1);
/// Same, orienting the complex by the default rule.
InvariantValue state_sum_closed(const DeltaComplex& c, const FiniteAbelianGroup& a, const GroupCochain& w,
                                int jobs = 1);

/**
 * Colouring in the class f that restricts exactly to the canonical
 * colourings of a0 and a1, obtained by a gauge transformation vanishing at
 * each boundary base vertex and at interior vertices. Throws DomainError if
 * f does not restrict to (a0, a1).
 */
Colouring boundary_adjusted_representative(const CobordismFields& fields, const FieldClass& f, const FieldClass& a0,
                                           const FieldClass& a1);

/// K_W(a0, a1); zero when no field has these boundary classes.
InvariantValue matrix_element(const CobordismFields& fields, const GroupCochain& w, const FieldClass& a0,
                              const FieldClass& a1);
InvariantValue matrix_element(const Cobordism& cob, const FiniteAbelianGroup& a, const GroupCochain& w,
                              const FieldClass& a0, const FieldClass& a1);

/// Average over supporting fields alpha of K_second(alpha, a1) K_first(a0, alpha).
InvariantValue glued_invariant(const Cobordism& first, const Cobordism& second, const FiniteAbelianGroup& a,
                               const GroupCochain& w, const FieldClass& a0, const FieldClass& a1);

/// Z(S^1 x M) as the average over s in A of Z^{w \ s}(M).
InvariantValue circle_product_invariant(const DeltaComplex& m, const FiniteAbelianGroup& a, const GroupCochain& w,
                                        int jobs = 1);

/// Z(T^2) = (1/|A|^2) sum_{x,y} b(x,y) - b(y,x) raised to the g-th power.
InvariantValue surface_invariant_by_genus(int g, const FiniteAbelianGroup& a, const GroupCochain& b);

}  // namespace dwkit

#endif  // DWKIT_INVARIANT_HPP
