#ifndef DWKIT_ABELIAN_HPP
#define DWKIT_ABELIAN_HPP

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dwkit/phase.hpp"

namespace dwkit {

/// Residue tuple; entry i lives in Z/d_i of the parent group.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> residues) : residues_(std::move(residues)) {}

  const std::vector<std::int64_t>& residues() const { return residues_; }
  std::int64_t operator[](std::size_t i) const { return residues_[i]; }
  std::size_t rank() const { return residues_.size(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<std::int64_t> residues_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

/**
 * The finite abelian group Z/d_1 + ... + Z/d_r, written additively.
 *
 * Factor i is also read inside U(1) through r -> exp(2 pi i r/d_i); the
 * builtin U(1) cocycles use that reading.
 */
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli);

  static FiniteAbelianGroup cyclic(std::int64_t n) { return FiniteAbelianGroup({n}); }

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  std::int64_t order() const { return order_; }
  /// lcm of the moduli.
  std::int64_t exponent() const;

  GroupElement identity() const;
  /// Reduces each residue into [0, d_i).
  GroupElement element(std::vector<std::int64_t> residues) const;
  bool contains(const GroupElement& g) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement subtract(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement scale(const GroupElement& a, std::int64_t k) const;

  /// Mixed-radix index in [0, order); residue 0 is least significant.
  std::int64_t index_of(const GroupElement& g) const;
  GroupElement element_at(std::int64_t index) const;
  std::vector<GroupElement> elements() const;

  /// Residue i read as a point of U(1).
  RationalPhase coordinate_phase(const GroupElement& g, std::size_t i) const;

  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  std::vector<std::int64_t> moduli_;
  std::int64_t order_ = 1;
};

/// Z^free_rank + Z/t_1 + ... in invariant-factor form (t_i | t_{i+1}, t_i >= 2).
struct FinitelyGeneratedAbelianGroup {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  /// Normalizes arbitrary cyclic orders (0 meaning Z) into invariant factors.
  static FinitelyGeneratedAbelianGroup from_cyclic_orders(std::span<const std::int64_t> orders);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// Generator orders in presentation order: torsion first, then 0 per free generator.
  std::vector<std::int64_t> generator_orders() const;
  std::string to_string() const;

  friend bool operator==(const FinitelyGeneratedAbelianGroup&, const FinitelyGeneratedAbelianGroup&) = default;
};

/// Direct sum of two groups in invariant-factor form.
FinitelyGeneratedAbelianGroup direct_sum(const FinitelyGeneratedAbelianGroup& a,
                                         const FinitelyGeneratedAbelianGroup& b);

/**
 * Hom(source, target) for a finitely generated source and finite target.
 *
 * The group has one cyclic factor of order gcd(o_j, d_i) for every source
 * generator j (order o_j, 0 when free) and target factor i, in j-major order.
 */
class HomGroup {
 public:
  HomGroup(std::vector<std::int64_t> source_orders, FiniteAbelianGroup target);

  const FiniteAbelianGroup& group() const { return group_; }
  const FiniteAbelianGroup& target() const { return target_; }
  std::int64_t order() const { return group_.order(); }
  std::size_t source_generator_count() const { return source_orders_.size(); }

  /// Images of the source generators under the homomorphism `phi`.
  std::vector<GroupElement> images(const GroupElement& phi) const;
  /// Inverse of images(); throws DomainError when the images are not a homomorphism.
  GroupElement from_images(std::span<const GroupElement> images) const;

 private:
  std::vector<std::int64_t> source_orders_;
  FiniteAbelianGroup target_;
  FiniteAbelianGroup group_;
};

HomGroup hom_group(const FinitelyGeneratedAbelianGroup& source, const FiniteAbelianGroup& target);

}  // namespace dwkit

#endif  // DWKIT_ABELIAN_HPP
