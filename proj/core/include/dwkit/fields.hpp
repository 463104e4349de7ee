#ifndef DWKIT_FIELDS_HPP
#define DWKIT_FIELDS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "dwkit/abelian.hpp"
#include "dwkit/cobordism.hpp"
#include "dwkit/complex.hpp"
#include "dwkit/homology.hpp"

namespace dwkit {

/// Colour of every edge, oriented from edge_start to edge_end.
struct Colouring {
  std::vector<GroupElement> edges;
  friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Group element per vertex.
struct GaugeTransformation {
  std::vector<GroupElement> vertices;
};

Colouring trivial_colouring(const DeltaComplex& c, const FiniteAbelianGroup& a);

/// g(f2) + g(f0) = g(f1) on every triangle. Throws InputError("missing edge colour") on short input.
bool is_flat(const DeltaComplex& c, const FiniteAbelianGroup& a, const Colouring& colouring);

/// (h.g)_e = h(end) + g_e - h(start).
Colouring gauge_act(const DeltaComplex& c, const FiniteAbelianGroup& a, const GaugeTransformation& h,
                    const Colouring& colouring);

/**
 * A gauge orbit of flat colourings: its representative with identity colours
 * on the spanning forest, plus the induced homomorphism H_1 -> A as an
 * element of the Hom group.
 */
struct FieldClass {
  Colouring colouring;
  GroupElement hom;
  friend bool operator==(const FieldClass& x, const FieldClass& y) { return x.hom == y.hom; }
  friend auto operator<=>(const FieldClass& x, const FieldClass& y) { return x.hom <=> y.hom; }
};

/// The finite set of field classes Hom(H_1, A) on a complex.
class FieldSpace {
 public:
  FieldSpace(DeltaComplex complex, FiniteAbelianGroup target, std::span<const int> bases = {});

  const DeltaComplex& complex() const { return complex_; }
  const FiniteAbelianGroup& target() const { return target_; }
  const HomologyH1& homology() const { return h1_; }
  const HomGroup& hom() const { return hom_; }
  std::int64_t size() const { return hom_.order(); }

  FieldClass from_hom(const GroupElement& phi) const;
  FieldClass at(std::int64_t index) const { return from_hom(hom_.group().element_at(index)); }
  std::int64_t index_of(const FieldClass& f) const { return hom_.group().index_of(f.hom); }
  std::vector<FieldClass> enumerate() const;
  FieldClass trivial() const { return from_hom(hom_.group().identity()); }
  FieldClass add(const FieldClass& x, const FieldClass& y) const { return from_hom(hom_.group().add(x.hom, y.hom)); }
  FieldClass subtract(const FieldClass& x, const FieldClass& y) const {
    return from_hom(hom_.group().subtract(x.hom, y.hom));
  }

  /// Holonomy of a flat colouring along each H_1 generator. Throws DomainError if not flat.
  std::vector<GroupElement> holonomies(const Colouring& colouring) const;
  /// Class of a flat colouring; equal for gauge-equivalent inputs.
  FieldClass canonicalize(const Colouring& colouring) const;

 private:
  DeltaComplex complex_;
  FiniteAbelianGroup target_;
  HomologyH1 h1_;
  HomGroup hom_;
};

/// One-shot canonicalization with explicit base vertices (one per component).
FieldClass canonicalize(const Colouring& colouring, const DeltaComplex& c, const FiniteAbelianGroup& a,
                        std::span<const int> bases = {});

std::vector<FieldClass> enumerate_fields(const DeltaComplex& c, const FiniteAbelianGroup& a);

/**
 * Target for the U(1) theory: a finite H_1 only sees the roots of unity of
 * order dividing its exponent. Throws DomainError("infinite field space")
 * when H_1 has positive rank.
 */
FiniteAbelianGroup u1_field_group(const DeltaComplex& c);

/// F_W^{a0,a1}: a coset of F_W^{0,0} (or empty), each class weighted 1/|coset|.
struct BoundaryConditionedFields {
  std::vector<FieldClass> classes;
  std::vector<FieldClass> kernel;
  bool empty() const { return classes.empty(); }
  std::int64_t size() const { return static_cast<std::int64_t>(classes.size()); }
};

/// Field spaces of a cobordism and of its two ends, with the restriction maps.
class CobordismFields {
 public:
  CobordismFields(const Cobordism& w, const FiniteAbelianGroup& a);

  const Cobordism& cobordism() const { return w_; }
  const FieldSpace& total() const { return total_; }
  const FieldSpace& boundary(Side side) const { return side == Side::incoming ? incoming_ : outgoing_; }

  /// Pullback of a colouring of W to one end.
  Colouring pullback(const Colouring& colouring, Side side) const;
  /// Restriction r_M^W, re-canonicalized with the end's own base vertices.
  FieldClass restrict(const FieldClass& f, Side side) const;
  BoundaryConditionedFields with_boundary(const FieldClass& a0, const FieldClass& a1) const;

 private:
  Cobordism w_;
  FieldSpace total_;
  FieldSpace incoming_;
  FieldSpace outgoing_;
  std::vector<FieldClass> restricted_in_;
  std::vector<FieldClass> restricted_out_;
};

BoundaryConditionedFields fields_with_boundary(const Cobordism& w, const FiniteAbelianGroup& a, const FieldClass& a0,
                                               const FieldClass& a1);

/// Classes on the gluing locus extendable to both sides, each weighted 1/|classes|.
struct SupportingFields {
  std::vector<FieldClass> classes;
  std::int64_t denominator() const { return static_cast<std::int64_t>(classes.size()); }
};

/// Throws DomainError("disconnected gluing locus") unless the common end is connected.
SupportingFields supporting_fields(const Cobordism& first, const Cobordism& second, const FiniteAbelianGroup& a,
                                   const FieldClass& a0, const FieldClass& a1);

}  // namespace dwkit

#endif  // DWKIT_FIELDS_HPP
