#include "dwkit/fields.hpp"

#include "dwkit/error.hpp"

namespace dwkit {

namespace {

void require_coloured(const DeltaComplex& c, const FiniteAbelianGroup& a, const Colouring& colouring) {
  if (colouring.edges.size() < static_cast<std::size_t>(c.count(1))) throw InputError("missing edge colour");
  for (const auto& g : colouring.edges) {
    if (!a.contains(g)) throw InputError("edge colour outside the target group");
  }
}

}  // namespace

Colouring trivial_colouring(const DeltaComplex& c, const FiniteAbelianGroup& a) {
  return Colouring{std::vector<GroupElement>(static_cast<std::size_t>(c.count(1)), a.identity())};
}

bool is_flat(const DeltaComplex& c, const FiniteAbelianGroup& a, const Colouring& colouring) {
  require_coloured(c, a, colouring);
  if (c.dimension() < 2) return true;
  for (int t = 0; t < c.count(2); ++t) {
    const auto& g0 = colouring.edges[static_cast<std::size_t>(c.face(2, t, 0))];
    const auto& g1 = colouring.edges[static_cast<std::size_t>(c.face(2, t, 1))];
    const auto& g2 = colouring.edges[static_cast<std::size_t>(c.face(2, t, 2))];
    if (a.add(g2, g0) != g1) return false;
  }
  return true;
}

Colouring gauge_act(const DeltaComplex& c, const FiniteAbelianGroup& a, const GaugeTransformation& h,
                    const Colouring& colouring) {
  require_coloured(c, a, colouring);
  if (h.vertices.size() < static_cast<std::size_t>(c.vertex_count())) throw InputError("missing gauge value");
  Colouring out = colouring;
  for (int e = 0; e < c.count(1); ++e) {
    auto& g = out.edges[static_cast<std::size_t>(e)];
    g = a.subtract(a.add(g, h.vertices[static_cast<std::size_t>(c.edge_end(e))]),
                   h.vertices[static_cast<std::size_t>(c.edge_start(e))]);
  }
  return out;
}

FieldSpace::FieldSpace(DeltaComplex complex, FiniteAbelianGroup target, std::span<const int> bases)
    : complex_(std::move(complex)),
      target_(std::move(target)),
      h1_(homology_h1(complex_, bases)),
      hom_(h1_.generator_orders, target_) {}

FieldClass FieldSpace::from_hom(const GroupElement& phi) const {
  const auto images = hom_.images(phi);
  FieldClass f{trivial_colouring(complex_, target_), phi};
  for (std::size_t e = 0; e < f.colouring.edges.size(); ++e) {
    const auto& coef = h1_.edge_coefficients[e];
    GroupElement g = target_.identity();
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (coef[j] != 0) g = target_.add(g, target_.scale(images[j], coef[j]));
    }
    f.colouring.edges[e] = std::move(g);
  }
  return f;
}

std::vector<FieldClass> FieldSpace::enumerate() const {
  std::vector<FieldClass> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::int64_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

std::vector<GroupElement> FieldSpace::holonomies(const Colouring& colouring) const {
  if (!is_flat(complex_, target_, colouring)) throw DomainError("colouring is not flat");
  std::vector<GroupElement> out;
  for (const auto& chain : h1_.generator_chains) {
    GroupElement g = target_.identity();
    for (std::size_t e = 0; e < chain.size(); ++e) {
      if (chain[e] != 0) g = target_.add(g, target_.scale(colouring.edges[e], chain[e]));
    }
    out.push_back(std::move(g));
  }
  return out;
}

FieldClass FieldSpace::canonicalize(const Colouring& colouring) const {
  const auto images = holonomies(colouring);
  return from_hom(hom_.from_images(images));
}

FieldClass canonicalize(const Colouring& colouring, const DeltaComplex& c, const FiniteAbelianGroup& a,
                        std::span<const int> bases) {
  return FieldSpace(c, a, bases).canonicalize(colouring);
}

std::vector<FieldClass> enumerate_fields(const DeltaComplex& c, const FiniteAbelianGroup& a) {
  return FieldSpace(c, a).enumerate();
}

FiniteAbelianGroup u1_field_group(const DeltaComplex& c) {
  const auto h = homology_h1(c);
  if (!h.group.is_finite()) {
    throw DomainError("infinite field space: H_1 = " + h.group.to_string() + " has positive rank over U(1)");
  }
  std::int64_t exponent = h.group.torsion.empty() ? 1 : h.group.torsion.back();
  return FiniteAbelianGroup::cyclic(exponent);
}

CobordismFields::CobordismFields(const Cobordism& w, const FiniteAbelianGroup& a)
    : w_(w),
      total_(w.total(), a),
      incoming_(w.incoming().complex, a),
      outgoing_(w.outgoing().complex, a) {
  for (const auto& f : total_.enumerate()) {
    restricted_in_.push_back(restrict(f, Side::incoming));
    restricted_out_.push_back(restrict(f, Side::outgoing));
  }
}

Colouring CobordismFields::pullback(const Colouring& colouring, Side side) const {
  const BoundaryPart& part = w_.boundary(side);
  Colouring out;
  if (part.empty() || part.complex.dimension() < 1) return out;
  for (int e : part.embedding[1]) out.edges.push_back(colouring.edges[static_cast<std::size_t>(e)]);
  return out;
}

FieldClass CobordismFields::restrict(const FieldClass& f, Side side) const {
  const FieldSpace& space = boundary(side);
  if (space.complex().count(1) == 0) return space.trivial();
  return space.canonicalize(pullback(f.colouring, side));
}

BoundaryConditionedFields CobordismFields::with_boundary(const FieldClass& a0, const FieldClass& a1) const {
  BoundaryConditionedFields out;
  const FieldClass zero_in = incoming_.trivial();
  const FieldClass zero_out = outgoing_.trivial();
  for (std::int64_t i = 0; i < total_.size(); ++i) {
    const auto& rin = restricted_in_[static_cast<std::size_t>(i)];
    const auto& rout = restricted_out_[static_cast<std::size_t>(i)];
    if (rin == a0 && rout == a1) out.classes.push_back(total_.at(i));
    if (rin == zero_in && rout == zero_out) out.kernel.push_back(total_.at(i));
  }
  return out;
}

BoundaryConditionedFields fields_with_boundary(const Cobordism& w, const FiniteAbelianGroup& a, const FieldClass& a0,
                                               const FieldClass& a1) {
  return CobordismFields(w, a).with_boundary(a0, a1);
}

SupportingFields supporting_fields(const Cobordism& first, const Cobordism& second, const FiniteAbelianGroup& a,
                                   const FieldClass& a0, const FieldClass& a1) {
  const DeltaComplex& m = first.outgoing().complex;
  if (!(m == second.incoming().complex)) throw DomainError("gluing locus mismatch: outgoing and incoming complexes differ");
  if (!m.is_connected()) throw DomainError("disconnected gluing locus");
  const CobordismFields left(first, a);
  const CobordismFields right(second, a);
  SupportingFields out;
  for (const auto& alpha : left.boundary(Side::outgoing).enumerate()) {
    if (!left.with_boundary(a0, alpha).empty() && !right.with_boundary(alpha, a1).empty()) out.classes.push_back(alpha);
  }
  return out;
}

}  // namespace dwkit
