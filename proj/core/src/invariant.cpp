#include "dwkit/invariant.hpp"

#include <numeric>
#include <thread>

#include "dwkit/error.hpp"

namespace dwkit {

InvariantValue::InvariantValue(PhaseMultiset phases, std::int64_t denominator)
    : phases_(std::move(phases)), denominator_(denominator) {
  if (denominator <= 0) throw DomainError("invariant denominator must be positive");
}

InvariantValue InvariantValue::one() {
  PhaseMultiset p;
  p.add(RationalPhase());
  return InvariantValue(std::move(p), 1);
}

std::complex<double> InvariantValue::value() const {
  return phases_.sum() / static_cast<double>(denominator_);
}

bool InvariantValue::near(std::complex<double> z, double tolerance) const {
  return std::abs(value() - z) < tolerance;
}

InvariantValue operator*(const InvariantValue& x, const InvariantValue& y) {
  return InvariantValue(x.phases_.convolve(y.phases_), x.denominator_ * y.denominator_);
}

InvariantValue InvariantValue::average(std::span<const InvariantValue> values) {
  if (values.empty()) return InvariantValue();
  std::int64_t common = 1;
  for (const auto& v : values) common = std::lcm(common, v.denominator_);
  PhaseMultiset total;
  for (const auto& v : values) total.merge(v.phases_, common / v.denominator_);
  return InvariantValue(std::move(total), common * static_cast<std::int64_t>(values.size()));
}

RationalPhase weight(const DeltaComplex& c, const FundamentalCycle& orientation, const FiniteAbelianGroup& a,
                     const GroupCochain& w, const Colouring& colouring) {
  const int n = c.dimension();
  if (w.degree() != n) {
    throw DomainError("cochain degree " + std::to_string(w.degree()) + " does not match dimension " + std::to_string(n));
  }
  if (colouring.edges.size() < static_cast<std::size_t>(c.count(1))) throw InputError("missing edge colour");
  RationalPhase total;
  std::vector<GroupElement> args(static_cast<std::size_t>(n));
  for (int t = 0; t < c.top_count(); ++t) {
    for (int i = 0; i < n; ++i) args[static_cast<std::size_t>(i)] = colouring.edges[static_cast<std::size_t>(c.edge(n, t, i, i + 1))];
    const RationalPhase term = w(a, args);
    total += orientation.sign(t) > 0 ? term : -term;
  }
  return total;
}

InvariantValue state_sum_closed(const Cobordism& closed, const FiniteAbelianGroup& a, const GroupCochain& w, int jobs) {
  if (!closed.is_closed()) throw DomainError("state_sum_closed needs a closed complex");
  const FieldSpace space(closed.total(), a);
  const GroupCochain table = (!w.group() && w.degree() <= 3 && a.order() <= 64) ? w.materialize(a) : w;
  const std::int64_t n = space.size();
  const int workers = static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(jobs, n)));
  std::vector<PhaseMultiset> partial(static_cast<std::size_t>(workers));
  auto run = [&](int worker) {
    for (std::int64_t i = worker; i < n; i += workers) {
      partial[static_cast<std::size_t>(worker)].add(
          weight(closed.total(), closed.orientation(), a, table, space.at(i).colouring));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (int k = 0; k < workers; ++k) threads.emplace_back(run, k);
    for (auto& th : threads) th.join();
  }
  PhaseMultiset all;
  for (const auto& p : partial) all.merge(p);
  return InvariantValue(std::move(all), n);
}

InvariantValue state_sum_closed(const DeltaComplex& c, const FiniteAbelianGroup& a, const GroupCochain& w, int jobs) {
  return state_sum_closed(Cobordism::closed(c), a, w, jobs);
}

Colouring boundary_adjusted_representative(const CobordismFields& fields, const FieldClass& f, const FieldClass& a0,
                                           const FieldClass& a1) {
  const Cobordism& w = fields.cobordism();
  const DeltaComplex& total = w.total();
  const FiniteAbelianGroup& a = fields.total().target();
  std::vector<std::optional<GroupElement>> h(static_cast<std::size_t>(total.vertex_count()));
  for (Side side : {Side::incoming, Side::outgoing}) {
    const BoundaryPart& part = w.boundary(side);
    if (part.empty()) continue;
    const FieldSpace& space = fields.boundary(side);
    const DeltaComplex& m = space.complex();
    const Colouring& canon = (side == Side::incoming ? a0 : a1).colouring;
    const Colouring local = fields.pullback(f.colouring, side);
    const SpanningForest& forest = space.homology().forest;
    std::vector<GroupElement> hm(static_cast<std::size_t>(m.vertex_count()), a.identity());
    for (int v : forest.order) {
      const int e = forest.parent_edge[static_cast<std::size_t>(v)];
      if (e < 0) continue;
      const auto ue = static_cast<std::size_t>(e);
      const GroupElement shift = a.subtract(canon.edges[ue], local.edges[ue]);
      if (m.edge_end(e) == v) {
        hm[static_cast<std::size_t>(v)] = a.add(hm[static_cast<std::size_t>(m.edge_start(e))], shift);
      } else {
        hm[static_cast<std::size_t>(v)] = a.subtract(hm[static_cast<std::size_t>(m.edge_end(e))], shift);
      }
    }
    for (int e = 0; e < m.count(1); ++e) {
      const auto ue = static_cast<std::size_t>(e);
      const GroupElement moved = a.subtract(a.add(local.edges[ue], hm[static_cast<std::size_t>(m.edge_end(e))]),
                                            hm[static_cast<std::size_t>(m.edge_start(e))]);
      if (moved != canon.edges[ue]) throw DomainError("boundary class not realizable as exact restriction");
    }
    for (int v = 0; v < m.vertex_count(); ++v) {
      auto& slot = h[static_cast<std::size_t>(part.embedding[0][static_cast<std::size_t>(v)])];
      if (slot && *slot != hm[static_cast<std::size_t>(v)]) {
        throw DomainError("boundary class not realizable as exact restriction: ends share a vertex");
      }
      slot = hm[static_cast<std::size_t>(v)];
    }
  }
  GaugeTransformation g;
  for (const auto& x : h) g.vertices.push_back(x ? *x : a.identity());
  return gauge_act(total, a, g, f.colouring);
}

InvariantValue matrix_element(const CobordismFields& fields, const GroupCochain& w, const FieldClass& a0,
                              const FieldClass& a1) {
  const BoundaryConditionedFields coset = fields.with_boundary(a0, a1);
  if (coset.empty()) return InvariantValue();
  const Cobordism& cob = fields.cobordism();
  const FiniteAbelianGroup& a = fields.total().target();
  PhaseMultiset phases;
  for (const auto& f : coset.classes) {
    phases.add(weight(cob.total(), cob.orientation(), a, w, boundary_adjusted_representative(fields, f, a0, a1)));
  }
  return InvariantValue(std::move(phases), coset.size());
}

InvariantValue matrix_element(const Cobordism& cob, const FiniteAbelianGroup& a, const GroupCochain& w,
                              const FieldClass& a0, const FieldClass& a1) {
  return matrix_element(CobordismFields(cob, a), w, a0, a1);
}

InvariantValue glued_invariant(const Cobordism& first, const Cobordism& second, const FiniteAbelianGroup& a,
                               const GroupCochain& w, const FieldClass& a0, const FieldClass& a1) {
  const SupportingFields support = supporting_fields(first, second, a, a0, a1);
  const CobordismFields left(first, a);
  const CobordismFields right(second, a);
  std::vector<InvariantValue> terms;
  for (const auto& alpha : support.classes) {
    terms.push_back(matrix_element(right, w, alpha, a1) * matrix_element(left, w, a0, alpha));
  }
  return InvariantValue::average(terms);
}

InvariantValue circle_product_invariant(const DeltaComplex& m, const FiniteAbelianGroup& a, const GroupCochain& w,
                                        int jobs) {
  const Cobordism closed = Cobordism::closed(m);
  std::vector<InvariantValue> terms;
  for (const auto& s : a.elements()) terms.push_back(state_sum_closed(closed, a, slant(w, s).materialize(a), jobs));
  return InvariantValue::average(terms);
}

InvariantValue surface_invariant_by_genus(int g, const FiniteAbelianGroup& a, const GroupCochain& b) {
  if (g < 0) throw DomainError("genus must be nonnegative");
  if (b.degree() != 2) throw DomainError("surface invariants need a degree-2 cochain");
  PhaseMultiset torus;
  for (const auto& x : a.elements()) {
    for (const auto& y : a.elements()) torus.add(b(a, {x, y}) - b(a, {y, x}));
  }
  const InvariantValue t(std::move(torus), a.order() * a.order());
  InvariantValue out = InvariantValue::one();
  for (int i = 0; i < g; ++i) out = out * t;
  return out;
}

}  // namespace dwkit
