#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dwkit/builders.hpp"
#include "dwkit/error.hpp"
#include "dwkit/invariant.hpp"
#include "oracles.hpp"

using namespace dwkit;

namespace {

constexpr double kTol = 1e-9;

std::complex<double> z_of(const DeltaComplex& c, const FiniteAbelianGroup& a, const GroupCochain& w) {
  return state_sum_closed(c, a, w).value();
}

std::complex<double> brute(const DeltaComplex& c, const FiniteAbelianGroup& a, const GroupCochain& w) {
  return oracle::state_sum(c, orient(c).signs, a, w);
}

GroupCochain type_three(const FiniteAbelianGroup& a) {
  std::vector<RationalPhase> v;
  const std::int64_t n = a.moduli()[0];
  for_each_tuple(a, 3, [&](std::span<const GroupElement> g) { v.push_back(RationalPhase(g[0][0] * g[1][1] * g[2][2], n)); });
  return GroupCochain::table(a, 3, v);
}

}  // namespace

TEST_CASE("worked values") {
  const auto l41 = z_of(build_lens(4, 1), FiniteAbelianGroup::cyclic(4), GroupCochain::omega(1));
  CHECK(std::abs(l41 - std::complex<double>(0.5, 0.5)) < kTol);
  const auto l31 = z_of(build_lens(3, 1), FiniteAbelianGroup::cyclic(3), GroupCochain::omega(1));
  CHECK(std::abs(l31 - std::complex<double>(0, 1 / std::sqrt(3.0))) < kTol);
  CHECK(std::abs(z_of(build_sphere(3), FiniteAbelianGroup::cyclic(5), GroupCochain::omega(2)) - 1.0) < kTol);
  CHECK(std::abs(z_of(build_lens(2, 1), FiniteAbelianGroup::cyclic(2), GroupCochain::omega(1))) < kTol);
}

TEST_CASE("state sums agree with the flat-colouring oracle") {
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q < std::max(p, 2); ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t k = 0; k <= p; ++k) {
        const auto c = build_lens(p, q);
        const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(p);
        CHECK(std::abs(z_of(c, a, GroupCochain::omega(k)) - brute(c, a, GroupCochain::omega(k))) < kTol);
      }
    }
  }
  const FiniteAbelianGroup k4({2, 2});
  for (const auto& c : {build_surface(1), build_torus_grid(2), build_octahedron(), build_surface(2)}) {
    CHECK(std::abs(z_of(c, k4, GroupCochain::bicharacter(0, 1)) - brute(c, k4, GroupCochain::bicharacter(0, 1))) < kTol);
  }
  const auto s1s2 = build_circle_product(build_sphere(2));
  CHECK(std::abs(z_of(s1s2, FiniteAbelianGroup::cyclic(2), GroupCochain::omega(1)) -
                 brute(s1s2, FiniteAbelianGroup::cyclic(2), GroupCochain::omega(1))) < kTol);
}

TEST_CASE("torus with the Z/2 x Z/2 bicharacter is 1/4") {
  const FiniteAbelianGroup k4({2, 2});
  CHECK(std::abs(brute(build_surface(1), k4, GroupCochain::bicharacter(0, 1)) - 0.25) < kTol);
  CHECK(std::abs(z_of(build_surface(1), k4, GroupCochain::bicharacter(0, 1)) - 0.25) < kTol);
}

TEST_CASE("triangulation independence on sphere and torus fixtures") {
  const FiniteAbelianGroup k4({2, 2});
  const auto b = GroupCochain::bicharacter(0, 1);
  for (const auto& s2 : {build_sphere(2), build_tetrahedron_boundary(), build_octahedron(), build_surface(0)}) {
    CHECK(std::abs(z_of(s2, k4, b) - 1.0) < kTol);
    CHECK(std::abs(z_of(s2, FiniteAbelianGroup::cyclic(6), GroupCochain::bicharacter(0, 0)) - 1.0) < kTol);
  }
  const auto ref = z_of(build_surface(1), k4, b);
  for (const auto& t2 : {build_torus_grid(1), build_torus_grid(2), build_torus_grid(3), build_circle_product(build_sphere(1)),
                         polygon_surface("abAB").complex}) {
    CHECK(std::abs(z_of(t2, k4, b) - ref) < kTol);
  }
}

TEST_CASE("cohomologous cocycles give equal invariants") {
  std::uint64_t seed = 100;
  const FiniteAbelianGroup z5 = FiniteAbelianGroup::cyclic(5);
  for (int trial = 0; trial < 5; ++trial) {
    const auto shifted = product(GroupCochain::omega(2), random_coboundary(z5, 3, seed++));
    CHECK(std::abs(z_of(build_lens(5, 2), z5, shifted) - z_of(build_lens(5, 2), z5, GroupCochain::omega(2))) < kTol);
  }
  const FiniteAbelianGroup k4({2, 2});
  for (int trial = 0; trial < 5; ++trial) {
    const auto shifted = product(GroupCochain::bicharacter(0, 1), random_coboundary(k4, 2, seed++));
    CHECK(std::abs(z_of(build_surface(2), k4, shifted) - 1.0 / 16.0) < kTol);
  }
  const FiniteAbelianGroup z3 = FiniteAbelianGroup::cyclic(3);
  const auto s1s2 = build_circle_product(build_sphere(2));
  CHECK(std::abs(z_of(s1s2, z3, product(GroupCochain::omega(1), random_coboundary(z3, 3, seed++))) - 1.0) < kTol);
}

TEST_CASE("disjoint unions multiply") {
  const FiniteAbelianGroup z4 = FiniteAbelianGroup::cyclic(4);
  const auto w = GroupCochain::omega(1);
  const Cobordism a = Cobordism::closed(build_lens(4, 1));
  const Cobordism b = Cobordism::closed(build_lens(4, 3));
  const Cobordism c = Cobordism::closed(build_sphere(3));
  const auto za = state_sum_closed(a, z4, w);
  const auto zb = state_sum_closed(b, z4, w);
  const auto zab = state_sum_closed(disjoint_union(a, b), z4, w);
  CHECK(std::abs(zab.value() - za.value() * zb.value()) < kTol);
  CHECK(zab.phases() == (za * zb).phases());
  CHECK(std::abs(state_sum_closed(disjoint_union(a, c), z4, w).value() - za.value()) < kTol);
}

TEST_CASE("reversing the orientation conjugates the invariant") {
  for (int p : {3, 4, 5, 7}) {
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto c = build_lens(p, q);
      const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(p);
      const auto fwd = state_sum_closed(Cobordism::closed(c), a, GroupCochain::omega(1)).value();
      const auto back = state_sum_closed(Cobordism::closed(c, orient(c).reversed()), a, GroupCochain::omega(1)).value();
      CHECK(std::abs(back - std::conj(fwd)) < kTol);
    }
  }
}

TEST_CASE("gauge transformations leave closed weights unchanged") {
  std::mt19937_64 rng(5);
  const auto c = build_lens(7, 3);
  const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(7);
  const auto o = orient(c);
  const FieldSpace space(c, a);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cls = space.at(static_cast<std::int64_t>(rng() % 7));
    GaugeTransformation h;
    for (int v = 0; v < c.vertex_count(); ++v) h.vertices.push_back(a.element_at(static_cast<std::int64_t>(rng() % 7)));
    CHECK(weight(c, o, a, GroupCochain::omega(3), gauge_act(c, a, h, cls.colouring)) ==
          weight(c, o, a, GroupCochain::omega(3), cls.colouring));
  }
}

TEST_CASE("weight rejects a cocycle of the wrong degree") {
  const auto c = build_surface(1);
  CHECK_THROWS_AS(state_sum_closed(c, FiniteAbelianGroup::cyclic(2), GroupCochain::omega(1)), DomainError);
}

TEST_CASE("threaded and inline state sums are identical") {
  const auto t3 = build_circle_product(build_surface(1));
  const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(3);
  const auto one = state_sum_closed(t3, a, GroupCochain::omega(1), 1);
  const auto four = state_sum_closed(t3, a, GroupCochain::omega(1), 4);
  CHECK(one.phases() == four.phases());
  CHECK(one.denominator() == four.denominator());
}

TEST_CASE("T^3 agrees with the slant average") {
  const auto t2 = build_surface(1);
  const auto t3 = build_circle_product(t2);
  for (std::int64_t n = 2; n <= 5; ++n) {
    const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(n);
    for (std::int64_t k = 0; k <= n; ++k) {
      const auto w = GroupCochain::omega(k);
      CHECK(std::abs(z_of(t3, a, w) - circle_product_invariant(t2, a, w).value()) < kTol);
    }
  }
}

TEST_CASE("T^3 with a type-III cocycle is nontrivial and matches the slant average") {
  const auto t2 = build_surface(1);
  const auto t3 = build_circle_product(t2);
  const FiniteAbelianGroup a2({2, 2, 2});
  const auto w2 = type_three(a2);
  REQUIRE(is_cocycle(w2, a2));
  CHECK(std::abs(z_of(t3, a2, w2) - 11.0 / 32.0) < kTol);
  CHECK(std::abs(circle_product_invariant(t2, a2, w2).value() - 11.0 / 32.0) < kTol);
  CHECK(std::abs(z_of(build_torus_grid(2), a2, GroupCochain::trivial(2)) - 1.0) < kTol);
  const FiniteAbelianGroup a3({3, 3, 3});
  const auto w3 = type_three(a3);
  REQUIRE(is_cocycle(w3, a3));
  const auto direct = z_of(t3, a3, w3);
  CHECK(std::abs(direct - circle_product_invariant(t2, a3, w3).value()) < kTol);
  CHECK(std::abs(direct.imag()) < kTol);
  CHECK(direct.real() == doctest::Approx(0.144033).epsilon(1e-5));
}

TEST_CASE("S^1 x S^2 is trivial via both routes") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(n);
    for (std::int64_t k = 0; k <= 6; ++k) {
      CHECK(std::abs(z_of(build_circle_product(build_sphere(2)), a, GroupCochain::omega(k)) - 1.0) < kTol);
      CHECK(std::abs(circle_product_invariant(build_sphere(2), a, GroupCochain::omega(k)).value() - 1.0) < kTol);
    }
  }
}

TEST_CASE("surface invariants follow the genus formula") {
  const FiniteAbelianGroup k4({2, 2});
  const auto b = GroupCochain::bicharacter(0, 1);
  for (int g = 0; g <= 3; ++g) {
    CHECK(std::abs(z_of(build_surface(g), k4, b) - std::pow(0.25, g)) < kTol);
    CHECK(std::abs(surface_invariant_by_genus(g, k4, b).value() - std::pow(0.25, g)) < kTol);
  }
}

TEST_CASE("ball and cylinder matrix elements") {
  const FiniteAbelianGroup z3 = FiniteAbelianGroup::cyclic(3);
  const Cobordism ball = build_ball(3);
  const FieldSpace empty(ball.incoming().complex, z3);
  const FieldSpace s2(ball.outgoing().complex, z3);
  CHECK(std::abs(matrix_element(ball, z3, GroupCochain::omega(1), empty.trivial(), s2.trivial()).value() - 1.0) < kTol);
  const Cobordism cyl = build_cylinder(build_sphere(1));
  const CobordismFields cf(cyl, z3);
  for (const auto& x : cf.boundary(Side::incoming).enumerate()) {
    for (const auto& y : cf.boundary(Side::outgoing).enumerate()) {
      const auto k = matrix_element(cf, GroupCochain::bicharacter(0, 0), x, y);
      CHECK(std::abs(k.value() - (x == y ? 1.0 : 0.0)) < kTol);
    }
  }
}

TEST_CASE("boundary-adjusted representatives restrict exactly to the canonical colourings") {
  const FiniteAbelianGroup z4 = FiniteAbelianGroup::cyclic(4);
  const auto [left, right] = build_surface_split(1, 1);
  for (const Cobordism& w : {right, build_cylinder(build_sphere(1)), build_ball(2)}) {
    const CobordismFields cf(w, z4);
    for (const auto& f : cf.total().enumerate()) {
      const auto a0 = cf.restrict(f, Side::incoming);
      const auto a1 = cf.restrict(f, Side::outgoing);
      const auto rep = boundary_adjusted_representative(cf, f, a0, a1);
      CHECK(is_flat(w.total(), z4, rep));
      CHECK(cf.pullback(rep, Side::incoming) == a0.colouring);
      CHECK(cf.pullback(rep, Side::outgoing) == a1.colouring);
    }
  }
}

TEST_CASE("weights ignore gauge changes that vanish on the boundary") {
  std::mt19937_64 rng(9);
  const FiniteAbelianGroup z3 = FiniteAbelianGroup::cyclic(3);
  const auto [left, right] = build_surface_split(1, 1);
  for (const Cobordism& w : {right, build_ball(2), build_ball(3), build_cylinder(build_sphere(2))}) {
    const GroupCochain cocycle = w.dimension() == 2 ? GroupCochain::bicharacter(0, 0) : GroupCochain::omega(1);
    std::vector<bool> on_boundary(static_cast<std::size_t>(w.total().vertex_count()), false);
    for (Side side : {Side::incoming, Side::outgoing}) {
      const auto& part = w.boundary(side);
      if (!part.empty()) {
        for (int v : part.embedding[0]) on_boundary[static_cast<std::size_t>(v)] = true;
      }
    }
    const CobordismFields cf(w, z3);
    for (const auto& f : cf.total().enumerate()) {
      const auto rep = boundary_adjusted_representative(cf, f, cf.restrict(f, Side::incoming), cf.restrict(f, Side::outgoing));
      for (int trial = 0; trial < 10; ++trial) {
        GaugeTransformation h;
        for (int v = 0; v < w.total().vertex_count(); ++v) {
          h.vertices.push_back(on_boundary[static_cast<std::size_t>(v)] ? z3.identity() : z3.element_at(static_cast<std::int64_t>(rng() % 3)));
        }
        CHECK(weight(w.total(), w.orientation(), z3, cocycle, gauge_act(w.total(), z3, h, rep)) ==
              weight(w.total(), w.orientation(), z3, cocycle, rep));
      }
    }
  }
}

TEST_CASE("gluing two balls along S^2") {
  const Cobordism ball = build_ball(3);
  for (std::int64_t n = 1; n <= 6; ++n) {
    const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(n);
    const auto none = FieldSpace(ball.incoming().complex, a).trivial();
    CHECK(std::abs(glued_invariant(ball, reverse(ball), a, GroupCochain::omega(1), none, none).value() - 1.0) < kTol);
  }
}

TEST_CASE("genus-2 surface glued from two one-holed tori") {
  const FiniteAbelianGroup k4({2, 2});
  const auto b = GroupCochain::bicharacter(0, 1);
  const auto [left, right] = build_surface_split(1, 1);
  const auto none = FieldSpace(left.incoming().complex, k4).trivial();
  const auto glued = glued_invariant(left, right, k4, b, none, none);
  CHECK(std::abs(glued.value() - 1.0 / 16.0) < kTol);
  CHECK(std::abs(glued.value() - state_sum_closed(glue(left, right), k4, b).value()) < kTol);
  CHECK(std::abs(glued.value() - z_of(build_surface(2), k4, b)) < kTol);
}

TEST_CASE("cylinder compositions agree with the composite") {
  const FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
  const Cobordism cyl = build_cylinder(build_surface(1));
  const Cobordism two = glue(cyl, cyl);
  const CobordismFields cf(two, z2);
  for (const auto& x : cf.boundary(Side::incoming).enumerate()) {
    for (const auto& y : cf.boundary(Side::outgoing).enumerate()) {
      CHECK(std::abs(glued_invariant(cyl, cyl, z2, GroupCochain::omega(1), x, y).value() -
                     matrix_element(cf, GroupCochain::omega(1), x, y).value()) < kTol);
    }
  }
}

TEST_CASE("invariant values average exactly") {
  PhaseMultiset p1;
  p1.add(RationalPhase(0, 1));
  PhaseMultiset p2;
  p2.add(RationalPhase(1, 2));
  p2.add(RationalPhase(0, 1));
  const std::vector<InvariantValue> values{InvariantValue(p1, 1), InvariantValue(p2, 2)};
  const auto avg = InvariantValue::average(values);
  CHECK(std::abs(avg.value() - 0.5) < kTol);
  CHECK(InvariantValue::one().near(1.0));
  CHECK(std::abs(InvariantValue().value()) < kTol);
}
