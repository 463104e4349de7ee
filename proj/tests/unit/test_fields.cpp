#include <doctest.h>

#include <map>
#include <set>

#include "dwkit/builders.hpp"
#include "dwkit/error.hpp"
#include "dwkit/fields.hpp"
#include "oracles.hpp"

using namespace dwkit;

namespace {

std::vector<std::int64_t> indices(const FiniteAbelianGroup& a, const Colouring& c) {
  std::vector<std::int64_t> out;
  for (const auto& g : c.edges) out.push_back(a.index_of(g));
  return out;
}

Colouring from_indices(const FiniteAbelianGroup& a, const std::vector<std::int64_t>& x) {
  Colouring c;
  for (auto i : x) c.edges.push_back(a.element_at(i));
  return c;
}

bool gauge_equivalent(const DeltaComplex& c, const FiniteAbelianGroup& a, const Colouring& x, const Colouring& y) {
  bool found = false;
  oracle::for_each_assignment(c.vertex_count(), a.order(), [&](const std::vector<std::int64_t>& h) {
    if (found) return;
    GaugeTransformation g;
    for (auto i : h) g.vertices.push_back(a.element_at(i));
    found = gauge_act(c, a, g, x) == y;
  });
  return found;
}

struct Fixture {
  const char* name;
  DeltaComplex c;
  FiniteAbelianGroup a;
};

std::vector<Fixture> small_fixtures() {
  return {
      {"S^2 Z/3", build_sphere(2), FiniteAbelianGroup::cyclic(3)},
      {"tetrahedron Z/2", build_tetrahedron_boundary(), FiniteAbelianGroup::cyclic(2)},
      {"octahedron Z/2", build_octahedron(), FiniteAbelianGroup::cyclic(2)},
      {"T^2 Z/4", build_surface(1), FiniteAbelianGroup::cyclic(4)},
      {"T^2 Z/2+Z/2", build_surface(1), FiniteAbelianGroup({2, 2})},
      {"T^2 Z/6", build_surface(1), FiniteAbelianGroup::cyclic(6)},
      {"T^2 grid Z/2", build_torus_grid(2), FiniteAbelianGroup::cyclic(2)},
      {"genus 2 Z/2", build_surface(2), FiniteAbelianGroup::cyclic(2)},
      {"RP^2 Z/2", polygon_surface("abab").complex, FiniteAbelianGroup::cyclic(2)},
      {"RP^2 Z/3", polygon_surface("abab").complex, FiniteAbelianGroup::cyclic(3)},
      {"L(3,1) Z/3", build_lens(3, 1), FiniteAbelianGroup::cyclic(3)},
      {"L(4,1) Z/2", build_lens(4, 1), FiniteAbelianGroup::cyclic(2)},
      {"L(4,1) Z/4", build_lens(4, 1), FiniteAbelianGroup::cyclic(4)},
      {"L(5,2) Z/5", build_lens(5, 2), FiniteAbelianGroup::cyclic(5)},
      {"L(6,1) Z/4", build_lens(6, 1), FiniteAbelianGroup::cyclic(4)},
      {"L(6,5) Z/3", build_lens(6, 5), FiniteAbelianGroup::cyclic(3)},
  };
}

}  // namespace

TEST_CASE("field classes match brute-force gauge orbits of flat colourings") {
  for (const auto& f : small_fixtures()) {
    INFO(f.name);
    const FieldSpace space(f.c, f.a);
    CHECK(space.size() == oracle::gauge_orbit_count(f.c, f.a));
    CHECK(space.size() == oracle::hom_count(homology_h1(f.c).generator_orders, f.a));
  }
}

TEST_CASE("canonicalize is constant exactly on gauge orbits") {
  for (const auto& f : small_fixtures()) {
    INFO(f.name);
    const FieldSpace space(f.c, f.a);
    std::map<std::int64_t, std::vector<std::int64_t>> first_of_class;
    std::set<std::int64_t> hit;
    for (const auto& x : oracle::flat_colourings(f.c, f.a)) {
      const Colouring col = from_indices(f.a, x);
      const FieldClass cls = space.canonicalize(col);
      const auto idx = space.index_of(cls);
      hit.insert(idx);
      // the canonical colouring lies in the orbit of x
      if (!first_of_class.count(idx)) {
        first_of_class[idx] = x;
        CHECK(gauge_equivalent(f.c, f.a, col, cls.colouring));
      }
    }
    CHECK(static_cast<std::int64_t>(hit.size()) == space.size());
  }
}

TEST_CASE("enumerated classes are flat, distinct and fixed by canonicalize") {
  for (const auto& f : small_fixtures()) {
    INFO(f.name);
    const FieldSpace space(f.c, f.a);
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& cls : space.enumerate()) {
      CHECK(is_flat(f.c, f.a, cls.colouring));
      CHECK(space.canonicalize(cls.colouring) == cls);
      seen.insert(indices(f.a, cls.colouring));
    }
    CHECK(static_cast<std::int64_t>(seen.size()) == space.size());
  }
}

TEST_CASE("class addition follows colouring addition") {
  const DeltaComplex c = build_lens(6, 1);
  const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(6);
  const FieldSpace space(c, a);
  for (const auto& x : space.enumerate()) {
    for (const auto& y : space.enumerate()) {
      Colouring sum;
      for (std::size_t e = 0; e < x.colouring.edges.size(); ++e) sum.edges.push_back(a.add(x.colouring.edges[e], y.colouring.edges[e]));
      CHECK(space.canonicalize(sum) == space.add(x, y));
    }
  }
}

TEST_CASE("small examples of field counts") {
  CHECK(FieldSpace(build_sphere(2), FiniteAbelianGroup::cyclic(7)).size() == 1);
  CHECK(FieldSpace(build_surface(1), FiniteAbelianGroup::cyclic(5)).size() == 25);
  CHECK(FieldSpace(build_lens(6, 1), FiniteAbelianGroup::cyclic(4)).size() == 2);
  CHECK(FieldSpace(build_circle_product(build_sphere(2)), FiniteAbelianGroup::cyclic(3)).size() == 3);
  const Cobordism ball = build_ball(3);
  CHECK(FieldSpace(ball.total(), FiniteAbelianGroup::cyclic(4)).size() == 1);
}

TEST_CASE("flatness checks and missing colours") {
  const DeltaComplex t2 = build_surface(1);
  const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(3);
  CHECK(is_flat(t2, a, trivial_colouring(t2, a)));
  Colouring short_one;
  CHECK_THROWS_WITH_AS(is_flat(t2, a, short_one), doctest::Contains("missing edge colour"), InputError);
  Colouring bent = trivial_colouring(t2, a);
  bent.edges[0] = a.element({1});
  CHECK_FALSE(is_flat(t2, a, bent));
}

TEST_CASE("U(1) field group from the exponent of H_1") {
  CHECK(u1_field_group(build_lens(6, 1)) == FiniteAbelianGroup::cyclic(6));
  CHECK(u1_field_group(build_sphere(3)) == FiniteAbelianGroup::cyclic(1));
  CHECK_THROWS_WITH_AS(u1_field_group(build_surface(1)), doctest::Contains("infinite field space"), DomainError);
}

TEST_CASE("restriction to the ends matches the pulled-back colouring") {
  const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(3);
  const auto [left, right] = build_surface_split(1, 1);
  for (const Cobordism& w : {build_cylinder(build_sphere(1)), build_ball(2), right, left}) {
    const CobordismFields fields(w, a);
    for (const auto& f : fields.total().enumerate()) {
      for (Side side : {Side::incoming, Side::outgoing}) {
        const auto& end = fields.boundary(side);
        if (end.complex().vertex_count() == 0) continue;
        const Colouring pulled = fields.pullback(f.colouring, side);
        CHECK(is_flat(end.complex(), a, pulled));
        CHECK(gauge_equivalent(end.complex(), a, pulled, fields.restrict(f, side).colouring));
      }
    }
  }
}

TEST_CASE("boundary-conditioned cosets have equal size when nonempty") {
  const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(4);
  const Cobordism cyl = build_cylinder(build_sphere(1));
  const CobordismFields fields(cyl, a);
  for (const auto& x : fields.boundary(Side::incoming).enumerate()) {
    for (const auto& y : fields.boundary(Side::outgoing).enumerate()) {
      const auto coset = fields.with_boundary(x, y);
      // H_1 of the annulus is the common circle, so only the diagonal is supported
      CHECK(coset.size() == (x == y ? 1 : 0));
      CHECK(coset.kernel.size() == 1);
    }
  }
  const auto [left, right] = build_surface_split(1, 1);
  const CobordismFields one_holed(right, a);
  const auto circle = one_holed.boundary(Side::incoming);
  for (const auto& x : circle.enumerate()) {
    // the boundary circle of a one-holed torus is a commutator, so only the trivial class extends
    const auto coset = one_holed.with_boundary(x, one_holed.boundary(Side::outgoing).trivial());
    CHECK(coset.size() == (x == circle.trivial() ? 16 : 0));
  }
}

TEST_CASE("supporting fields along a separating circle") {
  const FiniteAbelianGroup a({2, 2});
  const auto [left, right] = build_surface_split(1, 1);
  const FieldClass none = FieldSpace(left.incoming().complex, a).trivial();
  const auto s = supporting_fields(left, right, a, none, none);
  CHECK(s.denominator() == 1);
  const Cobordism cyl = build_cylinder(build_sphere(1));
  const CobordismFields cf(cyl, a);
  const auto x = cf.boundary(Side::incoming).at(1);
  const auto through = supporting_fields(cyl, cyl, a, x, x);
  CHECK(through.denominator() == 1);
  CHECK(through.classes.front() == x);
  CHECK(supporting_fields(cyl, cyl, a, x, cf.boundary(Side::incoming).trivial()).classes.empty());
}
