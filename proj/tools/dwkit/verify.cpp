#include "dwkit/verify.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "dwkit/builders.hpp"
#include "dwkit/error.hpp"
#include "dwkit/invariant.hpp"
#include "dwkit/lens.hpp"
#include "dwkit/number_theory.hpp"

namespace dwkit::cli {

namespace {

std::string fmt(std::complex<double> z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

// Accumulates sub-checks into one reported line, keeping the first failure.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void expect(bool ok, const std::function<std::string()>& what) {
    ++count_;
    if (!ok && passed_) {
      passed_ = false;
      first_failure_ = what();
    }
  }
  void close(std::complex<double> got, std::complex<double> want, double tol, const std::string& where) {
    expect(std::abs(got - want) < tol, [&] { return where + ": got " + fmt(got) + ", want " + fmt(want); });
  }
  Check done() const {
    return Check{name_, passed_, passed_ ? std::to_string(count_) + " cases" : first_failure_};
  }

 private:
  std::string name_;
  bool passed_ = true;
  int count_ = 0;
  std::string first_failure_;
};

GaugeTransformation random_gauge(const DeltaComplex& c, const FiniteAbelianGroup& a, std::mt19937_64& rng) {
  GaugeTransformation h;
  for (int v = 0; v < c.vertex_count(); ++v) {
    h.vertices.push_back(a.element_at(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(a.order()))));
  }
  return h;
}

std::vector<Check> suite_cocycles(const VerifyOptions& o) {
  std::vector<Check> out;
  {
    Tally t("coboundary squares to zero");
    std::uint64_t seed = o.seed;
    for (std::int64_t n = 1; n <= 6; ++n) {
      const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(n);
      for (int d = 1; d <= 3; ++d) {
        const auto c = random_cochain(a, d, seed++);
        t.expect(is_zero(coboundary(coboundary(c)), a), [&] { return "Z/" + std::to_string(n) + " degree " + std::to_string(d); });
      }
    }
    const FiniteAbelianGroup k4({2, 2});
    for (int d = 1; d <= 3; ++d) {
      t.expect(is_zero(coboundary(coboundary(random_cochain(k4, d, seed++))), k4), [&] { return std::string("Z/2+Z/2"); });
    }
    out.push_back(t.done());
  }
  {
    Tally t("omega_k normalized cocycles, N <= 8, k <= 2N");
    for (std::int64_t n = 1; n <= 8; ++n) {
      const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(n);
      for (std::int64_t k = 0; k <= 2 * n; ++k) {
        const auto w = GroupCochain::omega(k);
        t.expect(is_cocycle(w, a) && is_normalized(w, a), [&] { return "N=" + std::to_string(n) + " k=" + std::to_string(k); });
      }
    }
    out.push_back(t.done());
  }
  {
    Tally t("psi_l normalized cocycles, N, M <= 8");
    for (std::int64_t n = 1; n <= 8; ++n) {
      for (std::int64_t m = 1; m <= 8; ++m) {
        const FiniteAbelianGroup a({n, m});
        const std::int64_t l = 1 + (n + m) % 3;
        const auto w = GroupCochain::psi(l);
        t.expect(is_cocycle(w, a) && is_normalized(w, a), [&] { return "N=" + std::to_string(n) + " M=" + std::to_string(m); });
      }
    }
    out.push_back(t.done());
  }
  {
    Tally t("slant of omega_k is a cocycle, N <= 6");
    for (std::int64_t n = 1; n <= 6; ++n) {
      const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(n);
      for (std::int64_t k = 1; k <= n; ++k) {
        for (const auto& s : a.elements()) {
          t.expect(is_cocycle(slant(GroupCochain::omega(k), s), a), [&] { return "N=" + std::to_string(n); });
        }
      }
    }
    out.push_back(t.done());
  }
  {
    Tally t("random 3-cochains are not cocycles");
    const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(2);
    for (std::uint64_t s = 0; s < 5; ++s) {
      t.expect(!is_cocycle(random_cochain(a, 3, o.seed + s), a), [&] { return "seed " + std::to_string(o.seed + s); });
    }
    out.push_back(t.done());
  }
  return out;
}

struct Fixture {
  std::string name;
  DeltaComplex complex;
  FiniteAbelianGroup group;
  GroupCochain cocycle;
};

std::vector<Fixture> gauge_fixtures() {
  const FiniteAbelianGroup k4({2, 2});
  return {
      {"lens(5,2) Z/5 omega_2", build_lens(5, 2), FiniteAbelianGroup::cyclic(5), GroupCochain::omega(2)},
      {"lens(4,1) Z/4 omega_1", build_lens(4, 1), FiniteAbelianGroup::cyclic(4), GroupCochain::omega(1)},
      {"S1xS2 Z/3 omega_1", build_circle_product(build_sphere(2)), FiniteAbelianGroup::cyclic(3), GroupCochain::omega(1)},
      {"T3 (Z/2)^2 psi_1", build_circle_product(build_surface(1)), k4, GroupCochain::psi(1)},
      {"T2 (Z/2)^2 bichar", build_surface(1), k4, GroupCochain::bicharacter(0, 1)},
      {"T2 grid (Z/2)^2 bichar", build_torus_grid(2), k4, GroupCochain::bicharacter(0, 1)},
  };
}

std::vector<Check> suite_gauge(const VerifyOptions& o) {
  std::vector<Check> out;
  std::mt19937_64 rng(o.seed);
  for (const auto& f : gauge_fixtures()) {
    Tally t("gauge invariance: " + f.name);
    const Cobordism w = Cobordism::closed(f.complex);
    const FieldSpace space(f.complex, f.group);
    for (int trial = 0; trial < 100; ++trial) {
      const FieldClass cls = space.at(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(space.size())));
      const Colouring moved = gauge_act(f.complex, f.group, random_gauge(f.complex, f.group, rng), cls.colouring);
      t.expect(is_flat(f.complex, f.group, moved), [] { return std::string("gauge action broke flatness"); });
      t.expect(space.canonicalize(moved) == cls, [] { return std::string("canonical class changed"); });
      t.expect(weight(f.complex, w.orientation(), f.group, f.cocycle, moved) ==
                   weight(f.complex, w.orientation(), f.group, f.cocycle, cls.colouring),
               [] { return std::string("weight changed"); });
    }
    out.push_back(t.done());
  }
  return out;
}

std::vector<Check> suite_lens_oracle(const VerifyOptions& o) {
  Tally t("lens state sums equal the Gauss-sum formula, p <= 12, k <= 2p");
  for (int p = 1; p <= 12; ++p) {
    for (int q = 0; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const Cobordism lens = Cobordism::closed(build_lens(p, q));
      const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(p);
      for (int k = 0; k <= 2 * p; ++k) {
        t.close(state_sum_closed(lens, a, GroupCochain::omega(k), o.jobs).value(), lens_invariant(p, q, k).value(),
                o.tolerance, "L(" + std::to_string(p) + "," + std::to_string(q) + ") k=" + std::to_string(k));
      }
    }
  }
  Tally d("Dirichlet closed form for G(1,N), N <= 200");
  for (int n = 1; n <= 200; ++n) d.close(gauss_sum(1, n), gauss_sum_closed(1, n), o.tolerance, "N=" + std::to_string(n));
  return {t.done(), d.done()};
}

std::vector<Check> suite_gluing(const VerifyOptions& o) {
  std::vector<Check> out;
  {
    Tally t("two balls along S^2");
    const Cobordism ball = build_ball(3);
    const Cobordism back = reverse(ball);
    for (std::int64_t n = 1; n <= 6; ++n) {
      const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(n);
      const auto w = GroupCochain::omega(1);
      const FieldClass empty = FieldSpace(ball.incoming().complex, a).trivial();
      t.close(glued_invariant(ball, back, a, w, empty, empty).value(), 1.0, o.tolerance, "N=" + std::to_string(n));
      t.close(state_sum_closed(glue(ball, back), a, w).value(), 1.0, o.tolerance, "direct N=" + std::to_string(n));
    }
    out.push_back(t.done());
  }
  {
    Tally t("genus-2 surface split along a circle");
    const FiniteAbelianGroup k4({2, 2});
    const auto b = GroupCochain::bicharacter(0, 1);
    const auto [left, right] = build_surface_split(1, 1);
    const FieldClass empty = FieldSpace(left.incoming().complex, k4).trivial();
    const auto glued = glued_invariant(left, right, k4, b, empty, empty).value();
    t.close(glued, state_sum_closed(glue(left, right), k4, b).value(), o.tolerance, "glued vs direct");
    t.close(glued, 1.0 / 16.0, o.tolerance, "glued vs 1/16");
    out.push_back(t.done());
  }
  {
    Tally t("cylinder compositions");
    const FiniteAbelianGroup z3 = FiniteAbelianGroup::cyclic(3);
    for (const auto& base : {build_sphere(1), build_surface(1)}) {
      const Cobordism cyl = build_cylinder(base);
      const Cobordism twice = glue(cyl, cyl);
      const GroupCochain w = base.dimension() == 1 ? GroupCochain::bicharacter(0, 0) : GroupCochain::omega(1);
      const CobordismFields direct(twice, z3);
      for (const auto& x : direct.boundary(Side::incoming).enumerate()) {
        for (const auto& y : direct.boundary(Side::outgoing).enumerate()) {
          t.close(glued_invariant(cyl, cyl, z3, w, x, y).value(), matrix_element(direct, w, x, y).value(), o.tolerance,
                  "cylinder over dimension " + std::to_string(base.dimension()));
        }
      }
    }
    out.push_back(t.done());
  }
  return out;
}

std::vector<Check> suite_products(const VerifyOptions& o) {
  std::vector<Check> out;
  {
    Tally t("S^3 and S^1 x S^2 are trivial");
    const Cobordism s3 = Cobordism::closed(build_sphere(3));
    const Cobordism s1s2 = Cobordism::closed(build_circle_product(build_sphere(2)));
    for (std::int64_t n = 1; n <= 6; ++n) {
      const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(n);
      for (std::int64_t k = 0; k <= 6; ++k) {
        const auto w = GroupCochain::omega(k);
        t.close(state_sum_closed(s3, a, w).value(), 1.0, o.tolerance, "S^3");
        t.close(state_sum_closed(s1s2, a, w).value(), 1.0, o.tolerance, "S^1xS^2 triangulated");
        t.close(circle_product_invariant(build_sphere(2), a, w).value(), 1.0, o.tolerance, "S^1xS^2 slant");
      }
    }
    out.push_back(t.done());
  }
  {
    Tally t("T^3 state sum equals slant average");
    const DeltaComplex t2 = build_surface(1);
    const Cobordism t3 = Cobordism::closed(build_circle_product(t2));
    for (std::int64_t n = 2; n <= 5; ++n) {
      const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(n);
      for (std::int64_t k = 0; k <= n; ++k) {
        const auto w = GroupCochain::omega(k);
        t.close(state_sum_closed(t3, a, w, o.jobs).value(), circle_product_invariant(t2, a, w).value(), o.tolerance,
                "N=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
    out.push_back(t.done());
  }
  return out;
}

std::vector<Check> suite_surfaces(const VerifyOptions& o) {
  Tally t("surface genus formula, g <= 3");
  const FiniteAbelianGroup k4({2, 2});
  const auto b = GroupCochain::bicharacter(0, 1);
  for (int g = 0; g <= 3; ++g) {
    const auto direct = state_sum_closed(build_surface(g), k4, b, o.jobs).value();
    t.close(direct, surface_invariant_by_genus(g, k4, b).value(), o.tolerance, "(Z/2)^2 g=" + std::to_string(g));
    t.close(direct, std::pow(0.25, g), o.tolerance, "(Z/2)^2 g=" + std::to_string(g) + " vs 4^-g");
    for (std::int64_t n = 2; n <= 4; ++n) {
      const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(n);
      const auto r = random_cochain(a, 1, o.seed + static_cast<std::uint64_t>(n));
      const auto beta = product(GroupCochain::bicharacter(0, 0), coboundary(r)).materialize(a);
      t.close(state_sum_closed(build_surface(g), a, beta, o.jobs).value(), 1.0, o.tolerance, "Z/" + std::to_string(n));
      t.close(surface_invariant_by_genus(g, a, beta).value(), 1.0, o.tolerance, "genus formula Z/" + std::to_string(n));
    }
  }
  return {t.done()};
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"cocycles", "gauge", "lens-oracle", "gluing", "products", "surfaces"};
  return names;
}

std::vector<Check> run_suite(const std::string& suite, const VerifyOptions& options) {
  if (suite == "all") {
    std::vector<Check> out;
    for (const auto& name : verify_suites()) {
      auto part = run_suite(name, options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  if (suite == "cocycles") return suite_cocycles(options);
  if (suite == "gauge") return suite_gauge(options);
  if (suite == "lens-oracle") return suite_lens_oracle(options);
  if (suite == "gluing") return suite_gluing(options);
  if (suite == "products") return suite_products(options);
  if (suite == "surfaces") return suite_surfaces(options);
  throw InputError("unknown verify suite \"" + suite + "\"");
}

}  // namespace dwkit::cli
