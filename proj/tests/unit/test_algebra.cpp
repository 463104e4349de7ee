#include <doctest.h>

#include <numeric>
#include <random>

#include "dwkit/abelian.hpp"
#include "dwkit/error.hpp"
#include "dwkit/number_theory.hpp"
#include "dwkit/phase.hpp"
#include "dwkit/smith.hpp"
#include "oracles.hpp"

using namespace dwkit;

TEST_CASE("rational phases reduce into [0, 1)") {
  CHECK(RationalPhase(3, 4) + RationalPhase(1, 2) == RationalPhase(1, 4));
  CHECK(RationalPhase(-1, 3) == RationalPhase(2, 3));
  CHECK(RationalPhase(6, 8) == RationalPhase(3, 4));
  CHECK(RationalPhase(5, 5).is_zero());
  CHECK((RationalPhase(1, 6) * 3) == RationalPhase(1, 2));
  CHECK((-RationalPhase(1, 6)) == RationalPhase(5, 6));
  CHECK(RationalPhase(1, 4).value().imag() == doctest::Approx(1.0));
  CHECK_THROWS_AS(RationalPhase(1, 0), DomainError);
}

TEST_CASE("phase multisets sum in a fixed order") {
  PhaseMultiset a;
  a.add(RationalPhase(1, 3));
  a.add(RationalPhase(2, 3));
  a.add(RationalPhase(0, 1));
  CHECK(std::abs(a.sum()) < 1e-12);
  PhaseMultiset b;
  b.add(RationalPhase(2, 3));
  b.add(RationalPhase(0, 1));
  b.add(RationalPhase(1, 3));
  CHECK(a == b);
  CHECK(a.sum() == b.sum());
  const auto c = a.convolve(a);
  CHECK(c.size() == 9);
  CHECK(c.counts().at(RationalPhase(0, 1)) == 3);
}

TEST_CASE("finite abelian group arithmetic and indexing") {
  const FiniteAbelianGroup g({2, 3, 4});
  CHECK(g.order() == 24);
  CHECK(g.exponent() == 12);
  const auto elements = g.elements();
  REQUIRE(elements.size() == 24);
  for (std::int64_t i = 0; i < g.order(); ++i) CHECK(g.index_of(g.element_at(i)) == i);
  for (const auto& x : elements) {
    CHECK(g.add(x, g.negate(x)) == g.identity());
    for (const auto& y : elements) CHECK(g.add(x, y) == g.add(y, x));
  }
  CHECK(g.element({-1, 4, 9}) == GroupElement({1, 1, 1}));
  CHECK(g.scale(g.element({1, 1, 1}), 5) == GroupElement({1, 2, 1}));
  CHECK_THROWS_AS(g.element({1, 2}), DomainError);
}

TEST_CASE("invariant factor normalization") {
  auto norm = [](std::vector<std::int64_t> orders) {
    return FinitelyGeneratedAbelianGroup::from_cyclic_orders(orders);
  };
  CHECK(norm({2, 3}).torsion == std::vector<std::int64_t>{6});
  CHECK(norm({4, 6}).torsion == std::vector<std::int64_t>{2, 12});
  CHECK(norm({1, 1}).is_trivial());
  const auto g = norm({0, 2, 0});
  CHECK(g.free_rank == 2);
  CHECK(g.to_string() == "Z^2 + Z/2");
  CHECK(direct_sum(norm({2}), norm({2})).torsion == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("Hom group order matches a brute-force count") {
  const std::vector<std::vector<std::int64_t>> sources{{2}, {4}, {6}, {2, 2}, {0}, {0, 3}, {4, 0}, {}};
  const std::vector<FiniteAbelianGroup> targets{FiniteAbelianGroup({2}), FiniteAbelianGroup({4}), FiniteAbelianGroup({6}),
                                                FiniteAbelianGroup({2, 2}), FiniteAbelianGroup({2, 3}), FiniteAbelianGroup({1})};
  for (const auto& s : sources) {
    for (const auto& t : targets) {
      const HomGroup h(s, t);
      CHECK(h.order() == oracle::hom_count(s, t));
      for (const auto& phi : h.group().elements()) {
        const auto images = h.images(phi);
        CHECK(h.from_images(images) == phi);
      }
    }
  }
}

TEST_CASE("Hom group rejects non-homomorphisms") {
  const HomGroup h({2}, FiniteAbelianGroup({4}));
  const std::vector<GroupElement> images{GroupElement({1})};
  CHECK_THROWS_AS(h.from_images(images), DomainError);
}

TEST_CASE("Smith normal form on worked examples") {
  struct Case {
    IntMatrix m;
    std::vector<std::int64_t> diagonal;
  };
  const std::vector<Case> cases{
      {IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, {2, 6, 12}},
      {IntMatrix{{6, 0}, {0, 4}}, {2, 12}},
      {IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}, {1, 3, 0}},
      {IntMatrix{{0, 0}, {0, 0}}, {0, 0}},
      {IntMatrix{{5}}, {5}},
      {IntMatrix{{2, 0, 0, 0}, {0, 3, 0, 0}}, {1, 6}},
  };
  for (const auto& c : cases) {
    const auto s = smith_normal_form(c.m);
    CHECK(s.diagonal() == c.diagonal);
    CHECK(s.u * c.m * s.v == s.d);
    CHECK(s.d.is_diagonal());
    CHECK(std::abs(determinant(s.u)) == 1);
    CHECK(std::abs(determinant(s.v)) == 1);
    CHECK(s.u * s.u_inverse == IntMatrix::identity(c.m.rows()));
  }
}

TEST_CASE("Smith normal form agrees with the elimination oracle on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    IntMatrix m(rows, cols);
    std::vector<std::vector<std::int64_t>> raw(rows, std::vector<std::int64_t>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        raw[r][c] = static_cast<std::int64_t>(rng() % 9) - 4;
        m(r, c) = raw[r][c];
      }
    }
    const auto s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    std::vector<std::int64_t> nonzero;
    for (auto d : s.diagonal()) {
      if (d != 0) nonzero.push_back(d);
    }
    CHECK(nonzero == oracle::elementary_divisors(raw));
    CHECK(rank(m) == nonzero.size());
  }
}

TEST_CASE("modular inverse, primality and factorization") {
  for (std::int64_t p = 2; p <= 40; ++p) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CHECK((mod_inverse(q, p) * q) % p == 1);
    }
  }
  CHECK_THROWS_AS(mod_inverse(2, 4), DomainError);
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(1));
  CHECK(factorize(360) == std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
}

TEST_CASE("Legendre symbol matches Euler's criterion") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    for (std::int64_t r = 1; r < p; ++r) {
      std::int64_t e = 1;
      for (std::int64_t i = 0; i < (p - 1) / 2; ++i) e = e * r % p;
      CHECK(legendre_symbol(r, p) == (e == 1 ? 1 : -1));
    }
    CHECK_THROWS_AS(legendre_symbol(p, p), DomainError);
  }
}

TEST_CASE("quadratic Gauss sums at odd primes") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    for (std::int64_t r = 1; r < p; ++r) {
      std::complex<double> direct = 0;
      for (std::int64_t l = 0; l < p; ++l) direct += oracle::unit(static_cast<double>(r * l * l % p) / static_cast<double>(p));
      CHECK(std::abs(gauss_sum(r, p) - direct) < 1e-9);
      CHECK(std::abs(gauss_sum_closed(r, p) - direct) < 1e-9);
    }
  }
  CHECK_THROWS_AS(gauss_sum(2, 4), DomainError);
}
