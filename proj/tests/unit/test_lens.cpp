#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "dwkit/builders.hpp"
#include "dwkit/error.hpp"
#include "dwkit/invariant.hpp"
#include "dwkit/lens.hpp"
#include "oracles.hpp"

using namespace dwkit;

namespace {

std::int64_t class_count_by_hand(std::int64_t p) {
  int odd = 0;
  int twos = 0;
  std::int64_t n = p;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  for (std::int64_t f = 3; f <= n; f += 2) {
    if (n % f == 0) ++odd;
    while (n % f == 0) n /= f;
  }
  return (std::int64_t{1} << odd) * (twos <= 1 ? 1 : (twos == 2 ? 2 : 4));
}

}  // namespace

TEST_CASE("closed-form lens invariant against direct summation") {
  for (std::int64_t p = 1; p <= 15; ++p) {
    for (std::int64_t q = 0; q < std::max<std::int64_t>(p, 1); ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t k = 0; k <= 2 * p; ++k) CHECK(std::abs(lens_invariant(p, q, k).value() - oracle::lens(p, q, k)) < 1e-9);
    }
  }
  CHECK_THROWS_AS(lens_invariant(6, 3, 1), DomainError);
}

TEST_CASE("lens colourings realize each holonomy class once") {
  for (std::int64_t p : {2, 3, 5, 7, 8}) {
    for (std::int64_t q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto c = build_lens(static_cast<int>(p), static_cast<int>(q));
      const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(p);
      const FieldSpace space(c, a);
      const auto o = orient(c);
      std::vector<std::int64_t> classes;
      std::map<RationalPhase, int> weights;
      for (std::int64_t l = 0; l < p; ++l) {
        const auto col = lens_colouring(p, q, l);
        CHECK(is_flat(c, a, col));
        classes.push_back(space.index_of(space.canonicalize(col)));
        ++weights[weight(c, o, a, GroupCochain::omega(1), col)];
      }
      std::sort(classes.begin(), classes.end());
      CHECK(std::adjacent_find(classes.begin(), classes.end()) == classes.end());
      std::map<RationalPhase, int> expected;
      const auto z = lens_invariant(p, q, 1);
      for (const auto& [phase, count] : z.phases().counts()) expected[phase] = static_cast<int>(count);
      CHECK(weights == expected);
    }
  }
}

TEST_CASE("homotopy classes match squares mod p for p <= 30") {
  for (std::int64_t p = 1; p <= 30; ++p) {
    INFO("p = " << p);
    std::vector<std::vector<std::int64_t>> got;
    for (const auto& c : homotopy_classes(p)) got.push_back(c.members);
    CHECK(got == oracle::square_classes(p));
    CHECK(expected_class_count(p) == class_count_by_hand(p));
    CHECK(static_cast<std::int64_t>(got.size()) == class_count_by_hand(p));
  }
}

TEST_CASE("labels separate classes and agree within them") {
  for (std::int64_t p = 2; p <= 40; ++p) {
    const auto classes = homotopy_classes(p);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (auto q : classes[i].members) CHECK(homotopy_label(p, q) == classes[i].label);
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(classes[i].label == classes[j].label);
    }
  }
}

TEST_CASE("small classification examples") {
  std::vector<std::vector<std::int64_t>> seven;
  for (const auto& c : homotopy_classes(7)) seven.push_back(c.members);
  CHECK(seven == std::vector<std::vector<std::int64_t>>{{1, 2, 4}, {3, 5, 6}});
  std::vector<std::vector<std::int64_t>> four;
  for (const auto& c : homotopy_classes(4)) four.push_back(c.members);
  CHECK(four == std::vector<std::vector<std::int64_t>>{{1}, {3}});
  CHECK(homotopy_label(4, 3).to_string() == "p=4;q=3 mod 4");
  CHECK(homotopy_equivalent(5, 1, 4));
  CHECK_FALSE(homotopy_equivalent(7, 1, 3));
  CHECK(homotopy_equivalent(7, 1, 3, false));
}

TEST_CASE("fingerprints over the distinguishing levels give the homotopy partition") {
  for (std::int64_t p = 1; p <= 30; ++p) {
    INFO("p = " << p);
    auto levels = distinguishing_levels(p);
    CHECK(fingerprint_partition(p, levels) == oracle::square_classes(p));
    for (std::int64_t k = 0; k <= p; ++k) levels.push_back(k);
    CHECK(fingerprint_partition(p, levels) == oracle::square_classes(p));
  }
}

TEST_CASE("distinguishing levels") {
  CHECK(distinguishing_levels(7) == std::vector<std::int64_t>{1, 7});
  CHECK(distinguishing_levels(12) == std::vector<std::int64_t>{4, 3, 12});
  CHECK(distinguishing_levels(16) == std::vector<std::int64_t>{2, 16});
  CHECK(distinguishing_levels(1) == std::vector<std::int64_t>{1});
}
