#include "dwkit/lens.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dwkit/builders.hpp"
#include "dwkit/error.hpp"
#include "dwkit/number_theory.hpp"

namespace dwkit {

namespace {

std::int64_t reduce(std::int64_t x, std::int64_t p) { return ((x % p) + p) % p; }

void require_coprime(std::int64_t p, std::int64_t q) {
  if (p < 1) throw DomainError("lens spaces need p >= 1");
  if (std::gcd(p, q) != 1) {
    throw DomainError("coprimality violated: gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
  }
}

int two_exponent(std::int64_t p) {
  int e = 0;
  while (p % 2 == 0) {
    p /= 2;
    ++e;
  }
  return e;
}

}  // namespace

LensSpace::LensSpace(std::int64_t p, std::int64_t q) : p_(p), q_(0) {
  require_coprime(p, q);
  q_ = reduce(q, p);
}

std::int64_t LensSpace::q_inverse() const { return mod_inverse(q_, p_); }

InvariantValue lens_invariant(std::int64_t p, std::int64_t q, std::int64_t k) {
  const LensSpace lens(p, q);
  const std::int64_t qbar = lens.q_inverse();
  PhaseMultiset phases;
  for (std::int64_t l = 0; l < p; ++l) phases.add(RationalPhase(reduce(k, p) * qbar % p * (l * l % p), p));
  return InvariantValue(std::move(phases), p);
}

Colouring lens_colouring(std::int64_t p, std::int64_t q, std::int64_t l) {
  const LensSpace lens(p, q);
  if (l < 0 || l >= p) throw DomainError("lens colouring needs 0 <= l < p");
  const DeltaComplex c = build_lens(static_cast<int>(p), static_cast<int>(lens.q()));
  const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(p);
  const std::int64_t qbar = lens.q_inverse();
  std::vector<std::optional<GroupElement>> colour(static_cast<std::size_t>(c.count(1)));
  for (int i = 0; i < static_cast<int>(p); ++i) {
    // Positions along the ab axis and around the c/d ring, in units of l.
    const std::int64_t pos[4] = {0, 1, 1 + i * qbar, 1 + (i + 1) * qbar};
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) {
        const GroupElement g = a.element({(pos[v] - pos[u]) % p * l});
        auto& slot = colour[static_cast<std::size_t>(c.edge(3, i, u, v))];
        if (slot && *slot != g) throw DomainError("lens colouring is inconsistent with the triangulation");
        slot = g;
      }
    }
  }
  Colouring out;
  for (auto& g : colour) out.edges.push_back(*g);
  if (!is_flat(c, a, out)) throw DomainError("lens colouring is not flat");
  return out;
}

bool homotopy_equivalent(std::int64_t p, std::int64_t q, std::int64_t q2, bool oriented) {
  require_coprime(p, q);
  require_coprime(p, q2);
  const std::int64_t target = reduce(reduce(q, p) * reduce(q2, p), p);
  for (std::int64_t a = 0; a < p; ++a) {
    const std::int64_t sq = a * a % p;
    if (sq == target) return true;
    if (!oriented && reduce(-sq, p) == target) return true;
  }
  return false;
}

std::string HomotopyClassLabel::to_string() const {
  std::ostringstream os;
  os << "p=" << p;
  for (const auto& [prime, sign] : legendre) os << ";(q|" << prime << ")=" << (sign > 0 ? '+' : '-');
  if (two_modulus > 1) os << ";q=" << two_residue << " mod " << two_modulus;
  return os.str();
}

HomotopyClassLabel homotopy_label(std::int64_t p, std::int64_t q) {
  require_coprime(p, q);
  HomotopyClassLabel label;
  label.p = p;
  for (const auto& [prime, exponent] : factorize(p)) {
    if (prime != 2) label.legendre.emplace_back(prime, legendre_symbol(reduce(q, prime), prime));
  }
  const int e = two_exponent(p);
  if (e == 2) label.two_modulus = 4;
  if (e >= 3) label.two_modulus = 8;
  label.two_residue = reduce(q, label.two_modulus);
  return label;
}

std::vector<HomotopyClass> homotopy_classes(std::int64_t p) {
  if (p < 1) throw DomainError("lens spaces need p >= 1");
  std::vector<HomotopyClass> out;
  for (std::int64_t q = 0; q < p; ++q) {
    if (std::gcd(p, q) != 1) continue;
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const HomotopyClass& c) { return homotopy_equivalent(p, c.members.front(), q); });
    if (it == out.end()) {
      out.push_back(HomotopyClass{homotopy_label(p, q), {q}});
    } else {
      it->members.push_back(q);
    }
  }
  return out;
}

std::int64_t expected_class_count(std::int64_t p) {
  if (p < 1) throw DomainError("lens spaces need p >= 1");
  int m = 0;
  for (const auto& [prime, exponent] : factorize(p)) {
    if (prime != 2) ++m;
  }
  const int e = two_exponent(p);
  const int extra = e <= 1 ? 0 : (e == 2 ? 1 : 2);
  return std::int64_t{1} << (m + extra);
}

std::vector<std::int64_t> distinguishing_levels(std::int64_t p) {
  if (p < 1) throw DomainError("lens spaces need p >= 1");
  std::vector<std::int64_t> out;
  auto push = [&](std::int64_t k) {
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  };
  for (const auto& [prime, exponent] : factorize(p)) {
    if (prime != 2) push(p / prime);
  }
  const int e = two_exponent(p);
  if (e == 2) push(p / 4);
  if (e >= 3) push(p / 8);
  push(p);
  return out;
}

std::vector<std::complex<double>> fingerprint(std::int64_t p, std::int64_t q, const std::vector<std::int64_t>& levels) {
  std::vector<std::complex<double>> out;
  out.reserve(levels.size());
  for (std::int64_t k : levels) out.push_back(lens_invariant(p, q, k).value());
  return out;
}

std::vector<std::vector<std::int64_t>> fingerprint_partition(std::int64_t p, const std::vector<std::int64_t>& levels,
                                                             double tolerance) {
  std::vector<std::vector<std::int64_t>> groups;
  std::vector<std::vector<std::complex<double>>> prints;
  for (std::int64_t q = 0; q < p; ++q) {
    if (std::gcd(p, q) != 1) continue;
    auto f = fingerprint(p, q, levels);
    std::size_t g = 0;
    for (; g < prints.size(); ++g) {
      bool same = true;
      for (std::size_t i = 0; i < f.size() && same; ++i) same = std::abs(f[i] - prints[g][i]) < tolerance;
      if (same) break;
    }
    if (g == prints.size()) {
      prints.push_back(std::move(f));
      groups.emplace_back();
    }
    groups[g].push_back(q);
  }
  return groups;
}

}  // namespace dwkit
