#include "dwkit/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dwkit/error.hpp"

namespace dwkit {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>((static_cast<__int128>(floor_mod(a, m)) * floor_mod(b, m)) % m);
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  os << '(';
  for (std::size_t i = 0; i < g.rank(); ++i) os << (i ? "," : "") << g[i];
  return os << ')';
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  order_ = 1;
  for (std::int64_t d : moduli_) {
    if (d < 1) throw DomainError("group moduli must be >= 1");
    if (__builtin_mul_overflow(order_, d, &order_)) throw DomainError("group order overflows");
  }
}

std::int64_t FiniteAbelianGroup::exponent() const {
  std::int64_t e = 1;
  for (std::int64_t d : moduli_) e = std::lcm(e, d);
  return e;
}

GroupElement FiniteAbelianGroup::identity() const {
  return GroupElement(std::vector<std::int64_t>(moduli_.size(), 0));
}

GroupElement FiniteAbelianGroup::element(std::vector<std::int64_t> residues) const {
  if (residues.size() != moduli_.size()) {
    throw DomainError("element rank " + std::to_string(residues.size()) + " does not match group " + to_string());
  }
  for (std::size_t i = 0; i < residues.size(); ++i) residues[i] = floor_mod(residues[i], moduli_[i]);
  return GroupElement(std::move(residues));
}

bool FiniteAbelianGroup::contains(const GroupElement& g) const {
  if (g.rank() != moduli_.size()) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (g[i] < 0 || g[i] >= moduli_[i]) return false;
  }
  return true;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  std::vector<std::int64_t> r(moduli_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = floor_mod(a[i] + b[i], moduli_[i]);
  return GroupElement(std::move(r));
}

GroupElement FiniteAbelianGroup::subtract(const GroupElement& a, const GroupElement& b) const {
  std::vector<std::int64_t> r(moduli_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = floor_mod(a[i] - b[i], moduli_[i]);
  return GroupElement(std::move(r));
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  std::vector<std::int64_t> r(moduli_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = floor_mod(-a[i], moduli_[i]);
  return GroupElement(std::move(r));
}

GroupElement FiniteAbelianGroup::scale(const GroupElement& a, std::int64_t k) const {
  std::vector<std::int64_t> r(moduli_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mul_mod(a[i], k, moduli_[i]);
  return GroupElement(std::move(r));
}

std::int64_t FiniteAbelianGroup::index_of(const GroupElement& g) const {
  std::int64_t index = 0;
  for (std::size_t i = moduli_.size(); i-- > 0;) index = index * moduli_[i] + g[i];
  return index;
}

GroupElement FiniteAbelianGroup::element_at(std::int64_t index) const {
  std::vector<std::int64_t> r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r[i] = index % moduli_[i];
    index /= moduli_[i];
  }
  return GroupElement(std::move(r));
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

RationalPhase FiniteAbelianGroup::coordinate_phase(const GroupElement& g, std::size_t i) const {
  if (i >= moduli_.size()) return {};
  return RationalPhase(g[i], moduli_[i]);
}

std::string FiniteAbelianGroup::to_string() const {
  if (moduli_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < moduli_.size(); ++i) os << (i ? " + " : "") << "Z/" << moduli_[i];
  return os.str();
}

FinitelyGeneratedAbelianGroup FinitelyGeneratedAbelianGroup::from_cyclic_orders(
    std::span<const std::int64_t> orders) {
  FinitelyGeneratedAbelianGroup out;
  // prime -> exponents of the primary components
  std::map<std::int64_t, std::vector<std::int64_t>> powers;
  for (std::int64_t o : orders) {
    if (o < 0) throw DomainError("cyclic order must be nonnegative");
    if (o == 0) {
      ++out.free_rank;
      continue;
    }
    std::int64_t n = o;
    for (std::int64_t p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      std::int64_t pk = 1;
      while (n % p == 0) {
        n /= p;
        pk *= p;
      }
      powers[p].push_back(pk);
    }
    if (n > 1) powers[n].push_back(n);
  }
  std::size_t count = 0;
  for (auto& [p, list] : powers) {
    std::sort(list.begin(), list.end(), std::greater<>());
    count = std::max(count, list.size());
  }
  // Largest invariant factor collects the largest power of every prime.
  std::vector<std::int64_t> factors(count, 1);
  for (const auto& [p, list] : powers) {
    for (std::size_t i = 0; i < list.size(); ++i) factors[count - 1 - i] *= list[i];
  }
  out.torsion = std::move(factors);
  return out;
}

std::vector<std::int64_t> FinitelyGeneratedAbelianGroup::generator_orders() const {
  std::vector<std::int64_t> out = torsion;
  out.insert(out.end(), static_cast<std::size_t>(free_rank), 0);
  return out;
}

std::string FinitelyGeneratedAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (std::int64_t t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

FinitelyGeneratedAbelianGroup direct_sum(const FinitelyGeneratedAbelianGroup& a,
                                         const FinitelyGeneratedAbelianGroup& b) {
  std::vector<std::int64_t> orders = a.generator_orders();
  auto more = b.generator_orders();
  orders.insert(orders.end(), more.begin(), more.end());
  return FinitelyGeneratedAbelianGroup::from_cyclic_orders(orders);
}

namespace {

FiniteAbelianGroup hom_factors(std::span<const std::int64_t> source_orders, const FiniteAbelianGroup& target) {
  std::vector<std::int64_t> moduli;
  for (std::int64_t o : source_orders) {
    for (std::int64_t d : target.moduli()) moduli.push_back(std::gcd(o, d));
  }
  return FiniteAbelianGroup(std::move(moduli));
}

}  // namespace

HomGroup::HomGroup(std::vector<std::int64_t> source_orders, FiniteAbelianGroup target)
    : source_orders_(std::move(source_orders)),
      target_(std::move(target)),
      group_(hom_factors(source_orders_, target_)) {}

std::vector<GroupElement> HomGroup::images(const GroupElement& phi) const {
  const auto& d = target_.moduli();
  std::vector<GroupElement> out;
  out.reserve(source_orders_.size());
  std::size_t slot = 0;
  for (std::size_t j = 0; j < source_orders_.size(); ++j) {
    std::vector<std::int64_t> r(d.size());
    for (std::size_t i = 0; i < d.size(); ++i, ++slot) {
      std::int64_t g = group_.moduli()[slot];
      r[i] = phi[slot] * (d[i] / g);
    }
    out.emplace_back(std::move(r));
  }
  return out;
}

GroupElement HomGroup::from_images(std::span<const GroupElement> images) const {
  if (images.size() != source_orders_.size()) throw DomainError("wrong number of generator images");
  const auto& d = target_.moduli();
  std::vector<std::int64_t> r;
  std::size_t slot = 0;
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (std::size_t i = 0; i < d.size(); ++i, ++slot) {
      std::int64_t step = d[i] / group_.moduli()[slot];
      std::int64_t x = floor_mod(images[j][i], d[i]);
      if (x % step != 0) throw DomainError("generator images do not define a homomorphism");
      r.push_back(x / step);
    }
  }
  return GroupElement(std::move(r));
}

HomGroup hom_group(const FinitelyGeneratedAbelianGroup& source, const FiniteAbelianGroup& target) {
  return HomGroup(source.generator_orders(), target);
}

}  // namespace dwkit
