#include "dwkit/cocycles.hpp"

#include <numeric>
#include <random>

#include "dwkit/error.hpp"

namespace dwkit {

namespace {

void require_rank(const FiniteAbelianGroup& a, std::size_t needed, const std::string& who) {
  if (a.rank() < needed) {
    throw DomainError(who + " needs a group with at least " + std::to_string(needed) + " factors, got " + a.to_string());
  }
}

// Carry of b + c in factor i read in U(1): 1 when r_b + r_c >= d_i.
std::int64_t carry(const FiniteAbelianGroup& a, const GroupElement& b, const GroupElement& c, std::size_t i) {
  return b[i] + c[i] >= a.moduli()[i] ? 1 : 0;
}

}  // namespace

GroupCochain::GroupCochain(int degree, std::string name, Rule rule)
    : degree_(degree), name_(std::move(name)), rule_(std::move(rule)) {
  if (degree < 0) throw DomainError("cochain degree must be nonnegative");
}

GroupCochain GroupCochain::trivial(int degree) {
  return GroupCochain(degree, "trivial", [](const FiniteAbelianGroup&, std::span<const GroupElement>) {
    return RationalPhase();
  });
}

GroupCochain GroupCochain::omega(std::int64_t k) {
  return GroupCochain(3, "omega_k:" + std::to_string(k), [k](const FiniteAbelianGroup& a, std::span<const GroupElement> g) {
    if (a.rank() == 0) return RationalPhase();
    const std::int64_t d = a.moduli()[0];
    return RationalPhase(k % d * g[0][0] % d * carry(a, g[1], g[2], 0), d);
  });
}

GroupCochain GroupCochain::psi(std::int64_t l) {
  return GroupCochain(3, "psi_l:" + std::to_string(l), [l](const FiniteAbelianGroup& a, std::span<const GroupElement> g) {
    require_rank(a, 2, "psi_l");
    const std::int64_t d = a.moduli()[0];
    return RationalPhase(l % d * g[0][0] % d * carry(a, g[1], g[2], 1), d);
  });
}

GroupCochain GroupCochain::bicharacter(std::size_t i, std::size_t j, std::int64_t multiple) {
  const std::string name = "bichar:" + std::to_string(i) + "," + std::to_string(j);
  return GroupCochain(2, name, [i, j, multiple](const FiniteAbelianGroup& a, std::span<const GroupElement> g) {
    require_rank(a, std::max(i, j) + 1, "bicharacter");
    const std::int64_t m = std::gcd(a.moduli()[i], a.moduli()[j]);
    return RationalPhase(multiple % m * (g[0][i] % m) % m * (g[1][j] % m), m);
  });
}

GroupCochain GroupCochain::table(FiniteAbelianGroup group, int degree, std::vector<RationalPhase> values) {
  std::int64_t expected = 1;
  for (int i = 0; i < degree; ++i) expected *= group.order();
  if (static_cast<std::int64_t>(values.size()) != expected) {
    throw InputError("cochain table needs " + std::to_string(expected) + " values, got " + std::to_string(values.size()));
  }
  auto shared = std::make_shared<std::vector<RationalPhase>>(std::move(values));
  GroupCochain out(degree, "table", [shared](const FiniteAbelianGroup& a, std::span<const GroupElement> g) {
    std::int64_t index = 0;
    for (std::size_t j = g.size(); j-- > 0;) index = index * a.order() + a.index_of(g[j]);
    return (*shared)[static_cast<std::size_t>(index)];
  });
  out.group_ = std::move(group);
  return out;
}

RationalPhase GroupCochain::operator()(const FiniteAbelianGroup& a, std::span<const GroupElement> args) const {
  if (static_cast<int>(args.size()) != degree_) {
    throw DomainError("cochain of degree " + std::to_string(degree_) + " called with " + std::to_string(args.size()) +
                      " arguments");
  }
  if (group_ && !(*group_ == a)) {
    throw DomainError("table cochain on " + group_->to_string() + " evaluated on " + a.to_string());
  }
  return rule_(a, args);
}

std::vector<RationalPhase> GroupCochain::values(const FiniteAbelianGroup& a) const {
  std::vector<RationalPhase> out;
  for_each_tuple(a, degree_, [&](std::span<const GroupElement> g) { out.push_back((*this)(a, g)); });
  return out;
}

GroupCochain GroupCochain::materialize(const FiniteAbelianGroup& a) const {
  GroupCochain out = table(a, degree_, values(a));
  out.name_ = name_;
  return out;
}

void for_each_tuple(const FiniteAbelianGroup& a, int degree,
                    const std::function<void(std::span<const GroupElement>)>& fn) {
  const auto elements = a.elements();
  std::vector<std::size_t> idx(static_cast<std::size_t>(degree), 0);
  std::vector<GroupElement> tuple(static_cast<std::size_t>(degree), a.identity());
  for (;;) {
    for (std::size_t j = 0; j < idx.size(); ++j) tuple[j] = elements[idx[j]];
    fn(tuple);
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == elements.size()) idx[j++] = 0;
    if (j == idx.size()) return;
  }
}

GroupCochain coboundary(const GroupCochain& w) {
  const int n = w.degree();
  return GroupCochain(n + 1, "d(" + w.name() + ")", [w, n](const FiniteAbelianGroup& a, std::span<const GroupElement> g) {
    std::vector<GroupElement> args(g.begin() + 1, g.end());
    RationalPhase sum = w(a, args);
    for (int i = 1; i <= n; ++i) {
      args.clear();
      for (int j = 0; j <= n; ++j) {
        if (j == i) continue;
        args.push_back(j == i - 1 ? a.add(g[static_cast<std::size_t>(j)], g[static_cast<std::size_t>(j + 1)])
                                  : g[static_cast<std::size_t>(j)]);
      }
      const RationalPhase term = w(a, args);
      sum += (i % 2 == 0) ? term : -term;
    }
    args.assign(g.begin(), g.end() - 1);
    const RationalPhase last = w(a, args);
    sum += ((n + 1) % 2 == 0) ? last : -last;
    return sum;
  });
}

GroupCochain product(const GroupCochain& x, const GroupCochain& y) {
  if (x.degree() != y.degree()) throw DomainError("product of cochains of different degree");
  return GroupCochain(x.degree(), x.name() + "*" + y.name(), [x, y](const FiniteAbelianGroup& a, std::span<const GroupElement> g) {
    return x(a, g) + y(a, g);
  });
}

GroupCochain power(const GroupCochain& x, std::int64_t k) {
  return GroupCochain(x.degree(), x.name() + "^" + std::to_string(k), [x, k](const FiniteAbelianGroup& a, std::span<const GroupElement> g) {
    return x(a, g) * k;
  });
}

GroupCochain slant(const GroupCochain& w, const GroupElement& s) {
  if (w.degree() < 1) throw DomainError("slant needs a cochain of degree >= 1");
  const int n = w.degree() - 1;
  return GroupCochain(n, "slant(" + w.name() + ")", [w, s, n](const FiniteAbelianGroup& a, std::span<const GroupElement> g) {
    RationalPhase sum;
    std::vector<GroupElement> args;
    for (int i = 0; i <= n; ++i) {
      args.assign(g.begin(), g.begin() + i);
      args.push_back(s);
      args.insert(args.end(), g.begin() + i, g.end());
      const RationalPhase term = w(a, args);
      sum += ((n - i) % 2 == 0) ? term : -term;
    }
    return sum;
  });
}

bool is_zero(const GroupCochain& w, const FiniteAbelianGroup& a) {
  bool zero = true;
  for_each_tuple(a, w.degree(), [&](std::span<const GroupElement> g) {
    if (zero && !w(a, g).is_zero()) zero = false;
  });
  return zero;
}

bool is_cocycle(const GroupCochain& w, const FiniteAbelianGroup& a) {
  // Dense check over integer numerators with a common denominator and an addition table.
  const int n = w.degree();
  const std::vector<RationalPhase> values = w.values(a);
  std::int64_t common = 1;
  for (const auto& v : values) {
    common = std::lcm(common, v.denominator());
    if (common > (std::int64_t{1} << 40)) return is_zero(coboundary(w.materialize(a)), a);
  }
  std::vector<std::int64_t> num(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) num[i] = values[i].numerator() * (common / values[i].denominator());
  const auto order = static_cast<std::size_t>(a.order());
  const auto elements = a.elements();
  std::vector<std::size_t> sum(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      sum[x * order + y] = static_cast<std::size_t>(a.index_of(a.add(elements[x], elements[y])));
    }
  }
  std::vector<std::size_t> g(static_cast<std::size_t>(n + 1), 0);
  std::vector<std::size_t> args(static_cast<std::size_t>(n));
  auto lookup = [&]() {
    std::size_t index = 0;
    for (std::size_t j = args.size(); j-- > 0;) index = index * order + args[j];
    return num[index];
  };
  for (;;) {
    std::int64_t total = 0;
    for (int i = 0; i <= n + 1; ++i) {
      // i = 0 drops g_0, i = n + 1 drops g_n, otherwise g_{i-1} and g_i merge.
      std::size_t out = 0;
      for (int j = 0; j <= n; ++j) {
        if (i == 0 && j == 0) continue;
        if (i == n + 1 && j == n) continue;
        if (i >= 1 && i <= n && j == i) continue;
        args[out++] = (i >= 1 && i <= n && j == i - 1) ? sum[g[static_cast<std::size_t>(j)] * order + g[static_cast<std::size_t>(j + 1)]]
                                                       : g[static_cast<std::size_t>(j)];
      }
      total += (i % 2 == 0) ? lookup() : -lookup();
    }
    if (total % common != 0) return false;
    std::size_t j = 0;
    while (j < g.size() && ++g[j] == order) g[j++] = 0;
    if (j == g.size()) return true;
  }
}

bool is_normalized(const GroupCochain& w, const FiniteAbelianGroup& a) {
  const GroupElement e = a.identity();
  bool ok = true;
  for_each_tuple(a, w.degree(), [&](std::span<const GroupElement> g) {
    if (!ok) return;
    for (const auto& x : g) {
      if (x == e) {
        if (!w(a, g).is_zero()) ok = false;
        return;
      }
    }
  });
  return ok;
}

bool equal_on(const GroupCochain& x, const GroupCochain& y, const FiniteAbelianGroup& a) {
  if (x.degree() != y.degree()) return false;
  bool same = true;
  for_each_tuple(a, x.degree(), [&](std::span<const GroupElement> g) {
    if (same && x(a, g) != y(a, g)) same = false;
  });
  return same;
}

GroupCochain random_cochain(const FiniteAbelianGroup& a, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::int64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= a.order();
  std::vector<RationalPhase> values;
  values.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) values.emplace_back(static_cast<std::int64_t>(rng() % 60), 60);
  GroupCochain out = GroupCochain::table(a, degree, std::move(values));
  return out;
}

GroupCochain random_coboundary(const FiniteAbelianGroup& a, int degree, std::uint64_t seed) {
  if (degree < 1) throw DomainError("coboundaries have degree >= 1");
  return coboundary(random_cochain(a, degree - 1, seed)).materialize(a);
}

}  // namespace dwkit
