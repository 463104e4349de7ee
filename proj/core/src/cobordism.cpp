#include "dwkit/cobordism.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "dwkit/error.hpp"

namespace dwkit {

namespace {

struct Incidence {
  int top;
  int index;
};

int parity_sign(int i) { return i % 2 == 0 ? 1 : -1; }

std::vector<std::vector<Incidence>> face_incidences(const DeltaComplex& c) {
  const int n = c.dimension();
  std::vector<std::vector<Incidence>> inc(static_cast<std::size_t>(c.count(n - 1)));
  if (n == 0) return inc;
  for (int t = 0; t < c.top_count(); ++t) {
    for (int i = 0; i <= n; ++i) inc[static_cast<std::size_t>(c.face(n, t, i))].push_back({t, i});
  }
  return inc;
}

// Side marker per codimension-one face: 0 none, 1 incoming, 2 outgoing.
std::vector<int> boundary_marks(const DeltaComplex& c, const BoundaryPart* in, const BoundaryPart* out) {
  std::vector<int> marks(static_cast<std::size_t>(c.count(c.dimension() - 1)), 0);
  auto mark = [&](const BoundaryPart* part, int value) {
    if (!part || part->empty()) return;
    for (int f : part->top_faces()) {
      if (marks[static_cast<std::size_t>(f)] != 0) {
        throw DomainError("face " + std::to_string(f) + " is marked as boundary twice");
      }
      marks[static_cast<std::size_t>(f)] = value;
    }
  };
  mark(in, 1);
  mark(out, 2);
  return marks;
}

void check_manifold_faces(const std::vector<std::vector<Incidence>>& inc, const std::vector<int>& marks) {
  for (std::size_t f = 0; f < inc.size(); ++f) {
    const std::size_t n = inc[f].size();
    if (n > 2 || n == 0) {
      throw DomainError("non-manifold gluing: face " + std::to_string(f) + " lies on " + std::to_string(n) +
                        " top simplices");
    }
    if (n == 1 && marks[f] == 0) {
      throw DomainError("boundary face " + std::to_string(f) + " is neither incoming nor outgoing");
    }
    if (n == 2 && marks[f] != 0) {
      throw DomainError("marked boundary face " + std::to_string(f) + " is interior");
    }
  }
}

// Propagates signs over the dual graph; returns signs and the component of each top simplex.
std::pair<std::vector<int>, std::vector<int>> propagate(const DeltaComplex& c,
                                                         const std::vector<std::vector<Incidence>>& inc) {
  const int n = c.dimension();
  const int tops = c.top_count();
  std::vector<int> sign(static_cast<std::size_t>(tops), 0);
  std::vector<int> comp(static_cast<std::size_t>(tops), -1);
  int components = 0;
  for (int start = 0; start < tops; ++start) {
    if (sign[static_cast<std::size_t>(start)] != 0) continue;
    sign[static_cast<std::size_t>(start)] = 1;
    comp[static_cast<std::size_t>(start)] = components;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int t = queue.front();
      queue.pop_front();
      if (n == 0) break;
      for (int i = 0; i <= n; ++i) {
        const auto& pair = inc[static_cast<std::size_t>(c.face(n, t, i))];
        if (pair.size() != 2) continue;
        // the incidence of this face that is not (t, i)
        const Incidence other = (pair[0].top == t && pair[0].index == i) ? pair[1] : pair[0];
        const int want = -sign[static_cast<std::size_t>(t)] * parity_sign(i) * parity_sign(other.index);
        int& s = sign[static_cast<std::size_t>(other.top)];
        if (s == 0) {
          s = want;
          comp[static_cast<std::size_t>(other.top)] = components;
          queue.push_back(other.top);
        } else if (s != want) {
          throw DomainError("non-orientable: inconsistent orientation across face " +
                            std::to_string(c.face(n, t, i)));
        }
      }
    }
    ++components;
  }
  return {sign, comp};
}

FundamentalCycle induced(const DeltaComplex& total, const FundamentalCycle& f,
                         const std::vector<std::vector<Incidence>>& inc, const BoundaryPart& part, int factor) {
  FundamentalCycle out;
  const int n = total.dimension();
  for (int face : part.top_faces()) {
    const Incidence& x = inc[static_cast<std::size_t>(face)].front();
    out.signs.push_back(factor * parity_sign(x.index) * f.sign(x.top));
    (void)n;
  }
  return out;
}

}  // namespace

std::span<const int> BoundaryPart::top_faces() const {
  if (embedding.empty()) return {};
  const auto& top = embedding[static_cast<std::size_t>(complex.dimension())];
  return {top.data(), top.size()};
}

BoundaryPart extract_boundary(const DeltaComplex& total, std::span<const int> faces) {
  const int n = total.dimension();
  if (n < 1) throw DomainError("boundary of a 0-dimensional complex");
  const int m = n - 1;
  BoundaryPart part;
  part.embedding.assign(static_cast<std::size_t>(n), {});
  if (faces.empty()) {
    part.complex = DeltaComplex::empty(m);
    return part;
  }
  std::vector<std::map<int, int>> local(static_cast<std::size_t>(n));
  for (int f : faces) {
    if (f < 0 || f >= total.count(m)) throw InputError("boundary face " + std::to_string(f) + " out of range");
    auto [it, inserted] = local[static_cast<std::size_t>(m)].emplace(f, static_cast<int>(part.embedding[static_cast<std::size_t>(m)].size()));
    if (!inserted) throw InputError("boundary face " + std::to_string(f) + " listed twice");
    part.embedding[static_cast<std::size_t>(m)].push_back(f);
  }
  std::vector<std::vector<std::vector<int>>> tables(static_cast<std::size_t>(m));
  for (int k = m; k >= 1; --k) {
    auto& below = local[static_cast<std::size_t>(k - 1)];
    auto& emb_below = part.embedding[static_cast<std::size_t>(k - 1)];
    auto& table = tables[static_cast<std::size_t>(k - 1)];
    for (int id : part.embedding[static_cast<std::size_t>(k)]) {
      std::vector<int> f;
      for (int x : total.faces(k, id)) {
        auto [it, inserted] = below.emplace(x, static_cast<int>(emb_below.size()));
        if (inserted) emb_below.push_back(x);
        f.push_back(it->second);
      }
      table.push_back(std::move(f));
    }
  }
  part.complex = DeltaComplex(m, static_cast<int>(part.embedding[0].size()), std::move(tables));
  return part;
}

FundamentalCycle orient(const DeltaComplex& complex) {
  auto inc = face_incidences(complex);
  check_manifold_faces(inc, boundary_marks(complex, nullptr, nullptr));
  return FundamentalCycle{propagate(complex, inc).first};
}

FundamentalCycle orient(const DeltaComplex& complex, const BoundaryPart& incoming, const BoundaryPart& outgoing) {
  const int n = complex.dimension();
  auto inc = face_incidences(complex);
  check_manifold_faces(inc, boundary_marks(complex, &incoming, &outgoing));
  auto [sign, comp] = propagate(complex, inc);
  const int components = sign.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> flip(static_cast<std::size_t>(components), 0);

  auto pin = [&](const BoundaryPart& part, int factor) {
    if (part.empty()) return;
    FundamentalCycle own = orient(part.complex);
    auto faces = part.top_faces();
    for (std::size_t m = 0; m < faces.size(); ++m) {
      const Incidence& x = inc[static_cast<std::size_t>(faces[m])].front();
      int& f = flip[static_cast<std::size_t>(comp[static_cast<std::size_t>(x.top)])];
      if (f != 0) continue;
      const int induced_sign = parity_sign(x.index) * sign[static_cast<std::size_t>(x.top)];
      f = (induced_sign == factor * own.sign(static_cast<int>(m))) ? 1 : -1;
    }
  };
  pin(outgoing, 1);
  pin(incoming, -1);
  for (std::size_t t = 0; t < sign.size(); ++t) {
    const int f = flip[static_cast<std::size_t>(comp[t])];
    if (f == -1) sign[t] = -sign[t];
  }
  (void)n;
  return FundamentalCycle{sign};
}

Cobordism::Cobordism(DeltaComplex total, BoundaryPart incoming, BoundaryPart outgoing,
                     std::optional<FundamentalCycle> orientation)
    : total_(std::move(total)), incoming_(std::move(incoming)), outgoing_(std::move(outgoing)) {
  require_valid(total_);
  const int n = total_.dimension();
  if (n < 1) throw DomainError("cobordisms need dimension >= 1");
  for (BoundaryPart* part : {&incoming_, &outgoing_}) {
    if (part->embedding.empty()) part->embedding.assign(static_cast<std::size_t>(n), {});
    if (part->complex.dimension() != n - 1 && !(part->empty() && part->complex.dimension() == 0)) {
      throw DomainError("boundary part has the wrong dimension");
    }
    if (part->empty()) {
      part->complex = DeltaComplex::empty(n - 1);
      part->embedding.assign(static_cast<std::size_t>(n), {});
      continue;
    }
    require_valid(part->complex);
    if (part->embedding.size() != static_cast<std::size_t>(n)) throw DomainError("boundary embedding has wrong depth");
    for (int k = 0; k < n; ++k) {
      const auto& emb = part->embedding[static_cast<std::size_t>(k)];
      if (emb.size() != static_cast<std::size_t>(part->complex.count(k))) {
        throw DomainError("boundary embedding size mismatch in dimension " + std::to_string(k));
      }
      std::vector<int> sorted = emb;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DomainError("boundary embedding is not injective in dimension " + std::to_string(k));
      }
      for (int x : emb) {
        if (x < 0 || x >= total_.count(k)) throw DomainError("boundary embedding out of range");
      }
      if (k == 0) continue;
      for (int s = 0; s < part->complex.count(k); ++s) {
        for (int i = 0; i <= k; ++i) {
          const int lhs = total_.face(k, emb[static_cast<std::size_t>(s)], i);
          const int rhs = part->embedding[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(part->complex.face(k, s, i))];
          if (lhs != rhs) throw DomainError("boundary embedding does not commute with face maps");
        }
      }
    }
  }
  auto inc = face_incidences(total_);
  if (orientation) {
    if (orientation->signs.size() != static_cast<std::size_t>(total_.top_count())) {
      throw DomainError("orientation has the wrong length");
    }
    check_manifold_faces(inc, boundary_marks(total_, &incoming_, &outgoing_));
    for (std::size_t f = 0; f < inc.size(); ++f) {
      if (inc[f].size() != 2) continue;
      const int a = parity_sign(inc[f][0].index) * orientation->sign(inc[f][0].top);
      const int b = parity_sign(inc[f][1].index) * orientation->sign(inc[f][1].top);
      if (a + b != 0) throw DomainError("supplied orientation is inconsistent across face " + std::to_string(f));
    }
    for (int s : orientation->signs) {
      if (s != 1 && s != -1) throw DomainError("orientation signs must be +1 or -1");
    }
    orientation_ = *orientation;
  } else {
    orientation_ = orient(total_, incoming_, outgoing_);
  }
  incoming_.orientation = induced(total_, orientation_, inc, incoming_, -1);
  outgoing_.orientation = induced(total_, orientation_, inc, outgoing_, 1);
}

Cobordism Cobordism::closed(DeltaComplex total, std::optional<FundamentalCycle> orientation) {
  const int n = total.dimension();
  return Cobordism(std::move(total), BoundaryPart{DeltaComplex::empty(std::max(n - 1, 0)), {}, {}},
                   BoundaryPart{DeltaComplex::empty(std::max(n - 1, 0)), {}, {}}, std::move(orientation));
}

Cobordism Cobordism::from_faces(DeltaComplex total, std::span<const int> incoming_faces,
                                std::span<const int> outgoing_faces) {
  require_valid(total);
  BoundaryPart in = extract_boundary(total, incoming_faces);
  BoundaryPart out = extract_boundary(total, outgoing_faces);
  return Cobordism(std::move(total), std::move(in), std::move(out));
}

Cobordism reverse(const Cobordism& w) {
  BoundaryPart in = w.outgoing();
  BoundaryPart out = w.incoming();
  return Cobordism(w.total(), std::move(in), std::move(out), w.orientation().reversed());
}

Cobordism glue(const Cobordism& first, const Cobordism& second) {
  if (first.dimension() != second.dimension()) throw DomainError("cannot glue cobordisms of different dimension");
  const BoundaryPart& m1 = first.outgoing();
  const BoundaryPart& m2 = second.incoming();
  if (!(m1.complex == m2.complex)) throw DomainError("gluing locus mismatch: outgoing and incoming complexes differ");
  if (!(m1.orientation == m2.orientation)) throw DomainError("orientation mismatch along the gluing locus");

  const int n = first.dimension();
  const DeltaComplex& a = first.total();
  const DeltaComplex& b = second.total();
  // map[k][id in b] -> id in glued complex
  std::vector<std::vector<int>> map(static_cast<std::size_t>(n + 1));
  std::vector<int> counts(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) {
    auto& mk = map[static_cast<std::size_t>(k)];
    mk.assign(static_cast<std::size_t>(b.count(k)), -1);
    if (k < n) {
      const auto& e1 = m1.embedding[static_cast<std::size_t>(k)];
      const auto& e2 = m2.embedding[static_cast<std::size_t>(k)];
      for (std::size_t s = 0; s < e2.size(); ++s) mk[static_cast<std::size_t>(e2[s])] = e1[s];
    }
    int next = a.count(k);
    for (int& x : mk) {
      if (x < 0) x = next++;
    }
    counts[static_cast<std::size_t>(k)] = next;
  }
  std::vector<std::vector<std::vector<int>>> faces(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    auto& table = faces[static_cast<std::size_t>(k - 1)];
    table = a.simplices(k);
    table.resize(static_cast<std::size_t>(counts[static_cast<std::size_t>(k)]));
    for (int s = 0; s < b.count(k); ++s) {
      const int target = map[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)];
      if (target < a.count(k)) continue;
      std::vector<int> f;
      for (int x : b.faces(k, s)) f.push_back(map[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(x)]);
      table[static_cast<std::size_t>(target)] = std::move(f);
    }
  }
  DeltaComplex glued(n, counts[0], std::move(faces));

  BoundaryPart out = second.outgoing();
  for (int k = 0; k < n && !out.empty(); ++k) {
    for (int& x : out.embedding[static_cast<std::size_t>(k)]) x = map[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)];
  }
  FundamentalCycle orientation = first.orientation();
  orientation.signs.resize(static_cast<std::size_t>(counts[static_cast<std::size_t>(n)]));
  for (int t = 0; t < b.top_count(); ++t) {
    orientation.signs[static_cast<std::size_t>(map[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)])] =
        second.orientation().sign(t);
  }
  return Cobordism(std::move(glued), first.incoming(), std::move(out), std::move(orientation));
}

Cobordism disjoint_union(const Cobordism& a, const Cobordism& b) {
  if (!a.is_closed() || !b.is_closed()) throw DomainError("disjoint union is only supported for closed cobordisms");
  FundamentalCycle f = a.orientation();
  f.signs.insert(f.signs.end(), b.orientation().signs.begin(), b.orientation().signs.end());
  return Cobordism::closed(disjoint_union(a.total(), b.total()), std::move(f));
}

}  // namespace dwkit
