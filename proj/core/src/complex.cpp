#include "dwkit/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dwkit/error.hpp"

namespace dwkit {

DeltaComplex::DeltaComplex(int dimension, int vertex_count, std::vector<std::vector<std::vector<int>>> faces)
    : dimension_(dimension), vertex_count_(vertex_count), faces_(std::move(faces)) {
  if (dimension_ < 0) throw InputError("complex dimension must be nonnegative");
  if (vertex_count_ < 0) throw InputError("vertex count must be nonnegative");
  if (faces_.size() != static_cast<std::size_t>(dimension_)) {
    throw InputError("expected face tables for dimensions 1.." + std::to_string(dimension_));
  }
}

DeltaComplex DeltaComplex::empty(int dimension) {
  return DeltaComplex(dimension, 0, std::vector<std::vector<std::vector<int>>>(static_cast<std::size_t>(dimension)));
}

int DeltaComplex::count(int k) const {
  if (k < 0 || k > dimension_) return 0;
  if (k == 0) return vertex_count_;
  return static_cast<int>(faces_[static_cast<std::size_t>(k - 1)].size());
}

std::span<const int> DeltaComplex::faces(int k, int id) const {
  const auto& s = faces_[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(id)];
  return {s.data(), s.size()};
}

int DeltaComplex::subsimplex(int k, int id, std::span<const int> local_vertices) const {
  // Remove unwanted local vertices from the top down so lower indices stay put.
  int current = id;
  int dim = k;
  std::size_t keep = local_vertices.size();
  for (int v = k; v >= 0; --v) {
    if (keep > 0 && local_vertices[keep - 1] == v) {
      --keep;
      continue;
    }
    current = face(dim, current, v);
    --dim;
  }
  return current;
}

int DeltaComplex::vertex(int k, int id, int i) const {
  const int local[1] = {i};
  return subsimplex(k, id, local);
}

int DeltaComplex::edge(int k, int id, int i, int j) const {
  const int local[2] = {i, j};
  return subsimplex(k, id, local);
}

int DeltaComplex::euler_characteristic() const {
  int chi = 0;
  for (int k = 0; k <= dimension_; ++k) chi += (k % 2 == 0 ? 1 : -1) * count(k);
  return chi;
}

std::vector<int> DeltaComplex::vertex_components() const {
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int e = 0; e < count(1); ++e) {
    int a = find(edge_start(e)), b = find(edge_end(e));
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> label(static_cast<std::size_t>(vertex_count_), -1);
  std::vector<int> root_label(static_cast<std::size_t>(vertex_count_), -1);
  int next = 0;
  for (int v = 0; v < vertex_count_; ++v) {
    int r = find(v);
    if (root_label[static_cast<std::size_t>(r)] < 0) root_label[static_cast<std::size_t>(r)] = next++;
    label[static_cast<std::size_t>(v)] = root_label[static_cast<std::size_t>(r)];
  }
  return label;
}

int DeltaComplex::component_count() const {
  auto labels = vertex_components();
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::string Diagnostics::joined() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < messages.size(); ++i) os << (i ? "; " : "") << messages[i];
  return os.str();
}

Diagnostics validate(const DeltaComplex& c) {
  Diagnostics diag;
  auto report = [&](const std::string& m) { diag.messages.push_back(m); };
  bool bounds_ok = true;
  for (int k = 1; k <= c.dimension(); ++k) {
    const auto& table = c.simplices(k);
    for (std::size_t id = 0; id < table.size(); ++id) {
      const auto& f = table[id];
      if (f.size() != static_cast<std::size_t>(k + 1)) {
        report("wrong arity: " + std::to_string(k) + "-simplex " + std::to_string(id) + " has " +
               std::to_string(f.size()) + " faces, expected " + std::to_string(k + 1));
        bounds_ok = false;
        continue;
      }
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0 || f[i] >= c.count(k - 1)) {
          report("missing face: " + std::to_string(k) + "-simplex " + std::to_string(id) + " face " +
                 std::to_string(i) + " refers to " + std::to_string(k - 1) + "-simplex " + std::to_string(f[i]) +
                 " but only " + std::to_string(c.count(k - 1)) + " exist");
          bounds_ok = false;
        }
      }
    }
  }
  if (!bounds_ok) return diag;
  // d_i d_j = d_{j-1} d_i for i < j
  for (int k = 2; k <= c.dimension(); ++k) {
    for (int id = 0; id < c.count(k); ++id) {
      for (int j = 1; j <= k; ++j) {
        for (int i = 0; i < j; ++i) {
          int lhs = c.face(k - 1, c.face(k, id, j), i);
          int rhs = c.face(k - 1, c.face(k, id, i), j - 1);
          if (lhs != rhs) {
            report("face identity violated: " + std::to_string(k) + "-simplex " + std::to_string(id) +
                   ", d" + std::to_string(i) + "d" + std::to_string(j) + " = " + std::to_string(lhs) + " but d" +
                   std::to_string(j - 1) + "d" + std::to_string(i) + " = " + std::to_string(rhs));
          }
        }
      }
    }
  }
  return diag;
}

void require_valid(const DeltaComplex& complex) {
  auto diag = validate(complex);
  if (!diag.ok()) throw InputError("invalid complex: " + diag.joined());
}

FundamentalCycle FundamentalCycle::reversed() const {
  FundamentalCycle out = *this;
  for (int& s : out.signs) s = -s;
  return out;
}

std::vector<std::int64_t> chain_boundary(const DeltaComplex& complex, const FundamentalCycle& cycle) {
  const int n = complex.dimension();
  std::vector<std::int64_t> out(static_cast<std::size_t>(complex.count(n - 1)), 0);
  if (n == 0) return out;
  for (int t = 0; t < complex.top_count(); ++t) {
    for (int i = 0; i <= n; ++i) {
      out[static_cast<std::size_t>(complex.face(n, t, i))] += (i % 2 == 0 ? 1 : -1) * cycle.sign(t);
    }
  }
  return out;
}

DeltaComplex disjoint_union(const DeltaComplex& a, const DeltaComplex& b) {
  if (a.dimension() != b.dimension()) throw DomainError("disjoint union of complexes of different dimension");
  std::vector<std::vector<std::vector<int>>> faces(static_cast<std::size_t>(a.dimension()));
  for (int k = 1; k <= a.dimension(); ++k) {
    auto& table = faces[static_cast<std::size_t>(k - 1)];
    table = a.simplices(k);
    const int shift = a.count(k - 1);
    for (auto f : b.simplices(k)) {
      for (int& x : f) x += shift;
      table.push_back(std::move(f));
    }
  }
  return DeltaComplex(a.dimension(), a.vertex_count() + b.vertex_count(), std::move(faces));
}

}  // namespace dwkit
