#include "dwkit/homology.hpp"

#include <deque>

#include "dwkit/error.hpp"

namespace dwkit {

std::vector<std::int64_t> SpanningForest::path_from_base(const DeltaComplex& c, int v) const {
  std::vector<std::int64_t> chain(static_cast<std::size_t>(c.count(1)), 0);
  while (parent_edge[static_cast<std::size_t>(v)] >= 0) {
    const int e = parent_edge[static_cast<std::size_t>(v)];
    if (c.edge_end(e) == v) {
      chain[static_cast<std::size_t>(e)] += 1;
      v = c.edge_start(e);
    } else {
      chain[static_cast<std::size_t>(e)] -= 1;
      v = c.edge_end(e);
    }
  }
  return chain;
}

SpanningForest spanning_forest(const DeltaComplex& c, std::span<const int> bases) {
  const int n = c.vertex_count();
  const int edges = c.count(1);
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
  for (int e = 0; e < edges; ++e) {
    incident[static_cast<std::size_t>(c.edge_start(e))].push_back(e);
    if (c.edge_end(e) != c.edge_start(e)) incident[static_cast<std::size_t>(c.edge_end(e))].push_back(e);
  }
  const std::vector<int> component = c.vertex_components();
  const int components = c.component_count();

  SpanningForest f;
  f.parent_edge.assign(static_cast<std::size_t>(n), -1);
  f.base_of.assign(static_cast<std::size_t>(n), -1);
  f.in_tree.assign(static_cast<std::size_t>(edges), false);
  f.bases.assign(static_cast<std::size_t>(components), -1);
  if (bases.empty()) {
    for (int v = n - 1; v >= 0; --v) f.bases[static_cast<std::size_t>(component[static_cast<std::size_t>(v)])] = v;
  } else {
    for (int b : bases) {
      if (b < 0 || b >= n) throw DomainError("base vertex " + std::to_string(b) + " out of range");
      int& slot = f.bases[static_cast<std::size_t>(component[static_cast<std::size_t>(b)])];
      if (slot >= 0) throw DomainError("two base vertices in one component");
      slot = b;
    }
    for (int b : f.bases) {
      if (b < 0) throw DomainError("disconnected without base vertices");
    }
  }

  for (int base : f.bases) {
    std::deque<int> queue{base};
    f.base_of[static_cast<std::size_t>(base)] = base;
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      f.order.push_back(v);
      for (int e : incident[static_cast<std::size_t>(v)]) {
        const int w = c.edge_start(e) == v ? c.edge_end(e) : c.edge_start(e);
        if (f.base_of[static_cast<std::size_t>(w)] >= 0) continue;
        f.base_of[static_cast<std::size_t>(w)] = base;
        f.parent_edge[static_cast<std::size_t>(w)] = e;
        f.in_tree[static_cast<std::size_t>(e)] = true;
        queue.push_back(w);
      }
    }
  }
  for (int e = 0; e < edges; ++e) {
    if (!f.in_tree[static_cast<std::size_t>(e)]) f.cotree_edges.push_back(e);
  }
  return f;
}

HomologyH1 homology_h1(const DeltaComplex& c, std::span<const int> bases) {
  HomologyH1 h;
  h.forest = spanning_forest(c, bases);
  const auto& cotree = h.forest.cotree_edges;
  const std::size_t vars = cotree.size();
  const int edges = c.count(1);
  std::vector<int> column(static_cast<std::size_t>(edges), -1);
  for (std::size_t i = 0; i < vars; ++i) column[static_cast<std::size_t>(cotree[i])] = static_cast<int>(i);

  // Relations: each triangle boundary in cotree coordinates, one per column.
  const int triangles = c.dimension() >= 2 ? c.count(2) : 0;
  IntMatrix relations(vars, static_cast<std::size_t>(triangles));
  for (int t = 0; t < triangles; ++t) {
    for (int i = 0; i < 3; ++i) {
      const int col = column[static_cast<std::size_t>(c.face(2, t, i))];
      if (col >= 0) relations(static_cast<std::size_t>(col), static_cast<std::size_t>(t)) += (i % 2 == 0) ? 1 : -1;
    }
  }
  const SmithNormalForm snf = smith_normal_form(relations);
  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < vars; ++j) {
    const std::int64_t d = j < static_cast<std::size_t>(triangles) ? snf.d(j, j) : 0;
    if (d == 1) continue;
    kept.push_back(j);
    h.generator_orders.push_back(d);
  }
  h.group = FinitelyGeneratedAbelianGroup::from_cyclic_orders(h.generator_orders);

  h.edge_coefficients.assign(static_cast<std::size_t>(edges), std::vector<std::int64_t>(kept.size(), 0));
  for (std::size_t i = 0; i < vars; ++i) {
    auto& row = h.edge_coefficients[static_cast<std::size_t>(cotree[i])];
    for (std::size_t g = 0; g < kept.size(); ++g) {
      std::int64_t x = snf.u(kept[g], i);
      const std::int64_t o = h.generator_orders[g];
      if (o > 0) x = ((x % o) + o) % o;
      row[g] = x;
    }
  }

  // Loop closed by each cotree edge, then generator cycles from columns of U^{-1}.
  std::vector<std::vector<std::int64_t>> loops;
  loops.reserve(vars);
  for (int e : cotree) {
    std::vector<std::int64_t> loop = h.forest.path_from_base(c, c.edge_start(e));
    const auto back = h.forest.path_from_base(c, c.edge_end(e));
    for (std::size_t x = 0; x < loop.size(); ++x) loop[x] -= back[x];
    loop[static_cast<std::size_t>(e)] += 1;
    loops.push_back(std::move(loop));
  }
  for (std::size_t j : kept) {
    std::vector<std::int64_t> chain(static_cast<std::size_t>(edges), 0);
    for (std::size_t i = 0; i < vars; ++i) {
      const std::int64_t coef = snf.u_inverse(i, j);
      if (coef == 0) continue;
      for (std::size_t x = 0; x < chain.size(); ++x) chain[x] += coef * loops[i][x];
    }
    h.generator_chains.push_back(std::move(chain));
  }
  return h;
}

IntMatrix boundary_matrix(const DeltaComplex& c, int k) {
  if (k < 1 || k > c.dimension()) throw DomainError("boundary_matrix: dimension out of range");
  IntMatrix m(static_cast<std::size_t>(c.count(k - 1)), static_cast<std::size_t>(c.count(k)));
  for (int s = 0; s < c.count(k); ++s) {
    for (int i = 0; i <= k; ++i) {
      m(static_cast<std::size_t>(c.face(k, s, i)), static_cast<std::size_t>(s)) += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

}  // namespace dwkit
