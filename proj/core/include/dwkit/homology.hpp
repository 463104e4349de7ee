#ifndef DWKIT_HOMOLOGY_HPP
#define DWKIT_HOMOLOGY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "dwkit/abelian.hpp"
#include "dwkit/complex.hpp"
#include "dwkit/smith.hpp"

namespace dwkit {

/**
 * Breadth-first spanning forest of the 1-skeleton. Vertices are expanded in
 * queue order, incident edges in increasing id order, so the forest only
 * depends on the complex and the base vertices.
 */
struct SpanningForest {
  /// One base vertex per component, in component order.
  std::vector<int> bases;
  /// Per vertex: the tree edge towards the base (-1 at a base).
  std::vector<int> parent_edge;
  /// Per vertex: the base of its component.
  std::vector<int> base_of;
  /// Vertices in the order the search reached them.
  std::vector<int> order;
  std::vector<bool> in_tree;
  std::vector<int> cotree_edges;

  /// Edge chain of the tree path from the base to v.
  std::vector<std::int64_t> path_from_base(const DeltaComplex& c, int v) const;
};

/// Bases default to the lowest vertex of each component. Explicit bases must
/// hit every component exactly once.
SpanningForest spanning_forest(const DeltaComplex& c, std::span<const int> bases = {});

/**
 * H_1 with an explicit presentation.
 *
 * Generator j has order generator_orders[j] (0 for free generators; torsion
 * first in invariant-factor order). edge_coefficients[e][j] is the
 * coordinate along generator j of the loop closed by edge e through the
 * forest (zero for tree edges). generator_chains[j] is a 1-cycle, as edge
 * coefficients, representing generator j.
 */
struct HomologyH1 {
  FinitelyGeneratedAbelianGroup group;
  std::vector<std::int64_t> generator_orders;
  std::vector<std::vector<std::int64_t>> edge_coefficients;
  std::vector<std::vector<std::int64_t>> generator_chains;
  SpanningForest forest;
};

HomologyH1 homology_h1(const DeltaComplex& c, std::span<const int> bases = {});

/// Boundary map C_k -> C_{k-1}: rows are (k-1)-simplices, columns k-simplices.
IntMatrix boundary_matrix(const DeltaComplex& c, int k);

}  // namespace dwkit

#endif  // DWKIT_HOMOLOGY_HPP
