#ifndef DWKIT_BUILDERS_HPP
#define DWKIT_BUILDERS_HPP

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "dwkit/cobordism.hpp"
#include "dwkit/complex.hpp"

namespace dwkit {

/// S^n from two n-simplices glued face i to face i, 1 <= n <= 3.
DeltaComplex build_sphere(int n);

/// D^n as a single n-simplex, read as a cobordism from the empty set to its boundary sphere.
Cobordism build_ball(int n);

/// M x [0,1] by staircase prisms, incoming M x 0, outgoing M x 1. M must be closed and orientable.
Cobordism build_cylinder(const DeltaComplex& m);

/// S^1 x M: the cylinder with its two ends identified.
DeltaComplex build_circle_product(const DeltaComplex& m);

/**
 * The lens space L(p, q) from p tetrahedra (a, b, c_i, d_i) around the axis ab,
 * with abd_i glued to abc_{i+1} and acd_i glued to bcd_{i+q}.
 * Throws DomainError("coprimality violated") unless gcd(p, q) = 1.
 */
DeltaComplex build_lens(int p, int q);

/// Closed orientable surface of genus g from the fan of the standard 4g-gon.
DeltaComplex build_surface(int g);

/**
 * Sigma_{g1} minus a disc (empty -> S^1) and Sigma_{g2} minus a disc
 * (S^1 -> empty); gluing the pair gives Sigma_{g1+g2}.
 */
std::pair<Cobordism, Cobordism> build_surface_split(int g1, int g2);

/// A fan triangulation of a polygon with an edge word.
struct PolygonSurface {
  DeltaComplex complex;
  /// Edges of letters that occur once, in word order.
  std::vector<int> boundary_edges;
};

/**
 * Triangulates the polygon whose boundary reads `word` by coning from a
 * centre vertex. Lowercase letters are read forwards, uppercase backwards;
 * a letter must occur at most twice, and letters occurring once stay on the
 * boundary.
 */
PolygonSurface polygon_surface(std::string_view word);

/// T^2 as an n x n grid of squares, each split along its diagonal (2 n^2 triangles).
DeltaComplex build_torus_grid(int n);

/// Simplicial complex from vertex tuples; every tuple is sorted, faces are shared by vertex set.
DeltaComplex build_from_vertex_tuples(int dimension, const std::vector<std::vector<int>>& tuples);

/// Boundary of the tetrahedron (4 triangles).
DeltaComplex build_tetrahedron_boundary();

/// Boundary of the octahedron (8 triangles).
DeltaComplex build_octahedron();

}  // namespace dwkit

#endif  // DWKIT_BUILDERS_HPP
