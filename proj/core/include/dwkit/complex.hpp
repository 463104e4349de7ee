#ifndef DWKIT_COMPLEX_HPP
#define DWKIT_COMPLEX_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dwkit {

/**
 * A Delta-complex given by explicit face maps.
 *
 * Simplices of each dimension k are numbered 0..count(k)-1. A k-simplex with
 * k >= 1 stores k+1 face ids of dimension k-1; face i omits local vertex i.
 * Distinct simplices may share their vertex sets, so nothing is inferred
 * from vertex tuples.
 *
 * Construction does not check consistency; run validate() on untrusted
 * input. All accessors assume a valid complex.
 */
class DeltaComplex {
 public:
  DeltaComplex() = default;
  /// faces[k-1] holds the k-simplices, each a (k+1)-tuple of (k-1)-face ids.
  DeltaComplex(int dimension, int vertex_count, std::vector<std::vector<std::vector<int>>> faces);

  /// An empty complex of the given dimension (no simplices at all).
  static DeltaComplex empty(int dimension);

  int dimension() const { return dimension_; }
  int vertex_count() const { return vertex_count_; }
  /// Number of k-simplices, k in [0, dimension].
  int count(int k) const;
  int top_count() const { return count(dimension_); }

  std::span<const int> faces(int k, int id) const;
  int face(int k, int id, int i) const { return faces(k, id)[static_cast<std::size_t>(i)]; }

  /// Global id of the sub-simplex spanned by the given increasing local vertices.
  int subsimplex(int k, int id, std::span<const int> local_vertices) const;
  /// Global vertex id of local vertex i.
  int vertex(int k, int id, int i) const;
  /// Global edge id between local vertices i < j.
  int edge(int k, int id, int i, int j) const;

  /// Edge endpoints: (start, end) = (face 1, face 0).
  int edge_start(int e) const { return face(1, e, 1); }
  int edge_end(int e) const { return face(1, e, 0); }

  int euler_characteristic() const;

  /// Component label per vertex (labels dense from 0, ordered by lowest vertex).
  std::vector<int> vertex_components() const;
  int component_count() const;
  bool is_connected() const { return component_count() <= 1; }

  /// Raw face table of dimension k >= 1.
  const std::vector<std::vector<int>>& simplices(int k) const { return faces_.at(static_cast<std::size_t>(k - 1)); }

  friend bool operator==(const DeltaComplex&, const DeltaComplex&) = default;

 private:
  int dimension_ = 0;
  int vertex_count_ = 0;
  std::vector<std::vector<std::vector<int>>> faces_;
};

struct Diagnostics {
  std::vector<std::string> messages;
  bool ok() const { return messages.empty(); }
  std::string joined() const;
};

/// Checks arities, index bounds ("missing face") and the simplicial identities.
Diagnostics validate(const DeltaComplex& complex);

/// Throws InputError listing all diagnostics when validate() fails.
void require_valid(const DeltaComplex& complex);

/// Orientation signs, one per top simplex.
struct FundamentalCycle {
  std::vector<int> signs;

  int sign(int top_simplex) const { return signs[static_cast<std::size_t>(top_simplex)]; }
  FundamentalCycle reversed() const;
  friend bool operator==(const FundamentalCycle&, const FundamentalCycle&) = default;
};

/// Coefficient of every codimension-one face in the boundary of the signed chain.
std::vector<std::int64_t> chain_boundary(const DeltaComplex& complex, const FundamentalCycle& cycle);

/// Disjoint union; ids of `b` are shifted past those of `a`.
DeltaComplex disjoint_union(const DeltaComplex& a, const DeltaComplex& b);

}  // namespace dwkit

#endif  // DWKIT_COMPLEX_HPP
