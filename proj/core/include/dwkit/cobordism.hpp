#ifndef DWKIT_COBORDISM_HPP
#define DWKIT_COBORDISM_HPP

#include <optional>
#include <span>
#include <vector>

#include "dwkit/complex.hpp"

namespace dwkit {

enum class Side { incoming, outgoing };

/**
 * One end of a cobordism: a closed complex of one dimension lower together
 * with its embedding (per dimension, part id -> total id) into the total
 * complex. `orientation` is the boundary fundamental cycle: the induced
 * orientation on the outgoing end and its negative on the incoming end.
 */
struct BoundaryPart {
  DeltaComplex complex;
  std::vector<std::vector<int>> embedding;
  FundamentalCycle orientation;

  bool empty() const { return complex.vertex_count() == 0; }
  /// Ids in the total complex of the part's top simplices.
  std::span<const int> top_faces() const;
};

/// Renumbers the closure of the given codimension-one faces as its own complex.
BoundaryPart extract_boundary(const DeltaComplex& total, std::span<const int> faces);

/// Orientation of a closed complex: dual-graph propagation, first simplex of each component positive.
FundamentalCycle orient(const DeltaComplex& complex);

/**
 * Orientation of a complex with marked incoming/outgoing boundary.
 *
 * Interior faces must lie on exactly two top simplices ("non-manifold
 * gluing" otherwise); every face lying on one top simplex must belong to
 * exactly one marked part. Per component, the global sign makes the induced
 * orientation agree with orient(part) on the lowest outgoing face, or
 * disagree on the lowest incoming face when there is no outgoing face.
 */
FundamentalCycle orient(const DeltaComplex& complex, const BoundaryPart& incoming, const BoundaryPart& outgoing);

/// An oriented cobordism M_0 -> M_1. Closed complexes are cobordisms from the empty complex to itself.
class Cobordism {
 public:
  /// Validates the parts and orients by the default rule unless `orientation` is supplied.
  Cobordism(DeltaComplex total, BoundaryPart incoming, BoundaryPart outgoing,
            std::optional<FundamentalCycle> orientation = std::nullopt);

  static Cobordism closed(DeltaComplex total, std::optional<FundamentalCycle> orientation = std::nullopt);
  static Cobordism from_faces(DeltaComplex total, std::span<const int> incoming_faces,
                              std::span<const int> outgoing_faces);

  const DeltaComplex& total() const { return total_; }
  const BoundaryPart& incoming() const { return incoming_; }
  const BoundaryPart& outgoing() const { return outgoing_; }
  const BoundaryPart& boundary(Side side) const { return side == Side::incoming ? incoming_ : outgoing_; }
  const FundamentalCycle& orientation() const { return orientation_; }
  int dimension() const { return total_.dimension(); }
  bool is_closed() const { return incoming_.empty() && outgoing_.empty(); }

 private:
  DeltaComplex total_;
  BoundaryPart incoming_;
  BoundaryPart outgoing_;
  FundamentalCycle orientation_;
};

/// Same complex with roles of the ends swapped and the orientation negated.
Cobordism reverse(const Cobordism& w);

/**
 * first  u_M  second, where M = first.outgoing = second.incoming (identical
 * complexes and orientations, else DomainError).
 */
Cobordism glue(const Cobordism& first, const Cobordism& second);

/// Disjoint union of closed cobordisms, orientations kept.
Cobordism disjoint_union(const Cobordism& a, const Cobordism& b);

}  // namespace dwkit

#endif  // DWKIT_COBORDISM_HPP
