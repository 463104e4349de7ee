#ifndef DWKIT_GLUER_HPP
#define DWKIT_GLUER_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dwkit/complex.hpp"

namespace dwkit {

/**
 * Builds a Delta-complex as a quotient of disjoint top simplices.
 *
 * Sub-simplices are addressed by (top simplex, bitmask of local vertices).
 * identify() glues two ordered sub-simplices vertex by vertex, which also
 * glues all of their faces. identify_by_label() glues every pair of
 * sub-simplices carrying equal labels. Both must only ever glue along
 * order-preserving maps; build() validates the result.
 *
 * Ids in the output are assigned per dimension in order of first appearance
 * scanning top simplex 0, 1, ... and masks in increasing order, so builds are
 * deterministic.
 */
class SimplexGluer {
 public:
  SimplexGluer(int dimension, int top_count);

  int dimension() const { return dimension_; }
  int top_count() const { return top_count_; }

  /// Glue the sub-simplex of `a` on local vertices `va` to that of `b` on `vb`.
  void identify(int a, std::span<const int> va, int b, std::span<const int> vb);
  void identify(int a, std::initializer_list<int> va, int b, std::initializer_list<int> vb);

  /// Glue all sub-simplices whose labels compare equal.
  using Labeller = std::function<std::string(int top, std::uint32_t mask)>;
  void identify_by_label(const Labeller& label);

  DeltaComplex build() const;

  /// Id in the built complex of the sub-simplex (top, mask); valid after build().
  int id_of(int top, std::uint32_t mask) const;

 private:
  int key(int top, std::uint32_t mask) const { return top * (1 << (dimension_ + 1)) + static_cast<int>(mask); }
  int find(int x) const;
  void unite(int a, int b);

  int dimension_;
  int top_count_;
  mutable std::vector<int> parent_;
  mutable std::vector<int> ids_;
};

}  // namespace dwkit

#endif  // DWKIT_GLUER_HPP
