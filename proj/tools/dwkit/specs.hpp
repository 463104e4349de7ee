#ifndef DWKIT_TOOLS_SPECS_HPP
#define DWKIT_TOOLS_SPECS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "dwkit/abelian.hpp"
#include "dwkit/cobordism.hpp"
#include "dwkit/cocycles.hpp"

namespace dwkit::cli {

/**
 * Builder mini-language:
 *   lens:P,Q  surface:G  sphere:N  ball:N  torus-grid:N  octahedron
 *   tetrahedron  polygon:WORD  s1x:<builder>  cylinder:<builder>
 */
Cobordism parse_builder(const std::string& spec);

/// "Z:n1,n2,..." or "roots:N" for a finite group, "U1" for the circle group.
struct GroupSpec {
  std::optional<FiniteAbelianGroup> finite;
  bool u1 = false;
  FiniteAbelianGroup resolve(const DeltaComplex& c) const;
};
GroupSpec parse_group(const std::string& spec);

/**
 * "trivial", "omega_k:K", "psi_l:L", "bichar:I,J" or "table:PATH". A
 * missing K or L is taken from `k`. "trivial" takes the given degree.
 */
GroupCochain parse_cocycle(const std::string& spec, int degree, std::optional<std::int64_t> k);

/// "A" or "A-B" (inclusive).
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& spec);

}  // namespace dwkit::cli

#endif  // DWKIT_TOOLS_SPECS_HPP
