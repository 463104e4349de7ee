#ifndef DWKIT_IO_HPP
#define DWKIT_IO_HPP

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "dwkit/abelian.hpp"
#include "dwkit/cobordism.hpp"
#include "dwkit/cocycles.hpp"
#include "dwkit/fields.hpp"
#include "dwkit/invariant.hpp"

namespace dwkit::io {

using nlohmann::json;

/// Reads and parses a JSON file; failures become InputError.
json read_json_file(const std::filesystem::path& path);

json to_json(const FiniteAbelianGroup& a);
FiniteAbelianGroup group_from_json(const json& j);

/// {"dimension", "vertices", "simplices": {"1": [...], ...}, "incoming", "outgoing"}.
json to_json(const Cobordism& w);
json to_json(const DeltaComplex& c);
/// Parses and validates; missing "incoming"/"outgoing" mean a closed complex.
Cobordism cobordism_from_json(const json& j);
Cobordism read_cobordism_file(const std::filesystem::path& path);

/// {"edge_colours": {"<edge id>": [residues]}}.
json to_json(const Colouring& c);
Colouring colouring_from_json(const json& j, const FiniteAbelianGroup& a, int edge_count);

/**
 * {"moduli": [...], "degree": d, "values": {"[[r..],..]": [num, den], ...},
 *  "default": [num, den]}. Tuples not listed take the default; without a
 * default every tuple must be listed.
 */
GroupCochain cochain_from_json(const json& j);
GroupCochain read_cochain_file(const std::filesystem::path& path);
json to_json(const GroupCochain& w, const FiniteAbelianGroup& a);

/// {"value": [re, im], "terms": N, "denominator": D, "phases": [[num, den, count], ...]}.
json to_json(const InvariantValue& v, bool with_phases = false);

}  // namespace dwkit::io

#endif  // DWKIT_IO_HPP
