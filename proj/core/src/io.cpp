#include "dwkit/io.hpp"

#include <cmath>
#include <fstream>
#include <map>

#include "dwkit/error.hpp"

namespace dwkit::io {

namespace {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

RationalPhase phase_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw InputError("phase must be [numerator, denominator]");
  }
  const auto den = j[1].get<std::int64_t>();
  if (den <= 0) throw InputError("phase denominator must be positive");
  return RationalPhase(j[0].get<std::int64_t>(), den);
}

std::vector<int> face_list(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  return get<std::vector<int>>(j, key);
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

json to_json(const FiniteAbelianGroup& a) { return json{{"moduli", a.moduli()}}; }

FiniteAbelianGroup group_from_json(const json& j) {
  auto moduli = get<std::vector<std::int64_t>>(j, "moduli");
  for (auto d : moduli) {
    if (d < 1) throw InputError("group moduli must be >= 1");
  }
  return FiniteAbelianGroup(std::move(moduli));
}

json to_json(const DeltaComplex& c) {
  json simplices = json::object();
  for (int k = 1; k <= c.dimension(); ++k) simplices[std::to_string(k)] = c.simplices(k);
  return json{{"dimension", c.dimension()}, {"vertices", c.vertex_count()}, {"simplices", simplices}};
}

json to_json(const Cobordism& w) {
  json j = to_json(w.total());
  auto faces = [](const BoundaryPart& part) {
    auto span = part.top_faces();
    return std::vector<int>(span.begin(), span.end());
  };
  j["incoming"] = faces(w.incoming());
  j["outgoing"] = faces(w.outgoing());
  return j;
}

Cobordism cobordism_from_json(const json& j) {
  if (!j.is_object()) throw InputError("complex must be a JSON object");
  const int n = get<int>(j, "dimension");
  const int vertices = get<int>(j, "vertices");
  if (n < 1 || n > 8) throw InputError("dimension must be between 1 and 8");
  if (vertices < 0) throw InputError("vertex count must be nonnegative");
  const json simplices = j.contains("simplices") ? j.at("simplices") : json::object();
  if (!simplices.is_object()) throw InputError("\"simplices\" must be an object keyed by dimension");
  std::vector<std::vector<std::vector<int>>> faces(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const std::string key = std::to_string(k);
    if (!simplices.contains(key)) continue;
    try {
      faces[static_cast<std::size_t>(k - 1)] = simplices.at(key).get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
      throw InputError("bad simplices of dimension " + key + ": " + e.what());
    }
  }
  for (const auto& [key, value] : simplices.items()) {
    int k = 0;
    try {
      k = std::stoi(key);
    } catch (const std::exception&) {
      throw InputError("bad simplex dimension key \"" + key + "\"");
    }
    if (k < 1 || k > n) throw InputError("simplex dimension " + key + " outside 1.." + std::to_string(n));
  }
  DeltaComplex c(n, vertices, std::move(faces));
  require_valid(c);
  const auto in = face_list(j, "incoming");
  const auto out = face_list(j, "outgoing");
  for (int f : in) {
    if (f < 0 || f >= c.count(n - 1)) throw InputError("incoming face " + std::to_string(f) + " out of range");
  }
  for (int f : out) {
    if (f < 0 || f >= c.count(n - 1)) throw InputError("outgoing face " + std::to_string(f) + " out of range");
  }
  return Cobordism::from_faces(std::move(c), in, out);
}

Cobordism read_cobordism_file(const std::filesystem::path& path) { return cobordism_from_json(read_json_file(path)); }

json to_json(const Colouring& c) {
  json edges = json::object();
  for (std::size_t e = 0; e < c.edges.size(); ++e) edges[std::to_string(e)] = c.edges[e].residues();
  return json{{"edge_colours", edges}};
}

Colouring colouring_from_json(const json& j, const FiniteAbelianGroup& a, int edge_count) {
  const json edges = get<json>(j, "edge_colours");
  if (!edges.is_object()) throw InputError("\"edge_colours\" must be an object");
  std::vector<std::optional<GroupElement>> slots(static_cast<std::size_t>(edge_count));
  for (const auto& [key, value] : edges.items()) {
    int e = -1;
    try {
      e = std::stoi(key);
    } catch (const std::exception&) {
      throw InputError("bad edge id \"" + key + "\"");
    }
    if (e < 0 || e >= edge_count) throw InputError("edge id " + key + " out of range");
    auto r = value.get<std::vector<std::int64_t>>();
    if (r.size() != a.rank()) throw InputError("edge colour of wrong length for edge " + key);
    slots[static_cast<std::size_t>(e)] = a.element(std::move(r));
  }
  Colouring out;
  for (auto& s : slots) {
    if (!s) throw InputError("missing edge colour");
    out.edges.push_back(std::move(*s));
  }
  return out;
}

GroupCochain cochain_from_json(const json& j) {
  const FiniteAbelianGroup a = group_from_json(j);
  const int degree = get<int>(j, "degree");
  if (degree < 0 || degree > 4) throw InputError("table cochains support degrees 0..4");
  std::int64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= a.order();
  if (count > (1 << 24)) throw InputError("cochain table too large");
  std::vector<std::optional<RationalPhase>> values(static_cast<std::size_t>(count));
  const json table = j.contains("values") ? j.at("values") : json::object();
  if (!table.is_object()) throw InputError("\"values\" must be an object");
  for (const auto& [key, value] : table.items()) {
    json tuple;
    try {
      tuple = json::parse(key);
    } catch (const json::parse_error&) {
      throw InputError("bad tuple key \"" + key + "\"");
    }
    if (!tuple.is_array() || static_cast<int>(tuple.size()) != degree) throw InputError("tuple key of wrong length: " + key);
    std::int64_t index = 0;
    for (std::size_t k = tuple.size(); k-- > 0;) {
      auto r = tuple[k].get<std::vector<std::int64_t>>();
      if (r.size() != a.rank()) throw InputError("tuple entry of wrong length: " + key);
      index = index * a.order() + a.index_of(a.element(std::move(r)));
    }
    values[static_cast<std::size_t>(index)] = phase_from_json(value);
  }
  std::optional<RationalPhase> fallback;
  if (j.contains("default")) fallback = phase_from_json(j.at("default"));
  std::vector<RationalPhase> dense;
  dense.reserve(values.size());
  for (auto& v : values) {
    if (!v && !fallback) throw InputError("incomplete cochain table and no \"default\"");
    dense.push_back(v ? *v : *fallback);
  }
  return GroupCochain::table(a, degree, std::move(dense));
}

GroupCochain read_cochain_file(const std::filesystem::path& path) { return cochain_from_json(read_json_file(path)); }

json to_json(const GroupCochain& w, const FiniteAbelianGroup& a) {
  json values = json::object();
  for_each_tuple(a, w.degree(), [&](std::span<const GroupElement> g) {
    json key = json::array();
    for (const auto& x : g) key.push_back(x.residues());
    const RationalPhase v = w(a, g);
    if (!v.is_zero()) values[key.dump()] = {v.numerator(), v.denominator()};
  });
  return json{{"moduli", a.moduli()}, {"degree", w.degree()}, {"values", values}, {"default", {0, 1}}};
}

json to_json(const InvariantValue& v, bool with_phases) {
  const auto z = v.value();
  // Rounding noise would otherwise print as -1.2e-17 and differ between builds.
  auto snap = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
  json j{{"value", {snap(z.real()), snap(z.imag())}}, {"terms", v.terms()}, {"denominator", v.denominator()}};
  if (with_phases) {
    json phases = json::array();
    for (const auto& [phase, count] : v.phases().counts()) phases.push_back({phase.numerator(), phase.denominator(), count});
    j["phases"] = phases;
  }
  return j;
}

}  // namespace dwkit::io
