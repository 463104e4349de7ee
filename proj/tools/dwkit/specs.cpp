#include "dwkit/specs.hpp"

#include <charconv>
#include <vector>

#include "dwkit/builders.hpp"
#include "dwkit/error.hpp"
#include "dwkit/fields.hpp"
#include "dwkit/io.hpp"

namespace dwkit::cli {

namespace {

std::int64_t parse_int(const std::string& text, const std::string& context) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) throw InputError("expected an integer in " + context + ", got \"" + text + "\"");
  return value;
}

std::vector<std::int64_t> parse_ints(const std::string& text, const std::string& context) {
  std::vector<std::int64_t> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), context));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

std::pair<std::string, std::string> split_head(const std::string& spec) {
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

int small(std::int64_t x, const std::string& context) {
  if (x < -1000000 || x > 1000000) throw InputError("parameter out of range in " + context);
  return static_cast<int>(x);
}

}  // namespace

Cobordism parse_builder(const std::string& spec) {
  const auto [head, rest] = split_head(spec);
  auto one = [&, &rest = rest]() {
    const auto v = parse_ints(rest, spec);
    if (v.size() != 1) throw InputError("builder " + head + " takes one parameter");
    return small(v[0], spec);
  };
  if (head == "lens") {
    const auto v = parse_ints(rest, spec);
    if (v.size() != 2) throw InputError("lens builder takes p,q");
    return Cobordism::closed(build_lens(small(v[0], spec), small(v[1], spec)));
  }
  if (head == "surface") return Cobordism::closed(build_surface(one()));
  if (head == "sphere") return Cobordism::closed(build_sphere(one()));
  if (head == "ball") return build_ball(one());
  if (head == "torus-grid") return Cobordism::closed(build_torus_grid(one()));
  if (head == "octahedron" && rest.empty()) return Cobordism::closed(build_octahedron());
  if (head == "tetrahedron" && rest.empty()) return Cobordism::closed(build_tetrahedron_boundary());
  if (head == "polygon") {
    PolygonSurface s = polygon_surface(rest);
    return Cobordism::from_faces(std::move(s.complex), {}, s.boundary_edges);
  }
  if (head == "s1x" || head == "cylinder") {
    const Cobordism inner = parse_builder(rest);
    if (!inner.is_closed()) throw DomainError(head + " needs a closed base");
    if (head == "s1x") return Cobordism::closed(build_circle_product(inner.total()));
    return build_cylinder(inner.total());
  }
  throw InputError("unknown builder \"" + spec + "\"");
}

FiniteAbelianGroup GroupSpec::resolve(const DeltaComplex& c) const {
  if (finite) return *finite;
  return u1_field_group(c);
}

GroupSpec parse_group(const std::string& spec) {
  const auto [head, rest] = split_head(spec);
  GroupSpec out;
  if (head == "U1" && rest.empty()) {
    out.u1 = true;
    return out;
  }
  if (head == "Z" || head == "roots") {
    const auto moduli = parse_ints(rest, spec);
    if (head == "roots" && moduli.size() != 1) throw InputError("roots:N takes a single N");
    for (auto d : moduli) {
      if (d < 1 || d > 1000000) throw InputError("group moduli must be between 1 and 10^6");
    }
    out.finite = FiniteAbelianGroup(moduli);
    return out;
  }
  throw InputError("unknown group \"" + spec + "\"");
}

GroupCochain parse_cocycle(const std::string& spec, int degree, std::optional<std::int64_t> k) {
  const auto [head, rest] = split_head(spec);
  auto parameter = [&, &rest = rest]() {
    if (rest.empty()) {
      if (!k) throw InputError(head + " needs a parameter (" + head + ":K or --k)");
      return *k;
    }
    return parse_int(rest, spec);
  };
  if (head == "trivial" && rest.empty()) return GroupCochain::trivial(degree);
  if (head == "omega_k") return GroupCochain::omega(parameter());
  if (head == "psi_l") return GroupCochain::psi(parameter());
  if (head == "bichar") {
    const auto v = parse_ints(rest, spec);
    if (v.size() != 2 || v[0] < 0 || v[1] < 0) throw InputError("bichar takes two factor indices I,J");
    return GroupCochain::bicharacter(static_cast<std::size_t>(v[0]), static_cast<std::size_t>(v[1]));
  }
  if (head == "table") {
    if (rest.empty()) throw InputError("table cocycle needs a path");
    return io::read_cochain_file(rest);
  }
  throw InputError("unknown cocycle \"" + spec + "\"");
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& spec) {
  const std::size_t dash = spec.find('-', 1);
  if (dash == std::string::npos) {
    const auto v = parse_int(spec, "range");
    return {v, v};
  }
  const auto lo = parse_int(spec.substr(0, dash), "range");
  const auto hi = parse_int(spec.substr(dash + 1), "range");
  if (hi < lo) throw InputError("empty range \"" + spec + "\"");
  return {lo, hi};
}

}  // namespace dwkit::cli
