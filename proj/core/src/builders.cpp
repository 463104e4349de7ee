#include "dwkit/builders.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <string>

#include "dwkit/error.hpp"
#include "dwkit/gluer.hpp"

namespace dwkit {

namespace {

std::vector<int> all_except(int n, int skip) {
  std::vector<int> out;
  for (int v = 0; v <= n; ++v) {
    if (v != skip) out.push_back(v);
  }
  return out;
}

std::uint32_t mask_of(std::initializer_list<int> vertices) {
  std::uint32_t m = 0;
  for (int v : vertices) m |= 1u << v;
  return m;
}

// Letter id and direction (+1 forwards, -1 backwards).
using Token = std::pair<int, int>;

PolygonSurface polygon_from_tokens(const std::vector<Token>& word) {
  const int n = static_cast<int>(word.size());
  if (n == 0) throw DomainError("empty polygon word");
  std::map<int, std::vector<int>> uses;
  for (int i = 0; i < n; ++i) uses[word[static_cast<std::size_t>(i)].first].push_back(i);

  // Triangle i = (centre, P_i, P_{i+1}) ordered so that local edge (1,2) runs along the letter.
  auto local_of_next = [&](int i) { return word[static_cast<std::size_t>(i)].second > 0 ? 2 : 1; };
  auto local_of_this = [&](int i) { return word[static_cast<std::size_t>(i)].second > 0 ? 1 : 2; };

  SimplexGluer gluer(2, n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    gluer.identify(i, {0, local_of_next(i)}, j, {0, local_of_this(j)});
  }
  for (const auto& [letter, at] : uses) {
    if (at.size() > 2) throw DomainError("letter occurs more than twice in polygon word");
    if (at.size() == 2) gluer.identify(at[0], {1, 2}, at[1], {1, 2});
  }
  PolygonSurface out{gluer.build(), {}};
  for (int i = 0; i < n; ++i) {
    if (uses[word[static_cast<std::size_t>(i)].first].size() == 1) {
      out.boundary_edges.push_back(gluer.id_of(i, mask_of({1, 2})));
    }
  }
  return out;
}

std::vector<Token> handle_word(int g) {
  std::vector<Token> w;
  for (int h = 0; h < g; ++h) {
    w.insert(w.end(), {{2 * h, 1}, {2 * h + 1, 1}, {2 * h, -1}, {2 * h + 1, -1}});
  }
  return w;
}

// Staircase prisms over the top simplices of m. Prism (s, j) has vertices
// (0,0)..(j,0),(j,1)..(dim,1) as (local vertex of s, level).
struct Prisms {
  const DeltaComplex& m;
  int dim;

  int top(int s, int j) const { return s * (dim + 1) + j; }

  std::pair<int, int> vertex(int j, int r) const { return r <= j ? std::pair{r, 0} : std::pair{r - 1, 1}; }

  struct Shape {
    int face_dim;
    int face_id;
    std::vector<std::pair<int, int>> pattern;  // (position within face, level)
  };

  Shape shape(int t, std::uint32_t mask, bool periodic) const {
    const int s = t / (dim + 1);
    const int j = t % (dim + 1);
    std::vector<std::pair<int, int>> verts;
    for (int r = 0; r <= dim + 1; ++r) {
      if (mask & (1u << r)) verts.push_back(vertex(j, r));
    }
    std::vector<int> distinct;
    for (const auto& v : verts) {
      if (distinct.empty() || distinct.back() != v.first) distinct.push_back(v.first);
    }
    Shape out;
    out.face_dim = static_cast<int>(distinct.size()) - 1;
    out.face_id = m.subsimplex(dim, s, distinct);
    bool single_level = true;
    for (const auto& v : verts) {
      const int pos = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), v.first) - distinct.begin());
      out.pattern.emplace_back(pos, v.second);
      if (v.second != verts.front().second) single_level = false;
    }
    if (periodic && single_level) {
      for (auto& p : out.pattern) p.second = 0;
    }
    return out;
  }

  std::string label(int t, std::uint32_t mask, bool periodic) const {
    const Shape sh = shape(t, mask, periodic);
    std::ostringstream os;
    os << sh.face_dim << '/' << sh.face_id << '/';
    for (const auto& [pos, level] : sh.pattern) os << pos << ',' << level << ';';
    return os.str();
  }

  SimplexGluer glue(bool periodic) const {
    SimplexGluer gluer(dim + 1, m.top_count() * (dim + 1));
    gluer.identify_by_label([&](int t, std::uint32_t mask) { return label(t, mask, periodic); });
    return gluer;
  }
};

void require_product_base(const DeltaComplex& m) {
  if (m.dimension() < 1 || m.dimension() > 2) throw DomainError("product builders need a base of dimension 1 or 2");
  require_valid(m);
  (void)orient(m);
}

}  // namespace

DeltaComplex build_sphere(int n) {
  if (n < 1 || n > 3) throw DomainError("build_sphere supports 1 <= n <= 3");
  SimplexGluer gluer(n, 2);
  for (int i = 0; i <= n; ++i) {
    const auto face = all_except(n, i);
    gluer.identify(0, face, 1, face);
  }
  return gluer.build();
}

Cobordism build_ball(int n) {
  if (n < 1 || n > 3) throw DomainError("build_ball supports 1 <= n <= 3");
  DeltaComplex simplex = SimplexGluer(n, 1).build();
  std::vector<int> faces(simplex.faces(n, 0).begin(), simplex.faces(n, 0).end());
  return Cobordism::from_faces(std::move(simplex), {}, faces);
}

Cobordism build_cylinder(const DeltaComplex& m) {
  require_product_base(m);
  const int dim = m.dimension();
  Prisms prisms{m, dim};
  SimplexGluer gluer = prisms.glue(false);
  DeltaComplex total = gluer.build();

  std::array<std::vector<std::vector<int>>, 2> emb;
  for (auto& e : emb) {
    e.resize(static_cast<std::size_t>(dim + 1));
    for (int k = 0; k <= dim; ++k) e[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(m.count(k)), -1);
  }
  const std::uint32_t masks = 1u << (dim + 2);
  for (int t = 0; t < total.top_count(); ++t) {
    for (std::uint32_t mask = 1; mask < masks; ++mask) {
      const auto sh = prisms.shape(t, mask, false);
      if (static_cast<int>(sh.pattern.size()) != sh.face_dim + 1) continue;
      const int level = sh.pattern.front().second;
      if (std::any_of(sh.pattern.begin(), sh.pattern.end(), [&](const auto& p) { return p.second != level; })) continue;
      emb[static_cast<std::size_t>(level)][static_cast<std::size_t>(sh.face_dim)][static_cast<std::size_t>(sh.face_id)] =
          gluer.id_of(t, mask);
    }
  }
  return Cobordism(std::move(total), BoundaryPart{m, emb[0], {}}, BoundaryPart{m, emb[1], {}});
}

DeltaComplex build_circle_product(const DeltaComplex& m) {
  require_product_base(m);
  return Prisms{m, m.dimension()}.glue(true).build();
}

DeltaComplex build_lens(int p, int q) {
  if (p < 1) throw DomainError("lens spaces need p >= 1");
  if (std::gcd(p, q) != 1) throw DomainError("coprimality violated: gcd(" + std::to_string(p) + ", " + std::to_string(q) + ") != 1");
  const int step = ((q % p) + p) % p;
  // local vertices: 0 = a, 1 = b, 2 = c_i, 3 = d_i = c_{i+1}
  SimplexGluer gluer(3, p);
  for (int i = 0; i < p; ++i) {
    gluer.identify(i, {0, 1, 3}, (i + 1) % p, {0, 1, 2});
    gluer.identify(i, {0, 2, 3}, (i + step) % p, {1, 2, 3});
  }
  return gluer.build();
}

DeltaComplex build_surface(int g) {
  if (g < 0) throw DomainError("genus must be nonnegative");
  if (g == 0) return polygon_from_tokens({{0, 1}, {0, -1}}).complex;
  return polygon_from_tokens(handle_word(g)).complex;
}

std::pair<Cobordism, Cobordism> build_surface_split(int g1, int g2) {
  if (g1 < 0 || g2 < 0) throw DomainError("genus must be nonnegative");
  auto piece = [](int g) {
    std::vector<Token> word = handle_word(g);
    word.emplace_back(2 * g, 1);
    return polygon_from_tokens(word);
  };
  PolygonSurface first = piece(g1);
  PolygonSurface second = piece(g2);
  return {Cobordism::from_faces(std::move(first.complex), {}, first.boundary_edges),
          Cobordism::from_faces(std::move(second.complex), second.boundary_edges, {})};
}

PolygonSurface polygon_surface(std::string_view word) {
  std::vector<Token> tokens;
  for (char ch : word) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (!std::isalpha(static_cast<unsigned char>(ch))) throw InputError(std::string("bad polygon letter '") + ch + "'");
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    tokens.emplace_back(lower - 'a', ch == lower ? 1 : -1);
  }
  return polygon_from_tokens(tokens);
}

DeltaComplex build_torus_grid(int n) {
  if (n < 1) throw DomainError("torus grid needs n >= 1");
  // lifted vertex coordinates of each triangle
  std::vector<std::array<std::pair<int, int>, 3>> tris;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      tris.push_back({{{i, j}, {i + 1, j}, {i + 1, j + 1}}});
      tris.push_back({{{i, j}, {i, j + 1}, {i + 1, j + 1}}});
    }
  }
  SimplexGluer gluer(2, static_cast<int>(tris.size()));
  gluer.identify_by_label([&](int t, std::uint32_t mask) {
    std::vector<std::pair<int, int>> pts;
    for (int r = 0; r < 3; ++r) {
      if (mask & (1u << r)) pts.push_back(tris[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)]);
    }
    const int dx = pts.front().first - pts.front().first % n;
    const int dy = pts.front().second - pts.front().second % n;
    std::ostringstream os;
    for (const auto& [x, y] : pts) os << x - dx << ',' << y - dy << ';';
    return os.str();
  });
  return gluer.build();
}

DeltaComplex build_from_vertex_tuples(int dimension, const std::vector<std::vector<int>>& tuples) {
  std::vector<std::vector<int>> sorted = tuples;
  for (auto& t : sorted) {
    if (static_cast<int>(t.size()) != dimension + 1) throw InputError("vertex tuple of wrong length");
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw InputError("repeated vertex in tuple");
  }
  SimplexGluer gluer(dimension, static_cast<int>(sorted.size()));
  gluer.identify_by_label([&](int t, std::uint32_t mask) {
    std::ostringstream os;
    for (int r = 0; r <= dimension; ++r) {
      if (mask & (1u << r)) os << sorted[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)] << ',';
    }
    return os.str();
  });
  return gluer.build();
}

DeltaComplex build_tetrahedron_boundary() {
  return build_from_vertex_tuples(2, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
}

DeltaComplex build_octahedron() {
  std::vector<std::vector<int>> tris;
  for (int i = 1; i <= 4; ++i) {
    const int j = i % 4 + 1;
    tris.push_back({0, i, j});
    tris.push_back({5, i, j});
  }
  return build_from_vertex_tuples(2, tris);
}

}  // namespace dwkit
