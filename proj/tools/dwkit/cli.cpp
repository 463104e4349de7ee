#include "dwkit/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dwkit/builders.hpp"
#include "dwkit/error.hpp"
#include "dwkit/homology.hpp"
#include "dwkit/invariant.hpp"
#include "dwkit/io.hpp"
#include "dwkit/lens.hpp"
#include "dwkit/specs.hpp"
#include "dwkit/verify.hpp"

namespace dwkit::cli {

namespace {

using io::json;

struct Options {
  std::string builder;
  std::string file;
  std::string group = "U1";
  std::string cocycle;
  std::string k;
  std::string p;
  std::string q;
  std::string out;
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = 1;
  std::optional<int> jobs;
  std::string positional;
};

double snap(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

std::string number(double x) {
  std::ostringstream os;
  os << std::setprecision(12) << snap(x);
  return os.str();
}

std::string complex_text(std::complex<double> z) {
  const double im = snap(z.imag());
  return number(z.real()) + (im < 0 ? " - " : " + ") + number(std::abs(im)) + "i";
}

std::string format_or(const Options& o, const std::string& fallback) {
  const std::string f = o.out.empty() ? fallback : o.out;
  if (f != "json" && f != "csv" && f != "text") throw InputError("--out must be json, csv or text");
  return f;
}

int jobs_of(const Options& o) {
  if (o.jobs) return std::max(1, *o.jobs);
  if (const char* env = std::getenv("DWKIT_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw InputError("DWKIT_JOBS must be an integer");
    }
  }
  return 1;
}

std::optional<std::int64_t> single_k(const Options& o) {
  if (o.k.empty()) return std::nullopt;
  const auto [lo, hi] = parse_range(o.k);
  if (lo != hi) throw InputError("--k must be a single value here");
  return lo;
}

Cobordism load_source(const Options& o, const std::string& fallback_file = "") {
  const std::string file = o.file.empty() ? fallback_file : o.file;
  if (o.builder.empty() == file.empty()) throw InputError("give exactly one of --builder or --file");
  if (!o.builder.empty()) return parse_builder(o.builder);
  return io::read_cobordism_file(file);
}

std::string source_name(const Options& o) { return o.builder.empty() ? o.file : o.builder; }

json residues(const GroupElement& g) { return g.residues(); }

int cmd_compute(const Options& o, std::ostream& out) {
  const Cobordism w = load_source(o);
  const FiniteAbelianGroup a = parse_group(o.group).resolve(w.total());
  const std::string cocycle_spec = o.cocycle.empty() ? "trivial" : o.cocycle;
  const GroupCochain cocycle = parse_cocycle(cocycle_spec, w.dimension(), single_k(o));
  const std::string format = format_or(o, "json");
  const int jobs = jobs_of(o);

  if (w.is_closed()) {
    const InvariantValue v = state_sum_closed(w, a, cocycle, jobs);
    if (format == "json") {
      json j = io::to_json(v, true);
      j["source"] = source_name(o);
      j["group"] = io::to_json(a);
      j["cocycle"] = cocycle.name();
      out << j.dump(2) << "\n";
    } else if (format == "csv") {
      out << "re,im\n" << number(v.value().real()) << "," << number(v.value().imag()) << "\n";
    } else {
      out << "Z = " << complex_text(v.value()) << "  (" << v.terms() << " terms / " << v.denominator() << ")\n";
    }
    return kOk;
  }

  const CobordismFields fields(w, a);
  json rows = json::array();
  std::ostringstream text;
  for (const auto& x : fields.boundary(Side::incoming).enumerate()) {
    for (const auto& y : fields.boundary(Side::outgoing).enumerate()) {
      const InvariantValue v = matrix_element(fields, cocycle, x, y);
      if (format == "json") {
        json j = io::to_json(v, true);
        j["incoming"] = residues(x.hom);
        j["outgoing"] = residues(y.hom);
        rows.push_back(j);
      } else if (format == "csv") {
        text << x.hom << "," << y.hom << "," << number(v.value().real()) << "," << number(v.value().imag()) << "\n";
      } else {
        text << "K(" << x.hom << ", " << y.hom << ") = " << complex_text(v.value()) << "\n";
      }
    }
  }
  if (format == "json") {
    json j{{"source", source_name(o)}, {"group", io::to_json(a)}, {"cocycle", cocycle.name()}, {"matrix_elements", rows}};
    out << j.dump(2) << "\n";
  } else {
    if (format == "csv") out << "incoming,outgoing,re,im\n";
    out << text.str();
  }
  return kOk;
}

std::string csv_field(const std::string& s) { return s.find(',') == std::string::npos ? s : "\"" + s + "\""; }

int cmd_lens(const Options& o, std::ostream& out) {
  if (o.p.empty()) throw InputError("lens needs --p P or --p P1-P2");
  const auto [p_lo, p_hi] = parse_range(o.p);
  if (p_lo < 1 || p_hi > 200) throw InputError("--p must lie in 1..200");
  std::optional<std::int64_t> q_only;
  if (!o.q.empty()) q_only = parse_range(o.q).first;
  const std::string format = format_or(o, "csv");
  const int jobs = jobs_of(o);

  json rows = json::array();
  if (format == "csv") out << "p,q,k,re,im,class_label\n";
  for (std::int64_t p = p_lo; p <= p_hi; ++p) {
    std::int64_t k_lo = 0;
    std::int64_t k_hi = p;
    if (!o.k.empty()) std::tie(k_lo, k_hi) = parse_range(o.k);
    const FiniteAbelianGroup a = FiniteAbelianGroup::cyclic(p);
    for (std::int64_t q = 0; q < std::max<std::int64_t>(p, 1); ++q) {
      if (std::gcd(p, q) != 1) continue;
      if (q_only && ((*q_only % p) + p) % p != q) continue;
      const Cobordism lens = Cobordism::closed(build_lens(static_cast<int>(p), static_cast<int>(q)));
      const std::string label = homotopy_label(p, q).to_string();
      for (std::int64_t k = k_lo; k <= k_hi; ++k) {
        const auto z = state_sum_closed(lens, a, GroupCochain::omega(k), jobs).value();
        if (format == "csv") {
          out << p << "," << q << "," << k << "," << number(z.real()) << "," << number(z.imag()) << ","
              << csv_field(label) << "\n";
        } else if (format == "json") {
          rows.push_back({{"p", p}, {"q", q}, {"k", k}, {"value", {snap(z.real()), snap(z.imag())}}, {"class_label", label}});
        } else {
          out << "L(" << p << "," << q << ") k=" << k << "  " << complex_text(z) << "  [" << label << "]\n";
        }
      }
    }
  }
  if (format == "json") out << rows.dump(2) << "\n";
  return kOk;
}

std::string member_list(const std::vector<std::int64_t>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) s += (i ? "," : "") + std::to_string(members[i]);
  return s + "}";
}

int cmd_classify(const Options& o, std::ostream& out) {
  std::string spec = o.positional.empty() ? o.p : o.positional;
  if (spec.empty()) throw InputError("classify needs p (positional or --p)");
  const auto [p, p_hi] = parse_range(spec);
  if (p != p_hi || p < 1 || p > 1000) throw InputError("classify takes a single p in 1..1000");
  if (!(o.tolerance > 0)) throw InputError("--tolerance must be positive");
  const std::string format = format_or(o, "text");

  const auto classes = homotopy_classes(p);
  std::vector<std::vector<std::int64_t>> expected;
  for (const auto& c : classes) expected.push_back(c.members);
  const auto levels = distinguishing_levels(p);
  const bool fingerprint_agrees = fingerprint_partition(p, levels, o.tolerance) == expected;

  if (format == "json") {
    json cs = json::array();
    for (const auto& c : classes) cs.push_back({{"label", c.label.to_string()}, {"members", c.members}});
    json j{{"p", p},
           {"classes", cs},
           {"expected_count", expected_class_count(p)},
           {"levels", levels},
           {"fingerprint_agrees", fingerprint_agrees}};
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "label,members\n";
    for (const auto& c : classes) out << csv_field(c.label.to_string()) << ",\"" << member_list(c.members) << "\"\n";
  } else {
    out << "p = " << p << ": " << classes.size() << " homotopy classes (expected " << expected_class_count(p) << ")\n";
    for (const auto& c : classes) out << "  " << member_list(c.members) << "  " << c.label.to_string() << "\n";
    out << "fingerprint at levels";
    for (auto l : levels) out << " " << l;
    out << (fingerprint_agrees ? ": separates the classes\n" : ": DOES NOT match the classes\n");
  }
  return kOk;
}

int cmd_homology(const Options& o, std::ostream& out) {
  const Cobordism w = load_source(o, o.positional);
  const DeltaComplex& c = w.total();
  const HomologyH1 h = homology_h1(c);
  const std::string format = format_or(o, "text");
  std::vector<int> counts;
  for (int k = 0; k <= c.dimension(); ++k) counts.push_back(c.count(k));
  if (format == "json") {
    json j{{"source", source_name(o)},
           {"dimension", c.dimension()},
           {"simplex_counts", counts},
           {"euler_characteristic", c.euler_characteristic()},
           {"components", c.component_count()},
           {"h1", h.group.to_string()},
           {"free_rank", h.group.free_rank},
           {"torsion", h.group.torsion},
           {"closed", w.is_closed()}};
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "h1,free_rank,torsion,euler_characteristic\n"
        << csv_field(h.group.to_string()) << "," << h.group.free_rank << ",\"";
    for (std::size_t i = 0; i < h.group.torsion.size(); ++i) out << (i ? "," : "") << h.group.torsion[i];
    out << "\"," << c.euler_characteristic() << "\n";
  } else {
    out << "source: " << source_name(o) << "\n";
    out << "simplices:";
    for (auto n : counts) out << " " << n;
    out << "\nH_1 = " << h.group.to_string() << "\nfree rank: " << h.group.free_rank << "\ntorsion:";
    if (h.group.torsion.empty()) out << " none";
    for (auto t : h.group.torsion) out << " " << t;
    out << "\nEuler characteristic: " << c.euler_characteristic() << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!(o.tolerance > 0)) throw InputError("--tolerance must be positive");
  const std::string suite = o.positional.empty() ? "all" : o.positional;
  const std::string format = format_or(o, "text");
  VerifyOptions vo;
  vo.tolerance = o.tolerance;
  vo.seed = o.seed;
  vo.jobs = jobs_of(o);
  const auto checks = run_suite(suite, vo);
  bool all = true;
  json rows = json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    if (format == "json") {
      rows.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    } else if (format == "text") {
      out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.detail << ")\n";
    }
  }
  if (format == "json") {
    out << json{{"suite", suite}, {"passed", all}, {"checks", rows}}.dump(2) << "\n";
  } else if (format == "csv") {
    out << "name,passed\n";
    for (const auto& c : checks) out << csv_field(c.name) << "," << (c.passed ? "true" : "false") << "\n";
  }
  return all ? kOk : kVerifyFailed;
}

int cmd_export(const Options& o, std::ostream& out) {
  const Cobordism w = load_source(o);
  out << io::to_json(w).dump(2) << "\n";
  return kOk;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--builder", o.builder, "Builder specifier, e.g. lens:5,2 or s1x:surface:1");
  app->add_option("--file", o.file, "Complex or cobordism JSON file");
  app->add_option("--group", o.group, "Z:n1,n2,... | roots:N | U1")->capture_default_str();
  app->add_option("--cocycle", o.cocycle, "trivial | omega_k[:K] | psi_l[:L] | bichar:I,J | table:PATH");
  app->add_option("--k", o.k, "Cocycle level, or a range K1-K2 for lens");
  app->add_option("--p", o.p, "Lens order, or a range P1-P2");
  app->add_option("--q", o.q, "Lens parameter");
  app->add_option("--out", o.out, "json | csv | text");
  app->add_option("--tolerance", o.tolerance, "Numerical tolerance")->capture_default_str();
  app->add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();
  app->add_option("--jobs", o.jobs, "Worker threads (falls back to DWKIT_JOBS)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dijkgraaf-Witten invariants of triangulated manifolds", "dwkit"};
  app.require_subcommand(1);
  Options o;

  struct Command {
    const char* name;
    const char* help;
    const char* positional;
    int (*fn)(const Options&, std::ostream&);
  };
  const std::vector<Command> commands{
      {"compute", "State sum of a closed complex, or matrix elements of a cobordism", nullptr, cmd_compute},
      {"lens", "Lens space fingerprint table", nullptr, cmd_lens},
      {"classify", "Homotopy classes of L(p, q)", "order", cmd_classify},
      {"homology", "First homology and simplex counts", "path", cmd_homology},
      {"verify", "Run a verification suite", "suite", cmd_verify},
      {"export", "Write a builder's complex as JSON", nullptr, cmd_export},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o);
    if (c.positional) sub->add_option(c.positional, o.positional, c.positional);
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (subs[i]->parsed()) return commands[i].fn(o, out);
    }
  } catch (const DomainError& e) {
    err << "dwkit: domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const InputError& e) {
    err << "dwkit: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const io::json::exception& e) {
    err << "dwkit: input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace dwkit::cli
