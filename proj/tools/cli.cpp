#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "racg/alignment.hpp"
#include "racg/errors.hpp"
#include "racg/filter.hpp"
#include "racg/io.hpp"
#include "racg/oracle.hpp"

namespace racg::cli {

using json = nlohmann::ordered_json;

json to_json(const PresentationGraph& graph, VertexSet s) {
  json out = json::array();
  s.for_each([&](int v) { out.push_back(graph.name(v)); });
  return out;
}

json to_json(const PresentationGraph& graph, const SeparatorCertificate& cert) {
  json out{{"kind", certificate_kind(cert)}};
  if (const auto* p = std::get_if<ProductSeparator>(&cert)) {
    out["A"] = to_json(graph, p->a);
    out["B"] = to_json(graph, p->b);
  } else if (const auto* v = std::get_if<Vfs>(&cert)) {
    out["C"] = to_json(graph, v->c);
    out["C1"] = to_json(graph, v->c1);
    out["K"] = to_json(graph, v->k);
    out["suspended"] = v->suspended;
  } else if (const auto* q = std::get_if<SeparatingClique>(&cert)) {
    out["Q"] = to_json(graph, q->q);
  } else {
    json factors = json::array();
    for (VertexSet f : std::get<JoinSplit>(cert).factors) factors.push_back(to_json(graph, f));
    out["factors"] = factors;
  }
  return out;
}

json to_json(const PresentationGraph& graph, const Classification& c) {
  json out{{"verdict", to_string(c.verdict.kind)}};
  if (c.verdict.kind == Verdict::Kind::Undetermined) out["reason"] = c.verdict.reason;
  json trace = json::array();
  for (const TraceStep& step : c.trace) {
    trace.push_back({{"subgraph", to_json(graph, step.subgraph)},
                     {"rule", to_string(step.rule)},
                     {"certificate", step.certificate ? to_json(graph, *step.certificate) : json(nullptr)}});
  }
  out["trace"] = trace;
  return out;
}

namespace {

std::string set_text(const PresentationGraph& graph, VertexSet s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    out += (first ? "" : ",") + graph.name(v);
    first = false;
  });
  return out + "}";
}

std::string certificate_text(const PresentationGraph& graph, const SeparatorCertificate& cert) {
  if (const auto* p = std::get_if<ProductSeparator>(&cert)) {
    return "A=" + set_text(graph, p->a) + " B=" + set_text(graph, p->b);
  }
  if (const auto* v = std::get_if<Vfs>(&cert)) {
    return "C=" + set_text(graph, v->c) + " C1=" + set_text(graph, v->c1) + " K=" + set_text(graph, v->k) +
           " suspended=" + (v->suspended ? "true" : "false");
  }
  if (const auto* q = std::get_if<SeparatingClique>(&cert)) return "Q=" + set_text(graph, q->q);
  std::string out = "factors";
  for (VertexSet f : std::get<JoinSplit>(cert).factors) out += " " + set_text(graph, f);
  return out;
}

VertexSet parse_subset(const PresentationGraph& graph, const std::string& text) {
  VertexSet out;
  for (Letter c : parse_word(graph, text)) out.insert(c);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Graph given either as a file (first positional) or by --fixture.
struct GraphSource {
  std::string fixture;
  std::vector<std::string> positionals;

  void attach(CLI::App* cmd, const std::string& extra) {
    cmd->add_option("--fixture", fixture, "Use a built-in graph instead of a file")
        ->check(CLI::IsMember(racg::fixture_names()));
    cmd->add_option("args", positionals, extra.empty() ? "Graph file" : "Graph file, then " + extra);
  }

  // Loads the graph and returns the positionals that follow it.
  PresentationGraph load(std::vector<std::string>& rest) const {
    if (!fixture.empty()) {
      rest = positionals;
      return racg::fixture(fixture);
    }
    if (positionals.empty()) throw InputError("give a graph file or --fixture NAME");
    rest.assign(positionals.begin() + 1, positionals.end());
    return parse_graph(read_file(positionals.front()));
  }
};

std::string single_word(const std::vector<std::string>& rest, const char* what) {
  if (rest.size() != 1) throw InputError(std::string("expected exactly one ") + what);
  return rest.front();
}

void no_extra(const std::vector<std::string>& rest) {
  if (!rest.empty()) throw InputError("unexpected argument '" + rest.front() + "'");
}

std::size_t element_cap() {
  const char* env = std::getenv("RACG_ELEMENT_CAP");
  if (env == nullptr || *env == '\0') return kDefaultElementCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw InputError("RACG_ELEMENT_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

int cmd_classify(const GraphSource& src, bool as_json, std::ostream& out) {
  std::vector<std::string> rest;
  const PresentationGraph g = src.load(rest);
  no_extra(rest);
  const Classification c = classify(g);
  if (as_json) {
    out << to_json(g, c).dump(2) << "\n";
    return kOk;
  }
  out << to_string(c.verdict.kind);
  if (c.verdict.kind == Verdict::Kind::Undetermined) out << ": " << c.verdict.reason;
  out << "\n";
  for (const TraceStep& step : c.trace) {
    out << "  " << to_string(step.rule) << " " << set_text(g, step.subgraph);
    if (step.certificate) out << " " << certificate_text(g, *step.certificate);
    out << "\n";
  }
  return kOk;
}

int cmd_separators(const GraphSource& src, bool product, bool vfs, bool suspended, bool as_json,
                   std::ostream& out) {
  std::vector<std::string> rest;
  const PresentationGraph g = src.load(rest);
  no_extra(rest);
  if (!product && !vfs && !suspended) product = vfs = suspended = true;
  json j = json::object();
  if (product) {
    const auto p = find_product_separator(g);
    if (as_json) {
      j["product_separator"] = p ? to_json(g, SeparatorCertificate{*p}) : json(nullptr);
    } else {
      out << "product separator: " << (p ? certificate_text(g, *p) : "none") << "\n";
    }
  }
  if (vfs) {
    const auto v = find_vfs(g);
    if (as_json) {
      j["vfs"] = v ? to_json(g, SeparatorCertificate{*v}) : json(nullptr);
    } else {
      out << "vfs: " << (v ? certificate_text(g, *v) : "none") << "\n";
    }
  }
  if (suspended) {
    const std::vector<VertexSet> s = suspended_separators(g);
    if (as_json) {
      json arr = json::array();
      for (VertexSet c : s) arr.push_back(to_json(g, c));
      j["suspended"] = arr;
    } else {
      out << "suspended separators:";
      if (s.empty()) out << " none";
      for (VertexSet c : s) out << " " << set_text(g, c);
      out << "\n";
    }
  }
  if (as_json) {
    j["ends"] = to_string(ends(g));
    out << j.dump(2) << "\n";
  } else {
    out << "ends: " << to_string(ends(g)) << "\n";
  }
  return kOk;
}

int cmd_filter(const GraphSource& src, const std::string& alpha_text, const std::string& beta_text, int depth,
               const std::string& dot_path, bool check, std::ostream& out, std::ostream& err) {
  std::vector<std::string> rest;
  const PresentationGraph g = src.load(rest);
  no_extra(rest);
  if (find_vfs(g) || find_product_separator(g)) {
    err << "warning: graph has a product separator or VFS; the filter facts are not guaranteed\n";
  }
  const Word alpha = parse_word(g, alpha_text);
  const Word beta = parse_word(g, beta_text);
  const Filter f = build_filter(g, alpha, beta, depth);
  out << "prefix " << f.prefix_length << ", depth " << f.depth << ", levels " << f.levels.size() << ", vertices "
      << f.vertices.size() << ", edges " << f.edges.size() << ", fans " << f.fans.size() << "\n";
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path, std::ios::binary);
    if (!dot) throw InputError("cannot write '" + dot_path + "'");
    dot << export_dot(f);
  }
  if (!check) return kOk;

  bool ok = true;
  const FactReport facts = verify_facts(f);
  out << "facts: " << (facts.ok() ? "pass" : "FAIL") << "\n";
  for (const FactViolation& v : facts.violations) {
    out << "  fact " << v.fact;
    if (v.vertex >= 0) {
      const FilterVertex& x = f.vertices[static_cast<std::size_t>(v.vertex)];
      out << " at v" << x.level << "_" << x.planar_index;
    }
    if (v.edge >= 0) out << " edge " << v.edge;
    out << ": " << v.detail << "\n";
  }
  ok = ok && facts.ok();
  const CayleyReport cayley = map_to_cayley(f);
  out << "cayley: " << (cayley.ok() ? "pass" : "FAIL") << "\n";
  for (const std::string& p : cayley.problems) out << "  " << p << "\n";
  ok = ok && cayley.ok();
  const FactorBound bound = check_factor_bound(f);
  out << "factor paths: max " << bound.max_length << " (bound " << bound.bound << "), repeats "
      << bound.repeat_violations << ": " << (bound.pass && bound.repeat_violations == 0 ? "pass" : "FAIL") << "\n";
  ok = ok && bound.pass && bound.repeat_violations == 0;
  return ok ? kOk : kInternal;
}

int cmd_oracle(const GraphSource& src, int radius, bool list, std::ostream& out) {
  std::vector<std::string> rest;
  const PresentationGraph g = src.load(rest);
  no_extra(rest);
  const Ball b = ball(g, radius, element_cap());
  out << "radius,count\n";
  const std::vector<std::size_t> spheres = b.sphere_sizes();
  for (std::size_t k = 0; k < spheres.size(); ++k) out << k << "," << spheres[k] << "\n";
  if (list) {
    for (const NormalForm& e : b.elements()) out << format_word(g, e.word()) << "\n";
  }
  return kOk;
}

int cmd_survey(int size, int samples, std::uint64_t seed, bool as_json, std::ostream& out) {
  const SurveySummary s = classify_survey(size, samples, seed);
  if (as_json) {
    json undetermined = json::array();
    for (const PresentationGraph& g : s.undetermined) undetermined.push_back(serialize_graph(g));
    out << json{{"seed", s.seed},
                {"samples", s.samples},
                {"verdicts", s.verdicts},
                {"rules", s.rules},
                {"undetermined", undetermined},
                {"certificate_failures", s.certificate_failures}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "seed " << s.seed << ", samples " << s.samples << ", certificate failures " << s.certificate_failures
      << "\n";
  for (const auto& [k, v] : s.verdicts) out << "  " << k << ": " << v << "\n";
  for (const auto& [k, v] : s.rules) out << "  rule " << k << ": " << v << "\n";
  for (const PresentationGraph& g : s.undetermined) out << "undetermined:\n" << serialize_graph(g);
  return s.certificate_failures == 0 ? kOk : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Right-angled Coxeter group workbench", "racg"};
  app.require_subcommand(1);

  GraphSource classify_src, sep_src, reduce_src, geo_src, nf_src, proj_src, align_src, filter_src, oracle_src;
  bool as_json = false;

  auto* classify_cmd = app.add_subcommand("classify", "Decide boundary local connectivity");
  classify_src.attach(classify_cmd, "");
  classify_cmd->add_flag("--json", as_json, "JSON output");

  bool want_product = false, want_vfs = false, want_suspended = false;
  auto* sep_cmd = app.add_subcommand("separators", "Product separators, VFS and suspended separators");
  sep_src.attach(sep_cmd, "");
  sep_cmd->add_flag("--product", want_product, "Only the product separator");
  sep_cmd->add_flag("--vfs", want_vfs, "Only the VFS");
  sep_cmd->add_flag("--suspended", want_suspended, "Only the suspended separators");
  sep_cmd->add_flag("--json", as_json, "JSON output");

  auto* reduce_cmd = app.add_subcommand("reduce", "Geodesic word for the same element");
  reduce_src.attach(reduce_cmd, "a word");
  auto* geo_cmd = app.add_subcommand("geodesic", "Is the word geodesic");
  geo_src.attach(geo_cmd, "a word");
  auto* nf_cmd = app.add_subcommand("nf", "Shortlex normal form");
  nf_src.attach(nf_cmd, "a word");

  std::string subset;
  auto* proj_cmd = app.add_subcommand("project", "Shortest element of the coset g<T>");
  proj_src.attach(proj_cmd, "a word");
  proj_cmd->add_option("--subset", subset, "Generators of T")->required();

  std::string alpha_text, beta_text, target_text;
  auto* align_cmd = app.add_subcommand("align", "Geodesics to g and h with a long common prefix");
  align_src.attach(align_cmd, "");
  align_cmd->add_option("--alpha", alpha_text, "Geodesic word to g")->required();
  align_cmd->add_option("--target", target_text, "Word for h")->required();

  int depth = 0;
  std::string dot_path;
  bool check = false;
  auto* filter_cmd = app.add_subcommand("filter", "Build and check a filter between two geodesics");
  filter_src.attach(filter_cmd, "");
  filter_cmd->add_option("--alpha", alpha_text, "Geodesic ray on the left")->required();
  filter_cmd->add_option("--beta", beta_text, "Geodesic ray on the right")->required();
  filter_cmd->add_option("--depth", depth, "Levels above the common prefix")->required()->check(CLI::NonNegativeNumber);
  filter_cmd->add_option("--dot", dot_path, "Write a DOT diagram");
  filter_cmd->add_flag("--check", check, "Verify facts, Cayley map and factor-path bound");

  int radius = 0;
  bool list = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force Cayley geometry");
  oracle_cmd->require_subcommand(1);
  auto* ball_cmd = oracle_cmd->add_subcommand("ball", "Sphere sizes of a Cayley ball as CSV");
  oracle_src.attach(ball_cmd, "");
  ball_cmd->add_option("--radius", radius, "Ball radius")->required()->check(CLI::NonNegativeNumber);
  ball_cmd->add_flag("--elements", list, "Also list the elements in shortlex order");

  int size = 0, samples = 0;
  std::uint64_t seed = 0;
  auto* survey_cmd = app.add_subcommand("survey", "Classify seeded random graphs");
  survey_cmd->add_option("--size", size, "Largest vertex count")->required();
  survey_cmd->add_option("--samples", samples, "Number of graphs")->required();
  survey_cmd->add_option("--seed", seed, "RNG seed")->required();
  survey_cmd->add_flag("--json", as_json, "JSON output");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    std::vector<std::string> rest;
    if (classify_cmd->parsed()) return cmd_classify(classify_src, as_json, out);
    if (sep_cmd->parsed()) return cmd_separators(sep_src, want_product, want_vfs, want_suspended, as_json, out);
    if (reduce_cmd->parsed()) {
      const PresentationGraph g = reduce_src.load(rest);
      out << format_word(g, reduce(g, parse_word(g, single_word(rest, "word")))) << "\n";
      return kOk;
    }
    if (geo_cmd->parsed()) {
      const PresentationGraph g = geo_src.load(rest);
      out << (is_geodesic(g, parse_word(g, single_word(rest, "word"))) ? "true" : "false") << "\n";
      return kOk;
    }
    if (nf_cmd->parsed()) {
      const PresentationGraph g = nf_src.load(rest);
      out << format_word(g, normal_form(g, parse_word(g, single_word(rest, "word"))).word()) << "\n";
      return kOk;
    }
    if (proj_cmd->parsed()) {
      const PresentationGraph g = proj_src.load(rest);
      const NormalForm v = normal_form(g, parse_word(g, single_word(rest, "word")));
      out << format_word(g, project_to_coset(g, v, parse_subset(g, subset)).word()) << "\n";
      return kOk;
    }
    if (align_cmd->parsed()) {
      const PresentationGraph g = align_src.load(rest);
      no_extra(rest);
      const AlignmentResult r =
          align(g, parse_word(g, alpha_text), normal_form(g, parse_word(g, target_text)));
      out << "alpha' " << format_word(g, r.alpha_prime) << "\n";
      out << "beta'  " << format_word(g, r.beta_prime) << "\n";
      out << "common prefix " << r.common_prefix_length << "\n";
      return kOk;
    }
    if (filter_cmd->parsed()) {
      return cmd_filter(filter_src, alpha_text, beta_text, depth, dot_path, check, out, err);
    }
    if (ball_cmd->parsed()) return cmd_oracle(oracle_src, radius, list, out);
    if (survey_cmd->parsed()) return cmd_survey(size, samples, seed, as_json, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const InternalError& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace racg::cli
