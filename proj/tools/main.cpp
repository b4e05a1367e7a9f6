#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sosperfect/errors.hpp"
#include "sosperfect/experiment.hpp"
#include "sosperfect/generators.hpp"
#include "sosperfect/graph_io.hpp"
#include "sosperfect/report.hpp"

using namespace sosperfect;
using report::json;

namespace {

struct Globals {
  double tol = 1e-7;
  std::uint64_t seed = 1;
  int max_n = 200;
  std::string format;  // empty: the command's own default
  std::string output;
  bool timings = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw UsageError("cannot write " + g.output);
  out << text;
}

std::string dump(const Globals& g, json doc) {
  if (!g.timings) doc.erase("timings");
  report::finalize(doc);
  return doc.dump(2) + "\n";
}

Graph load_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return read_edge_list(in);
}

// The first allowed format is the command's default.
void resolve_format(Globals& g, std::initializer_list<const char*> allowed) {
  if (g.format.empty()) g.format = *allowed.begin();
  for (const char* f : allowed)
    if (g.format == f) return;
  throw UsageError("--format " + g.format + " is not available for this command");
}

int to_int(const std::string& s) {
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw UsageError("expected an integer, got '" + s + "'");
  return v;
}

Graph build_family(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      throw UsageError(family + " takes " + std::to_string(k) + " parameter" + (k == 1 ? "" : "s"));
  };
  auto p = [&](std::size_t i) { return to_int(params.at(i)); };
  if (family == "complete") return arity(1), complete(p(0));
  if (family == "empty") return arity(1), empty_graph(p(0));
  if (family == "cycle") return arity(1), cycle(p(0));
  if (family == "path") return arity(1), path(p(0));
  if (family == "complete_bipartite") return arity(2), complete_bipartite(p(0), p(1));
  if (family == "complete_multipartite") {
    if (params.empty()) throw UsageError("complete_multipartite takes at least one part size");
    std::vector<int> parts;
    for (std::size_t i = 0; i < params.size(); ++i) parts.push_back(p(i));
    return complete_multipartite(parts);
  }
  if (family == "odd_hole") return arity(1), odd_hole(p(0));
  if (family == "odd_antihole") return arity(1), odd_antihole(p(0));
  if (family == "cycle_power") return arity(2), cycle_power(p(0), p(1));
  if (family == "paley") return arity(1), paley(p(0));
  if (family == "mycielski") return arity(1), mycielski(p(0));
  if (family == "hamming") return arity(2), hamming_distance_graph(p(0), p(1));
  if (family == "gnp") {
    arity(2);
    std::size_t pos = 0;
    double prob = std::stod(params[1], &pos);
    if (pos != params[1].size()) throw UsageError("bad probability '" + params[1] + "'");
    return gnp_random(p(0), prob, seed);
  }
  throw UsageError("unknown family '" + family + "'");
}

int cmd_generate(Globals& g, const std::string& family, const std::vector<std::string>& params) {
  resolve_format(g, {"text", "json", "dot"});
  Graph graph;
  try {
    graph = build_family(family, params, g.seed);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream out;
  if (g.format == "dot") {
    write_dot(out, graph, family);
  } else if (g.format == "json") {
    json doc = {{"command", "generate"}, {"family", family}, {"params", params}, {"graph", report::graph_json(graph)}};
    if (family == "gnp") doc["seed"] = g.seed;
    out << dump(g, doc);
  } else {
    write_edge_list(out, graph);
  }
  emit(g, out.str());
  return report::kVerified;
}

std::string analysis_text(const json& r) {
  std::ostringstream out;
  const json& l = r.at("ladder");
  auto num = [](const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); };
  out << "n " << r.at("graph").at("n") << "  m " << r.at("graph").at("m") << "\n";
  out << "omega " << l.at("omega") << "  alpha " << l.at("alpha");
  if (!l.at("chi").is_null()) out << "  chi " << l.at("chi");
  out << "\n";
  for (const char* key : {"theta_prime", "theta"})
    out << key << " " << num(l.at(key).at("value")) << "  [" << num(l.at(key).at("lower")) << ", "
        << num(l.at(key).at("upper")) << "]\n";
  out << "gamma " << num(l.at("gamma")) << "  tau " << l.at("tau") << "  rho " << num(l.at("rho")) << "\n";
  out << "p_G " << l.at("sos_verdict").get<std::string>() << "  margin " << num(l.at("sos_margin")) << "\n";
  for (const char* key : {"perfect_spgt_scan", "perfect_definition_scan"})
    if (r.contains(key)) out << key << " " << (r.at(key).at("perfect").get<bool>() ? "perfect" : "imperfect") << "\n";
  if (r.contains("sos_perfect")) out << "sos_perfect " << r.at("sos_perfect").at("result").get<std::string>() << "\n";
  if (r.contains("aimp")) out << "aimp " << num(r.at("aimp").at("value")) << "\n";
  for (const auto& s : r.at("skipped"))
    out << "skipped " << s.at("item").get<std::string>() << ": " << s.at("reason").get<std::string>() << "\n";
  return out.str();
}

int cmd_analyze(Globals& g, const std::string& path, const report::AnalyzeOptions& flags) {
  resolve_format(g, {"json", "text"});
  report::AnalyzeOptions opts = flags;
  opts.tol = g.tol;
  opts.seed = g.seed;
  opts.max_n = g.max_n;
  const Graph graph = load_graph(path);
  const report::AnalysisReport r = report::analyze(graph, opts);
  json doc = report::to_json(r);
  emit(g, g.format == "text" ? analysis_text(doc) : dump(g, doc));
  return r.exit_code();
}

int cmd_experiment(Globals& g, int n, double p, int trials, bool serial) {
  resolve_format(g, {"json", "text"});
  if (n > g.max_n) {
    std::cerr << "n = " << n << " exceeds --max-n " << g.max_n << "\n";
    return report::kResourceCap;
  }
  SdpOptions opts;
  opts.tol = g.tol;
  ExperimentSummary s;
  try {
    s = run_experiment(n, p, trials, g.seed, opts, serial ? Execution::serial : Execution::parallel);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (g.format == "text") {
    std::ostringstream out;
    out << "n " << s.n << "  p " << s.p << "  trials " << s.trials << "  seed " << s.seed << "\n";
    out << "non-integer theta' " << s.count_noninteger_theta_prime << "\n";
    out << "certified not sos " << s.count_margin_certified_not_sos << "\n";
    out << "undecided " << s.count_undecided << "\n";
    emit(g, out.str());
  } else {
    json doc = report::to_json(s);
    doc["command"] = "experiment";
    emit(g, dump(g, doc));
  }
  return report::kVerified;
}

json recheck_json(const report::RecheckResult& r) {
  return {{"ok", r.ok}, {"checked", r.checked}, {"failures", r.failures}};
}

int cmd_certify(Globals& g, const std::string& path) {
  resolve_format(g, {"json"});
  const Graph graph = load_graph(path);
  if (graph.order() > g.max_n) {
    std::cerr << "n = " << graph.order() << " exceeds --max-n " << g.max_n << "\n";
    return report::kResourceCap;
  }
  SdpOptions opts;
  opts.tol = g.tol;
  json doc = {{"command", "certify"},
              {"graph", report::graph_json(graph)},
              {"tol", report::real(g.tol)},
              {"seed", g.seed},
              {"certificates", report::certificates_json(graph, opts, g.seed)}};
  // Recheck what a reader of the file would see, not the in-memory doubles.
  const report::RecheckResult r = report::recheck(json::parse(doc.dump()));
  doc["recheck"] = recheck_json(r);
  emit(g, dump(g, doc));
  if (!r.ok) return report::kFailed;
  const std::string verdict = doc["certificates"]["sos_verdict"]["verdict"];
  return verdict == "inconclusive" ? report::kInconclusive : report::kVerified;
}

int cmd_recheck(const Globals& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("not JSON: ") + e.what());
  }
  report::RecheckResult r = report::recheck(doc);
  if (doc.contains("hash") && doc.at("hash") != report::content_hash(doc)) {
    r.ok = false;
    r.failures.push_back("hash: content does not match the stored hash");
  }
  json out = {{"command", "recheck"}, {"source", path}, {"recheck", recheck_json(r)}};
  emit(g, out.dump(2) + "\n");
  return r.ok ? report::kVerified : report::kFailed;
}

int cmd_decompose(Globals& g, const std::string& path, const std::string& variant) {
  resolve_format(g, {"json", "text"});
  const Graph graph = load_graph(path);
  const int n = graph.order();
  SosDecomposition d;
  std::string kind;
  if (n >= 2 && graph.size() == static_cast<std::size_t>(n) * (n - 1) / 2) {
    const CompleteVariant v = variant == "pairwise" ? CompleteVariant::pairwise : CompleteVariant::telescoping;
    d = sos_decompose_complete(n, v);
    kind = to_string(v);
  } else if (auto side = bipartition(graph); side && graph.size() > 0) {
    d = sos_decompose_bipartite(graph, *side);
    kind = "bipartite";
  } else {
    std::cerr << "decompose: exact decompositions exist here only for complete and bipartite graphs; "
                 "use certify for the numerical certificate\n";
    return report::kInconclusive;
  }
  const bool ok = d.verify();
  if (g.format == "text") {
    emit(g, to_text(d));
  } else {
    json doc = {{"command", "decompose"},
                {"graph", report::graph_json(graph)},
                {"target", report::to_json(d.target)},
                {"decomposition", report::to_json(d, kind)}};
    emit(g, dump(g, doc));
  }
  return ok ? report::kVerified : report::kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quartic graph forms, theta bounds and sos certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "Solver tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for random graphs and sampling");
  app.add_option("--max-n", g.max_n, "Skip expensive analyses above this order")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  app.add_option("-o,--output", g.output, "Write to this file instead of stdout");
  app.add_flag("--timings", g.timings, "Include wall-clock timings in JSON output");

  std::string family;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("generate", "Write a graph from a named family");
  gen->add_option("family", family,
                  "complete|empty|cycle|path|complete_bipartite|complete_multipartite|odd_hole|"
                  "odd_antihole|cycle_power|paley|mycielski|hamming|gnp")
      ->required();
  gen->add_option("params", params, "Family parameters");

  std::string path;
  report::AnalyzeOptions flags;
  auto* analyze = app.add_subcommand("analyze", "Bound ladder and optional exact analyses of a graph");
  analyze->add_option("graph", path, "Edge-list file, or - for stdin")->required();
  analyze->add_flag("--chi", flags.chi, "Exact chromatic number");
  analyze->add_flag("--perfect", flags.perfect, "Perfectness by both scans and the sos-perfect sweep");
  analyze->add_flag("--certify", flags.certify, "Attach certificates");
  analyze->add_flag("--aimp", flags.aimp, "Algebraic imperfection ratio");

  int n = 0, trials = 100;
  double p = 0.5;
  bool serial = false;
  auto* experiment = app.add_subcommand("experiment", "Count non-integer theta' over random graphs");
  experiment->add_option("-n", n, "Vertices")->required();
  experiment->add_option("-p", p, "Edge probability")->required();
  experiment->add_option("--trials", trials, "Number of random graphs");
  experiment->add_flag("--serial", serial, "Run trials on one thread");

  std::string recheck_path;
  auto* certify = app.add_subcommand("certify", "Emit and re-verify certificates for p_G");
  certify->add_option("graph", path, "Edge-list file, or - for stdin");
  certify->add_option("--recheck", recheck_path, "Re-verify a JSON report instead");

  std::string variant = "telescoping";
  auto* decompose = app.add_subcommand("decompose", "Exact sos decomposition for complete or bipartite graphs");
  decompose->add_option("graph", path, "Edge-list file, or - for stdin")->required();
  decompose->add_option("--variant", variant, "Complete-graph variant")
      ->check(CLI::IsMember({"pairwise", "telescoping"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return report::kUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(g, family, params);
    if (analyze->parsed()) return cmd_analyze(g, path, flags);
    if (experiment->parsed()) return cmd_experiment(g, n, p, trials, serial);
    if (certify->parsed()) {
      if (!recheck_path.empty()) return cmd_recheck(g, recheck_path);
      if (path.empty()) throw UsageError("certify needs a graph file or --recheck <json>");
      return cmd_certify(g, path);
    }
    if (decompose->parsed()) return cmd_decompose(g, path, variant);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return report::kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return report::kResourceCap;
  } catch (const std::invalid_argument& e) {
    // Malformed input files land here.
    std::cerr << "error: " << e.what() << "\n";
    return report::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return report::kFailed;
  }
  return report::kUsage;
}
