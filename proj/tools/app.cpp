#include "app.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mesostab/error.hpp"
#include "mesostab/io.hpp"
#include "mesostab/kuramoto.hpp"
#include "mesostab/minors.hpp"
#include "mesostab/report.hpp"
#include "mesostab/structure.hpp"

namespace mesostab::cli {

using nlohmann::ordered_json;

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string format = "text";
  std::size_t nmax = kDefaultNmax;
  double tol = 1e-9;
  std::string seed_phases;
  std::string v1;
  bool timings = false;

  SylvesterOptions sylvester() const { return {nmax, tol}; }
};

class Stopwatch {
 public:
  void lap(const std::string& name) {
    const auto now = std::chrono::steady_clock::now();
    laps_.emplace_back(name, std::chrono::duration<double, std::milli>(now - last_).count());
    last_ = now;
  }
  ordered_json to_json() const {
    ordered_json j = ordered_json::object();
    for (const auto& [name, ms] : laps_) j[name] = ms;
    return j;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, double>> laps_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string num(double x) {
  std::ostringstream ss;
  ss << std::setprecision(12) << x;
  return ss.str();
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k] + 1);
  return out + "}";
}

std::string edge_text(const Edge& e) {
  return std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) + " (" + num(e.weight) + ")";
}

ordered_json set_json(const VertexSet& s) {
  ordered_json j = ordered_json::array();
  for (Vertex v : s) j.push_back(v + 1);
  return j;
}

ordered_json edge_json(const Edge& e) {
  return {{"i", e.u + 1}, {"j", e.v + 1}, {"w", e.weight}};
}

ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json j = ordered_json::array();
  for (const Edge& e : edges) j.push_back(edge_json(e));
  return j;
}

ordered_json header(const Options& opt, const std::string& digest) {
  ordered_json j;
  j["schema"] = kSchema;
  j["tool"] = kToolName;
  j["version"] = kVersion;
  j["command"] = opt.command;
  j["input_digest"] = "fnv1a64:" + digest;
  j["options"] = {{"nmax", opt.nmax}, {"tol", opt.tol}};
  return j;
}

ordered_json report_json(const StabilityReport& r) {
  ordered_json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["dimension"] = r.dimension;
  j["rank_estimate"] = r.rank_estimate;
  j["zero_row_sums"] = r.zero_row_sums;
  j["definiteness"] = {{"matrix", "-A"},
                       {"kind", std::string(to_string(r.definiteness))},
                       {"method", std::string(r.method)}};
  ordered_json w;
  if (r.minor_witness)
    w["minor"] = {{"S", set_json(r.minor_witness->s)}, {"value", r.minor_witness->value}};
  else
    w["minor"] = nullptr;
  if (r.vector_witness)
    w["vector"] = {{"v", r.vector_witness->v}, {"quadratic_form", r.vector_witness->quadratic_form}};
  else
    w["vector"] = nullptr;
  if (r.negative_cut)
    w["negative_cut"] = {{"V1", set_json(*r.negative_cut)},
                         {"crossing_edges", edges_json(r.negative_cut_edges)}};
  else
    w["negative_cut"] = nullptr;
  j["witnesses"] = w;
  j["coates_edges"] = edges_json(r.coates_edges);
  j["positive_spanning_tree"] =
      r.positive_spanning_tree ? edges_json(*r.positive_spanning_tree) : ordered_json(nullptr);
  ordered_json lines = ordered_json::array();
  for (const LineFinding& f : r.lines) {
    lines.push_back({{"edges", edges_json(f.line)},
                     {"negative_edges", edges_json(f.negative_edges)},
                     {"bound", f.bound ? ordered_json(*f.bound) : ordered_json(nullptr)},
                     {"violated", f.violated}});
  }
  j["lines"] = lines;
  j["line_violations"] = r.line_violations();
  return j;
}

void report_text(std::ostream& out, const StabilityReport& r) {
  out << "verdict: " << to_string(r.verdict) << "\n";
  out << "dimension: " << r.dimension << "\n";
  out << "rank estimate: " << r.rank_estimate << "\n";
  out << "zero row sums: " << (r.zero_row_sums ? "yes" : "no") << "\n";
  out << "definiteness of -A: " << to_string(r.definiteness) << " (" << r.method << ")\n";
  if (r.minor_witness)
    out << "minor witness: S = " << set_text(r.minor_witness->s)
        << ", det(-A)_SS = " << num(r.minor_witness->value) << "\n";
  if (r.vector_witness) {
    out << "vector witness: v = (";
    for (std::size_t k = 0; k < r.vector_witness->v.size(); ++k)
      out << (k ? ", " : "") << num(r.vector_witness->v[k]);
    out << "), v^T(-A)v = " << num(r.vector_witness->quadratic_form) << "\n";
  }
  if (r.positive_spanning_tree) {
    out << "positive spanning tree:";
    for (const Edge& e : *r.positive_spanning_tree) out << " " << edge_text(e);
    out << "\n";
  } else {
    out << "positive spanning tree: none\n";
  }
  if (r.negative_cut) {
    out << "negative cut: V1 = " << set_text(*r.negative_cut) << "; crossing edges:";
    for (const Edge& e : r.negative_cut_edges) out << " " << edge_text(e);
    out << "\n";
  }
  out << "induced lines: " << r.lines.size() << " (" << r.line_violations() << " violated)\n";
  for (const LineFinding& f : r.lines) {
    out << "  line";
    for (const Edge& e : f.line) out << " " << edge_text(e);
    out << ": " << f.negative_edges.size() << " negative";
    if (f.bound) out << ", bound " << num(*f.bound);
    out << (f.violated ? ", VIOLATED" : ", ok") << "\n";
  }
}

int verdict_exit(const StabilityReport& r) {
  return r.verdict == StabilityVerdict::passes_necessary_condition ? kPasses : kObstruction;
}

void emit(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

ordered_json equivalences_json(const EquivalenceReport& eq) {
  ordered_json j;
  j["conditions"] = eq.conditions;
  j["agree"] = eq.agree;
  j["disagreement"] = eq.disagreement
                          ? ordered_json::array({eq.disagreement->first, eq.disagreement->second})
                          : ordered_json(nullptr);
  return j;
}

int analyze(const Options& opt, std::ostream& out, bool graph_input) {
  Stopwatch clock;
  const std::string bytes = read_file(opt.input);
  std::istringstream in(bytes);
  SymmetricMatrix a(0);
  if (graph_input) {
    a = -laplacian(io::read_edge_list(in));
  } else {
    a = io::read_matrix_csv(in);
  }
  clock.lap("parse");
  const StabilityReport r = analyze_matrix(a, opt.sylvester());
  clock.lap("analysis");
  std::optional<EquivalenceReport> eq;
  if (r.zero_row_sums && a.size() <= opt.nmax && a.size() > 0) {
    eq = check_equivalences(-a, opt.sylvester());
    clock.lap("equivalences");
  }

  if (opt.format == "json") {
    ordered_json j = header(opt, fnv1a64_hex(bytes));
    j.update(report_json(r));
    j["equivalences"] = eq ? equivalences_json(*eq) : ordered_json(nullptr);
    if (opt.timings) j["timings_ms"] = clock.to_json();
    emit(out, j);
  } else {
    report_text(out, r);
    if (eq) {
      out << "zero-row-sum conditions (i)-(v):";
      for (bool c : eq->conditions) out << " " << (c ? "T" : "F");
      out << (eq->agree ? " (agree)" : " (DISAGREE)") << "\n";
    }
  }
  return verdict_exit(r);
}

int kuramoto(const Options& opt, std::ostream& out) {
  Stopwatch clock;
  const std::string bytes = read_file(opt.input);
  std::istringstream in(bytes);
  const KuramotoSystem sys = io::read_kuramoto(in);
  std::vector<double> seed(sys.size(), 0.0);
  if (!opt.seed_phases.empty()) {
    std::istringstream seeds(read_file(opt.seed_phases));
    seed = io::read_phases(seeds);
    if (seed.size() != sys.size())
      throw ParseError(0, "seed file has " + std::to_string(seed.size()) + " phases, expected " +
                              std::to_string(sys.size()));
  }
  clock.lap("parse");
  NewtonDiagnostics diag;
  const auto xstar = find_equilibrium(sys, PhaseState(seed), {}, &diag);
  clock.lap("newton");

  ordered_json eqj;
  eqj["found"] = xstar.has_value();
  eqj["phases"] = xstar ? ordered_json(xstar->phases()) : ordered_json(nullptr);
  eqj["residual_norm"] = diag.residual_norm;
  eqj["iterations"] = diag.iterations;
  eqj["singular_steps"] = diag.singular_steps;

  std::optional<StabilityReport> r;
  bool phase_condition = false;
  if (xstar) {
    r = classify_stability(sys, *xstar, opt.sylvester());
    phase_condition = spanning_phase_condition(sys, *xstar);
    clock.lap("classification");
  }

  if (opt.format == "json") {
    ordered_json j = header(opt, fnv1a64_hex(bytes));
    if (r) {
      j.update(report_json(*r));
    } else {
      j["verdict"] = "no equilibrium found";
    }
    j["equilibrium"] = eqj;
    j["spanning_phase_condition"] = r ? ordered_json(phase_condition) : ordered_json(nullptr);
    if (opt.timings) j["timings_ms"] = clock.to_json();
    emit(out, j);
  } else {
    if (!xstar) {
      out << "verdict: no equilibrium found\n";
      out << "newton: " << diag.iterations << " iterations, residual " << num(diag.residual_norm)
          << "\n";
    } else {
      out << "equilibrium phases:";
      for (double p : xstar->phases()) out << " " << num(p);
      out << "\nnewton: " << diag.iterations << " iterations, residual "
          << num(diag.residual_norm) << ", " << diag.singular_steps << " singular steps\n";
      report_text(out, *r);
      out << "spanning tree with |phase difference| < pi/2: " << (phase_condition ? "yes" : "no")
          << "\n";
    }
  }
  return r ? verdict_exit(*r) : kObstruction;
}

VertexSet parse_vertex_list(const std::string& text, std::size_t n) {
  std::vector<Vertex> vs;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != tok.size() || v < 1 || v > n)
      throw ParseError(0, "--v1: '" + tok + "' is not a vertex in 1.." + std::to_string(n));
    vs.push_back(v - 1);
  }
  return VertexSet(std::move(vs));
}

int verify_identity(const Options& opt, std::ostream& out) {
  const std::string bytes = read_file(opt.input);
  std::istringstream in(bytes);
  const WeightedGraph g = io::read_edge_list(in);
  if (opt.v1.empty()) throw ParseError(0, "verify-identity requires --v1, e.g. --v1 1,2");
  const VertexSet v1 = parse_vertex_list(opt.v1, g.vertex_count());
  if (v1.empty() || v1.size() >= g.vertex_count())
    throw ParseError(0, "--v1 must be a nonempty proper subset of the vertices");
  const CutIdentity id = verify_cut_identity(g, v1, opt.nmax);
  const bool holds = id.holds(opt.tol);

  if (opt.format == "json") {
    ordered_json j = header(opt, fnv1a64_hex(bytes));
    j["V1"] = set_json(v1);
    j["terms"] = id.terms;
    j["residual"] = id.residual;
    j["term_scale"] = id.term_scale;
    j["holds"] = holds;
    emit(out, j);
  } else {
    out << "V1 = " << set_text(v1) << "\n";
    out << "terms: " << id.terms.size() << ", scale " << num(id.term_scale) << "\n";
    out << "residual: " << num(id.residual) << (holds ? " (zero within tolerance)" : " (NONZERO)")
        << "\n";
  }
  return holds ? kPasses : kObstruction;
}

// Built-in smoke checks on small closed-form cases.
int self_test(const Options& opt, std::ostream& out) {
  std::vector<std::pair<std::string, bool>> checks;
  const auto check = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception&) {
      ok = false;
    }
    checks.emplace_back(name, ok);
  };

  check("indefinite zero-row-sum matrix is refused", [] {
    const auto c = SymmetricMatrix::from_rows(
        {{0, 0, 1, -1}, {0, -1, 1, 0}, {1, 1, -2, 0}, {-1, 0, 0, 1}});
    const StabilityReport r = analyze_matrix(c);
    return r.verdict == StabilityVerdict::fails_necessary_condition && r.minor_witness &&
           r.minor_witness->value < 0 && !r.positive_spanning_tree;
  });
  check("forest sum equals determinant on a triangle", [] {
    const WeightedGraph g(3, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}});
    return std::abs(principal_minor_combinatorial(g, {0, 1}) - 3.0) < 1e-12;
  });
  check("cut identity on a triangle", [] {
    const WeightedGraph g(3, {{0, 1, 1.0}, {0, 2, 2.0}, {1, 2, 3.0}});
    return verify_cut_identity(g, {0, 1}).holds();
  });
  check("two-oscillator lock passes", [] {
    const KuramotoSystem sys({-0.5, 0.5}, SymmetricMatrix::from_rows({{0, 1}, {1, 0}}));
    const auto x = find_equilibrium(sys, PhaseState({0.0, 0.1}));
    return x && std::abs(x->difference(1, 0) - std::asin(0.5)) < 1e-8 &&
           classify_stability(sys, *x).verdict == StabilityVerdict::passes_necessary_condition;
  });

  bool all = true;
  for (const auto& c : checks) all = all && c.second;
  if (opt.format == "json") {
    ordered_json j;
    j["schema"] = kSchema;
    j["tool"] = kToolName;
    j["version"] = kVersion;
    j["command"] = opt.command;
    ordered_json list = ordered_json::array();
    for (const auto& [name, ok] : checks) list.push_back({{"name", name}, {"passed", ok}});
    j["checks"] = list;
    j["passed"] = all;
    emit(out, j);
  } else {
    for (const auto& [name, ok] : checks) out << (ok ? "PASS " : "FAIL ") << name << "\n";
  }
  return all ? kPasses : kObstruction;
}

}  // namespace

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream ss;
  ss << std::hex << std::setw(16) << std::setfill('0') << h;
  return ss.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Negative semi-definiteness of zero-row-sum matrices via graph structure",
               kToolName};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--nmax", opt.nmax, "Largest dimension for exhaustive minor sweeps")
      ->check(CLI::Range(std::size_t{1}, std::size_t{62}));
  app.add_option("--tol", opt.tol, "Relative tolerance for strict positivity")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed-phases", opt.seed_phases, "Initial phases for the Newton search");
  app.add_option("--v1", opt.v1, "Cut side for verify-identity, e.g. 1,2");
  app.add_flag("--timings", opt.timings, "Add wall-clock timings to JSON output");

  struct Sub {
    const char* name;
    const char* help;
    bool needs_input;
  };
  const Sub subs[] = {
      {"analyze-matrix", "Analyse a symmetric matrix given as CSV", true},
      {"analyze-graph", "Analyse A = -L(G) for an edge-list graph", true},
      {"kuramoto", "Find an equilibrium and test its linear stability", true},
      {"verify-identity", "Evaluate the alternating cut identity for --v1", true},
      {"self-test", "Run built-in closed-form checks", false},
  };
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    if (s.needs_input) sub->add_option("input", opt.input, "Input file")->required();
    sub->callback([&opt, name = s.name] { opt.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPasses;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kPasses;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (opt.command == "analyze-matrix") return analyze(opt, out, false);
    if (opt.command == "analyze-graph") return analyze(opt, out, true);
    if (opt.command == "kuramoto") return kuramoto(opt, out);
    if (opt.command == "verify-identity") return verify_identity(opt, out);
    return self_test(opt, out);
  } catch (const ParseError& e) {
    err << "error: " << opt.input << ": " << e.what() << "\n";
  } catch (const GuardError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace mesostab::cli
