#include "powerindex/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "powerindex/configuration.hpp"
#include "powerindex/dynamics.hpp"
#include "powerindex/error.hpp"
#include "powerindex/explorer.hpp"
#include "powerindex/generators.hpp"
#include "powerindex/graph.hpp"
#include "powerindex/graph_io.hpp"
#include "powerindex/rational.hpp"
#include "powerindex/rule90.hpp"
#include "powerindex/shapley.hpp"
#include "powerindex/wave.hpp"
#include "powerindex/win_partition.hpp"

namespace powerindex {

namespace {

using nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

struct GlobalOptions {
  std::string semantics = "strict";
  std::size_t budget = kDefaultStepBudget;
  std::string out_path;
  std::string dot_path;

  ThresholdMode mode() const { return parse_threshold_mode(semantics); }
};

struct GraphSource {
  std::string file;
  std::optional<int> path, cycle, complete, prism, hn;
  std::vector<int> gjn;
  bool petersen = false;
  bool bowtie = false;
  int ell = 3;
};

struct LoadedGraph {
  Graph graph;
  std::string id;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

void emit(const GlobalOptions& opts, const std::string& text,
          std::ostream& out) {
  if (opts.out_path.empty()) {
    out << text;
  } else {
    write_text(opts.out_path, text);
  }
}

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  cmd->add_option("--graph", src.file, "Graph file (JSON or edge list)");
  cmd->add_option("--path", src.path, "Path on N vertices");
  cmd->add_option("--cycle", src.cycle, "Cycle on N vertices");
  cmd->add_option("--complete", src.complete, "Complete graph on N vertices");
  cmd->add_option("--prism", src.prism, "Layered prism K_{J-1} x C_4");
  cmd->add_option("--hn", src.hn, "Ring ladder with pendant cliques");
  cmd->add_option("--ell", src.ell, "Pendant clique size for --hn")
      ->capture_default_str();
  cmd->add_option("--gjn", src.gjn, "Clique chain, two values: J N")
      ->expected(2);
  cmd->add_flag("--petersen", src.petersen, "Petersen graph");
  cmd->add_flag("--bowtie", src.bowtie, "Two triangles sharing a vertex");
}

LoadedGraph load_graph(const GraphSource& src) {
  std::vector<LoadedGraph> found;
  if (!src.file.empty()) {
    found.push_back({parse_graph(read_file(src.file)), "file:" + src.file});
  }
  if (src.path) {
    found.push_back({make_path(*src.path), "path:" + std::to_string(*src.path)});
  }
  if (src.cycle) {
    found.push_back(
        {make_cycle(*src.cycle), "cycle:" + std::to_string(*src.cycle)});
  }
  if (src.complete) {
    found.push_back({make_complete(*src.complete),
                     "complete:" + std::to_string(*src.complete)});
  }
  if (src.prism) {
    found.push_back(
        {make_prism(*src.prism), "prism:" + std::to_string(*src.prism)});
  }
  if (src.hn) {
    found.push_back({make_hnl(*src.hn, src.ell), "hn:" + std::to_string(*src.hn) +
                                                     ":" +
                                                     std::to_string(src.ell)});
  }
  if (!src.gjn.empty()) {
    found.push_back({make_gjn(src.gjn[0], src.gjn[1]),
                     "gjn:" + std::to_string(src.gjn[0]) + ":" +
                         std::to_string(src.gjn[1])});
  }
  if (src.petersen) found.push_back({make_petersen(), "petersen"});
  if (src.bowtie) found.push_back({make_bowtie(), "bowtie"});
  if (found.size() != 1) {
    throw UsageError("give exactly one graph source");
  }
  return std::move(found.front());
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  return out;
}

// Ring-ladder vertices follow the base wave; vertices without ring-ladder
// labels (attached subgraphs) take `other`.
Configuration labelled_wave(const Graph& g, int row,
                            const std::vector<int>& columns, Strategy other) {
  Configuration c(g.vertex_count(), other);
  int n = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (const auto* l = std::get_if<HnlLabel>(&g.label(v))) {
      n = std::max(n, l->column + 1);
      c.set(v, l->row == 1 ? Strategy::kCollaborator : Strategy::kDefector);
    }
  }
  if (n == 0) throw LabelError("graph carries no ring-ladder labels");
  const WaveDescriptor d = make_wave_descriptor(n, row, columns);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto* l = std::get_if<HnlLabel>(&g.label(v));
    if (l != nullptr && l->role == HnlRole::kCycle && l->row == d.row &&
        std::binary_search(d.interrupter_columns.begin(),
                           d.interrupter_columns.end(), l->column)) {
      c.flip(v);
    }
  }
  return c;
}

ordered_json rationals_json(const std::vector<Rational>& values) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : values) arr.push_back(to_string(r));
  return arr;
}

// generate ---------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  std::optional<int> j, n;
  int ell = 3;
  std::optional<std::uint64_t> shuffle;
};

Graph generate_graph(const GenerateArgs& a) {
  const auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(a.kind + " needs " + flag);
    return *v;
  };
  if (a.kind == "path") return make_path(need(a.n, "--n"));
  if (a.kind == "cycle") return make_cycle(need(a.n, "--n"));
  if (a.kind == "complete") return make_complete(need(a.n, "--n"));
  if (a.kind == "petersen") return make_petersen();
  if (a.kind == "bowtie") return make_bowtie();
  if (a.kind == "prism") return make_prism(need(a.j, "--j"));
  if (a.kind == "hn") return make_hnl(need(a.n, "--n"), a.ell);
  if (a.kind == "gjn") {
    const int j = need(a.j, "--j");
    const int n = need(a.n, "--n");
    return a.shuffle ? make_gjn(j, n, *a.shuffle) : make_gjn(j, n);
  }
  throw UsageError("unknown graph kind '" + a.kind + "'");
}

int cmd_generate(const GenerateArgs& a, const GlobalOptions& opts,
                 std::ostream& out) {
  const Graph g = generate_graph(a);
  emit(opts, serialize_graph(g), out);
  if (!opts.dot_path.empty()) write_text(opts.dot_path, to_dot(g));
  return kExitOk;
}

// run --------------------------------------------------------------------

struct RunArgs {
  GraphSource source;
  std::string w = "1/2";
  std::string seed;
  std::string seed_op;
  std::optional<std::string> density;
  std::uint64_t rng_seed = 0;
  std::string interrupters = "0";
  int row = 2;
  std::string trace_path;
};

Configuration resolve_seed(const RunArgs& a, const Graph& g) {
  const int sources = (a.seed.empty() ? 0 : 1) + (a.seed_op.empty() ? 0 : 1) +
                      (a.density ? 1 : 0);
  if (sources != 1) {
    throw UsageError("give exactly one of --seed, --seed-op, --density");
  }
  Configuration c;
  if (!a.seed.empty()) {
    c = Configuration::from_string(a.seed);
  } else if (a.density) {
    c = random_configuration(g, parse_rational(*a.density), a.rng_seed);
  } else if (a.seed_op == "layered") {
    c = layered_seed(g);
  } else if (a.seed_op == "gjn-c") {
    c = gjn_seed(g, GjnSeedFlavor::kCollaboratorCore);
  } else if (a.seed_op == "gjn-d") {
    c = gjn_seed(g, GjnSeedFlavor::kDefectorCore);
  } else if (a.seed_op == "wave") {
    c = labelled_wave(g, a.row, parse_int_list(a.interrupters),
                      Strategy::kCollaborator);
  } else if (a.seed_op == "base-wave") {
    c = labelled_wave(g, 0, {}, Strategy::kCollaborator);
  } else if (a.seed_op == "all-c") {
    c = Configuration(g.vertex_count(), Strategy::kCollaborator);
  } else if (a.seed_op == "all-d") {
    c = Configuration(g.vertex_count(), Strategy::kDefector);
  } else {
    throw UsageError("unknown seed op '" + a.seed_op + "'");
  }
  if (c.size() != g.vertex_count()) {
    throw UsageError("seed has " + std::to_string(c.size()) +
                     " entries but the graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
  return c;
}

std::string trace_lines(const Graph& g, const TrajectoryReport& report) {
  std::string text;
  for (std::size_t t = 0; t < report.configs.size(); ++t) {
    const Configuration& c = report.configs[t];
    ordered_json changed = ordered_json::array();
    if (t > 0) {
      const Configuration& prev = report.configs[t - 1];
      for (VertexId v = 0; v < c.size(); ++v) {
        if (c.at(v) != prev.at(v)) changed.push_back(v);
      }
    }
    ordered_json line{{"t", t},
                      {"config", c.to_string()},
                      {"powers", rationals_json(power_all(g, c, report.w,
                                                          report.mode))},
                      {"changed", std::move(changed)}};
    text += line.dump() + "\n";
  }
  return text;
}

int cmd_run(const RunArgs& a, const GlobalOptions& opts, std::ostream& out) {
  const ThresholdMode mode = opts.mode();
  const Rational w = parse_win_condition(a.w);
  const LoadedGraph loaded = load_graph(a.source);
  const Graph& g = loaded.graph;
  const Configuration c0 = resolve_seed(a, g);
  const TrajectoryReport report =
      evolve(g, c0, w, mode, default_step_budget(g, opts.budget));

  ordered_json doc{{"semantics", to_string(mode)}, {"w", to_string(w)}};
  if (report.conclusive) {
    doc["transient"] = report.transient;
    doc["period"] = report.period;
    doc["classification"] = to_string(classify_dominance(report));
  } else {
    doc["transient"] = nullptr;
    doc["period"] = nullptr;
    doc["classification"] = "Inconclusive";
  }
  emit(opts, doc.dump() + "\n", out);
  if (!a.trace_path.empty()) write_text(a.trace_path, trace_lines(g, report));
  if (!opts.dot_path.empty()) {
    write_text(opts.dot_path, to_dot(g, report.at(report.transient)));
  }
  return report.conclusive ? kExitOk : kExitInconclusive;
}

// partition --------------------------------------------------------------

int cmd_partition(const GraphSource& src, const GlobalOptions& opts,
                  std::ostream& out) {
  const WinPartition p = win_partition(load_graph(src).graph);
  ordered_json parts = ordered_json::array();
  for (const WinPart& part : p.parts) {
    parts.push_back({{"lo", to_string(part.lo)},
                     {"hi", to_string(part.hi)},
                     {"representative", to_string(part.representative())}});
  }
  ordered_json doc{{"breakpoints", rationals_json(p.breakpoints)},
                   {"parts", std::move(parts)}};
  emit(opts, doc.dump() + "\n", out);
  return kExitOk;
}

// sweep ------------------------------------------------------------------

struct SweepArgs {
  GraphSource source;
  bool all_w = false;
  std::vector<std::string> extra_w;
  unsigned workers = 0;
  std::string csv_path;
};

ordered_json entry_json(const SweepEntry& e) {
  ordered_json histogram = ordered_json::object();
  if (e.stable > 0) histogram["1"] = e.stable;
  for (const auto& [period, count] : e.period_histogram) {
    histogram[std::to_string(period)] = count;
  }
  ordered_json witnesses = ordered_json::array();
  if (e.max_period_witness) {
    witnesses.push_back({{"kind", "max_period"},
                         {"seed", e.max_period_witness->seed},
                         {"value", e.max_period_witness->value}});
  }
  if (e.max_transient_witness) {
    witnesses.push_back({{"kind", "max_transient"},
                         {"seed", e.max_transient_witness->seed},
                         {"value", e.max_transient_witness->value}});
  }
  return ordered_json{{"w", to_string(e.w)},
                      {"seeds", e.seeds},
                      {"stable", e.stable},
                      {"periodic", e.periodic},
                      {"inconclusive", e.inconclusive},
                      {"period_histogram", std::move(histogram)},
                      {"max_transient", e.max_transient},
                      {"witnesses", std::move(witnesses)},
                      {"inconclusive_seeds", e.inconclusive_witnesses}};
}

std::string sweep_csv(const SweepReport& report, std::size_t n) {
  std::string text = "w,seed,transient,period\n";
  for (const SweepEntry& e : report.entries) {
    for (const SeedOutcome& o : e.outcomes) {
      text += to_string(e.w) + "," +
              Configuration::from_bits(n, o.seed).to_string() + ",";
      if (o.conclusive) {
        text += std::to_string(o.transient) + "," + std::to_string(o.period);
      } else {
        text += ",";
      }
      text += "\n";
    }
  }
  return text;
}

int cmd_sweep(const SweepArgs& a, const GlobalOptions& opts,
              std::ostream& out) {
  const ThresholdMode mode = opts.mode();
  LoadedGraph loaded = load_graph(a.source);
  const Graph& g = loaded.graph;

  std::vector<Rational> ws;
  if (a.all_w || a.extra_w.empty()) ws = win_partition(g).representatives();
  for (const std::string& text : a.extra_w) {
    const Rational w = parse_win_condition(text);
    if (std::find(ws.begin(), ws.end(), w) == ws.end()) ws.push_back(w);
  }

  SweepOptions options;
  options.step_budget = default_step_budget(g, opts.budget);
  options.workers =
      a.workers > 0 ? a.workers : std::max(1u, std::thread::hardware_concurrency());
  options.record_seeds = !a.csv_path.empty();
  const SweepReport report = sweep(g, std::move(loaded.id), ws, mode, options);

  ordered_json entries = ordered_json::array();
  bool conclusive = true;
  for (const SweepEntry& e : report.entries) {
    entries.push_back(entry_json(e));
    conclusive = conclusive && e.inconclusive == 0;
  }
  ordered_json doc{{"graph", report.graph_id},
                   {"semantics", to_string(report.mode)},
                   {"entries", std::move(entries)}};
  emit(opts, doc.dump() + "\n", out);
  if (!a.csv_path.empty()) {
    write_text(a.csv_path, sweep_csv(report, g.vertex_count()));
  }
  return conclusive ? kExitOk : kExitInconclusive;
}

// wave-check -------------------------------------------------------------

struct WaveCheckArgs {
  int n = 0;
  std::size_t steps = 64;
  int ell = 3;
};

int cmd_wave_check(const WaveCheckArgs& a, const GlobalOptions& opts,
                   std::ostream& out) {
  const Rule90Equivalence r =
      verify_rule90_equivalence(a.n, a.ell, a.steps, opts.mode());
  ordered_json doc{{"n", r.n},
                   {"steps", r.steps},
                   {"verdict", r.equal ? "equal" : "diverged"},
                   {"divergence", nullptr}};
  if (r.divergence) {
    doc["divergence"] = {
        {"t", r.divergence->t},
        {"process_columns", r.divergence->process_columns
                                ? ordered_json(*r.divergence->process_columns)
                                : ordered_json(nullptr)},
        {"ca_columns", r.divergence->ca_columns}};
  }
  emit(opts, doc.dump() + "\n", out);
  return r.equal ? kExitOk : kExitVerificationFailed;
}

// rule90 -----------------------------------------------------------------

struct Rule90Args {
  std::optional<int> n;
  std::size_t steps = 16;
  std::string seed;
  bool period = false;
};

int cmd_rule90(const Rule90Args& a, const GlobalOptions& opts,
               std::ostream& out) {
  if (a.seed.empty() == !a.n.has_value()) {
    throw UsageError("give exactly one of --n, --seed");
  }
  const CAState seed = a.seed.empty()
                           ? CAState::single_seed(static_cast<std::size_t>(
                                 std::max(*a.n, 0)))
                           : CAState::from_string(a.seed);
  std::string text;
  if (a.period) {
    const OrbitShape shape = rule90_orbit_shape(seed);
    text = ordered_json{{"n", seed.size()},
                        {"transient", shape.transient},
                        {"period", shape.period}}
               .dump() +
           "\n";
  } else {
    const auto states = rule90_evolve(seed, a.steps);
    for (std::size_t t = 0; t < states.size(); ++t) {
      text += ordered_json{{"t", t},
                           {"cells", states[t].to_string()},
                           {"live_count", states[t].live_count()}}
                  .dump() +
              "\n";
    }
  }
  emit(opts, text, out);
  return kExitOk;
}

// shapley ----------------------------------------------------------------

int cmd_shapley(int voters, int quota, const GlobalOptions& opts,
                std::ostream& out) {
  const auto power = shapley_shubik_uniform(voters, quota);
  Rational sum(0);
  for (const auto& p : power) sum += p;
  ordered_json doc{{"voters", voters},
                   {"quota", quota},
                   {"power", rationals_json(power)},
                   {"sum", to_string(sum)}};
  emit(opts, doc.dump() + "\n", out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"w-power-index process simulator", "powerindex"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--semantics", opts.semantics, "strict or inclusive")
      ->check(CLI::IsMember({"strict", "inclusive"}))
      ->capture_default_str();
  app.add_option("--budget", opts.budget, "Step budget cap")
      ->capture_default_str();
  app.add_option("--out", opts.out_path, "Write the main output here");
  app.add_option("--dot", opts.dot_path, "Also write a Graphviz DOT file");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit a graph as JSON");
  generate
      ->add_option("kind", gen.kind,
                   "path, cycle, complete, petersen, bowtie, prism, hn, gjn")
      ->required();
  generate->add_option("--n", gen.n, "Size parameter");
  generate->add_option("--j", gen.j, "Base clique size");
  generate->add_option("--ell", gen.ell, "Pendant clique size (hn)")
      ->capture_default_str();
  generate->add_option("--shuffle", gen.shuffle,
                       "Rewire gjn inter-level edges with this seed");

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Evolve one seed");
  add_graph_source(run_cmd, run.source);
  run_cmd->add_option("--w", run.w, "Win condition as a fraction")
      ->capture_default_str();
  run_cmd->add_option("--seed", run.seed, "Literal seed, e.g. CCDDDD");
  run_cmd->add_option(
      "--seed-op", run.seed_op,
      "layered, gjn-c, gjn-d, wave, base-wave, all-c or all-d");
  run_cmd->add_option("--density", run.density,
                      "Random seed with this collaborator density");
  run_cmd->add_option("--rng-seed", run.rng_seed, "RNG seed for --density")
      ->capture_default_str();
  run_cmd->add_option("--interrupters", run.interrupters,
                      "Comma-separated columns for --seed-op wave")
      ->capture_default_str();
  run_cmd->add_option("--row", run.row, "Interrupter row for --seed-op wave")
      ->capture_default_str();
  run_cmd->add_option("--trace", run.trace_path, "Write a JSON-lines trace");

  GraphSource part_src;
  auto* partition = app.add_subcommand("partition", "Print the win partition");
  add_graph_source(partition, part_src);

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evolve every seed");
  add_graph_source(sweep_cmd, sw.source);
  sweep_cmd->add_flag("--all-w", sw.all_w, "Every partition representative");
  sweep_cmd->add_option("--w", sw.extra_w, "Extra win condition (repeatable)");
  sweep_cmd->add_option("--workers", sw.workers, "Worker threads");
  sweep_cmd->add_option("--csv", sw.csv_path, "Per-seed CSV export");

  WaveCheckArgs wc;
  auto* wave_check =
      app.add_subcommand("wave-check", "Compare ladder waves with Rule 90");
  wave_check->add_option("--n", wc.n, "Ring length")->required();
  wave_check->add_option("--steps", wc.steps)->capture_default_str();
  wave_check->add_option("--ell", wc.ell)->capture_default_str();

  Rule90Args ra;
  auto* rule90 = app.add_subcommand("rule90", "Run Rule 90 on a ring");
  rule90->add_option("--n", ra.n, "Ring length, single live cell at 0");
  rule90->add_option("--seed", ra.seed, "Initial cells, e.g. 0010");
  rule90->add_option("--steps", ra.steps)->capture_default_str();
  rule90->add_flag("--period", ra.period, "Report transient and period only");

  int voters = 0;
  int quota = 0;
  auto* shapley = app.add_subcommand("shapley", "Shapley-Shubik power");
  shapley->add_option("--voters", voters)->required();
  shapley->add_option("--quota", quota)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, opts, out);
    if (*run_cmd) return cmd_run(run, opts, out);
    if (*partition) return cmd_partition(part_src, opts, out);
    if (*sweep_cmd) return cmd_sweep(sw, opts, out);
    if (*wave_check) return cmd_wave_check(wc, opts, out);
    if (*rule90) return cmd_rule90(ra, opts, out);
    if (*shapley) return cmd_shapley(voters, quota, opts, out);
  } catch (const InconclusiveError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace powerindex
