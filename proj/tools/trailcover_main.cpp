#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "trailcover/trailcover.hpp"

namespace tc = trailcover;
using nlohmann::json;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInput = 2;
constexpr int kExitNo = 3;
constexpr int kExitBudget = 4;

struct Options {
  std::string graph_file;
  std::string sub_file;
  std::string trail_file;
  std::string mode_name = "closed";
  bool as_json = false;
  bool force_oracle = false;
  std::uint64_t seed = 1;
  bool seed_given = false;
  long long budget_ms = 10000;

  std::string kind = "random";
  int gen_n = 0;
  long long gen_m = -1;
  bool allow_loops = false;
  std::string out_graph;
  std::string out_sub;

  std::vector<long long> sizes;
  int trials = 5;

  int max_n = 8;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tc::ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

tc::OracleBudget budget_of(const Options& opt) {
  tc::OracleBudget b;
  b.time_limit_ms = opt.budget_ms;
  return b;
}

long long micros_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::microseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

const char* answer_name(tc::OracleStatus s) {
  switch (s) {
    case tc::OracleStatus::yes: return "yes";
    case tc::OracleStatus::no: return "no";
    default: return "budget";
  }
}

int answer_exit(tc::OracleStatus s) {
  switch (s) {
    case tc::OracleStatus::yes: return kExitYes;
    case tc::OracleStatus::no: return kExitNo;
    default: return kExitBudget;
  }
}

// Every report carries the same ten keys; command-specific extras are added
// on top. Absent values are JSON null.
json base_report(const std::string& command, const Options& opt) {
  json j;
  j["command"] = command;
  j["n"] = nullptr;
  j["m"] = nullptr;
  j["hv"] = nullptr;
  j["he"] = nullptr;
  j["mode"] = nullptr;
  j["answer"] = nullptr;
  j["trail"] = nullptr;
  j["micros"] = nullptr;
  j["seed"] = opt.seed_given ? json(opt.seed) : json(nullptr);
  return j;
}

void fill_instance(json& j, const tc::Graph& g, const tc::Subgraph* h) {
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  if (h != nullptr) {
    j["hv"] = h->vertices().size();
    j["he"] = h->edge_ids().size();
  }
}

json trail_json(const tc::Trail& t) {
  return json{{"start", t.start}, {"steps", t.steps}};
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

struct Decision {
  tc::OracleStatus status;
  std::optional<tc::Trail> trail;
  bool used_oracle;
};

// Connected H goes through the parity pipeline; anything else (or an
// explicit request) goes to the exhaustive search.
Decision run_engine(const tc::Subgraph& h, tc::Mode mode, const Options& opt,
                    bool want_trail) {
  if (!opt.force_oracle && tc::is_connected(h)) {
    if (want_trail) {
      auto t = tc::covering_trail(h, mode);
      if (t) return {tc::OracleStatus::yes, std::move(t), false};
      return {tc::OracleStatus::no, std::nullopt, false};
    }
    const auto part = tc::odd_components(h);
    const bool feasible = mode == tc::Mode::closed
                              ? tc::closed_feasible(part)
                              : tc::open_feasible(h, part);
    return {feasible ? tc::OracleStatus::yes : tc::OracleStatus::no,
            std::nullopt, false};
  }
  auto r = tc::oracle_covering_trail(h, mode, budget_of(opt));
  return {r.status, std::move(r.trail), true};
}

int cmd_decide(const Options& opt, const char* name, bool force_oracle,
               bool print_trail) {
  Options local = opt;
  if (force_oracle) local.force_oracle = true;
  const auto graph_text = read_file(local.graph_file);
  const auto g = tc::parse_graph_text(graph_text);
  const auto h = tc::parse_subgraph_text(read_file(local.sub_file), g);
  const auto mode = tc::parse_mode(local.mode_name);

  const auto t0 = std::chrono::steady_clock::now();
  const auto d = run_engine(h, mode, local, print_trail);
  const auto micros = micros_since(t0);

  if (d.used_oracle && !local.force_oracle && !local.as_json)
    std::cerr << "note: H not connected; exact search used\n";

  if (local.as_json) {
    json j = base_report(name, local);
    fill_instance(j, g, &h);
    j["mode"] = local.mode_name;
    j["answer"] = answer_name(d.status);
    j["micros"] = micros;
    j["engine"] = d.used_oracle ? "oracle" : "pipeline";
    if (d.trail) j["trail"] = trail_json(*d.trail);
    emit(j);
    return answer_exit(d.status);
  }

  if (d.status == tc::OracleStatus::budget_exceeded) {
    std::cerr << "budget exceeded\n";
    return kExitBudget;
  }
  if (print_trail && d.status == tc::OracleStatus::yes)
    std::cout << tc::serialize_trail(*d.trail);
  else
    std::cout << (d.status == tc::OracleStatus::yes ? "YES\n" : "NO\n");
  return answer_exit(d.status);
}

int cmd_verify(const Options& opt) {
  const auto g = tc::parse_graph_text(read_file(opt.graph_file));
  const auto h = tc::parse_subgraph_text(read_file(opt.sub_file), g);
  const auto t = tc::parse_trail_text(read_file(opt.trail_file), g);
  const auto mode = tc::parse_mode(opt.mode_name);

  const auto t0 = std::chrono::steady_clock::now();
  const auto v = tc::verify_trail(h, t, mode);
  const auto micros = micros_since(t0);

  if (opt.as_json) {
    json j = base_report("verify", opt);
    fill_instance(j, g, &h);
    j["mode"] = opt.mode_name;
    j["answer"] = v.ok ? "yes" : "no";
    j["diagnostic"] = v.diagnostic;
    j["micros"] = micros;
    emit(j);
    return v.ok ? kExitYes : kExitNo;
  }
  if (v.ok) {
    std::cout << "ok\n";
    return kExitYes;
  }
  std::cerr << v.diagnostic << '\n';
  return kExitNo;
}

int cmd_gen(const Options& opt) {
  const int n = opt.gen_n;
  long long m = opt.gen_m;
  if (m > 100000000LL) throw std::invalid_argument("edge count too large");
  tc::Graph g(0);
  std::optional<tc::Instance> inst;
  const auto t0 = std::chrono::steady_clock::now();
  if (opt.kind == "random") {
    if (m < 0) m = 2LL * n;
    g = tc::random_multigraph(n, static_cast<int>(m), opt.seed,
                              opt.allow_loops);
  } else if (opt.kind == "subcubic") {
    if (m < 0)
      m = std::min<long long>(3LL * n / 2, 1LL * n * (n - 1) / 2);
    g = tc::random_subcubic(n, static_cast<int>(m), opt.seed);
  } else {
    if (m < 0) m = std::max<long long>(2LL * n, n - 1);
    inst = tc::random_instance(n, static_cast<int>(m), opt.seed);
    g = inst->graph;
  }
  const auto micros = micros_since(t0);

  const auto graph_text = tc::serialize_graph(g);
  std::string sub_text;
  std::optional<tc::Subgraph> h;
  if (inst) {
    h = tc::subgraph_from(g, inst->h_vertices, inst->h_edges);
    sub_text = tc::serialize_subgraph(*h);
  }

  if (opt.as_json) {
    json j = base_report("gen", opt);
    fill_instance(j, g, h ? &*h : nullptr);
    j["answer"] = "yes";
    j["micros"] = micros;
    j["seed"] = opt.seed;
    j["kind"] = opt.kind;
    j["graph"] = graph_text;
    j["subgraph"] = inst ? json(sub_text) : json(nullptr);
    emit(j);
    return kExitYes;
  }

  if (!opt.out_graph.empty()) {
    std::ofstream out(opt.out_graph);
    if (!out) throw tc::ParseError("cannot write file: " + opt.out_graph);
    out << graph_text;
  } else {
    std::cout << graph_text;
  }
  if (inst) {
    if (!opt.out_sub.empty()) {
      std::ofstream out(opt.out_sub);
      if (!out) throw tc::ParseError("cannot write file: " + opt.out_sub);
      out << sub_text;
    } else {
      std::cout << "# subgraph\n" << sub_text;
    }
  }
  return kExitYes;
}

int cmd_bench(const Options& opt) {
  if (opt.trials < 1) {
    std::cerr << "trials must be at least 1\n";
    return kExitInput;
  }
  if (opt.sizes.empty()) {
    std::cerr << "no sizes given\n";
    return kExitInput;
  }
  for (std::size_t i = 0; i < opt.sizes.size(); ++i) {
    if (opt.sizes[i] < 1 || opt.sizes[i] > 100000000LL ||
        (i > 0 && opt.sizes[i] <= opt.sizes[i - 1])) {
      std::cerr << "sizes must be ascending positive edge counts\n";
      return kExitInput;
    }
  }
  const auto mode = tc::parse_mode(opt.mode_name);

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<long long> medians;
  for (std::size_t si = 0; si < opt.sizes.size(); ++si) {
    const long long m = opt.sizes[si];
    const int n = static_cast<int>(std::max<long long>(2, m / 4));
    std::vector<long long> times;
    for (int trial = 0; trial < opt.trials; ++trial) {
      const std::uint64_t s =
          opt.seed + 1000003ull * static_cast<std::uint64_t>(si) +
          static_cast<std::uint64_t>(trial);
      const auto inst = tc::random_instance(n, static_cast<int>(m), s);
      const auto h = tc::instance_subgraph(inst);
      const auto c0 = std::chrono::steady_clock::now();
      const auto t = tc::covering_trail(h, mode);
      const long long us = micros_since(c0);
      (void)t;
      times.push_back(std::max<long long>(us, 1));
    }
    std::sort(times.begin(), times.end());
    const std::size_t k = times.size();
    const long long median = k % 2 ? times[k / 2]
                                   : (times[k / 2 - 1] + times[k / 2]) / 2;
    medians.push_back(std::max<long long>(median, 1));
  }
  const auto micros = micros_since(t0);

  double slope = 0.0;
  const bool have_slope = opt.sizes.size() >= 2;
  if (have_slope) {
    const std::size_t k = opt.sizes.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const double x = std::log(static_cast<double>(opt.sizes[i]));
      const double y = std::log(static_cast<double>(medians[i]));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  }

  if (opt.as_json) {
    json j = base_report("bench", opt);
    j["mode"] = opt.mode_name;
    j["answer"] = "yes";
    j["micros"] = micros;
    j["seed"] = opt.seed;
    j["sizes"] = opt.sizes;
    j["medians_us"] = medians;
    j["trials"] = opt.trials;
    j["slope"] = have_slope ? json(slope) : json(nullptr);
    emit(j);
    return kExitYes;
  }

  for (std::size_t i = 0; i < opt.sizes.size(); ++i)
    std::cout << "m=" << opt.sizes[i]
              << " n=" << std::max<long long>(2, opt.sizes[i] / 4)
              << " trials=" << opt.trials << " median_us=" << medians[i]
              << '\n';
  if (have_slope) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "slope=%.4f", slope);
    std::cout << buf << '\n';
  }
  return kExitYes;
}

std::string audit_line(const tc::EquivalenceReport& r) {
  const int hp = r.hp.status == tc::OracleStatus::yes ? 1 : 0;
  const int set = r.spanning_trail.status == tc::OracleStatus::yes ? 1 : 0;
  return hash_hex(r.hash) + " hp=" + std::to_string(hp) +
         " set=" + std::to_string(set) + " " +
         (tc::report_consistent(r) ? "consistent" : "COUNTEREXAMPLE");
}

int cmd_audit(const Options& opt) {
  const auto budget = budget_of(opt);
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> lines;
  long long audited = 0, bad = 0;
  long long single_n = -1, single_m = -1;
  bool out_of_budget = false;

  if (!opt.graph_file.empty()) {
    const auto g = tc::parse_graph_text(read_file(opt.graph_file));
    single_n = g.vertex_count();
    single_m = g.edge_count();
    std::string notice;
    if (g.vertex_count() < 2)
      notice = "skipped: fewer than two vertices";
    else if (!tc::is_subcubic(g))
      notice = "skipped: not subcubic";
    if (!notice.empty()) {
      if (opt.as_json) {
        json j = base_report("audit", opt);
        fill_instance(j, g, nullptr);
        j["answer"] = "yes";
        j["micros"] = micros_since(t0);
        j["graphs"] = 0;
        j["counterexamples"] = 0;
        j["notice"] = notice;
        emit(j);
      } else {
        std::cout << notice << '\n';
      }
      return kExitYes;
    }
    const auto r = tc::check_hp_spanning_trail_equivalence(g, budget);
    audited = 1;
    if (!tc::report_decided(r)) out_of_budget = true;
    if (tc::report_decided(r) && !tc::report_consistent(r)) bad = 1;
    lines.push_back(audit_line(r));
  } else {
    if (opt.max_n > budget.max_vertices) {
      std::cerr << "max n " << opt.max_n << " exceeds oracle budget "
                << budget.max_vertices << '\n';
      return kExitBudget;
    }
    for (int n = 2; n <= opt.max_n; ++n) {
      for (const auto& g : tc::connected_graphs(n, 3)) {
        const auto r = tc::check_hp_spanning_trail_equivalence(g, budget);
        ++audited;
        if (!tc::report_decided(r)) out_of_budget = true;
        if (tc::report_decided(r) && !tc::report_consistent(r)) ++bad;
        lines.push_back(audit_line(r));
      }
    }
  }
  const auto micros = micros_since(t0);

  if (opt.as_json) {
    json j = base_report("audit", opt);
    if (single_n >= 0) {
      j["n"] = single_n;
      j["m"] = single_m;
    }
    j["answer"] = out_of_budget ? "budget" : (bad ? "no" : "yes");
    j["micros"] = micros;
    j["graphs"] = audited;
    j["counterexamples"] = bad;
    j["max_n"] = opt.graph_file.empty() ? json(opt.max_n) : json(nullptr);
    j["lines"] = lines;
    emit(j);
  } else {
    for (const auto& line : lines) std::cout << line << '\n';
    std::cerr << "audited " << audited << " graphs, " << bad
              << " counterexamples\n";
  }
  if (out_of_budget) return kExitBudget;
  return bad ? kExitCounterexample : kExitYes;
}

int cmd_reduce_hc(const Options& opt) {
  const auto g = tc::parse_graph_text(read_file(opt.graph_file));
  const auto budget = budget_of(opt);
  const auto t0 = std::chrono::steady_clock::now();

  json queries = json::array();
  bool any_yes = false, out_of_budget = false;
  std::vector<std::string> lines;
  for (const auto& q : tc::hc_to_hp_queries(g)) {
    tc::OracleStatus st = tc::OracleStatus::no;
    if (q.s != q.t) st = tc::ham_path_bruteforce(q.graph, q.s, q.t, budget).status;
    if (st == tc::OracleStatus::yes) any_yes = true;
    if (st == tc::OracleStatus::budget_exceeded) out_of_budget = true;
    lines.push_back("query " + std::to_string(q.edge) +
                    " s=" + std::to_string(q.s) +
                    " t=" + std::to_string(q.t) + " " + answer_name(st));
    queries.push_back(json{{"edge", q.edge},
                           {"s", q.s},
                           {"t", q.t},
                           {"answer", answer_name(st)}});
  }
  const auto micros = micros_since(t0);
  const tc::OracleStatus overall =
      any_yes ? tc::OracleStatus::yes
              : (out_of_budget ? tc::OracleStatus::budget_exceeded
                               : tc::OracleStatus::no);

  if (opt.as_json) {
    json j = base_report("reduce-hc", opt);
    fill_instance(j, g, nullptr);
    j["answer"] = answer_name(overall);
    j["micros"] = micros;
    j["queries"] = queries;
    emit(j);
    return answer_exit(overall);
  }
  for (const auto& line : lines) std::cout << line << '\n';
  if (overall == tc::OracleStatus::budget_exceeded) {
    std::cerr << "budget exceeded\n";
    return kExitBudget;
  }
  std::cout << (any_yes ? "YES\n" : "NO\n");
  return answer_exit(overall);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covering-trail toolkit: decide and build closed/open trails "
               "of a graph G covering a subgraph H"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* c, bool needs_sub) {
    c->add_option("--graph", opt.graph_file, "graph file")->required();
    if (needs_sub)
      c->add_option("--sub", opt.sub_file, "subgraph file")->required();
    c->add_option("--mode", opt.mode_name, "trail shape")
        ->check(CLI::IsMember({"closed", "open"}));
    c->add_flag("--json", opt.as_json, "emit a JSON report");
    c->add_option("--budget-ms", opt.budget_ms, "oracle time budget");
  };

  auto* decide = app.add_subcommand("decide", "decide if a covering trail exists");
  add_common(decide, true);
  decide->add_flag("--oracle", opt.force_oracle, "force the exact search");

  auto* trail = app.add_subcommand("trail", "construct a covering trail");
  add_common(trail, true);
  trail->add_flag("--oracle", opt.force_oracle, "force the exact search");

  auto* verify = app.add_subcommand("verify", "check a trail against G, H and mode");
  add_common(verify, true);
  verify->add_option("--trail", opt.trail_file, "trail file")->required();

  auto* oracle = app.add_subcommand("oracle", "decide by exhaustive search");
  add_common(oracle, true);

  auto* gen = app.add_subcommand("gen", "generate graphs and instances");
  gen->add_option("--kind", opt.kind, "random|subcubic|instance")
      ->check(CLI::IsMember({"random", "subcubic", "instance"}));
  gen->add_option("--n", opt.gen_n, "vertex count")->required();
  gen->add_option("--m", opt.gen_m, "edge count");
  gen->add_flag("--loops", opt.allow_loops, "allow self-loops (kind=random)");
  gen->add_option("--out-graph", opt.out_graph, "write graph here");
  gen->add_option("--out-sub", opt.out_sub, "write subgraph here");
  gen->add_flag("--json", opt.as_json, "emit a JSON report");
  auto* gen_seed = gen->add_option("--seed", opt.seed, "generator seed");

  auto* bench = app.add_subcommand("bench", "time the pipeline across sizes");
  bench->add_option("--sizes", opt.sizes, "edge counts, ascending")
      ->required()
      ->expected(-1);
  bench->add_option("--trials", opt.trials, "trials per size");
  bench->add_option("--mode", opt.mode_name, "trail shape")
      ->check(CLI::IsMember({"closed", "open"}));
  bench->add_flag("--json", opt.as_json, "emit a JSON report");
  auto* bench_seed = bench->add_option("--seed", opt.seed, "generator seed");

  auto* audit = app.add_subcommand(
      "audit", "compare Hamiltonian path with spanning open trail on subcubic graphs");
  audit->add_option("--max-n", opt.max_n, "audit all subcubic graphs up to this order");
  audit->add_option("--graph", opt.graph_file, "audit one graph instead");
  audit->add_flag("--json", opt.as_json, "emit a JSON report");
  audit->add_option("--budget-ms", opt.budget_ms, "oracle time budget");

  auto* reduce = app.add_subcommand(
      "reduce-hc", "answer Hamiltonian cycle via per-edge path queries");
  reduce->add_option("--graph", opt.graph_file, "graph file")->required();
  reduce->add_flag("--json", opt.as_json, "emit a JSON report");
  reduce->add_option("--budget-ms", opt.budget_ms, "oracle time budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  opt.seed_given = gen_seed->count() > 0 || bench_seed->count() > 0;
  if (!opt.seed_given) opt.seed = 1;

  try {
    if (decide->parsed()) return cmd_decide(opt, "decide", false, false);
    if (trail->parsed()) return cmd_decide(opt, "trail", false, true);
    if (verify->parsed()) return cmd_verify(opt);
    if (oracle->parsed()) return cmd_decide(opt, "oracle", true, false);
    if (gen->parsed()) return cmd_gen(opt);
    if (bench->parsed()) return cmd_bench(opt);
    if (audit->parsed()) return cmd_audit(opt);
    if (reduce->parsed()) return cmd_reduce_hc(opt);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
