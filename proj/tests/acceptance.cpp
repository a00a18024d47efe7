// Acceptance gate for the covering-trail toolkit. Each criterion prints one
// PASS/FAIL line; the process exits nonzero if any criterion fails.
//
// Usage: acceptance <path-to-cli-binary>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "trailcover/trailcover.hpp"

namespace tc = trailcover;
using nlohmann::json;

namespace {

std::string g_cli;
bool g_all_pass = true;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL")
            << " — " << detail << '\n';
  if (!pass) g_all_pass = false;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cmd(const std::string& args) {
  static int counter = 0;
  const std::string out_f = "/tmp/trailcover_accept_" +
                            std::to_string(::getpid()) + "_" +
                            std::to_string(counter++) + ".out";
  const int raw = std::system((g_cli + " " + args + " > " + out_f).c_str());
  std::ifstream in(out_f);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::remove(out_f.c_str());
  return {raw == -1 ? -1 : WEXITSTATUS(raw), buf.str()};
}

bool pipeline_feasible(const tc::Subgraph& h, tc::Mode mode) {
  const auto part = tc::odd_components(h);
  return mode == tc::Mode::closed ? tc::closed_feasible(part)
                                  : tc::open_feasible(h, part);
}

int dsu_root(std::vector<int>& up, int v) {
  while (up[static_cast<std::size_t>(v)] != v) {
    up[static_cast<std::size_t>(v)] =
        up[static_cast<std::size_t>(up[static_cast<std::size_t>(v)])];
    v = up[static_cast<std::size_t>(v)];
  }
  return v;
}

// All connected subgraphs of g: every single vertex, then every edge subset
// whose edge-induced graph is connected.
std::vector<tc::Subgraph> connected_subgraphs(const tc::Graph& g) {
  std::vector<tc::Subgraph> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    out.push_back(tc::subgraph_from(g, {v}, {}));
  const int m = g.edge_count();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> es, vs;
    for (int e = 0; e < m; ++e)
      if (mask >> e & 1u) {
        es.push_back(e);
        const auto [u, v] = g.endpoints(e);
        vs.push_back(u);
        vs.push_back(v);
      }
    std::vector<int> up(static_cast<std::size_t>(g.vertex_count()));
    std::iota(up.begin(), up.end(), 0);
    for (int e : es) {
      const auto [u, v] = g.endpoints(e);
      up[static_cast<std::size_t>(dsu_root(up, u))] = dsu_root(up, v);
    }
    const int root = dsu_root(up, vs[0]);
    bool connected = true;
    for (int v : vs)
      if (dsu_root(up, v) != root) {
        connected = false;
        break;
      }
    if (connected) out.push_back(tc::subgraph_from(g, vs, es));
  }
  return out;
}

void criterion_1() {
  const tc::OracleBudget b;
  long long checks = 0, disagreements = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : tc::connected_graphs(n)) {
      for (const auto& h : connected_subgraphs(g)) {
        for (const auto mode : {tc::Mode::closed, tc::Mode::open}) {
          const auto r = tc::oracle_covering_trail(h, mode, b);
          if (r.status == tc::OracleStatus::budget_exceeded) {
            ++disagreements;
            continue;
          }
          const bool oracle_yes = r.status == tc::OracleStatus::yes;
          if (pipeline_feasible(h, mode) != oracle_yes) ++disagreements;
          ++checks;
        }
      }
    }
  }
  report(1, disagreements == 0,
         std::to_string(checks) +
             " pipeline-vs-oracle checks over all connected subgraphs of all "
             "connected graphs with n <= 6, " +
             std::to_string(disagreements) + " disagreements");
}

void criteria_2_and_3() {
  long long trails = 0, verify_failures = 0;
  long long completions = 0, completion_failures = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    const int n = static_cast<int>(2 + seed % 49);
    const int m =
        n - 1 + static_cast<int>((seed * 7) % (2 * static_cast<std::uint64_t>(n)));
    const auto inst = tc::random_instance(n, m, seed);
    const auto h = tc::instance_subgraph(inst);
    for (const auto mode : {tc::Mode::closed, tc::Mode::open}) {
      const auto t = tc::covering_trail(h, mode);
      if (!t) continue;
      ++trails;
      if (!tc::verify_trail(h, *t, mode).ok) ++verify_failures;

      const auto part = tc::odd_components(h);
      const auto plan = tc::pair_odd_vertices(part, mode);
      const auto c = tc::even_completion(h, plan, mode);
      ++completions;

      bool ok = true;
      for (int e : c.edge_ids)
        if (h.has_edge(e)) ok = false;

      const auto& g = h.host();
      std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
      auto bump = [&](int e) {
        const auto [u, v] = g.endpoints(e);
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
      };
      for (int e : h.edge_ids()) bump(e);
      for (int e : c.edge_ids) bump(e);
      int odd = 0;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[static_cast<std::size_t>(v)] % 2) ++odd;
      if (mode == tc::Mode::closed && odd != 0) ok = false;
      if (mode == tc::Mode::open && odd != 2) ok = false;

      if (!tc::is_connected(tc::completed_subgraph(h, c))) ok = false;
      if (!ok) ++completion_failures;
    }
  }
  report(2, verify_failures == 0,
         std::to_string(trails) + " trails built over 10000 random instances "
                                  "(n <= 50, both modes), " +
             std::to_string(verify_failures) + " verifier rejections");
  report(3, completion_failures == 0,
         std::to_string(completions) +
             " completions checked for parity, disjointness and "
             "connectivity, " +
             std::to_string(completion_failures) + " violations");
}

void criterion_4() {
  const tc::OracleBudget b;
  long long graphs = 0, disagreements = 0;
  for (int n = 3; n <= 7; ++n) {
    for (const auto& g : tc::connected_graphs(n)) {
      ++graphs;
      const auto hc = tc::ham_cycle_bruteforce(g, b);
      const auto hc_red = tc::hc_via_edge_deletion(g, b);
      if (hc.status != hc_red.status) ++disagreements;

      const auto hp = tc::ham_path_bruteforce(g, b);
      const auto hp_red = tc::hp_via_all_pairs(g, b);
      if (hp.status != hp_red.status) ++disagreements;
    }
  }
  report(4, disagreements == 0,
         "cycle and path reductions checked on " + std::to_string(graphs) +
             " connected graphs with 3 <= n <= 7, " +
             std::to_string(disagreements) + " disagreements");
}

void criterion_5() {
  const tc::OracleBudget b;
  long long graphs = 0, bad = 0;
  std::string first_bad;
  for (int n = 2; n <= 8; ++n) {
    for (const auto& g : tc::connected_graphs(n, 3)) {
      ++graphs;
      const auto r = tc::check_hp_spanning_trail_equivalence(g, b);
      if (!tc::report_decided(r) || !tc::report_consistent(r)) {
        ++bad;
        if (first_bad.empty()) {
          char hex[17];
          std::snprintf(hex, sizeof hex, "%016llx",
                        static_cast<unsigned long long>(r.hash));
          first_bad = std::string(hex) + " hp=" +
                      (r.hp.status == tc::OracleStatus::yes ? "1" : "0") +
                      " set=" +
                      (r.spanning_trail.status == tc::OracleStatus::yes ? "1"
                                                                        : "0") +
                      " COUNTEREXAMPLE";
        }
      }
    }
  }
  report(5, bad == 0,
         "Hamiltonian-path vs spanning-open-trail audit over " +
             std::to_string(graphs) + " connected subcubic graphs with n <= 8, " +
             std::to_string(bad) + " inconsistencies" +
             (first_bad.empty() ? "" : "; first: " + first_bad));
}

void criterion_6() {
  const tc::OracleBudget b;
  long long graphs = 0, disagreements = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : tc::connected_graphs(n)) {
      ++graphs;
      const auto h = tc::edgeless_spanning_subgraph(g);
      const auto r = tc::oracle_covering_trail(h, tc::Mode::closed, b);

      // Independent take: some edge subset spans all vertices, connected,
      // with every degree even.
      bool direct = false;
      const int m = g.edge_count();
      for (std::uint32_t mask = 0; mask < (1u << m) && !direct; ++mask) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        std::vector<int> up(static_cast<std::size_t>(n));
        std::iota(up.begin(), up.end(), 0);
        for (int e = 0; e < m; ++e)
          if (mask >> e & 1u) {
            const auto [u, v] = g.endpoints(e);
            ++deg[static_cast<std::size_t>(u)];
            ++deg[static_cast<std::size_t>(v)];
            up[static_cast<std::size_t>(dsu_root(up, u))] = dsu_root(up, v);
          }
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
          if (deg[static_cast<std::size_t>(v)] % 2 ||
              dsu_root(up, v) != dsu_root(up, 0))
            ok = false;
        direct = ok;
      }
      if ((r.status == tc::OracleStatus::yes) != direct) ++disagreements;
    }
  }
  report(6, disagreements == 0,
         "spanning-circuit embedding checked on " + std::to_string(graphs) +
             " connected graphs with n <= 6, " + std::to_string(disagreements) +
             " disagreements");
}

void criterion_7() {
  const auto r =
      run_cmd("bench --sizes 10000 100000 1000000 --trials 5 --seed 1 --json");
  if (r.exit_code != 0) {
    report(7, false, "bench command exited with " + std::to_string(r.exit_code));
    return;
  }
  const auto j = json::parse(r.out, nullptr, false);
  if (j.is_discarded() || !j.contains("slope") || !j["slope"].is_number() ||
      !j.contains("medians_us") || j["medians_us"].size() != 3) {
    report(7, false, "bench report malformed: " + r.out);
    return;
  }
  const double slope = j["slope"].get<double>();
  const long long big = j["medians_us"][2].get<long long>();
  const bool pass = slope <= 1.2 && big <= 5000000;
  std::ostringstream detail;
  detail << "log-log slope " << slope << " (limit 1.2), m=1e6 median " << big
         << " us (limit 5000000)";
  report(7, pass, detail.str());
}

void criterion_8() {
  int failures = 0;
  std::string detail;

  auto expect_same = [&](const std::string& what, const std::string& a,
                         const std::string& b) {
    if (a != b) {
      ++failures;
      if (detail.empty()) detail = what + " differed";
    }
  };

  expect_same("gen subcubic",
              run_cmd("gen --kind subcubic --n 30 --m 40 --seed 123").out,
              run_cmd("gen --kind subcubic --n 30 --m 40 --seed 123").out);
  expect_same("gen instance",
              run_cmd("gen --kind instance --n 12 --m 25 --seed 5").out,
              run_cmd("gen --kind instance --n 12 --m 25 --seed 5").out);

  const std::string dir = "/tmp/trailcover_accept_" + std::to_string(::getpid());
  if (std::system(("mkdir -p " + dir).c_str()) != 0) {
    report(8, false, "could not create scratch directory");
    return;
  }
  {
    std::ofstream g(dir + "/k4.g");
    g << "p 4 6\ne 0 1\ne 0 2\ne 0 3\ne 1 2\ne 1 3\ne 2 3\n";
    std::ofstream h(dir + "/path.h");
    h << "s 0\ns 3\ns 5\n";
  }
  const std::string inst = " --graph " + dir + "/k4.g --sub " + dir + "/path.h";
  expect_same("trail output", run_cmd("trail" + inst + " --mode closed").out,
              run_cmd("trail" + inst + " --mode closed").out);

  auto a = json::parse(run_cmd("decide" + inst + " --mode open --json").out);
  auto b = json::parse(run_cmd("decide" + inst + " --mode open --json").out);
  a.erase("micros");
  b.erase("micros");
  expect_same("decide report", a.dump(), b.dump());

  const auto i1 = tc::random_instance(20, 45, 9);
  const auto i2 = tc::random_instance(20, 45, 9);
  const auto t1 = tc::covering_trail(tc::instance_subgraph(i1), tc::Mode::closed);
  const auto t2 = tc::covering_trail(tc::instance_subgraph(i2), tc::Mode::closed);
  const bool lib_same = t1.has_value() == t2.has_value() &&
                        (!t1 || (t1->start == t2->start && t1->steps == t2->steps));
  if (!lib_same) {
    ++failures;
    if (detail.empty()) detail = "library trail construction differed";
  }

  if (std::system(("rm -rf " + dir).c_str()) != 0 && detail.empty())
    detail = "scratch cleanup failed";
  report(8, failures == 0,
         failures == 0 ? "generated corpora, trails and reports byte-identical "
                         "across repeated runs"
                       : detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }
  g_cli = argv[1];

  criterion_1();
  criteria_2_and_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();

  return g_all_pass ? 0 : 1;
}
