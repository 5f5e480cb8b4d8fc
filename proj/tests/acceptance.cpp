// Acceptance suite: end-to-end checks of the toolkit's contract, one
// PASS/FAIL line per criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "edgedepth/explore.hpp"
#include "edgedepth/verify.hpp"

using namespace edgedepth;

namespace {

constexpr std::uint64_t kSeed = 2026;

struct Outcome {
  bool passed = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
             .count() /
         1000.0;
}

// Labeled brute force, the independent oracle for class counts.
std::size_t brute_force_class_count(int n) {
  std::set<std::string> keys;
  const int bits = n * (n - 1) / 2;
  for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
    Graph g(n);
    int pos = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++pos) {
        if (mask & (1u << pos)) g.add_edge(i, j);
      }
    }
    std::vector<int> dist = bfs_distances(g, 0);
    if (std::find(dist.begin(), dist.end(), -1) != dist.end()) continue;
    keys.insert(canonical_key(g));
  }
  return keys.size();
}

Outcome criterion_square_sharp() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  BoundReport report = bound_report(builtin_example("square-sharp"), 2, /*with_oracle=*/true);
  double elapsed = seconds_since(start);

  std::ostringstream detail;
  detail << "d=" << report.d << " depth(R/I^2)=" << *report.oracle_depth
         << " combined=" << report.combined << " sharp=" << (*report.sharp ? "true" : "false")
         << " [" << elapsed << "s]";
  out.detail = detail.str();
  out.passed = report.d == 3 && *report.oracle_depth == 0 && report.combined == 0 &&
               *report.sharp && elapsed < 10.0;
  return out;
}

Outcome criterion_cube_sharp() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  Graph cube = builtin_example("cube-sharp");
  MonomialIdeal ideal = edge_ideal(cube);

  BoundReport report3 = bound_report(cube, 3, /*with_oracle=*/true);
  auto witness = socle_depth_zero(ideal.power(3));
  int depth1 = depth(ideal).depth;
  int depth2 = depth(ideal.power(2)).depth;
  double elapsed = seconds_since(start);

  std::ostringstream detail;
  detail << "d=" << report3.d << " depth(R/I^3)=" << *report3.oracle_depth
         << " socle_witness=" << (witness ? witness->to_string(cube.names()) : "none")
         << " combined=" << report3.combined << " sharp=" << (*report3.sharp ? "true" : "false")
         << "; depth(R/I)=" << depth1 << " (claimed 2), depth(R/I^2)=" << depth2
         << " (claimed 1) [" << elapsed << "s]";
  out.detail = detail.str();
  out.passed = report3.d == 7 && *report3.oracle_depth == 0 && witness.has_value() &&
               report3.combined == 0 && *report3.sharp && depth1 >= 3 && depth2 >= 2 &&
               elapsed < 600.0;
  return out;
}

Outcome criterion_conformance_sweep() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;

  const std::size_t expected_counts[] = {2, 6, 21, 112};
  for (int n = 3; n <= 6; ++n) {
    std::size_t brute = brute_force_class_count(n);
    std::size_t enumerated = connected_graphs(n).size();
    if (brute != expected_counts[n - 3] || enumerated != brute) {
      out.passed = false;
      out.detail = "class count mismatch at n=" + std::to_string(n);
      return out;
    }
  }

  RunConfig config;
  config.min_n = 3;
  config.max_n = 6;
  config.t_lo = 1;
  config.t_hi = 3;
  config.jobs = 4;
  config.budget_ms = 10 * 60 * 1000;
  std::vector<SweepRecord> records = run_sweep(config);

  int violations = 0, skipped_low_t = 0, skipped = 0;
  for (const SweepRecord& record : records) {
    if (!record.flag.empty()) ++violations;
    if (record.status == "skipped") {
      ++skipped;
      if (record.t <= 2) ++skipped_low_t;
    }
  }
  double elapsed = seconds_since(start);

  std::ostringstream detail;
  detail << records.size() << " records, class counts {2,6,21,112} cross-checked, violations="
         << violations << " skipped=" << skipped << " skipped(t<=2)=" << skipped_low_t << " ["
         << elapsed << "s, 4 workers]";
  out.detail = detail.str();
  out.passed = records.size() == 141 * 3 && violations == 0 && skipped_low_t == 0 &&
               elapsed < 3600.0;
  return out;
}

Outcome criterion_path_sharpness() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::ostringstream detail;
  for (int n = 2; n <= 8; ++n) {
    int d = depth(edge_ideal(path_graph(n))).depth;
    int expected = ceil_div3(n);
    int bound = bound_power(n - 1, 1, 1).value;
    detail << "P" << n << "=" << d << " ";
    if (d != expected || d != bound) {
      out.passed = false;
      detail << "(expected " << expected << ", bound " << bound << ") ";
    }
  }
  detail << "[" << seconds_since(start) << "s]";
  out.detail = detail.str();
  return out;
}

Outcome criterion_lemma_suites() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  VerifyReport leaf = verify_leaf(6, {2, 3});
  VerifyReport edge = verify_edge(6, 200, kSeed);
  VerifyReport hamorey = verify_hamorey(200, kSeed);
  double elapsed = seconds_since(start);

  std::ostringstream detail;
  detail << "leaf " << leaf.cases << "/" << leaf.failures.size() << " fail, edge " << edge.cases
         << "/" << edge.failures.size() << " fail, hamorey " << hamorey.cases << "/"
         << hamorey.failures.size() << " fail [" << elapsed << "s]";
  out.detail = detail.str();
  out.passed = leaf.passed() && edge.passed() && hamorey.passed() && elapsed < 600.0;
  for (const auto* report : {&leaf, &edge, &hamorey}) {
    for (const std::string& f : report->failures) out.detail += "\n      FAIL " + f;
  }
  return out;
}

Outcome criterion_disjoint_unions() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::ostringstream detail;
  for (int p = 2; p <= 4; ++p) {
    Graph g = path_graph(2);
    for (int i = 1; i < p; ++i) g = disjoint_union(g, path_graph(2));
    MonomialIdeal ideal = edge_ideal(g);
    for (int t = 1; t <= 4; ++t) {
      int d = depth(ideal.power(t)).depth;
      detail << "p" << p << "t" << t << "=" << d << " ";
      if (d < p - t || (t <= p && d < 1)) {
        out.passed = false;
        detail << "(violates) ";
      }
    }
  }
  double elapsed = seconds_since(start);
  detail << "[" << elapsed << "s]";
  out.detail = detail.str();
  out.passed = out.passed && elapsed < 300.0;
  return out;
}

Outcome criterion_oracle_crosschecks() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::size_t cases = 0;
  int field_disagreements = 0;

  auto check_instance = [&](const MonomialIdeal& j, const std::string& label) {
    ++cases;
    DepthOptions lattice;
    DepthOptions box;
    box.strategy = BettiStrategy::Box;
    if (!betti_table(j, lattice).same_entries(betti_table(j, box))) {
      out.passed = false;
      out.detail += "\n      strategy mismatch: " + label;
    }
    int d = depth(j, lattice).depth;
    if (socle_depth_zero(j).has_value() != (d == 0)) {
      out.passed = false;
      out.detail += "\n      socle mismatch: " + label;
    }
    DepthOptions rational;
    rational.field = FieldChoice::rationals_field();
    if (depth(j, rational).depth != d) {
      ++field_disagreements;
      out.passed = false;
      out.detail += "\n      gf2 vs rationals: " + label;
    }
  };

  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      MonomialIdeal ideal = edge_ideal(g);
      for (int t = 1; t <= 2; ++t) {
        check_instance(ideal.power(t), canonical_key(g) + " t=" + std::to_string(t));
      }
    }
  }
  Rng rng(kSeed);
  for (int i = 0; i < 100; ++i) {
    MonomialIdeal j = random_monomial_ideal(rng, 4, 3);
    check_instance(j, j.to_string());
  }

  std::ostringstream detail;
  detail << cases << " instances, field disagreements=" << field_disagreements << " ["
         << seconds_since(start) << "s]";
  out.detail = detail.str() + out.detail;
  return out;
}

Outcome criterion_colon_bounds() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::size_t checks = 0;

  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      MonomialIdeal ideal = edge_ideal(g);
      MonomialIdeal squared = ideal.power(2);
      for (int w = 0; w < n; ++w) {
        Monomial wvar = Monomial::variable(n, w);
        int depth1 = depth(ideal.colon(wvar)).depth;
        int depth2 = depth(squared.colon(wvar)).depth;
        for (int u = 0; u < n; ++u) {
          int ell = bfs_distances(g, u)[static_cast<std::size_t>(w)];
          ++checks;
          if (depth1 < bound_colon(ColonKind::Colon1Vertex, ell) ||
              depth2 < bound_colon(ColonKind::Colon2Vertex, ell)) {
            out.passed = false;
            out.detail += "\n      " + canonical_key(g) + " u=" + std::to_string(u + 1) +
                          " w=" + std::to_string(w + 1);
          }
        }
      }
    }
  }

  // Third powers, sampled.
  Rng rng(kSeed);
  for (int i = 0; i < 50; ++i) {
    int n = rng.in_range(3, 6);
    const auto& classes = connected_graphs(n);
    const Graph& g = classes[static_cast<std::size_t>(rng.below(static_cast<int>(classes.size())))];
    int u = rng.below(n);
    int w = rng.below(n);
    int ell = bfs_distances(g, u)[static_cast<std::size_t>(w)];
    if (ell < 0) continue;
    ++checks;
    int depth3 = depth(edge_ideal(g).power(3).colon(Monomial::variable(n, w))).depth;
    if (depth3 < bound_colon(ColonKind::Colon3Vertex, ell)) {
      out.passed = false;
      out.detail += "\n      t=3 " + canonical_key(g) + " u=" + std::to_string(u + 1) +
                    " w=" + std::to_string(w + 1);
    }
  }

  std::ostringstream detail;
  detail << checks << " (root, vertex) checks across n<=6 plus 50 seeded t=3 cases ["
         << seconds_since(start) << "s]";
  out.detail = detail.str() + out.detail;
  return out;
}

Outcome criterion_loop_bound() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::ostringstream detail;
  for (int ell = 3; ell <= 6; ++ell) {
    Graph g = path_graph(ell + 1);
    g.add_loop(ell);  // loop at one end, root at the other
    int d = depth(edge_ideal(g)).depth;
    int bound = bound_loops(ell);
    detail << "ell" << ell << ": depth=" << d << " bound=" << bound << " ";
    if (d < bound) out.passed = false;
  }
  detail << "[" << seconds_since(start) << "s]";
  out.detail = detail.str();
  return out;
}

Outcome criterion_determinism() {
  auto start = std::chrono::steady_clock::now();
  Outcome out;

  RunConfig config;
  config.min_n = 3;
  config.max_n = 5;
  config.t_lo = 1;
  config.t_hi = 2;

  auto render = [](const std::vector<SweepRecord>& records) {
    std::ostringstream s;
    write_jsonl(records, s);
    return strip_runtime(s.str());
  };

  std::string serial_a = render(run_sweep(config));
  std::string serial_b = render(run_sweep(config));
  config.jobs = 4;
  std::string parallel = render(run_sweep(config));

  out.passed = serial_a == serial_b && serial_a == parallel;
  std::ostringstream detail;
  detail << "rerun " << (serial_a == serial_b ? "identical" : "DIFFERS") << ", 1-vs-4 workers "
         << (serial_a == parallel ? "identical" : "DIFFERS") << " [" << seconds_since(start)
         << "s]";
  out.detail = detail.str();
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Outcome()> run;
  };
  const Entry entries[] = {
      {"square-sharp example: depth R/I^2 = 0, bound sharp", criterion_square_sharp},
      {"cube-sharp example: depth R/I^3 = 0 (Betti + socle), t=1,2 reported",
       criterion_cube_sharp},
      {"theorem conformance sweep, n <= 6, t in {1,2,3}", criterion_conformance_sweep},
      {"path sharpness: depth R/I = ceil(n/3) for n = 2..8", criterion_path_sharpness},
      {"identity suites: leaf, edge, colon rewriting", criterion_lemma_suites},
      {"disjoint unions of edges: depth >= p - t, positivity", criterion_disjoint_unions},
      {"oracle cross-checks: lattice/box, socle, gf2/rationals", criterion_oracle_crosschecks},
      {"colon bounds at layers: t = 1, 2 full, t = 3 sampled", criterion_colon_bounds},
      {"end-looped paths: depth >= ceil((ell-1)/3)", criterion_loop_bound},
      {"explore determinism: rerun and worker-count invariance", criterion_determinism},
  };

  int failures = 0;
  int index = 0;
  for (const Entry& entry : entries) {
    ++index;
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception& e) {
      outcome.passed = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.passed) ++failures;
    std::cout << (outcome.passed ? "PASS" : "FAIL") << "  [" << index << "] " << entry.name
              << ": " << outcome.detail << "\n";
    std::cout.flush();
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " (" << failures
            << " failure(s))\n";
  return failures;
}
