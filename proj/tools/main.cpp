// Command-line front end: evaluate depth bounds, run the exact depth oracle,
// dump Betti tables and colon ideals, machine-check the structural
// identities, and sweep small-graph space for sharpness statistics and
// counterexample candidates.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "edgedepth/explore.hpp"
#include "edgedepth/verify.hpp"

namespace {

using namespace edgedepth;

struct GraphSource {
  std::string path;
  std::string example;
  bool allow_loops = false;

  void attach(CLI::App* cmd) {
    auto* g = cmd->add_option("--graph", path, "edge-list file (u v per line, # comments)");
    auto* e = cmd->add_option("--example", example,
                              "built-in graph: square-sharp, cube-sharp, block-chain:K");
    cmd->add_flag("--allow-loops", allow_loops, "accept 'u u' loop lines in graph files");
    g->excludes(e);
    e->excludes(g);
  }

  Graph load() const {
    if (!example.empty()) return builtin_example(example);
    if (path.empty()) {
      throw Error(ErrorKind::Precondition, "provide --graph PATH or --example ID");
    }
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Precondition, "cannot open graph file '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_edge_list(text.str(), allow_loops);
  }
};

std::string opt_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

void print_bound_report(const Graph& g, const BoundReport& r) {
  std::cout << "graph: n=" << r.n << " edges=" << r.edge_count << " d=" << r.d << " p=" << r.p
            << " isolated=" << r.isolated << " bipartite=" << (r.bipartite ? "yes" : "no");
  if (r.loop_count) std::cout << " loops=" << r.loop_count;
  std::cout << "\n";
  std::cout << "power: t=" << r.t << "\n";
  std::cout << "  components_sum       " << opt_str(r.components_sum) << "\n";
  std::cout << "  unified              " << opt_str(r.unified)
            << (r.t >= 4 ? "  (conjectural rule)" : "") << "\n";
  std::cout << "  p_minus_t            " << opt_str(r.p_minus_t) << "\n";
  std::cout << "  positivity           " << opt_str(r.positivity) << "\n";
  std::cout << "  bipartite_positivity " << opt_str(r.bipartite_positivity) << "\n";
  if (r.loops_rule) std::cout << "  loops_rule           " << *r.loops_rule << "\n";
  std::cout << "  stanley              " << opt_str(r.stanley) << "\n";
  std::cout << "combined: " << r.combined << (r.conjectural ? " (conjectural)" : "") << "\n";
  if (r.oracle_depth) {
    std::cout << "oracle depth: " << *r.oracle_depth << "  sharp: " << (*r.sharp ? "yes" : "no")
              << "\n";
  }

  SweepRecord record;
  record.canonical_key = g.loops().empty() && g.vertex_count() <= kEnumerationCap
                             ? canonical_key(g)
                             : std::string();
  record.n = r.n;
  record.t = r.t;
  record.report = r;
  record.strategy = to_string(BettiStrategy::Lattice);
  record.field = FieldChoice::gf2().to_string();
  std::cout << record.to_json() << "\n";
}

int run_bound(const GraphSource& source, int t, bool with_oracle) {
  Graph g = source.load();
  print_bound_report(g, bound_report(g, t, with_oracle));
  return 0;
}

DepthOptions make_options(const std::string& field, const std::string& strategy,
                          std::int64_t budget_ms, std::size_t lattice_cap,
                          std::size_t socle_cap) {
  DepthOptions options = DepthOptions::with_budget_ms(budget_ms);
  options.field = parse_field(field);
  options.strategy = parse_strategy(strategy);
  if (lattice_cap) options.lattice_cap = lattice_cap;
  if (socle_cap) options.socle_cap = socle_cap;
  return options;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact depth computations and diameter bounds for powers of edge ideals"};
  app.require_subcommand(1);

  std::string field = "gf2";
  std::string strategy = "lattice";
  std::int64_t budget_ms = 0;
  std::size_t lattice_cap = 0, socle_cap = 0;
  int t = 1;

  GraphSource bound_src, depth_src, betti_src, colon_src, exhaust_src;

  auto* bound_cmd = app.add_subcommand("bound", "evaluate every bound formula for a graph");
  bound_src.attach(bound_cmd);
  bound_cmd->add_option("--t", t, "power of the edge ideal")->default_val(1);
  bool bound_oracle = false;
  bound_cmd->add_flag("--oracle", bound_oracle, "also run the exact depth oracle");

  auto* depth_cmd = app.add_subcommand("depth", "exact depth of R/I^t via Betti numbers");
  depth_src.attach(depth_cmd);
  depth_cmd->add_option("--t", t, "power")->default_val(1);
  depth_cmd->add_option("--field", field, "q or gfP")->default_val("gf2");
  depth_cmd->add_option("--strategy", strategy, "lattice or box")->default_val("lattice");
  depth_cmd->add_option("--budget-ms", budget_ms, "per-instance time budget");
  depth_cmd->add_option("--lattice-cap", lattice_cap, "lcm lattice size cap");
  depth_cmd->add_option("--socle-cap", socle_cap, "socle search budget");
  bool with_socle = false;
  depth_cmd->add_flag("--socle", with_socle, "also run the socle depth-zero search");

  auto* betti_cmd = app.add_subcommand("betti", "multigraded Betti table of R/I^t");
  betti_src.attach(betti_cmd);
  betti_cmd->add_option("--t", t, "power")->default_val(1);
  betti_cmd->add_option("--field", field, "q or gfP")->default_val("gf2");
  betti_cmd->add_option("--strategy", strategy, "lattice or box")->default_val("lattice");
  betti_cmd->add_option("--budget-ms", budget_ms, "per-instance time budget");

  std::string colon_monomial;
  auto* colon_cmd = app.add_subcommand("colon", "the colon ideal (I^t : m)");
  colon_src.attach(colon_cmd);
  colon_cmd->add_option("--t", t, "power")->default_val(1);
  colon_cmd->add_option("--monomial", colon_monomial, "monomial in the graph's vertex names")
      ->required();

  std::string lemma;
  int max_n = 5;
  int cases = 200;
  std::uint64_t seed = 1;
  std::vector<int> verify_ts;
  auto* verify_cmd = app.add_subcommand("verify", "machine-check one structural identity suite");
  verify_cmd->add_option("lemma", lemma, "edge | leaf | hamorey | exhaust | order")->required();
  verify_cmd->add_option("--max-n", max_n, "largest vertex count to sweep")->default_val(5);
  verify_cmd->add_option("--t", verify_ts, "powers to check");
  verify_cmd->add_option("--cases", cases, "seeded case count")->default_val(200);
  verify_cmd->add_option("--seed", seed, "RNG seed")->default_val(1);
  exhaust_src.attach(verify_cmd);

  RunConfig config;
  std::string powers = "1..2";
  auto* explore_cmd = app.add_subcommand("explore", "sweep connected graph classes to JSONL");
  explore_cmd->add_option("--min-n", config.min_n, "smallest vertex count")->default_val(3);
  explore_cmd->add_option("--max-n", config.max_n, "largest vertex count")->default_val(5);
  explore_cmd->add_option("--powers", powers, "power range A..B")->default_val("1..2");
  std::string explore_field = "gf2", explore_strategy = "lattice";
  explore_cmd->add_option("--field", explore_field, "q or gfP")->default_val("gf2");
  explore_cmd->add_option("--strategy", explore_strategy, "lattice or box")->default_val("lattice");
  explore_cmd->add_option("--jobs", config.jobs, "worker threads")->default_val(1);
  explore_cmd->add_option("--seed", config.seed, "RNG seed (recorded)")->default_val(0);
  explore_cmd->add_option("--out", config.out_path, "output path (default stdout)");
  explore_cmd->add_option("--budget-ms", config.budget_ms, "per-instance budget")
      ->default_val(60000);
  explore_cmd->add_option("--lattice-cap", config.lattice_cap, "lcm lattice size cap");

  std::string example_id;
  auto* example_cmd = app.add_subcommand("example", "print a built-in graph as an edge list");
  example_cmd->add_option("id", example_id, "square-sharp | cube-sharp | block-chain:K")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (bound_cmd->parsed()) {
      return run_bound(bound_src, t, bound_oracle);
    }

    if (depth_cmd->parsed()) {
      Graph g = depth_src.load();
      DepthOptions options = make_options(field, strategy, budget_ms, lattice_cap, socle_cap);
      MonomialIdeal power = edge_ideal(g).power(t);
      DepthResult result = depth(power, options);
      std::cout << "depth=" << result.depth << " pd=" << result.pd << " n=" << g.vertex_count()
                << " t=" << t << " strategy=" << to_string(result.strategy)
                << " field=" << result.field.to_string()
                << " multidegrees=" << result.multidegrees << " wall_ms=" << result.wall_ms
                << "\n";
      if (with_socle) {
        auto witness = socle_depth_zero(power, options.socle_cap);
        if (witness) {
          std::cout << "socle witness: " << witness->to_string(g.names()) << "\n";
        } else {
          std::cout << "socle witness: none (depth >= 1)\n";
        }
      }
      return 0;
    }

    if (betti_cmd->parsed()) {
      Graph g = betti_src.load();
      DepthOptions options = make_options(field, strategy, budget_ms, lattice_cap, socle_cap);
      BettiStats stats;
      BettiTable table = betti_table(edge_ideal(g).power(t), options, &stats);
      for (const auto& [key, rank] : table.entries) {
        std::cout << "beta i=" << key.first << " deg=" << key.second.to_string(g.names())
                  << " rank=" << rank << "\n";
      }
      std::cout << "pd=" << table.projective_dimension()
                << " multidegrees=" << stats.multidegrees << " wall_ms=" << stats.wall_ms << "\n";
      return 0;
    }

    if (colon_cmd->parsed()) {
      Graph g = colon_src.load();
      Monomial m = parse_monomial(colon_monomial, g.names());
      MonomialIdeal result = edge_ideal(g).power(t).colon(m);
      std::cout << result.to_string(g.names()) << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      VerifyReport report;
      if (lemma == "leaf") {
        report = verify_leaf(max_n, verify_ts.empty() ? std::vector<int>{2, 3} : verify_ts);
      } else if (lemma == "edge") {
        report = verify_edge(max_n, cases, seed);
      } else if (lemma == "hamorey") {
        report = verify_hamorey(cases, seed);
      } else if (lemma == "order") {
        report = verify_order(max_n);
      } else if (lemma == "exhaust") {
        Graph g = exhaust_src.load();
        report = verify_exhaust(g, verify_ts.empty() ? 2 : verify_ts[0]);
      } else {
        throw Error(ErrorKind::UnknownKind, "unknown verify suite '" + lemma + "'");
      }
      std::cout << report.name << ": " << report.cases << " cases, " << report.failures.size()
                << " failures\n";
      for (const std::string& fail : report.failures) {
        std::cout << "  FAIL " << fail << "\n";
      }
      return report.passed() ? 0 : 1;
    }

    if (explore_cmd->parsed()) {
      auto dots = powers.find("..");
      if (dots == std::string::npos) {
        config.t_lo = config.t_hi = std::stoi(powers);
      } else {
        config.t_lo = std::stoi(powers.substr(0, dots));
        config.t_hi = std::stoi(powers.substr(dots + 2));
      }
      config.field = parse_field(explore_field);
      config.strategy = parse_strategy(explore_strategy);
      if (config.lattice_cap == 0) config.lattice_cap = std::size_t(1) << 22;

      std::vector<SweepRecord> records = run_sweep(config);
      if (config.out_path.empty()) {
        write_jsonl(records, std::cout);
      } else {
        std::ofstream out(config.out_path);
        if (!out) {
          throw Error(ErrorKind::Precondition, "cannot open '" + config.out_path + "'");
        }
        write_jsonl(records, out);
      }
      int violations = 0;
      for (const SweepRecord& record : records) {
        if (!record.flag.empty()) ++violations;
      }
      if (violations) {
        std::cerr << violations << " flagged record(s)\n";
        return 1;
      }
      return 0;
    }

    if (example_cmd->parsed()) {
      std::cout << format_edge_list(builtin_example(example_id));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
