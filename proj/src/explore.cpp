#include "edgedepth/explore.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <regex>
#include <thread>

#include "json.hpp"

namespace edgedepth {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json opt_field(const std::optional<int>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace

std::string SweepRecord::to_json() const {
  ordered_json j;
  j["canonical_key"] = canonical_key;
  j["n"] = n;
  j["edge_count"] = report.edge_count;
  j["d"] = report.d;
  j["p"] = report.p;
  j["isolated"] = report.isolated;
  j["component_diameters"] = report.component_diameters;
  j["bipartite"] = report.bipartite;
  j["t"] = t;
  j["components_sum"] = opt_field(report.components_sum);
  j["unified"] = opt_field(report.unified);
  j["p_minus_t"] = opt_field(report.p_minus_t);
  j["positivity"] = opt_field(report.positivity);
  j["bipartite_positivity"] = opt_field(report.bipartite_positivity);
  j["loops_rule"] = opt_field(report.loops_rule);
  j["stanley"] = opt_field(report.stanley);
  j["conjectural"] = report.conjectural;
  j["combined"] = report.combined;
  j["oracle_depth"] = opt_field(report.oracle_depth);
  if (report.sharp) {
    j["sharp"] = *report.sharp;
  } else {
    j["sharp"] = nullptr;
  }
  j["status"] = status;
  j["flag"] = flag;
  j["strategy"] = strategy;
  j["field"] = field;
  j["runtime_ms"] = runtime_ms;
  j["artifact_version"] = kArtifactVersion;
  return j.dump();
}

DepthOptions RunConfig::depth_options() const {
  DepthOptions options;
  options.strategy = strategy;
  options.field = field;
  options.lattice_cap = lattice_cap;
  options.socle_cap = socle_cap;
  return options;
}

std::vector<SweepRecord> run_sweep(const RunConfig& config) {
  if (config.min_n < 1 || config.max_n > kEnumerationCap || config.min_n > config.max_n) {
    throw Error(ErrorKind::Precondition, "sweep vertex range must satisfy 1 <= min <= max <= " +
                                             std::to_string(kEnumerationCap));
  }
  if (config.t_lo < 1 || config.t_lo > config.t_hi) {
    throw Error(ErrorKind::Precondition, "sweep power range must satisfy 1 <= lo <= hi");
  }

  struct Task {
    const Graph* graph;
    std::string key;
    int n;
    int t;
  };
  std::vector<Task> tasks;
  for (int n = config.min_n; n <= config.max_n; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      if (g.edge_count() == 0) continue;  // n = 1
      std::string key = canonical_key(g);
      for (int t = config.t_lo; t <= config.t_hi; ++t) {
        tasks.push_back(Task{&g, key, n, t});
      }
    }
  }

  std::vector<SweepRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    while (true) {
      std::size_t index = next.fetch_add(1);
      if (index >= tasks.size()) break;
      const Task& task = tasks[index];

      SweepRecord record;
      record.canonical_key = task.key;
      record.n = task.n;
      record.t = task.t;
      record.strategy = to_string(config.strategy);
      record.field = config.field.to_string();

      DepthOptions options = config.depth_options();
      if (config.budget_ms > 0) {
        options.deadline =
            std::chrono::steady_clock::now() + std::chrono::milliseconds(config.budget_ms);
      }

      auto started = std::chrono::steady_clock::now();
      try {
        record.report = bound_report(*task.graph, task.t, /*with_oracle=*/true, options);
        if (record.report.oracle_depth && *record.report.oracle_depth < record.report.combined) {
          record.flag = (task.t >= 4 && record.report.conjectural) ? "candidate_counterexample"
                                                                   : "bug";
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        record.status = "skipped";
        record.report = bound_report(*task.graph, task.t, /*with_oracle=*/false);
      }
      record.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
      records[index] = std::move(record);
    }
  };

  int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Tasks were generated in (n, key, t) order already; keep the contract
  // explicit regardless of scheduling.
  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.canonical_key != b.canonical_key) return a.canonical_key < b.canonical_key;
    return a.t < b.t;
  });
  return records;
}

void write_jsonl(const std::vector<SweepRecord>& records, std::ostream& out) {
  for (const SweepRecord& record : records) out << record.to_json() << '\n';
}

std::string strip_runtime(const std::string& jsonl) {
  static const std::regex pattern("\"runtime_ms\":[0-9]+");
  return std::regex_replace(jsonl, pattern, "\"runtime_ms\":0");
}

}  // namespace edgedepth
