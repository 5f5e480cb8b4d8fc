#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edgedepth/bounds.hpp"

namespace edgedepth {

inline constexpr const char* kArtifactVersion = "0.1.0";

// One sweep instance: a connected-graph isomorphism class at one power.
// Records serialize to JSONL; reruns with the same config reproduce every
// field except runtime_ms.
struct SweepRecord {
  std::string canonical_key;
  int n = 0;
  int t = 1;
  BoundReport report;
  std::string strategy;
  std::string field;
  std::string status = "ok";  // or "skipped"
  std::string flag;           // "", "bug", "candidate_counterexample"
  std::int64_t runtime_ms = 0;

  std::string to_json() const;
};

struct RunConfig {
  int min_n = 3;
  int max_n = 5;
  int t_lo = 1;
  int t_hi = 2;
  FieldChoice field = FieldChoice::gf2();
  BettiStrategy strategy = BettiStrategy::Lattice;
  std::size_t lattice_cap = std::size_t(1) << 22;
  std::size_t socle_cap = std::size_t(1) << 22;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::string out_path;           // empty = stdout
  std::int64_t budget_ms = 60000;  // per instance; 0 = unlimited

  DepthOptions depth_options() const;
};

// Enumerates the classes, evaluates every bound plus the oracle per (graph,
// t), and returns records sorted by (n, canonical key, t). Worker count
// never changes the record set; instances over the per-instance budget come
// back with status "skipped" instead of aborting the sweep.
std::vector<SweepRecord> run_sweep(const RunConfig& config);

void write_jsonl(const std::vector<SweepRecord>& records, std::ostream& out);

// Strips the volatile runtime field, for byte-comparing two runs.
std::string strip_runtime(const std::string& jsonl);

}  // namespace edgedepth
