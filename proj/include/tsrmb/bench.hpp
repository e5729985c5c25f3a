#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsrmb/trips.hpp"

namespace tsrmb {

// One benchmark table row (averaged over driver re-samples). Ratio columns
// mirror the out-of-sample / in-sample comparison tables.
struct BenchRow {
  std::string label;
  int n_d = 0;
  int n_r1 = 0;
  int n_sstar = 0;
  double greedy_over_opt = 0.0;    // Gr(S*) / OPT(S*)
  double alg_over_opt = 0.0;       // Alg(S*) / OPT(S*)
  double insample_ratio = 0.0;     // Gr(S1,S2) / Alg(S1,S2)
  double bottleneck_ratio = 0.0;   // Gr_2(S*) / Alg_2(S*)
  double total_weight_ratio = 0.0; // total matching weight, greedy over alg, on S*
};

// Single-sample evaluation of one ingested window (no averaging).
BenchRow bench_one(const MetricInstance& inst, const std::vector<int>& realized,
                   const std::string& label);

// Trip-log mode: one row per window, each averaged over `repeats` seeded
// driver samples, processed by a worker pool capped by TSRM_THREADS.
// Windows that fail to ingest are reported on stderr and skipped.
std::vector<BenchRow> bench_trips(const std::string& csv_path,
                                  const std::vector<std::string>& window_labels,
                                  const WindowSpec& base_window, const BoundingBox& bbox,
                                  std::uint64_t seed, int repeats);

// Instance-directory mode: every *.json with >= 3 explicit scenarios; the
// first two are the prediction scenarios, the last is the realized one.
std::vector<BenchRow> bench_instances(const std::string& dir);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows);

}  // namespace tsrmb
