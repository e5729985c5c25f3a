#include "tsrmb/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <thread>

#include "tsrmb/evaluate.hpp"
#include "tsrmb/json_io.hpp"
#include "tsrmb/rng.hpp"
#include "tsrmb/solvers_explicit.hpp"

namespace tsrmb {

namespace {

double ratio(double num, double den) {
  if (den == 0.0) return num == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  return num / den;
}

// Total weight of the two matchings a decision induces on the realized
// scenario: the first-stage assignment plus the cheapest second-stage
// matching among those achieving the optimal bottleneck.
double total_matching_weight(const MetricInstance& inst, const FirstStageDecision& d1,
                             const std::vector<int>& realized) {
  double first = min_weight_perfect_matching(r1_driver_weights(inst, d1.drivers)).total_weight;
  const auto avail = inst.drivers_except(d1.drivers);
  if (realized.empty()) return first;
  double b = cost2(inst, avail, realized);
  WeightMatrix w = rider_driver_weights(inst, realized, avail);
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j)
      if (w.allowed(i, j) && w.at(i, j) > b) w.at(i, j) = WeightMatrix::kForbidden;
  return first + min_weight_perfect_matching(w).total_weight;
}

int worker_count(int jobs) {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("TSRM_THREADS")) {
    int cap = std::atoi(env);
    if (cap > 0) n = std::min(n, cap);
  }
  return std::max(1, std::min(n, jobs));
}

}  // namespace

BenchRow bench_one(const MetricInstance& inst, const std::vector<int>& realized,
                   const std::string& label) {
  if (!inst.scenarios.is_explicit() || inst.scenarios.count() != 2)
    fail("BadScenario", "bench needs exactly two prediction scenarios");
  if (realized.empty()) fail("EmptyWindow", "empty realized scenario");

  FirstStageDecision greedy = solve_greedy(inst);
  FirstStageDecision alg = solve_two_scenarios(inst);

  double gr_in = eval_explicit(inst, greedy).total;
  double alg_in = eval_explicit(inst, alg).total;

  const auto avail_gr = inst.drivers_except(greedy.drivers);
  const auto avail_alg = inst.drivers_except(alg.drivers);
  double gr2 = cost2(inst, avail_gr, realized);
  double alg2 = cost2(inst, avail_alg, realized);
  double gr_out = cost1(inst, greedy) + gr2;
  double alg_out = cost1(inst, alg) + alg2;

  // Offline optimum for the realized scenario, via the exact single-scenario
  // solver.
  FirstStageDecision offline = solve_single_scenario(inst, realized);
  double opt_out = cost1(inst, offline) + cost2(inst, inst.drivers_except(offline.drivers), realized);

  BenchRow row;
  row.label = label;
  row.n_d = inst.n_d;
  row.n_r1 = inst.n_r1;
  row.n_sstar = static_cast<int>(realized.size());
  row.greedy_over_opt = ratio(gr_out, opt_out);
  row.alg_over_opt = ratio(alg_out, opt_out);
  row.insample_ratio = ratio(gr_in, alg_in);
  row.bottleneck_ratio = ratio(gr2, alg2);
  row.total_weight_ratio = ratio(total_matching_weight(inst, greedy, realized),
                                 total_matching_weight(inst, alg, realized));
  return row;
}

std::vector<BenchRow> bench_trips(const std::string& csv_path,
                                  const std::vector<std::string>& window_labels,
                                  const WindowSpec& base_window, const BoundingBox& bbox,
                                  std::uint64_t seed, int repeats) {
  if (repeats < 1) fail("BadParameter", "repeats must be >= 1");
  const int nw = static_cast<int>(window_labels.size());
  std::vector<BenchRow> rows(nw);
  std::vector<char> ok(nw, false);
  std::vector<std::string> errors(nw);

  std::atomic<int> next{0};
  auto work = [&]() {
    for (;;) {
      int w = next.fetch_add(1);
      if (w >= nw) return;
      try {
        WindowSpec spec = base_window;
        spec.t0 = parse_civil_utc(window_labels[w]);
        BenchRow acc;
        for (int rep = 0; rep < repeats; ++rep) {
          std::uint64_t rep_seed = Rng::mix(Rng::mix(seed, w), rep);
          IngestResult got = ingest_trips_csv(csv_path, spec, bbox, rep_seed);
          BenchRow one = bench_one(got.instance, got.realized, window_labels[w]);
          if (rep == 0) {
            acc = one;
          } else {
            acc.greedy_over_opt += one.greedy_over_opt;
            acc.alg_over_opt += one.alg_over_opt;
            acc.insample_ratio += one.insample_ratio;
            acc.bottleneck_ratio += one.bottleneck_ratio;
            acc.total_weight_ratio += one.total_weight_ratio;
          }
        }
        acc.greedy_over_opt /= repeats;
        acc.alg_over_opt /= repeats;
        acc.insample_ratio /= repeats;
        acc.bottleneck_ratio /= repeats;
        acc.total_weight_ratio /= repeats;
        rows[w] = acc;
        ok[w] = true;
      } catch (const Error& e) {
        errors[w] = e.name() + (": " + std::string(e.what()));
      }
    }
  };

  std::vector<std::thread> pool;
  int workers = worker_count(nw);
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  std::vector<BenchRow> out;
  for (int w = 0; w < nw; ++w) {
    if (ok[w])
      out.push_back(rows[w]);
    else
      std::fprintf(stderr, "tsrmb: window '%s' skipped: %s\n", window_labels[w].c_str(),
                   errors[w].c_str());
  }
  return out;
}

std::vector<BenchRow> bench_instances(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) fail("IoError", "no .json instances under " + dir);

  std::vector<BenchRow> out;
  for (const auto& f : files) {
    try {
      MetricInstance full = load_instance(f);
      if (!full.scenarios.is_explicit() || full.scenarios.count() < 3)
        fail("BadScenario", "need >= 3 explicit scenarios (last one is the realized S*)");
      MetricInstance inst = full;
      std::vector<int> realized = full.scenarios.sets.back();
      std::vector<std::vector<int>> predictions(full.scenarios.sets.begin(),
                                                full.scenarios.sets.begin() + 2);
      inst.scenarios = ScenarioSet::explicit_sets(predictions);
      out.push_back(bench_one(inst, realized, std::filesystem::path(f).filename().string()));
    } catch (const Error& e) {
      std::fprintf(stderr, "tsrmb: instance '%s' skipped: %s: %s\n", f.c_str(),
                   e.name().c_str(), e.what());
    }
  }
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out =
      "window,drivers,r1,sstar,greedy_over_opt,alg_over_opt,insample_ratio,"
      "bottleneck_ratio,total_weight_ratio\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%d,%d,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.label.c_str(),
                  r.n_d, r.n_r1, r.n_sstar, r.greedy_over_opt, r.alg_over_opt, r.insample_ratio,
                  r.bottleneck_ratio, r.total_weight_ratio);
    out += buf;
  }
  return out;
}

std::string bench_json(const std::vector<BenchRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows)
    arr.push_back({{"window", r.label},
                   {"drivers", r.n_d},
                   {"r1", r.n_r1},
                   {"sstar", r.n_sstar},
                   {"greedy_over_opt", r.greedy_over_opt},
                   {"alg_over_opt", r.alg_over_opt},
                   {"insample_ratio", r.insample_ratio},
                   {"bottleneck_ratio", r.bottleneck_ratio},
                   {"total_weight_ratio", r.total_weight_ratio}});
  return to_canonical_json(arr);
}

}  // namespace tsrmb
