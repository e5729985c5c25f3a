#pragma once

// Shared test helpers: compact instance builders over 1-D/2-D points and a
// seeded random-instance factory used by the guarantee suites.

#include <cmath>
#include <string>
#include <vector>

#include "tsrmb/instances.hpp"
#include "tsrmb/model.hpp"
#include "tsrmb/rng.hpp"

namespace testutil {

// Vertices laid out R1, R2, D from the given 1-D coordinates.
inline tsrmb::MetricInstance line_instance(const std::vector<double>& r1,
                                           const std::vector<double>& r2,
                                           const std::vector<double>& d,
                                           tsrmb::ScenarioSet scenarios) {
  tsrmb::MetricInstance inst;
  inst.n_r1 = static_cast<int>(r1.size());
  for (size_t i = 0; i < r2.size(); ++i) inst.r2_labels.push_back("r2_" + std::to_string(i));
  inst.n_d = static_cast<int>(d.size());
  std::vector<double> xs;
  xs.insert(xs.end(), r1.begin(), r1.end());
  xs.insert(xs.end(), r2.begin(), r2.end());
  xs.insert(xs.end(), d.begin(), d.end());
  inst.dist = tsrmb::DistanceMatrix(static_cast<int>(xs.size()), 0.0);
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      inst.dist.set_sym(static_cast<int>(i), static_cast<int>(j), std::abs(xs[i] - xs[j]));
  inst.scenarios = std::move(scenarios);
  return inst;
}

// Random Euclidean instance with `p` explicit scenarios of size `scen_size`.
inline tsrmb::MetricInstance random_explicit(int m, int n, int nd, int p, int scen_size,
                                             std::uint64_t seed) {
  return tsrmb::gen_random_euclidean(m, n, nd, tsrmb::ScenarioSpec::explicit_random(p, scen_size),
                                     100.0, seed);
}

inline tsrmb::MetricInstance random_implicit(int m, int n, int nd, int k, std::uint64_t seed) {
  return tsrmb::gen_random_euclidean(m, n, nd, tsrmb::ScenarioSpec::implicit(k), 100.0, seed);
}

// Points packed into a few tight clusters spread far apart: adversarial for
// the representative-merging and center/outlier machinery, where the uniform
// family rarely produces interesting matchings.
inline tsrmb::MetricInstance clustered(int m, int n, int nd, tsrmb::ScenarioSet scenarios,
                                       int n_clusters, std::uint64_t seed) {
  tsrmb::Rng rng(seed);
  const int nv = m + n + nd;
  std::vector<double> cx(n_clusters), cy(n_clusters);
  for (int c = 0; c < n_clusters; ++c) {
    cx[c] = 1000.0 * static_cast<double>(rng.below(50));
    cy[c] = 1000.0 * static_cast<double>(rng.below(50));
  }
  tsrmb::MetricInstance inst;
  inst.n_r1 = m;
  for (int i = 0; i < n; ++i) inst.r2_labels.push_back("r2_" + std::to_string(i));
  inst.n_d = nd;
  std::vector<double> x(nv), y(nv);
  for (int v = 0; v < nv; ++v) {
    int c = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_clusters)));
    x[v] = cx[c] + rng.uniform() * 10.0;
    y[v] = cy[c] + rng.uniform() * 10.0;
  }
  inst.dist = tsrmb::DistanceMatrix(nv, 0.0);
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      inst.dist.set_sym(i, j, std::hypot(x[i] - x[j], y[i] - y[j]));
  inst.scenarios = std::move(scenarios);
  return inst;
}

// Pairwise-disjoint scenario sets (requires n >= p * size).
inline std::vector<std::vector<int>> random_scenarios(int n, int p, int size,
                                                      std::uint64_t seed) {
  tsrmb::Rng rng(seed);
  auto pool = rng.sample_without_replacement(n, p * size);
  std::vector<std::vector<int>> sets;
  for (int s = 0; s < p; ++s) {
    std::vector<int> pick(pool.begin() + s * size, pool.begin() + (s + 1) * size);
    std::sort(pick.begin(), pick.end());
    sets.push_back(std::move(pick));
  }
  return sets;
}

// Scenarios sampled independently, so riders may repeat across scenarios.
inline std::vector<std::vector<int>> overlapping_scenarios(int n, int p, int size,
                                                           std::uint64_t seed) {
  tsrmb::Rng rng(seed);
  std::vector<std::vector<int>> sets;
  for (int s = 0; s < p; ++s) {
    auto pick = rng.sample_without_replacement(n, size);
    std::sort(pick.begin(), pick.end());
    sets.push_back(pick);
  }
  return sets;
}

}  // namespace testutil
