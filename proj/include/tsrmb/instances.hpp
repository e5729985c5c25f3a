#pragma once

#include <array>
#include <cstdint>

#include "tsrmb/model.hpp"

namespace tsrmb {

// How gen_random_euclidean should populate the scenario set.
struct ScenarioSpec {
  enum class Kind { Explicit, Implicit };
  Kind kind = Kind::Explicit;
  int count = 1;  // explicit: number of scenarios
  int size = 1;   // explicit: riders per scenario
  int k = 1;      // implicit: scenario size bound

  static ScenarioSpec explicit_random(int count, int size) {
    return ScenarioSpec{Kind::Explicit, count, size, 0};
  }
  static ScenarioSpec implicit(int k) { return ScenarioSpec{Kind::Implicit, 0, 0, k}; }
};

// Uniform points in a box_size x box_size square, Euclidean distances,
// explicit scenarios sampled from R2 without replacement. Deterministic per
// seed.
MetricInstance gen_random_euclidean(int n_r1, int n_r2, int n_d, const ScenarioSpec& spec,
                                    double box_size, std::uint64_t seed);

// The line instance that defeats the greedy baseline: m riders and m+1
// drivers alternating at distances 1 and 1-epsilon, one second-stage rider at
// the right endpoint. Greedy totals (2-eps)(m+1); the optimum is 2.
MetricInstance gen_line_counterexample(int m, double epsilon);

// Surplus-one instance (implicit, k = 1, two second-stage riders) on which
// solving a single scenario and evaluating on the other costs Omega(m) while
// the optimum stays constant.
MetricInstance gen_surplus_counterexample(int m);

// 3-dimensional-matching reduction: scenarios U (and V, and W when
// n_scenarios = 3), drivers = triples, first-stage riders = surplus copies of
// W elements. The exhaustive optimum is 2 iff a perfect 3-DM exists (4
// otherwise in the 3-scenario form).
MetricInstance gen_from_3dm(int n, const std::vector<std::array<int, 3>>& triples,
                            int n_scenarios);

// Set-cover reduction: drivers = sets, implicit singleton scenarios over the
// universe. The exhaustive optimum is 2 iff a cover of size <= p_cover exists,
// else 4.
MetricInstance gen_from_set_cover(int universe_n, const std::vector<std::vector<int>>& sets,
                                  int p_cover);

// 2-partition reduction (TSRM flavor, forbidden edges kept forbidden). The
// exhaustive TSRM optimum equals (3*P*|I| + sum s_j)/2, with P = sum s_j, iff
// a balanced equal-sum partition exists.
MetricInstance gen_from_2partition(const std::vector<long long>& s_values);

}  // namespace tsrmb
