#include "tsrmb/variants.hpp"

#include <string>

#include "tsrmb/evaluate.hpp"
#include "tsrmb/solvers_explicit.hpp"

namespace tsrmb {

namespace {

void require_no_surplus(const MetricInstance& inst) {
  int l = surplus(inst);  // throws NonUniformScenarios for mixed sizes
  if (l != 0)
    fail("SurplusNotZero", "surplus is " + std::to_string(l) + ", need exactly 0");
}

}  // namespace

FirstStageDecision solve_tssmb_no_surplus(const MetricInstance& inst,
                                          const ScenarioDistribution& dist) {
  if (!inst.scenarios.is_explicit())
    fail("BadScenario", "TSSMB needs an explicit scenario list");
  check_distribution(inst, dist.probs);
  require_no_surplus(inst);

  bool found = false;
  double best_expected = 0.0;
  FirstStageDecision best;
  for (const auto& s : inst.scenarios.sets) {
    FirstStageDecision cand = solve_single_scenario(inst, s);
    double expected = eval_stochastic(inst, cand, dist.probs);
    if (!found || expected < best_expected) {
      best = cand;
      best_expected = expected;
      found = true;
    }
  }
  return best;
}

FirstStageDecision solve_tsrm_greedy(const MetricInstance& inst) {
  // The cheapest first-stage matching is the same decision whether the cost
  // is summed or averaged.
  return solve_greedy(inst);
}

FirstStageDecision solve_tsrm_no_surplus(const MetricInstance& inst) {
  if (!inst.scenarios.is_explicit())
    fail("BadScenario", "TSRM needs an explicit scenario list");
  require_no_surplus(inst);

  // Cheapest possible second-stage home for the picked scenario: the
  // unrestricted assignment of S into all of D; D2 is its driver side.
  const auto& s = inst.scenarios.sets[0];
  Matching second = min_weight_perfect_matching(rider_driver_weights(inst, s, inst.all_drivers()));
  std::vector<int> d2;
  for (auto [i, j] : second.pairs) d2.push_back(j);

  std::vector<char> taken(inst.n_d, false);
  for (int t : d2) taken[t] = true;
  std::vector<int> rest;
  for (int t = 0; t < inst.n_d; ++t)
    if (!taken[t]) rest.push_back(t);
  if (static_cast<int>(rest.size()) < inst.n_r1)
    fail("InsufficientDrivers", "scenario reservation leaves too few drivers for R1");

  Matching first = min_weight_perfect_matching(r1_driver_weights(inst, rest));
  std::vector<std::pair<int, int>> pairs;
  for (auto [i, j] : first.pairs) pairs.emplace_back(i, rest[j]);
  return decision_from_r1_pairs(inst, pairs);
}

FirstStageDecision solve_tsrm_balanced(const MetricInstance& inst) {
  require_no_surplus(inst);
  FirstStageDecision greedy = solve_tsrm_greedy(inst);
  FirstStageDecision reserved = solve_tsrm_no_surplus(inst);
  double greedy_total = eval_tsrm(inst, greedy).total;
  double reserved_total = eval_tsrm(inst, reserved).total;
  return greedy_total <= reserved_total ? greedy : reserved;
}

double tsrbb_cost1(const MetricInstance& inst, const FirstStageDecision& d1) {
  return bottleneck_matching(r1_driver_weights(inst, d1.drivers)).bottleneck;
}

}  // namespace tsrmb
