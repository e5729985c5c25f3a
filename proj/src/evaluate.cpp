#include "tsrmb/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace tsrmb {

namespace {

std::int64_t binomial_capped(int n, int k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

// Calls fn for every size-k subset of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      fn(cur);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      cur[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (k >= 0 && k <= n) rec(0, 0);
}

void require_decision_shape(const MetricInstance& inst, const FirstStageDecision& d1) {
  if (static_cast<int>(d1.drivers.size()) != inst.n_r1)
    fail("BadDecision", "|D1| must equal |R1|");
}

}  // namespace

SolveReport eval_explicit(const MetricInstance& inst, const FirstStageDecision& d1) {
  if (!inst.scenarios.is_explicit())
    fail("BadScenario", "eval_explicit needs an explicit scenario list");
  require_decision_shape(inst, d1);
  const auto avail = inst.drivers_except(d1.drivers);
  if (static_cast<int>(avail.size()) < inst.scenarios.max_size())
    fail("InsufficientDrivers", "not enough drivers left for the largest scenario");

  SolveReport rep;
  rep.cost1 = cost1(inst, d1);
  int worst_idx = -1;
  for (size_t i = 0; i < inst.scenarios.sets.size(); ++i) {
    double c2 = cost2(inst, avail, inst.scenarios.sets[i]);
    rep.per_scenario_cost2.push_back(c2);
    if (worst_idx == -1 || c2 > rep.worst_cost2) {
      rep.worst_cost2 = c2;
      worst_idx = static_cast<int>(i);
    }
  }
  if (worst_idx >= 0) rep.worst_scenario = inst.scenarios.sets[worst_idx];
  rep.total = rep.cost1 + rep.worst_cost2;
  return rep;
}

SolveReport eval_implicit_bruteforce(const MetricInstance& inst, const FirstStageDecision& d1,
                                     std::int64_t enum_limit) {
  if (inst.scenarios.is_explicit())
    fail("BadScenario", "eval_implicit_bruteforce needs an implicit scenario set");
  require_decision_shape(inst, d1);
  const int n = inst.n_r2(), k = inst.scenarios.k;
  if (binomial_capped(n, k, enum_limit) > enum_limit)
    fail("EnumerationTooLarge", "C(" + std::to_string(n) + "," + std::to_string(k) +
                                    ") exceeds the enumeration limit");
  const auto avail = inst.drivers_except(d1.drivers);
  if (static_cast<int>(avail.size()) < k)
    fail("InsufficientDrivers", "not enough drivers left for a size-k scenario");

  SolveReport rep;
  rep.cost1 = cost1(inst, d1);
  bool first = true;
  for_each_subset(n, k, [&](const std::vector<int>& s) {
    double c2 = cost2(inst, avail, s);
    if (first || c2 > rep.worst_cost2) {
      rep.worst_cost2 = c2;
      rep.worst_scenario = s;
      first = false;
    }
  });
  rep.total = rep.cost1 + rep.worst_cost2;
  return rep;
}

double eval_proxy(const MetricInstance& inst, const FirstStageDecision& d1,
                  const std::vector<int>& s1, const std::vector<int>& s2) {
  require_decision_shape(inst, d1);
  const auto avail = inst.drivers_except(d1.drivers);
  if (avail.size() < std::max(s1.size(), s2.size()))
    fail("InsufficientDrivers", "not enough drivers left for a proxy scenario");
  return cost1(inst, d1) + std::max(cost2(inst, avail, s1), cost2(inst, avail, s2));
}

void check_distribution(const MetricInstance& inst, const std::vector<double>& probs) {
  if (!inst.scenarios.is_explicit())
    fail("BadScenario", "scenario probabilities need an explicit scenario list");
  if (probs.size() != inst.scenarios.sets.size())
    fail("BadDistribution", "got " + std::to_string(probs.size()) + " probabilities for " +
                                std::to_string(inst.scenarios.sets.size()) + " scenarios");
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0) fail("BadDistribution", "negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kEps) fail("BadDistribution", "probabilities do not sum to 1");
}

double eval_stochastic(const MetricInstance& inst, const FirstStageDecision& d1,
                       const std::vector<double>& probs) {
  check_distribution(inst, probs);
  require_decision_shape(inst, d1);
  const auto avail = inst.drivers_except(d1.drivers);
  if (static_cast<int>(avail.size()) < inst.scenarios.max_size())
    fail("InsufficientDrivers", "not enough drivers left for the largest scenario");
  double expected = 0.0;
  for (size_t i = 0; i < inst.scenarios.sets.size(); ++i)
    expected += probs[i] * cost2(inst, avail, inst.scenarios.sets[i]);
  return cost1(inst, d1) + expected;
}

SolveReport eval_tsrm(const MetricInstance& inst, const FirstStageDecision& d1) {
  if (!inst.scenarios.is_explicit())
    fail("BadScenario", "eval_tsrm needs an explicit scenario list");
  require_decision_shape(inst, d1);
  const auto avail = inst.drivers_except(d1.drivers);
  if (static_cast<int>(avail.size()) < inst.scenarios.max_size())
    fail("InsufficientDrivers", "not enough drivers left for the largest scenario");

  SolveReport rep;
  rep.cost1 = min_weight_perfect_matching(r1_driver_weights(inst, d1.drivers)).total_weight;
  int worst_idx = -1;
  for (size_t i = 0; i < inst.scenarios.sets.size(); ++i) {
    const auto& s = inst.scenarios.sets[i];
    double c2 = s.empty() ? 0.0
                          : min_weight_perfect_matching(rider_driver_weights(inst, s, avail))
                                .total_weight;
    rep.per_scenario_cost2.push_back(c2);
    if (worst_idx == -1 || c2 > rep.worst_cost2) {
      rep.worst_cost2 = c2;
      worst_idx = static_cast<int>(i);
    }
  }
  if (worst_idx >= 0) rep.worst_scenario = inst.scenarios.sets[worst_idx];
  rep.total = rep.cost1 + rep.worst_cost2;
  return rep;
}

namespace {

// Shared chassis for the exhaustive oracles: enumerate every |R1|-subset of D,
// score it with `objective` (returning {cost1, worst_or_expected_cost2}), skip
// infeasible subsets (signalled by throwing), keep the first minimizer.
OptDecomposition brute_force_core(
    const MetricInstance& inst, std::int64_t subset_budget, std::int64_t enum_limit,
    const std::function<std::pair<double, double>(const FirstStageDecision&)>& objective) {
  if (inst.n_d < inst.n_r1)
    fail("InsufficientDrivers", "fewer drivers than first-stage riders");
  if (binomial_capped(inst.n_d, inst.n_r1, enum_limit) * std::max<std::int64_t>(subset_budget, 1) >
      enum_limit)
    fail("EnumerationTooLarge", "driver-subset enumeration exceeds the limit");

  OptDecomposition best;
  bool found = false;
  double best_total = 0.0;
  for_each_subset(inst.n_d, inst.n_r1, [&](const std::vector<int>& d1_drivers) {
    FirstStageDecision cand;
    cand.drivers = d1_drivers;
    std::pair<double, double> split;
    try {
      Matching m = min_weight_perfect_matching(r1_driver_weights(inst, d1_drivers));
      std::vector<std::pair<int, int>> pairs;
      for (auto [i, j] : m.pairs) pairs.emplace_back(i, d1_drivers[j]);
      cand = decision_from_r1_pairs(inst, pairs);
      split = objective(cand);
    } catch (const Error&) {
      return;  // infeasible first stage for this subset
    }
    double total = split.first + split.second;
    if (!found || total < best_total - 1e-15) {
      best.opt1 = split.first;
      best.opt2 = split.second;
      best.optimal_d1 = cand;
      best_total = total;
      found = true;
    }
  });
  if (!found) fail("NoPerfectMatching", "no feasible first-stage decision exists");
  return best;
}

}  // namespace

OptDecomposition brute_force_opt(const MetricInstance& inst, std::int64_t enum_limit) {
  std::int64_t per_subset =
      inst.scenarios.is_explicit()
          ? static_cast<std::int64_t>(inst.scenarios.sets.size())
          : binomial_capped(inst.n_r2(), inst.scenarios.k, enum_limit);
  return brute_force_core(inst, per_subset, enum_limit, [&](const FirstStageDecision& d1) {
    SolveReport rep = inst.scenarios.is_explicit()
                          ? eval_explicit(inst, d1)
                          : eval_implicit_bruteforce(inst, d1, enum_limit);
    return std::make_pair(rep.cost1, rep.worst_cost2);
  });
}

OptDecomposition brute_force_opt_tsrm(const MetricInstance& inst, std::int64_t enum_limit) {
  std::int64_t per_subset = static_cast<std::int64_t>(
      inst.scenarios.is_explicit() ? inst.scenarios.sets.size() : 1);
  return brute_force_core(inst, per_subset, enum_limit, [&](const FirstStageDecision& d1) {
    SolveReport rep = eval_tsrm(inst, d1);
    return std::make_pair(rep.cost1, rep.worst_cost2);
  });
}

OptDecomposition brute_force_opt_stochastic(const MetricInstance& inst,
                                            const std::vector<double>& probs,
                                            std::int64_t enum_limit) {
  check_distribution(inst, probs);
  std::int64_t per_subset = static_cast<std::int64_t>(inst.scenarios.sets.size());
  return brute_force_core(inst, per_subset, enum_limit, [&](const FirstStageDecision& d1) {
    double c1 = cost1(inst, d1);
    return std::make_pair(c1, eval_stochastic(inst, d1, probs) - c1);
  });
}

}  // namespace tsrmb
