#include "tsrmb/solvers_explicit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "tsrmb/evaluate.hpp"

namespace tsrmb {

namespace {

bool is_infeasibility(const Error& e) {
  return e.name() == "InsufficientDrivers" || e.name() == "NoPerfectMatching";
}

// The representative-merge analysis needs pairwise-disjoint scenarios: a
// merged rider must reconnect to a rider outside its own scenario. Duplicated
// whole scenarios are harmless; partial overlap voids the guarantee.
void warn_on_overlap(const MetricInstance& inst) {
  const auto& sets = inst.scenarios.sets;
  for (size_t a = 0; a < sets.size(); ++a)
    for (size_t b = a + 1; b < sets.size(); ++b) {
      if (sets[a] == sets[b]) continue;
      std::set<int> left(sets[a].begin(), sets[a].end());
      for (int r : sets[b])
        if (left.count(r)) {
          std::fprintf(stderr,
                       "tsrmb: warning: scenarios %zu and %zu share rider %d; the "
                       "approximation guarantee assumes disjoint scenarios\n",
                       a, b, r);
          return;
        }
    }
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<int> s(a.begin(), a.end());
  s.insert(b.begin(), b.end());
  return std::vector<int>(s.begin(), s.end());
}

// Left side of BOTTLENECKG(w): R1 rows keep their driver distances, scenario
// rows get weight 0 on edges <= threshold and are forbidden elsewhere.
WeightMatrix bottleneck_graph(const MetricInstance& inst, const std::vector<int>& s,
                              double threshold) {
  const int m = inst.n_r1, q = static_cast<int>(s.size());
  WeightMatrix w(m + q, inst.n_d);
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < inst.n_d; ++t)
      w.at(i, t) = inst.dist.at(inst.r1_vertex(i), inst.d_vertex(t));
  for (int i = 0; i < q; ++i)
    for (int t = 0; t < inst.n_d; ++t) {
      double d = inst.dist.at(inst.r2_vertex(s[i]), inst.d_vertex(t));
      if (d != DistanceMatrix::kForbidden && d <= threshold) w.at(m + i, t) = 0.0;
    }
  return w;
}

}  // namespace

Opt2Guess opt2_candidates(const MetricInstance& inst) {
  if (!inst.scenarios.is_explicit())
    fail("BadScenario", "opt2 candidates need an explicit scenario list");
  std::set<int> riders;
  for (const auto& s : inst.scenarios.sets) riders.insert(s.begin(), s.end());
  std::set<double> values;
  for (int r : riders)
    for (int t = 0; t < inst.n_d; ++t) {
      double d = inst.dist.at(inst.r2_vertex(r), inst.d_vertex(t));
      if (d != DistanceMatrix::kForbidden) values.insert(d);
    }
  Opt2Guess out;
  out.candidates.assign(values.begin(), values.end());
  return out;
}

FirstStageDecision solve_greedy(const MetricInstance& inst) {
  if (inst.n_d < inst.n_r1)
    fail("InsufficientDrivers", "fewer drivers than first-stage riders");
  Matching m = min_weight_perfect_matching(r1_driver_weights(inst, inst.all_drivers()));
  return decision_from_r1_pairs(inst, m.pairs);
}

FirstStageDecision solve_single_scenario(const MetricInstance& inst, const std::vector<int>& s) {
  if (s.empty()) return solve_greedy(inst);
  if (inst.n_d < inst.n_r1 + static_cast<int>(s.size()))
    fail("InsufficientDrivers", "need |D| >= |R1| + |S| for the single-scenario solve");

  std::set<double> values;
  for (int r : s)
    for (int t = 0; t < inst.n_d; ++t) {
      double d = inst.dist.at(inst.r2_vertex(r), inst.d_vertex(t));
      if (d != DistanceMatrix::kForbidden) values.insert(d);
    }
  std::vector<double> thresholds(values.begin(), values.end());
  if (thresholds.empty())
    fail("NoPerfectMatching", "scenario riders have no usable driver edges");

  const int want = inst.n_r1 + static_cast<int>(s.size());
  auto saturates = [&](double w) {
    return max_cardinality_matching(bottleneck_graph(inst, s, w)).cardinality() == want;
  };
  // Feasibility of saturating R1 ∪ S is monotone in the threshold: binary
  // search for the first workable weight, then sweep upward for the argmin.
  int lo = 0, hi = static_cast<int>(thresholds.size()) - 1;
  if (!saturates(thresholds[hi]))
    fail("NoPerfectMatching", "R1 and the scenario cannot be matched simultaneously");
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (saturates(thresholds[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }

  bool found = false;
  double best_total = 0.0;
  FirstStageDecision best;
  for (size_t i = lo; i < thresholds.size(); ++i) {
    Matching m = min_weight_max_cardinality_matching(bottleneck_graph(inst, s, thresholds[i]));
    if (m.cardinality() < want) continue;
    std::vector<std::pair<int, int>> pairs;
    for (auto [row, t] : m.pairs)
      if (row < inst.n_r1) pairs.emplace_back(row, t);
    FirstStageDecision cand = decision_from_r1_pairs(inst, pairs);
    double total = cost1(inst, cand) + cost2(inst, inst.drivers_except(cand.drivers), s);
    if (!found || total < best_total) {
      best = cand;
      best_total = total;
      found = true;
    }
  }
  if (!found) fail("NoPerfectMatching", "no threshold admits a saturating matching");
  return best;
}

RepresentativeScenario build_representative(const MetricInstance& inst,
                                            const std::vector<int>& s1,
                                            const std::vector<int>& s2, double opt2_guess) {
  if (opt2_guess < 0.0) fail("BadParameter", "opt2 guess must be nonnegative");
  RepresentativeScenario rep;
  rep.threshold = 2.0 * opt2_guess;

  WeightMatrix g(static_cast<int>(s1.size()), static_cast<int>(s2.size()));
  for (size_t i = 0; i < s1.size(); ++i)
    for (size_t j = 0; j < s2.size(); ++j) {
      double d = inst.dist.at(inst.r2_vertex(s1[i]), inst.r2_vertex(s2[j]));
      if (d != DistanceMatrix::kForbidden && d <= rep.threshold) g.at(i, j) = d;
    }
  Matching m = max_cardinality_matching(g);

  std::vector<char> matched(s2.size(), false);
  for (auto [i, j] : m.pairs) {
    matched[j] = true;
    rep.matched_pairs.pairs.emplace_back(s1[i], s2[j]);
    rep.matched_pairs.total_weight += g.at(i, j);
    rep.matched_pairs.bottleneck = std::max(rep.matched_pairs.bottleneck, g.at(i, j));
  }
  std::vector<int> unmatched;
  for (size_t j = 0; j < s2.size(); ++j)
    if (!matched[j]) unmatched.push_back(s2[j]);
  rep.riders = sorted_union(s1, unmatched);
  return rep;
}

FirstStageDecision solve_two_scenarios(const MetricInstance& inst, double* opt2_guess_out) {
  if (!inst.scenarios.is_explicit() || inst.scenarios.count() != 2)
    fail("BadScenario", "solve_two_scenarios needs exactly two explicit scenarios");
  if (inst.n_d < inst.n_r1 + inst.scenarios.max_size())
    fail("InsufficientDrivers", "not enough drivers for the largest scenario");
  warn_on_overlap(inst);

  const auto& s1 = inst.scenarios.sets[0];
  const auto& s2 = inst.scenarios.sets[1];
  bool found = false;
  double best_total = 0.0;
  FirstStageDecision best;
  for (double guess : opt2_candidates(inst).candidates) {
    RepresentativeScenario rep = build_representative(inst, s1, s2, guess);
    if (inst.n_d < inst.n_r1 + static_cast<int>(rep.riders.size())) continue;
    FirstStageDecision cand;
    double total;
    try {
      cand = solve_single_scenario(inst, rep.riders);
      total = eval_explicit(inst, cand).total;
    } catch (const Error& e) {
      if (is_infeasibility(e)) continue;
      throw;
    }
    if (!found || total < best_total) {
      best = cand;
      best_total = total;
      found = true;
      if (opt2_guess_out) *opt2_guess_out = guess;
    }
  }
  if (!found) fail("InsufficientDrivers", "no opt2 guess admits a feasible representative solve");
  return best;
}

FirstStageDecision solve_p_scenarios(const MetricInstance& inst, double* opt2_guess_out) {
  if (!inst.scenarios.is_explicit() || inst.scenarios.count() < 1)
    fail("BadScenario", "solve_p_scenarios needs at least one explicit scenario");
  const int p = inst.scenarios.count();
  if (p == 1) return solve_single_scenario(inst, inst.scenarios.sets[0]);
  if (inst.n_d < inst.n_r1 + inst.scenarios.max_size())
    fail("InsufficientDrivers", "not enough drivers for the largest scenario");
  warn_on_overlap(inst);

  // Pad to the next power of two by duplicating the last scenario; duplicates
  // cannot change the worst case.
  int padded = 1;
  while (padded < p) padded *= 2;
  int rounds = 0;
  while ((1 << rounds) < padded) ++rounds;

  bool found = false;
  double best_total = 0.0;
  FirstStageDecision best;
  for (double guess : opt2_candidates(inst).candidates) {
    std::vector<std::vector<int>> cur = inst.scenarios.sets;
    cur.resize(padded, inst.scenarios.sets.back());
    double factor = 1.0;  // 3^(i-1); round i merges at threshold 2*3^(i-1)*guess
    for (int i = 1; i <= rounds; ++i, factor *= 3.0) {
      int half = padded >> i;
      for (int j = 0; j < half; ++j)
        cur[j] = build_representative(inst, cur[j], cur[j + half], factor * guess).riders;
    }
    if (inst.n_d < inst.n_r1 + static_cast<int>(cur[0].size())) continue;
    FirstStageDecision cand;
    double total;
    try {
      cand = solve_single_scenario(inst, cur[0]);
      total = eval_explicit(inst, cand).total;
    } catch (const Error& e) {
      if (is_infeasibility(e)) continue;
      throw;
    }
    if (!found || total < best_total) {
      best = cand;
      best_total = total;
      found = true;
      if (opt2_guess_out) *opt2_guess_out = guess;
    }
  }
  if (!found) fail("InsufficientDrivers", "no opt2 guess admits a feasible representative solve");
  return best;
}

}  // namespace tsrmb
