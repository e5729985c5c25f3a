#pragma once

#include <optional>

#include "tsrmb/model.hpp"

namespace tsrmb {

// Candidate values for the unknown optimal second-stage cost: the sorted
// distinct weights of edges between scenario riders and drivers. Guess loops
// iterate over all of them; the true value is always among the candidates.
struct Opt2Guess {
  std::vector<double> candidates;
  std::optional<double> chosen;
};

Opt2Guess opt2_candidates(const MetricInstance& inst);

// Merged stand-in for a pair of scenarios: s1 plus the riders of s2 left
// uncovered by a maximum matching of the <= threshold rider-rider graph.
struct RepresentativeScenario {
  std::vector<int> riders;  // sorted R2 indices, s1 ∪ s2^unmatched
  Matching matched_pairs;   // pairs of (s1 rider, s2 rider) R2 indices
  double threshold = 0.0;   // 2 x the OPT2 guess in force
};

RepresentativeScenario build_representative(const MetricInstance& inst,
                                            const std::vector<int>& s1,
                                            const std::vector<int>& s2, double opt2_guess);

// Baseline: cheapest first-stage matching, scenarios ignored. Its total cost
// can be Omega(m) times the optimum.
FirstStageDecision solve_greedy(const MetricInstance& inst);

// Exact solver for a single scenario s (R2 indices): sweeps the bottleneck
// thresholds, zeroes the scenario-side weights, and runs a min-weight
// max-cardinality matching per threshold, keeping the best evaluated decision.
FirstStageDecision solve_single_scenario(const MetricInstance& inst, const std::vector<int>& s);

// Two explicit scenarios: guess loop over opt2 candidates, representative
// scenario per guess, exact single-scenario solve, best evaluated decision.
// Guarantees total <= OPT1 + 5*OPT2.
FirstStageDecision solve_two_scenarios(const MetricInstance& inst,
                                       double* opt2_guess_out = nullptr);

// p explicit scenarios: pads to a power of two, then log2(p) rounds of
// pairwise merging with thresholds 2*3^(i-1)*guess. Guarantees
// total <= OPT1 + (2*3^(log2 p) - 1)*OPT2.
FirstStageDecision solve_p_scenarios(const MetricInstance& inst,
                                     double* opt2_guess_out = nullptr);

}  // namespace tsrmb
