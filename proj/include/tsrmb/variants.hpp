#pragma once

#include "tsrmb/model.hpp"

namespace tsrmb {

// Probabilities aligned with the explicit scenario list; nonnegative, sum 1.
struct ScenarioDistribution {
  std::vector<double> probs;
};

// Stochastic variant, no surplus: one single-scenario solve per scenario,
// return the candidate with the least expected total.
// Expected total <= OPT1 + 3*OPT2.
FirstStageDecision solve_tssmb_no_surplus(const MetricInstance& inst,
                                          const ScenarioDistribution& dist);

// Total-weight variant, greedy baseline (scenarios ignored).
// eval_tsrm total <= 3*OPT1 + OPT2.
FirstStageDecision solve_tsrm_greedy(const MetricInstance& inst);

// Total-weight variant, no surplus: give the first scenario its cheapest
// driver subset, then match R1 into the rest.
// eval_tsrm total <= OPT1 + 5*OPT2.
FirstStageDecision solve_tsrm_no_surplus(const MetricInstance& inst);

// The better of the two TSRM candidates above; a 7/3-approximation.
FirstStageDecision solve_tsrm_balanced(const MetricInstance& inst);

// Bottleneck (not average) of the optimal first-stage matching: the drop-in
// first-stage cost for TSRBB evaluation.
double tsrbb_cost1(const MetricInstance& inst, const FirstStageDecision& d1);

}  // namespace tsrmb
