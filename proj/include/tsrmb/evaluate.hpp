#pragma once

#include <cstdint>

#include "tsrmb/model.hpp"

namespace tsrmb {

inline constexpr std::int64_t kDefaultEnumLimit = 2'000'000;

// Exhaustively certified optimum split.
struct OptDecomposition {
  double opt1 = 0.0;
  double opt2 = 0.0;
  FirstStageDecision optimal_d1;

  double total() const { return opt1 + opt2; }
};

// Worst case over the explicit scenario list. Requires |D \ D1| >= max
// scenario size.
SolveReport eval_explicit(const MetricInstance& inst, const FirstStageDecision& d1);

// Exact worst case for the implicit model by enumerating all size-k subsets of
// R2 (the worst case occurs at scenarios of size exactly k). Throws
// Error("EnumerationTooLarge") when C(n,k) exceeds enum_limit.
SolveReport eval_implicit_bruteforce(const MetricInstance& inst, const FirstStageDecision& d1,
                                     std::int64_t enum_limit = kDefaultEnumLimit);

// Proxy objective beta = cost1(d1) + max(cost2 on s1, cost2 on s2); a lower
// bound on the exact implicit worst case when s1, s2 are feasible scenarios.
double eval_proxy(const MetricInstance& inst, const FirstStageDecision& d1,
                  const std::vector<int>& s1, const std::vector<int>& s2);

// cost1 + sum_i probs[i] * cost2(scenario i): the stochastic objective.
double eval_stochastic(const MetricInstance& inst, const FirstStageDecision& d1,
                       const std::vector<double>& probs);

// Total-weight objective (both stages sum edge weights; cost1 not averaged).
SolveReport eval_tsrm(const MetricInstance& inst, const FirstStageDecision& d1);

// Exhaustive oracles over every driver subset of size |R1|; the certifiers
// behind every approximation-guarantee test. Deterministic: ties resolve to
// the first subset in lexicographic order.
OptDecomposition brute_force_opt(const MetricInstance& inst,
                                 std::int64_t enum_limit = kDefaultEnumLimit);
OptDecomposition brute_force_opt_tsrm(const MetricInstance& inst,
                                      std::int64_t enum_limit = kDefaultEnumLimit);
OptDecomposition brute_force_opt_stochastic(const MetricInstance& inst,
                                            const std::vector<double>& probs,
                                            std::int64_t enum_limit = kDefaultEnumLimit);

// Expected-value validity checks for a scenario distribution.
void check_distribution(const MetricInstance& inst, const std::vector<double>& probs);

}  // namespace tsrmb
