#pragma once

#include "tsrmb/model.hpp"

namespace tsrmb {

// Anchor driver for the small-surplus clustering: the driver whose k nearest
// second-stage riders have the least maximum distance.
struct CenterSelection {
  int center = -1;               // driver index
  std::vector<int> core_riders;  // its k nearest R2 riders, ascending index
  double core_radius = 0.0;      // max distance from center to the core
};

// The surplus-many farthest riders from the center, nonincreasing distance
// (ties: lower rider index first). Only these can be outliers.
struct OutlierLadder {
  std::vector<int> ordered;
};

// Implicit scenarios, surplus 0: solve the single-scenario problem on one
// size-k scenario (the k lowest-index riders). Total <= OPT1 + 3*OPT2.
FirstStageDecision solve_no_surplus(const MetricInstance& inst);

CenterSelection select_center(const MetricInstance& inst);
OutlierLadder outlier_ladder(const MetricInstance& inst, const CenterSelection& center);

// Implicit scenarios, 0 <= surplus < k: one single-scenario solve per outlier
// configuration, scored by the proxy objective on (core, ladder).
// Total <= 3*OPT1 + 17*OPT2 when k <= sqrt(n/2).
FirstStageDecision solve_small_surplus(const MetricInstance& inst);

// Threshold-based 3-approximation for the p-supplier problem: returns exactly
// p driver indices (drawn from `facilities`) whose client-coverage radius is
// at most 3x the optimal p-supplier radius.
std::vector<int> p_supplier_3approx(const MetricInstance& inst, const std::vector<int>& clients,
                                    const std::vector<int>& facilities, int p);

// Pairwise pruning used by the k = 1 solver: scanning drivers by ascending
// index, a surviving driver deletes every later driver within min_separation
// of it. Survivors are pairwise strictly farther apart than min_separation.
std::vector<int> prune_close_drivers(const MetricInstance& inst, const std::vector<int>& drivers,
                                     double min_separation);

// Implicit scenarios with k = 1 and arbitrary surplus: reserves a pruned
// p-supplier center set for the second stage, matches R1 into the rest, and
// keeps the exactly-evaluated best over all opt2 guesses.
// Total <= OPT1 + 15*OPT2.
FirstStageDecision solve_k1(const MetricInstance& inst, double* opt2_guess_out = nullptr);

}  // namespace tsrmb
