#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsrmb/matching.hpp"

namespace tsrmb {

// Full symmetric distance table over V = R1 ∪ R2 ∪ D. Stored dense so that
// validation can detect asymmetric entries; kForbidden (+inf) marks pairs with
// no usable edge (used by the reduction families).
class DistanceMatrix {
public:
  static constexpr double kForbidden = WeightMatrix::kForbidden;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n, double fill = kForbidden)
      : n_(n), a_(static_cast<size_t>(n) * n, fill) {
    for (int i = 0; i < n; ++i) at(i, i) = 0.0;
  }

  int size() const { return n_; }
  double& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  void set_sym(int i, int j, double v) { at(i, j) = v; at(j, i) = v; }
  bool allowed(int i, int j) const { return at(i, j) != kForbidden; }

private:
  int n_ = 0;
  std::vector<double> a_;
};

// Explicit list of scenarios (rider-index sets into R2), or the implicit
// budget-of-uncertainty family "all subsets of R2 of size <= k".
struct ScenarioSet {
  enum class Kind { Explicit, Implicit };

  Kind kind = Kind::Explicit;
  std::vector<std::vector<int>> sets;  // Explicit only, indices into R2
  int k = 0;                           // Implicit only

  static ScenarioSet explicit_sets(std::vector<std::vector<int>> s);
  static ScenarioSet implicit(int k);

  bool is_explicit() const { return kind == Kind::Explicit; }
  int count() const { return is_explicit() ? static_cast<int>(sets.size()) : -1; }
  // Largest number of riders any single scenario can demand.
  int max_size() const;
  // Uniform scenario size (implicit k, or the common explicit size).
  // Throws Error("NonUniformScenarios") for mixed explicit sizes.
  int uniform_size() const;
};

struct MetricInstance {
  int n_r1 = 0;                        // |R1| = m
  std::vector<std::string> r2_labels;  // |R2| = n
  int n_d = 0;                         // |D|
  DistanceMatrix dist;                 // indexed R1 first, then R2, then D
  ScenarioSet scenarios;

  int n_r2() const { return static_cast<int>(r2_labels.size()); }
  int n_vertices() const { return n_r1 + n_r2() + n_d; }
  int r1_vertex(int i) const { return i; }
  int r2_vertex(int j) const { return n_r1 + j; }
  int d_vertex(int t) const { return n_r1 + n_r2() + t; }

  std::vector<int> all_drivers() const;
  std::vector<int> drivers_except(const std::vector<int>& d1) const;
};

// Chosen first-stage driver subset plus its perfect matching onto R1.
// The stored matching is advisory output; cost evaluation recomputes it.
struct FirstStageDecision {
  std::vector<int> drivers;  // sorted driver indices, |drivers| = |R1|
  Matching matching;         // pairs (r1 index, driver index)
};

// Objective decomposition of one evaluated decision.
struct SolveReport {
  double cost1 = 0.0;
  std::vector<double> per_scenario_cost2;  // explicit scenarios, in order
  double worst_cost2 = 0.0;
  double total = 0.0;
  std::string solver_name;
  std::optional<double> opt2_guess;
  std::vector<int> worst_scenario;  // rider indices of the argmax scenario
};

// Weight slices of the instance's distance table.
WeightMatrix r1_driver_weights(const MetricInstance& inst, const std::vector<int>& drivers);
WeightMatrix rider_driver_weights(const MetricInstance& inst, const std::vector<int>& r2_riders,
                                  const std::vector<int>& drivers);

// Average weight of the minimum-weight perfect matching between R1 and
// d1.drivers (recomputed, not trusted from the decision).
double cost1(const MetricInstance& inst, const FirstStageDecision& d1);

// Bottleneck value of the bottleneck matching between scenario riders s and
// the available drivers. Throws Error("InsufficientDrivers") when
// |available| < |s|.
double cost2(const MetricInstance& inst, const std::vector<int>& available,
             const std::vector<int>& s);

// Driver surplus l = |D| - |R1| - k; may be negative. Requires a uniform
// scenario size (throws Error("NonUniformScenarios") otherwise).
int surplus(const MetricInstance& inst);

// All invariant violations, one message each; empty means valid. The triangle
// inequality is checked on triples whose three distances are all finite.
std::vector<std::string> validate(const MetricInstance& inst);

// All-pairs shortest-path completion of a partial distance table.
// Throws Error("DisconnectedVertices") when some pair stays unreachable.
DistanceMatrix metric_closure(const DistanceMatrix& raw);

// Assembles a decision from (r1 index, global driver index) pairs, recomputing
// the matching's weight summaries from the instance distances.
FirstStageDecision decision_from_r1_pairs(const MetricInstance& inst,
                                          std::vector<std::pair<int, int>> r1_driver_pairs);

}  // namespace tsrmb
