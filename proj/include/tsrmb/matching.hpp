#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "tsrmb/common.hpp"

namespace tsrmb {

// Dense bipartite weight matrix (rows = left side, cols = right side).
// Finite entries are nonnegative distances; kForbidden marks a disallowed edge.
// Forbidden edges are never selectable by any matching routine -- they are not
// "very expensive", they are absent.
class WeightMatrix {
public:
  static constexpr double kForbidden = std::numeric_limits<double>::infinity();

  WeightMatrix() = default;
  WeightMatrix(int rows, int cols, double fill = kForbidden)
      : rows_(rows), cols_(cols), w_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& at(int i, int j) { return w_[static_cast<size_t>(i) * cols_ + j]; }
  double at(int i, int j) const { return w_[static_cast<size_t>(i) * cols_ + j]; }

  bool allowed(int i, int j) const { return at(i, j) != kForbidden; }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> w_;
};

// A bipartite matching plus its two weight summaries. No left or right index
// repeats; total_weight is the sum of member edge weights and bottleneck their
// max (0 for the empty matching).
struct Matching {
  std::vector<std::pair<int, int>> pairs;  // (left, right), sorted by left index
  double total_weight = 0.0;
  double bottleneck = 0.0;

  int cardinality() const { return static_cast<int>(pairs.size()); }
};

// Builds a Matching from raw pairs, recomputing both weight summaries from w.
Matching make_matching(const WeightMatrix& w, std::vector<std::pair<int, int>> pairs);

// Minimum-total-weight matching saturating every row (rows <= cols).
// Throws Error("NoPerfectMatching") when some row cannot be saturated.
Matching min_weight_perfect_matching(const WeightMatrix& w);

// Maximum-cardinality matching over allowed edges; weights taken from w.
Matching max_cardinality_matching(const WeightMatrix& w);

// Among all maximum-cardinality matchings, one of minimum total weight.
Matching min_weight_max_cardinality_matching(const WeightMatrix& w);

// True iff a matching saturating all rows exists using only edges of weight
// <= threshold.
bool bottleneck_feasible(const WeightMatrix& w, double threshold);

// Row-saturating matching minimizing the maximum edge weight. The reported
// bottleneck is always one of the entries of w (binary search over the sorted
// distinct weights). Throws Error("NoPerfectMatching") when infeasible.
Matching bottleneck_matching(const WeightMatrix& w);

}  // namespace tsrmb
