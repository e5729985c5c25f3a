#include "tsrmb/matching.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tsrmb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One phase of successive shortest augmenting paths: multi-source Dijkstra in
// reduced costs from all free rows, augment to the nearest free column.
// Returns false when no augmenting path exists (max cardinality reached).
// Keeps the invariant w(i,j) - u[i] - v[j] >= 0 on allowed edges, with matched
// edges tight, so the matching after c phases has minimum total weight among
// all cardinality-c matchings.
bool augment_phase(const WeightMatrix& w, std::vector<int>& match_row,
                   std::vector<int>& match_col, std::vector<double>& u,
                   std::vector<double>& v) {
  const int n = w.rows(), m = w.cols();
  std::vector<double> dist(m, kInf);
  std::vector<int> prev_row(m, -1);   // row whose edge reached this column
  std::vector<char> done(m, false);

  for (int i = 0; i < n; ++i) {
    if (match_row[i] != -1) continue;
    for (int j = 0; j < m; ++j) {
      if (!w.allowed(i, j)) continue;
      double rc = w.at(i, j) - u[i] - v[j];
      if (rc < dist[j]) {
        dist[j] = rc;
        prev_row[j] = i;
      }
    }
  }

  int target = -1;
  for (;;) {
    int jbest = -1;
    for (int j = 0; j < m; ++j)
      if (!done[j] && dist[j] < kInf && (jbest == -1 || dist[j] < dist[jbest]))
        jbest = j;
    if (jbest == -1) return false;
    done[jbest] = true;
    int i2 = match_col[jbest];
    if (i2 == -1) {
      target = jbest;
      break;
    }
    for (int j = 0; j < m; ++j) {
      if (done[j] || !w.allowed(i2, j)) continue;
      double nd = dist[jbest] + w.at(i2, j) - u[i2] - v[j];
      if (nd < dist[j]) {
        dist[j] = nd;
        prev_row[j] = i2;
      }
    }
  }

  // Dual update: shift by distances clamped at the target distance.
  const double reach = dist[target];
  for (int j = 0; j < m; ++j) {
    double dj = std::min(dist[j], reach);
    if (!(dj < kInf)) continue;
    v[j] += dj;
    if (match_col[j] != -1) u[match_col[j]] -= dj;
  }

  // Flip the alternating path back from the free column.
  int j = target;
  while (j != -1) {
    int i = prev_row[j];
    int jnext = match_row[i];
    match_row[i] = j;
    match_col[j] = i;
    j = jnext;
  }
  return true;
}

Matching collect(const WeightMatrix& w, const std::vector<int>& match_row) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < w.rows(); ++i)
    if (match_row[i] != -1) pairs.emplace_back(i, match_row[i]);
  return make_matching(w, std::move(pairs));
}

// Kuhn's augmenting-path search restricted to edges of weight <= threshold.
bool try_augment(const WeightMatrix& w, double threshold, int i,
                 std::vector<char>& used, std::vector<int>& match_col) {
  for (int j = 0; j < w.cols(); ++j) {
    if (used[j] || !w.allowed(i, j) || w.at(i, j) > threshold) continue;
    used[j] = true;
    if (match_col[j] == -1 || try_augment(w, threshold, match_col[j], used, match_col)) {
      match_col[j] = i;
      return true;
    }
  }
  return false;
}

// Maximum-cardinality matching using only edges <= threshold; returns match_col.
std::vector<int> kuhn(const WeightMatrix& w, double threshold, int* cardinality) {
  std::vector<int> match_col(w.cols(), -1);
  int matched = 0;
  for (int i = 0; i < w.rows(); ++i) {
    std::vector<char> used(w.cols(), false);
    if (try_augment(w, threshold, i, used, match_col)) ++matched;
  }
  if (cardinality) *cardinality = matched;
  return match_col;
}

}  // namespace

Matching make_matching(const WeightMatrix& w, std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Matching m;
  m.pairs = std::move(pairs);
  for (const auto& [i, j] : m.pairs) {
    m.total_weight += w.at(i, j);
    m.bottleneck = std::max(m.bottleneck, w.at(i, j));
  }
  return m;
}

Matching min_weight_max_cardinality_matching(const WeightMatrix& w) {
  std::vector<int> match_row(w.rows(), -1), match_col(w.cols(), -1);
  std::vector<double> u(w.rows(), 0.0), v(w.cols(), 0.0);
  while (augment_phase(w, match_row, match_col, u, v)) {
  }
  return collect(w, match_row);
}

Matching min_weight_perfect_matching(const WeightMatrix& w) {
  if (w.rows() > w.cols())
    fail("NoPerfectMatching", "more rows than columns (" + std::to_string(w.rows()) +
                                  " > " + std::to_string(w.cols()) + ")");
  Matching m = min_weight_max_cardinality_matching(w);
  if (m.cardinality() < w.rows())
    fail("NoPerfectMatching", "only " + std::to_string(m.cardinality()) + " of " +
                                  std::to_string(w.rows()) + " rows can be matched");
  return m;
}

Matching max_cardinality_matching(const WeightMatrix& w) {
  std::vector<int> match_col = kuhn(w, kInf, nullptr);
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < w.cols(); ++j)
    if (match_col[j] != -1) pairs.emplace_back(match_col[j], j);
  return make_matching(w, std::move(pairs));
}

bool bottleneck_feasible(const WeightMatrix& w, double threshold) {
  if (w.rows() > w.cols()) return false;
  int matched = 0;
  kuhn(w, threshold, &matched);
  return matched == w.rows();
}

Matching bottleneck_matching(const WeightMatrix& w) {
  if (w.rows() == 0) return Matching{};
  std::vector<double> values;
  for (int i = 0; i < w.rows(); ++i)
    for (int j = 0; j < w.cols(); ++j)
      if (w.allowed(i, j)) values.push_back(w.at(i, j));
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  if (values.empty() || !bottleneck_feasible(w, values.back()))
    fail("NoPerfectMatching", "no threshold saturates all rows");

  // Feasibility is monotone in the threshold: binary search for the least
  // feasible distinct weight.
  int lo = 0, hi = static_cast<int>(values.size()) - 1;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (bottleneck_feasible(w, values[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }

  std::vector<int> match_col = kuhn(w, values[lo], nullptr);
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < w.cols(); ++j)
    if (match_col[j] != -1) pairs.emplace_back(match_col[j], j);
  return make_matching(w, std::move(pairs));
}

}  // namespace tsrmb
