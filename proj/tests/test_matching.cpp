#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "brute.hpp"
#include "tsrmb/matching.hpp"
#include "tsrmb/rng.hpp"

using namespace tsrmb;

namespace {

WeightMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  WeightMatrix w(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      w.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return w;
}

WeightMatrix random_matrix(Rng& rng, int rows, int cols, double forbidden_frac) {
  WeightMatrix w(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rng.uniform() >= forbidden_frac) w.at(i, j) = rng.uniform() * 10.0;
  return w;
}

void check_no_repeats(const Matching& m) {
  std::set<int> left, right;
  for (auto [i, j] : m.pairs) {
    CHECK(left.insert(i).second);
    CHECK(right.insert(j).second);
  }
}

}  // namespace

TEST_CASE("min weight perfect matching: pinned examples") {
  auto m1 = min_weight_perfect_matching(from_rows({{5.0}}));
  CHECK(m1.pairs == std::vector<std::pair<int, int>>{{0, 0}});
  CHECK(m1.total_weight == doctest::Approx(5.0));

  auto m2 = min_weight_perfect_matching(from_rows({{1, 2}, {2, 1}}));
  CHECK(m2.total_weight == doctest::Approx(2.0));
  CHECK(m2.bottleneck == doctest::Approx(1.0));
}

TEST_CASE("min weight perfect matching equals permutation brute force on random 6x6") {
  Rng rng(11);
  for (int it = 0; it < 60; ++it) {
    WeightMatrix w = random_matrix(rng, 6, 6, 0.0);
    auto st = brute::enumerate_matchings(w);
    auto m = min_weight_perfect_matching(w);
    CHECK(m.cardinality() == 6);
    CHECK(m.total_weight == doctest::Approx(st.perfect_min_weight).epsilon(1e-9));
    check_no_repeats(m);
  }
}

TEST_CASE("min weight perfect matching reports unsaturable rows") {
  WeightMatrix w(2, 2);  // all forbidden
  w.at(0, 0) = 1.0;
  CHECK_THROWS_WITH_AS(min_weight_perfect_matching(w), doctest::Contains("rows"), Error);
  try {
    min_weight_perfect_matching(w);
  } catch (const Error& e) {
    CHECK(e.name() == "NoPerfectMatching");
  }
}

TEST_CASE("max cardinality matching: pinned examples") {
  CHECK(max_cardinality_matching(WeightMatrix(3, 3)).cardinality() == 0);
  CHECK(max_cardinality_matching(from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})).cardinality() == 3);
}

TEST_CASE("max cardinality matching equals brute force on random sparse 8x8") {
  Rng rng(12);
  for (int it = 0; it < 40; ++it) {
    WeightMatrix w = random_matrix(rng, 8, 8, 0.7);
    auto st = brute::enumerate_matchings(w);
    auto m = max_cardinality_matching(w);
    CHECK(m.cardinality() == st.max_cardinality);
    check_no_repeats(m);
  }
}

TEST_CASE("min weight max cardinality matching: pinned examples") {
  auto m = min_weight_max_cardinality_matching(from_rows({{3, 1}}));
  CHECK(m.cardinality() == 1);
  CHECK(m.total_weight == doctest::Approx(1.0));
  CHECK(m.pairs[0] == std::pair<int, int>{0, 1});

  auto empty = min_weight_max_cardinality_matching(WeightMatrix(3, 4));
  CHECK(empty.cardinality() == 0);
  CHECK(empty.total_weight == 0.0);
}

TEST_CASE("min weight max cardinality matching equals brute force on random 6x6, 50% forbidden") {
  Rng rng(13);
  for (int it = 0; it < 60; ++it) {
    WeightMatrix w = random_matrix(rng, 6, 6, 0.5);
    auto st = brute::enumerate_matchings(w);
    auto m = min_weight_max_cardinality_matching(w);
    CHECK(m.cardinality() == st.max_cardinality);
    if (st.max_cardinality > 0)
      CHECK(m.total_weight == doctest::Approx(st.min_weight_at_max_card).epsilon(1e-9));
    // Same graph, same cardinality as the pure max-cardinality routine.
    CHECK(m.cardinality() == max_cardinality_matching(w).cardinality());
  }
}

TEST_CASE("bottleneck feasibility: pinned examples") {
  auto w1 = from_rows({{3, 5}});
  CHECK(bottleneck_feasible(w1, 3.0));
  CHECK_FALSE(bottleneck_feasible(w1, 2.9));
  CHECK(bottleneck_feasible(from_rows({{1, 9}, {9, 1}}), 1.0));
}

TEST_CASE("bottleneck feasibility agrees with brute force and is monotone on random 5x7") {
  Rng rng(14);
  for (int it = 0; it < 25; ++it) {
    WeightMatrix w = random_matrix(rng, 5, 7, 0.3);
    std::vector<double> values;
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 7; ++j)
        if (w.allowed(i, j)) values.push_back(w.at(i, j));
    std::sort(values.begin(), values.end());
    bool prev = false;
    for (double t : values) {
      bool got = bottleneck_feasible(w, t);
      CHECK(got == brute::feasible_at(w, t));
      CHECK((!prev || got));  // once feasible, stays feasible
      prev = got;
    }
  }
}

TEST_CASE("bottleneck matching: pinned examples") {
  CHECK(bottleneck_matching(from_rows({{3, 5}})).bottleneck == doctest::Approx(3.0));
  CHECK(bottleneck_matching(from_rows({{1, 9}, {9, 1}})).bottleneck == doctest::Approx(1.0));
}

TEST_CASE("bottleneck matching equals brute force on random 5x6 and returns an input weight") {
  Rng rng(15);
  for (int it = 0; it < 50; ++it) {
    WeightMatrix w = random_matrix(rng, 5, 6, 0.2);
    auto st = brute::enumerate_matchings(w);
    if (st.perfect_min_bottleneck == brute::kInf) {
      CHECK_THROWS_AS(bottleneck_matching(w), Error);
      continue;
    }
    auto m = bottleneck_matching(w);
    CHECK(m.cardinality() == 5);
    CHECK(m.bottleneck == doctest::Approx(st.perfect_min_bottleneck).epsilon(1e-9));
    bool is_entry = false;
    for (int i = 0; i < 5 && !is_entry; ++i)
      for (int j = 0; j < 6 && !is_entry; ++j)
        if (w.allowed(i, j) && w.at(i, j) == m.bottleneck) is_entry = true;
    CHECK(is_entry);
  }
}

TEST_CASE("min weight max cardinality handles tie-heavy and zero-weight matrices") {
  // The single-scenario solver feeds matrices whose scenario rows are all
  // zeros; exercise that regime against brute force.
  Rng rng(17);
  for (int it = 0; it < 40; ++it) {
    WeightMatrix w(5, 6);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 6; ++j) {
        double roll = rng.uniform();
        if (roll < 0.3)
          w.at(i, j) = 0.0;
        else if (roll < 0.8)
          w.at(i, j) = static_cast<double>(rng.below(3));  // many ties
      }
    auto st = brute::enumerate_matchings(w);
    auto m = min_weight_max_cardinality_matching(w);
    CHECK(m.cardinality() == st.max_cardinality);
    if (st.max_cardinality > 0)
      CHECK(m.total_weight == doctest::Approx(st.min_weight_at_max_card).epsilon(1e-9));
  }
}

TEST_CASE("solvers are deterministic across calls") {
  Rng rng(16);
  WeightMatrix w = random_matrix(rng, 6, 8, 0.4);
  auto a = min_weight_max_cardinality_matching(w);
  auto b = min_weight_max_cardinality_matching(w);
  CHECK(a.pairs == b.pairs);
}
