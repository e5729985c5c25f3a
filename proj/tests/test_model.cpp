#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "tsrmb/instances.hpp"
#include "tsrmb/model.hpp"
#include "tsrmb/rng.hpp"
#include "util.hpp"

using namespace tsrmb;

TEST_CASE("cost1: single rider at distance 5") {
  auto inst = testutil::line_instance({0.0}, {100.0}, {5.0}, ScenarioSet::explicit_sets({{0}}));
  FirstStageDecision d1;
  d1.drivers = {0};
  CHECK(cost1(inst, d1) == doctest::Approx(5.0));
}

TEST_CASE("cost1/cost2 on the line counterexample (m=3, eps=0.1)") {
  auto inst = gen_line_counterexample(3, 0.1);
  // Greedy picks the three (1-eps) drivers: indices 1..3 of the four drivers.
  FirstStageDecision greedy;
  greedy.drivers = {1, 2, 3};
  CHECK(cost1(inst, greedy) == doctest::Approx(0.9).epsilon(1e-9));
  double c2 = cost2(inst, inst.drivers_except(greedy.drivers), inst.scenarios.sets[0]);
  CHECK(c2 == doctest::Approx(6.7).epsilon(1e-9));  // 1 + (2-eps)m
}

TEST_CASE("cost1 and cost2 match permutation brute force on random instances") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto inst = testutil::random_explicit(3, 4, 7, 1, 3, seed);
    FirstStageDecision d1;
    Rng rng(seed * 97);
    d1.drivers = rng.sample_without_replacement(inst.n_d, inst.n_r1);
    std::sort(d1.drivers.begin(), d1.drivers.end());
    CHECK(cost1(inst, d1) == doctest::Approx(brute::eval_cost1(inst, d1.drivers)).epsilon(1e-9));
    auto avail = inst.drivers_except(d1.drivers);
    const auto& s = inst.scenarios.sets[0];
    CHECK(cost2(inst, avail, s) == doctest::Approx(brute::eval_cost2(inst, avail, s)).epsilon(1e-9));
  }
}

TEST_CASE("cost2 rejects short driver supply and is monotone in the fleet") {
  auto inst = testutil::line_instance({0.0}, {1.0, 2.0}, {3.0, 4.0, 5.0},
                                      ScenarioSet::implicit(2));
  CHECK_THROWS_AS(cost2(inst, {0}, {0, 1}), Error);
  double small = cost2(inst, {0, 1}, {0, 1});
  double large = cost2(inst, {0, 1, 2}, {0, 1});
  CHECK(large <= small + kEps);
}

TEST_CASE("cost1/cost2 are invariant under driver relabeling") {
  auto inst = testutil::random_explicit(3, 3, 6, 1, 2, 7);
  FirstStageDecision d1;
  d1.drivers = {1, 3, 5};
  double c1 = cost1(inst, d1);
  double c2 = cost2(inst, {0, 2, 4}, inst.scenarios.sets[0]);

  // Swap driver labels 0<->5, 1<->3 by permuting the distance table.
  std::vector<int> perm = {5, 3, 2, 1, 4, 0};
  MetricInstance permuted = inst;
  for (int t = 0; t < inst.n_d; ++t)
    for (int v = 0; v < inst.n_vertices(); ++v) {
      int dv = inst.d_vertex(t);
      int pv = inst.d_vertex(perm[t]);
      if (v < inst.n_r1 + inst.n_r2())
        permuted.dist.set_sym(pv, v, inst.dist.at(dv, v));
    }
  for (int a = 0; a < inst.n_d; ++a)
    for (int b = 0; b < inst.n_d; ++b)
      permuted.dist.at(inst.d_vertex(perm[a]), inst.d_vertex(perm[b])) =
          inst.dist.at(inst.d_vertex(a), inst.d_vertex(b));

  FirstStageDecision pd1;
  for (int t : d1.drivers) pd1.drivers.push_back(perm[t]);
  std::sort(pd1.drivers.begin(), pd1.drivers.end());
  CHECK(cost1(permuted, pd1) == doctest::Approx(c1).epsilon(1e-9));
  std::vector<int> pavail;
  for (int t : {0, 2, 4}) pavail.push_back(perm[t]);
  std::sort(pavail.begin(), pavail.end());
  CHECK(cost2(permuted, pavail, inst.scenarios.sets[0]) == doctest::Approx(c2).epsilon(1e-9));
}

TEST_CASE("surplus arithmetic and error paths") {
  auto mk = [](int nd, int k) {
    return testutil::line_instance({0.0, 1.0, 2.0}, {5.0, 6.0, 7.0},
                                   std::vector<double>(nd, 9.0), ScenarioSet::implicit(k));
  };
  CHECK(surplus(mk(5, 2)) == 0);
  CHECK(surplus(mk(8, 2)) == 3);
  CHECK(surplus(mk(3, 2)) == -2);

  auto mixed = testutil::line_instance({0.0}, {1.0, 2.0}, {3.0, 4.0},
                                       ScenarioSet::explicit_sets({{0}, {0, 1}}));
  CHECK_THROWS_AS(surplus(mixed), Error);
  try {
    surplus(mixed);
  } catch (const Error& e) {
    CHECK(e.name() == "NonUniformScenarios");
  }

  CHECK(surplus(gen_surplus_counterexample(3)) == 1);
}

TEST_CASE("validate flags triangle and symmetry violations and passes closures") {
  auto inst = testutil::line_instance({0.0}, {1.0}, {2.0, 3.0},
                                      ScenarioSet::explicit_sets({{0}}));
  CHECK(validate(inst).empty());

  MetricInstance bad = inst;
  bad.dist.set_sym(0, 1, 10.0);
  bad.dist.set_sym(1, 2, 1.0);
  bad.dist.set_sym(0, 2, 20.0);  // 20 > 10 + 1
  auto violations = validate(bad);
  bool has_triangle = false;
  for (const auto& v : violations) has_triangle |= v.find("triangle") != std::string::npos;
  CHECK(has_triangle);

  MetricInstance asym = inst;
  asym.dist.at(0, 1) = 7.0;  // one-sided write
  violations = validate(asym);
  bool has_asym = false;
  for (const auto& v : violations) has_asym |= v.find("asymmetric") != std::string::npos;
  CHECK(has_asym);
}

TEST_CASE("metric closure: idempotent, star graph, outputs validate") {
  // Star: center vertex 2 (the single driver), leaves at distance 1.
  DistanceMatrix raw(3);
  raw.set_sym(0, 2, 1.0);
  raw.set_sym(1, 2, 1.0);
  DistanceMatrix closed = metric_closure(raw);
  CHECK(closed.at(0, 1) == doctest::Approx(2.0));

  DistanceMatrix again = metric_closure(closed);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(again.at(i, j) == closed.at(i, j));

  DistanceMatrix disconnected(3);
  disconnected.set_sym(0, 1, 1.0);
  CHECK_THROWS_AS(metric_closure(disconnected), Error);
}

TEST_CASE("metric closure of the 3-DM raw weights matches the one-stop formula") {
  std::vector<std::array<int, 3>> triples = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 1, 0}, {1, 2, 1}};
  auto inst = gen_from_3dm(3, triples, 2);
  CHECK(validate(inst).empty());
  // For riders u,v: d(u,v) = min over drivers e of d(u,e) + d(v,e).
  for (int a = 0; a < inst.n_r1 + inst.n_r2(); ++a)
    for (int b = a + 1; b < inst.n_r1 + inst.n_r2(); ++b) {
      double best = brute::kInf;
      for (int e = 0; e < inst.n_d; ++e)
        best = std::min(best, inst.dist.at(a, inst.d_vertex(e)) +
                                  inst.dist.at(b, inst.d_vertex(e)));
      CHECK(inst.dist.at(a, b) == doctest::Approx(best).epsilon(1e-9));
    }
}

TEST_CASE("every generator output passes validate") {
  CHECK(validate(gen_line_counterexample(4, 0.2)).empty());
  CHECK(validate(gen_surplus_counterexample(4)).empty());
  CHECK(validate(testutil::random_explicit(3, 5, 8, 2, 2, 3)).empty());
  CHECK(validate(gen_from_3dm(3, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 1, 2}}, 3)).empty());
  CHECK(validate(gen_from_set_cover(3, {{0, 1, 2}, {0}}, 1)).empty());
  CHECK(validate(gen_from_2partition({1, 1, 1, 1})).empty());
}
