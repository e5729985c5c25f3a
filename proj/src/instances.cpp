#include "tsrmb/instances.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "tsrmb/rng.hpp"

namespace tsrmb {

namespace {

std::vector<std::string> numbered_labels(const std::string& prefix, int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Distance table from 1-D coordinates laid out as R1, R2, D.
DistanceMatrix line_distances(const std::vector<double>& xs) {
  DistanceMatrix d(static_cast<int>(xs.size()), 0.0);
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      d.set_sym(static_cast<int>(i), static_cast<int>(j), std::abs(xs[i] - xs[j]));
  return d;
}

}  // namespace

MetricInstance gen_random_euclidean(int n_r1, int n_r2, int n_d, const ScenarioSpec& spec,
                                    double box_size, std::uint64_t seed) {
  if (n_r1 < 1 || n_r2 < 1 || n_d < 1) fail("BadParameter", "counts must be positive");
  Rng rng(seed);
  const int nv = n_r1 + n_r2 + n_d;
  std::vector<double> x(nv), y(nv);
  for (int i = 0; i < nv; ++i) {
    x[i] = rng.uniform() * box_size;
    y[i] = rng.uniform() * box_size;
  }

  MetricInstance inst;
  inst.n_r1 = n_r1;
  inst.r2_labels = numbered_labels("r2_", n_r2);
  inst.n_d = n_d;
  inst.dist = DistanceMatrix(nv, 0.0);
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      inst.dist.set_sym(i, j, std::hypot(x[i] - x[j], y[i] - y[j]));

  if (spec.kind == ScenarioSpec::Kind::Implicit) {
    inst.scenarios = ScenarioSet::implicit(spec.k);
  } else {
    // Pairwise-disjoint scenarios: the explicit-scenario approximation
    // guarantees assume no rider appears in two scenarios.
    if (spec.count * spec.size > n_r2)
      fail("BadParameter", "need |R2| >= scenarios * scenario size for disjoint scenarios");
    auto pool = rng.sample_without_replacement(n_r2, spec.count * spec.size);
    std::vector<std::vector<int>> sets;
    for (int s = 0; s < spec.count; ++s) {
      std::vector<int> pick(pool.begin() + s * spec.size, pool.begin() + (s + 1) * spec.size);
      std::sort(pick.begin(), pick.end());
      sets.push_back(std::move(pick));
    }
    inst.scenarios = ScenarioSet::explicit_sets(std::move(sets));
  }
  return inst;
}

MetricInstance gen_line_counterexample(int m, double epsilon) {
  if (m < 1) fail("BadParameter", "m must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) fail("BadParameter", "epsilon must be in (0,1)");

  // Left to right: driver d0, then rider r_i one unit right of driver
  // d_(i-1) and driver d_i at 1-epsilon right of r_i; the lone second-stage
  // rider sits one unit past the last driver.
  std::vector<double> riders(m), drivers(m + 1);
  drivers[0] = 0.0;
  for (int i = 0; i < m; ++i) {
    riders[i] = drivers[i] + 1.0;
    drivers[i + 1] = riders[i] + (1.0 - epsilon);
  }
  double s = drivers[m] + 1.0;

  std::vector<double> xs;
  xs.insert(xs.end(), riders.begin(), riders.end());
  xs.push_back(s);
  xs.insert(xs.end(), drivers.begin(), drivers.end());

  MetricInstance inst;
  inst.n_r1 = m;
  inst.r2_labels = {"s"};
  inst.n_d = m + 1;
  inst.dist = line_distances(xs);
  inst.scenarios = ScenarioSet::explicit_sets({{0}});
  return inst;
}

MetricInstance gen_surplus_counterexample(int m) {
  if (m < 2) fail("BadParameter", "m must be >= 2");
  const double eps = 0.1;

  // One second-stage rider at each flank. The cheap (1-eps) first-stage
  // edges drift rightward so that the exact single-scenario solution for s1
  // consumes s2's only nearby driver; the optimum keeps both flanks served.
  //
  //   s1 -- a -- b -- r1 -- c1 -- r2 -- c2 ... rm -- cm -- s2
  //
  // with d(s1,a)=1, gaps a-b = 2-eps, b-r1 = 1, r_i-c_i = 1-eps,
  // c_i-r_(i+1) = 1, cm-s2 = 1.
  std::vector<double> riders(m), drivers(m + 2);
  double a = 1.0;
  double b = a + (2.0 - eps);
  drivers[0] = a;
  drivers[1] = b;
  double cursor = b;
  for (int i = 0; i < m; ++i) {
    riders[i] = cursor + 1.0;
    drivers[i + 2] = riders[i] + (1.0 - eps);
    cursor = drivers[i + 2];
  }
  double s1 = 0.0, s2 = cursor + 1.0;

  std::vector<double> xs;
  xs.insert(xs.end(), riders.begin(), riders.end());
  xs.push_back(s1);
  xs.push_back(s2);
  xs.insert(xs.end(), drivers.begin(), drivers.end());

  MetricInstance inst;
  inst.n_r1 = m;
  inst.r2_labels = {"s1", "s2"};
  inst.n_d = m + 2;
  inst.dist = line_distances(xs);
  inst.scenarios = ScenarioSet::implicit(1);
  return inst;
}

MetricInstance gen_from_3dm(int n, const std::vector<std::array<int, 3>>& triples,
                            int n_scenarios) {
  if (n < 1) fail("BadParameter", "n must be >= 1");
  if (n_scenarios != 2 && n_scenarios != 3)
    fail("BadParameter", "n_scenarios must be 2 or 3");
  std::vector<int> cover_w(n, 0);
  std::set<std::array<int, 3>> seen;
  for (const auto& t : triples) {
    for (int c = 0; c < 3; ++c)
      if (t[c] < 0 || t[c] >= n) fail("MalformedTriples", "triple index out of range");
    if (!seen.insert(t).second) fail("MalformedTriples", "duplicate triple");
    ++cover_w[t[2]];
  }
  for (int w = 0; w < n; ++w)
    if (cover_w[w] == 0)
      fail("MalformedTriples", "element w" + std::to_string(w) + " appears in no triple");
  const int nt = static_cast<int>(triples.size());
  const int m = nt - n;  // first-stage riders: d_T(w)-1 copies of each w
  if (m < 1) fail("MalformedTriples", "need more triples than n");

  const bool with_w = n_scenarios == 3;
  std::vector<std::string> labels = numbered_labels("u", n);
  for (const auto& v : numbered_labels("v", n)) labels.push_back(v);
  if (with_w)
    for (const auto& w : numbered_labels("w", n)) labels.push_back(w);

  MetricInstance inst;
  inst.n_r1 = m;
  inst.r2_labels = labels;
  inst.n_d = nt;

  const int nv = m + static_cast<int>(labels.size()) + nt;
  DistanceMatrix raw(nv);
  // First-stage riders: copies of w elements in the 2-scenario reduction,
  // uniformly at distance 1 in the 3-scenario one.
  std::vector<int> r1_owner;
  for (int w = 0; w < n; ++w)
    for (int c = 0; c < cover_w[w] - 1; ++c) r1_owner.push_back(w);
  for (int i = 0; i < m; ++i)
    for (int e = 0; e < nt; ++e) {
      double d;
      if (with_w)
        d = 1.0;
      else
        d = (triples[e][2] == r1_owner[i]) ? 1.0 : 3.0;
      raw.set_sym(inst.r1_vertex(i), inst.d_vertex(e), d);
    }
  for (int e = 0; e < nt; ++e) {
    for (int u = 0; u < n; ++u)
      raw.set_sym(inst.r2_vertex(u), inst.d_vertex(e), triples[e][0] == u ? 1.0 : 3.0);
    for (int v = 0; v < n; ++v)
      raw.set_sym(inst.r2_vertex(n + v), inst.d_vertex(e), triples[e][1] == v ? 1.0 : 3.0);
    if (with_w)
      for (int w = 0; w < n; ++w)
        raw.set_sym(inst.r2_vertex(2 * n + w), inst.d_vertex(e), triples[e][2] == w ? 1.0 : 3.0);
  }
  inst.dist = metric_closure(raw);

  std::vector<std::vector<int>> sets;
  std::vector<int> su(n), sv(n);
  for (int i = 0; i < n; ++i) {
    su[i] = i;
    sv[i] = n + i;
  }
  sets.push_back(su);
  sets.push_back(sv);
  if (with_w) {
    std::vector<int> sw(n);
    for (int i = 0; i < n; ++i) sw[i] = 2 * n + i;
    sets.push_back(sw);
  }
  inst.scenarios = ScenarioSet::explicit_sets(std::move(sets));
  return inst;
}

MetricInstance gen_from_set_cover(int universe_n, const std::vector<std::vector<int>>& sets,
                                  int p_cover) {
  const int m = static_cast<int>(sets.size());
  if (universe_n < 1 || m < 1) fail("BadParameter", "need a nonempty universe and set list");
  if (p_cover < 1 || p_cover >= m)
    fail("BadParameter", "p_cover must be in [1, |sets|.)");
  std::vector<char> covered(universe_n, false);
  for (const auto& s : sets)
    for (int e : s) {
      if (e < 0 || e >= universe_n) fail("BadParameter", "set element out of range");
      covered[e] = true;
    }
  for (int e = 0; e < universe_n; ++e)
    if (!covered[e])
      fail("UncoveredElement", "element " + std::to_string(e) + " is in no set");

  MetricInstance inst;
  inst.n_r1 = m - p_cover;
  inst.r2_labels = numbered_labels("e", universe_n);
  inst.n_d = m;

  const int nv = inst.n_vertices();
  DistanceMatrix raw(nv);
  for (int i = 0; i < inst.n_r1; ++i)
    for (int j = 0; j < m; ++j) raw.set_sym(inst.r1_vertex(i), inst.d_vertex(j), 1.0);
  for (int e = 0; e < universe_n; ++e)
    for (int j = 0; j < m; ++j) {
      bool member = std::find(sets[j].begin(), sets[j].end(), e) != sets[j].end();
      raw.set_sym(inst.r2_vertex(e), inst.d_vertex(j), member ? 1.0 : 3.0);
    }
  inst.dist = metric_closure(raw);
  inst.scenarios = ScenarioSet::implicit(1);
  return inst;
}

MetricInstance gen_from_2partition(const std::vector<long long>& s_values) {
  const int n = static_cast<int>(s_values.size());
  if (n == 0 || n % 2 != 0) fail("OddCardinality", "need an even, nonempty value list");
  long long sum = 0;
  for (long long v : s_values) {
    if (v <= 0) fail("BadParameter", "values must be positive");
    sum += v;
  }
  const double P = static_cast<double>(sum);

  MetricInstance inst;
  inst.n_r1 = n;
  inst.r2_labels = numbered_labels("s1_", n);
  for (const auto& l : numbered_labels("s2_", n)) inst.r2_labels.push_back(l);
  inst.n_d = 2 * n;
  inst.dist = DistanceMatrix(inst.n_vertices());  // everything forbidden but the gadget edges

  for (int j = 0; j < n; ++j) {
    double sj = static_cast<double>(s_values[j]);
    inst.dist.set_sym(inst.r1_vertex(j), inst.d_vertex(j), P);
    inst.dist.set_sym(inst.r1_vertex(j), inst.d_vertex(n + j), P);
    inst.dist.set_sym(inst.r2_vertex(j), inst.d_vertex(j), P);        // S1 rider j
    inst.dist.set_sym(inst.r2_vertex(j), inst.d_vertex(n + j), sj);
    inst.dist.set_sym(inst.r2_vertex(n + j), inst.d_vertex(j), sj);   // S2 rider j
    inst.dist.set_sym(inst.r2_vertex(n + j), inst.d_vertex(n + j), P);
  }

  std::vector<int> s1(n), s2(n);
  for (int j = 0; j < n; ++j) {
    s1[j] = j;
    s2[j] = n + j;
  }
  inst.scenarios = ScenarioSet::explicit_sets({s1, s2});
  return inst;
}

}  // namespace tsrmb
