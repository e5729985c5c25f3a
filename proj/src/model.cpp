#include "tsrmb/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tsrmb {

ScenarioSet ScenarioSet::explicit_sets(std::vector<std::vector<int>> s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i].empty()) fail("BadScenario", "scenario " + std::to_string(i) + " is empty");
    std::set<int> seen(s[i].begin(), s[i].end());
    if (seen.size() != s[i].size())
      fail("BadScenario", "scenario " + std::to_string(i) + " repeats a rider");
  }
  ScenarioSet out;
  out.kind = Kind::Explicit;
  out.sets = std::move(s);
  return out;
}

ScenarioSet ScenarioSet::implicit(int k) {
  if (k < 1) fail("BadScenario", "implicit scenario size k must be >= 1");
  ScenarioSet out;
  out.kind = Kind::Implicit;
  out.k = k;
  return out;
}

int ScenarioSet::max_size() const {
  if (!is_explicit()) return k;
  int m = 0;
  for (const auto& s : sets) m = std::max(m, static_cast<int>(s.size()));
  return m;
}

int ScenarioSet::uniform_size() const {
  if (!is_explicit()) return k;
  if (sets.empty()) fail("BadScenario", "no scenarios");
  size_t sz = sets[0].size();
  for (const auto& s : sets)
    if (s.size() != sz)
      fail("NonUniformScenarios", "explicit scenarios have mixed sizes");
  return static_cast<int>(sz);
}

std::vector<int> MetricInstance::all_drivers() const {
  std::vector<int> out(n_d);
  for (int t = 0; t < n_d; ++t) out[t] = t;
  return out;
}

std::vector<int> MetricInstance::drivers_except(const std::vector<int>& d1) const {
  std::vector<char> used(n_d, false);
  for (int t : d1) used[t] = true;
  std::vector<int> out;
  out.reserve(n_d - d1.size());
  for (int t = 0; t < n_d; ++t)
    if (!used[t]) out.push_back(t);
  return out;
}

WeightMatrix r1_driver_weights(const MetricInstance& inst, const std::vector<int>& drivers) {
  WeightMatrix w(inst.n_r1, static_cast<int>(drivers.size()));
  for (int i = 0; i < inst.n_r1; ++i)
    for (size_t j = 0; j < drivers.size(); ++j)
      w.at(i, static_cast<int>(j)) = inst.dist.at(inst.r1_vertex(i), inst.d_vertex(drivers[j]));
  return w;
}

WeightMatrix rider_driver_weights(const MetricInstance& inst, const std::vector<int>& r2_riders,
                                  const std::vector<int>& drivers) {
  WeightMatrix w(static_cast<int>(r2_riders.size()), static_cast<int>(drivers.size()));
  for (size_t i = 0; i < r2_riders.size(); ++i)
    for (size_t j = 0; j < drivers.size(); ++j)
      w.at(static_cast<int>(i), static_cast<int>(j)) =
          inst.dist.at(inst.r2_vertex(r2_riders[i]), inst.d_vertex(drivers[j]));
  return w;
}

double cost1(const MetricInstance& inst, const FirstStageDecision& d1) {
  if (inst.n_r1 == 0) fail("BadInstance", "R1 must be nonempty");
  if (static_cast<int>(d1.drivers.size()) != inst.n_r1)
    fail("BadDecision", "|D1| = " + std::to_string(d1.drivers.size()) + " but |R1| = " +
                            std::to_string(inst.n_r1));
  Matching m = min_weight_perfect_matching(r1_driver_weights(inst, d1.drivers));
  return m.total_weight / inst.n_r1;
}

double cost2(const MetricInstance& inst, const std::vector<int>& available,
             const std::vector<int>& s) {
  if (available.size() < s.size())
    fail("InsufficientDrivers", std::to_string(available.size()) + " drivers for " +
                                    std::to_string(s.size()) + " scenario riders");
  if (s.empty()) return 0.0;
  return bottleneck_matching(rider_driver_weights(inst, s, available)).bottleneck;
}

int surplus(const MetricInstance& inst) {
  return inst.n_d - inst.n_r1 - inst.scenarios.uniform_size();
}

std::vector<std::string> validate(const MetricInstance& inst) {
  std::vector<std::string> out;
  const DistanceMatrix& d = inst.dist;
  const int nv = inst.n_vertices();
  if (d.size() != nv) {
    out.push_back("distance table covers " + std::to_string(d.size()) + " vertices, expected " +
                  std::to_string(nv));
    return out;
  }
  for (int i = 0; i < nv; ++i)
    if (d.at(i, i) != 0.0)
      out.push_back("dist(" + std::to_string(i) + "," + std::to_string(i) + ") != 0");
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      if (d.at(i, j) != d.at(j, i))
        out.push_back("asymmetric entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      else if (d.allowed(i, j) && d.at(i, j) < 0.0)
        out.push_back("negative distance (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      if (j == i || !d.allowed(i, j)) continue;
      for (int k = j + 1; k < nv; ++k) {
        if (k == i || !d.allowed(i, k) || !d.allowed(j, k)) continue;
        if (d.at(j, k) > d.at(j, i) + d.at(i, k) + kEps)
          out.push_back("triangle violation (" + std::to_string(j) + "," + std::to_string(i) +
                        "," + std::to_string(k) + ")");
      }
    }
  if (inst.scenarios.is_explicit()) {
    for (size_t si = 0; si < inst.scenarios.sets.size(); ++si)
      for (int r : inst.scenarios.sets[si])
        if (r < 0 || r >= inst.n_r2())
          out.push_back("scenario " + std::to_string(si) + " names rider " + std::to_string(r) +
                        " outside R2");
  } else if (inst.scenarios.k < 1 || inst.scenarios.k > inst.n_r2()) {
    out.push_back("implicit k = " + std::to_string(inst.scenarios.k) + " outside [1, |R2|]");
  }
  return out;
}

DistanceMatrix metric_closure(const DistanceMatrix& raw) {
  const int n = raw.size();
  DistanceMatrix d = raw;
  // Symmetrize through the cheaper direction before closing.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double v = std::min(d.at(i, j), d.at(j, i));
      d.set_sym(i, j, v);
    }
  for (int i = 0; i < n; ++i) d.at(i, i) = 0.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!d.allowed(i, k)) continue;
      for (int j = 0; j < n; ++j) {
        if (!d.allowed(k, j)) continue;
        double via = d.at(i, k) + d.at(k, j);
        if (via < d.at(i, j)) d.at(i, j) = via;
      }
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!d.allowed(i, j))
        fail("DisconnectedVertices", "no path between " + std::to_string(i) + " and " +
                                         std::to_string(j));
  return d;
}

FirstStageDecision decision_from_r1_pairs(const MetricInstance& inst,
                                           std::vector<std::pair<int, int>> r1_driver_pairs) {
  std::sort(r1_driver_pairs.begin(), r1_driver_pairs.end());
  FirstStageDecision d1;
  d1.matching.pairs = r1_driver_pairs;
  for (const auto& [i, t] : r1_driver_pairs) {
    double w = inst.dist.at(inst.r1_vertex(i), inst.d_vertex(t));
    d1.matching.total_weight += w;
    d1.matching.bottleneck = std::max(d1.matching.bottleneck, w);
    d1.drivers.push_back(t);
  }
  std::sort(d1.drivers.begin(), d1.drivers.end());
  return d1;
}

}  // namespace tsrmb
