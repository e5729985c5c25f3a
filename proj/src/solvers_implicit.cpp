#include "tsrmb/solvers_implicit.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "tsrmb/evaluate.hpp"
#include "tsrmb/solvers_explicit.hpp"

namespace tsrmb {

namespace {

constexpr double kInf = DistanceMatrix::kForbidden;

double rider_driver(const MetricInstance& inst, int r, int t) {
  return inst.dist.at(inst.r2_vertex(r), inst.d_vertex(t));
}

void require_implicit(const MetricInstance& inst) {
  if (inst.scenarios.is_explicit())
    fail("BadScenario", "this solver needs the implicit scenario model");
}

// Greedy maximal independent set of the supplier algorithm at one threshold:
// representative clients pairwise more than 2*tau apart, each with its nearest
// facility within tau. Fails (returns false) when more than p representatives
// appear or a representative has no facility in range.
bool supplier_at(const MetricInstance& inst, const std::vector<int>& clients,
                 const std::vector<int>& facilities, int p, double tau,
                 std::vector<int>* chosen) {
  chosen->clear();
  std::vector<char> covered(clients.size(), false);
  for (size_t c = 0; c < clients.size(); ++c) {
    if (covered[c]) continue;
    double nearest = kInf;
    int pick = -1;
    for (int f : facilities) {
      double d = rider_driver(inst, clients[c], f);
      if (d <= tau && d < nearest) {
        nearest = d;
        pick = f;
      }
    }
    if (pick == -1) return false;
    chosen->push_back(pick);
    if (static_cast<int>(chosen->size()) > p) return false;
    for (size_t c2 = c; c2 < clients.size(); ++c2) {
      double d = inst.dist.at(inst.r2_vertex(clients[c]), inst.r2_vertex(clients[c2]));
      if (d <= 2.0 * tau) covered[c2] = true;
    }
  }
  return true;
}

// Core of the Hochbaum-Shmoys scheme: smallest candidate threshold that
// admits <= p representatives. The chosen facilities cover every client
// within 3*tau, and tau never exceeds the optimal p-supplier radius.
std::vector<int> supplier_core(const MetricInstance& inst, const std::vector<int>& clients,
                               const std::vector<int>& facilities, int p) {
  if (clients.empty()) return {};
  std::set<double> taus;
  for (int c : clients)
    for (int f : facilities) {
      double d = rider_driver(inst, c, f);
      if (d != kInf) taus.insert(d);
    }
  std::vector<int> chosen;
  for (double tau : taus)
    if (supplier_at(inst, clients, facilities, p, tau, &chosen)) {
      std::sort(chosen.begin(), chosen.end());
      return chosen;
    }
  fail("NoPerfectMatching", "p-supplier: no radius covers every client");
}

}  // namespace

FirstStageDecision solve_no_surplus(const MetricInstance& inst) {
  require_implicit(inst);
  int l = surplus(inst);
  if (l != 0)
    fail("SurplusNotZero", "surplus is " + std::to_string(l) + ", need exactly 0");
  std::vector<int> scenario(inst.scenarios.k);
  for (int i = 0; i < inst.scenarios.k; ++i) scenario[i] = i;
  return solve_single_scenario(inst, scenario);
}

CenterSelection select_center(const MetricInstance& inst) {
  require_implicit(inst);
  const int k = inst.scenarios.k, n = inst.n_r2();
  if (n < k) fail("BadScenario", "fewer than k second-stage riders");

  CenterSelection best;
  best.core_radius = kInf;
  for (int t = 0; t < inst.n_d; ++t) {
    std::vector<std::pair<double, int>> by_dist;
    by_dist.reserve(n);
    for (int r = 0; r < n; ++r) by_dist.emplace_back(rider_driver(inst, r, t), r);
    std::sort(by_dist.begin(), by_dist.end());
    double radius = by_dist[k - 1].first;
    if (best.center == -1 || radius < best.core_radius) {
      best.center = t;
      best.core_radius = radius;
      best.core_riders.clear();
      for (int i = 0; i < k; ++i) best.core_riders.push_back(by_dist[i].second);
      std::sort(best.core_riders.begin(), best.core_riders.end());
    }
  }
  return best;
}

OutlierLadder outlier_ladder(const MetricInstance& inst, const CenterSelection& center) {
  require_implicit(inst);
  int l = surplus(inst);
  if (l < 0) fail("NegativeSurplus", "surplus is " + std::to_string(l));
  if (l > inst.n_r2()) fail("BadScenario", "surplus exceeds |R2|");
  std::vector<std::pair<double, int>> by_dist;
  for (int r = 0; r < inst.n_r2(); ++r)
    by_dist.emplace_back(-rider_driver(inst, r, center.center), r);
  std::sort(by_dist.begin(), by_dist.end());
  OutlierLadder ladder;
  for (int i = 0; i < l; ++i) ladder.ordered.push_back(by_dist[i].second);
  return ladder;
}

FirstStageDecision solve_small_surplus(const MetricInstance& inst) {
  require_implicit(inst);
  const int k = inst.scenarios.k, n = inst.n_r2();
  int l = surplus(inst);
  if (l < 0) fail("InsufficientDrivers", "negative surplus");
  if (l >= k)
    fail("SurplusTooLarge", "surplus " + std::to_string(l) + " >= k = " + std::to_string(k));
  if (2 * k * k > n)
    std::fprintf(stderr,
                 "tsrmb: warning: k = %d exceeds sqrt(n/2) with n = %d; the 17*OPT2 "
                 "guarantee may not hold\n",
                 k, n);

  CenterSelection center = select_center(inst);
  OutlierLadder ladder = outlier_ladder(inst, center);

  bool found = false;
  double best_beta = 0.0;
  FirstStageDecision best;
  for (int j = 0; j <= l; ++j) {
    std::set<int> riders(center.core_riders.begin(), center.core_riders.end());
    riders.insert(ladder.ordered.begin(), ladder.ordered.begin() + j);
    FirstStageDecision cand =
        solve_single_scenario(inst, std::vector<int>(riders.begin(), riders.end()));
    double beta = eval_proxy(inst, cand, center.core_riders, ladder.ordered);
    if (!found || beta < best_beta) {
      best = cand;
      best_beta = beta;
      found = true;
    }
  }
  return best;
}

std::vector<int> prune_close_drivers(const MetricInstance& inst, const std::vector<int>& drivers,
                                     double min_separation) {
  std::vector<int> sorted = drivers;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> kept;
  for (int f : sorted) {
    bool close = false;
    for (int k : kept)
      if (inst.dist.at(inst.d_vertex(k), inst.d_vertex(f)) <= min_separation) {
        close = true;
        break;
      }
    if (!close) kept.push_back(f);
  }
  return kept;
}

std::vector<int> p_supplier_3approx(const MetricInstance& inst, const std::vector<int>& clients,
                                    const std::vector<int>& facilities, int p) {
  if (p > static_cast<int>(facilities.size()))
    fail("BadParameter", "p exceeds the facility count");
  std::vector<int> chosen = supplier_core(inst, clients, facilities, p);
  // Pad to exactly p with the unused facilities of lowest index; extra
  // centers only shrink the coverage radius.
  std::set<int> have(chosen.begin(), chosen.end());
  for (int f : facilities) {
    if (static_cast<int>(chosen.size()) == p) break;
    if (have.insert(f).second) chosen.push_back(f);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

FirstStageDecision solve_k1(const MetricInstance& inst, double* opt2_guess_out) {
  require_implicit(inst);
  if (inst.scenarios.k != 1) fail("BadScenario", "solve_k1 needs k = 1");
  if (inst.n_d <= inst.n_r1)
    fail("InsufficientDrivers", "need |D| > |R1|");
  const int n = inst.n_r2();
  const int p = inst.n_d - inst.n_r1;

  std::vector<int> all_riders(n);
  for (int r = 0; r < n; ++r) all_riders[r] = r;
  // The supplier step does not depend on the guess; run it once.
  std::vector<int> core = supplier_core(inst, all_riders, inst.all_drivers(), p);

  std::set<double> values;
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < inst.n_d; ++t) {
      double d = rider_driver(inst, r, t);
      if (d != kInf) values.insert(d);
    }

  bool found = false;
  double best_total = 0.0;
  FirstStageDecision best;
  for (double guess : values) {
    std::vector<int> d2 = prune_close_drivers(inst, core, 8.0 * guess);

    std::vector<char> reserved(inst.n_d, false);
    for (int f : d2) reserved[f] = true;
    std::vector<int> rest;
    for (int t = 0; t < inst.n_d; ++t)
      if (!reserved[t]) rest.push_back(t);
    if (static_cast<int>(rest.size()) < inst.n_r1) continue;

    Matching m = min_weight_max_cardinality_matching(r1_driver_weights(inst, rest));
    if (m.cardinality() < inst.n_r1) continue;
    std::vector<std::pair<int, int>> pairs;
    for (auto [i, j] : m.pairs) pairs.emplace_back(i, rest[j]);
    FirstStageDecision cand = decision_from_r1_pairs(inst, pairs);

    // k = 1 admits exact evaluation: the worst case is the rider farthest
    // from its nearest remaining driver.
    const auto avail = inst.drivers_except(cand.drivers);
    double worst = 0.0;
    bool feasible = true;
    for (int r = 0; r < n; ++r) {
      double nearest = kInf;
      for (int t : avail) nearest = std::min(nearest, rider_driver(inst, r, t));
      if (nearest == kInf) {
        feasible = false;
        break;
      }
      worst = std::max(worst, nearest);
    }
    if (!feasible) continue;
    double total = cost1(inst, cand) + worst;
    if (!found || total < best_total) {
      best = cand;
      best_total = total;
      found = true;
      if (opt2_guess_out) *opt2_guess_out = guess;
    }
  }
  if (!found) fail("InsufficientDrivers", "no opt2 guess admits a feasible reservation");
  return best;
}

}  // namespace tsrmb
