// Acceptance suite: runs each release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "brute.hpp"
#include "trip_fixture.hpp"
#include "tsrmb/evaluate.hpp"
#include "tsrmb/instances.hpp"
#include "tsrmb/json_io.hpp"
#include "tsrmb/rng.hpp"
#include "tsrmb/solvers_explicit.hpp"
#include "tsrmb/solvers_implicit.hpp"
#include "tsrmb/variants.hpp"
#include "util.hpp"

using namespace tsrmb;

namespace {

constexpr double kTol = 1e-9;

struct Harness {
  int failures = 0;

  void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %2d: %s  (%.1fs)%s\n", ok ? "PASS" : "FAIL", number,
                name.c_str(), secs, note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }

  // Exit code: 0 iff every criterion passed.
  int finish() const {
    std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES present");
    return failures == 0 ? 0 : 1;
  }
};

WeightMatrix random_matrix(Rng& rng, int rows, int cols, double forbidden_frac) {
  WeightMatrix w(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (rng.uniform() >= forbidden_frac) w.at(i, j) = rng.uniform() * 10.0;
  return w;
}

// 1. Matching primitives vs brute force: 500 matrices <= 7x7, 30% forbidden.
bool criterion_matching() {
  Rng rng(1001);
  for (int it = 0; it < 500; ++it) {
    int rows = 1 + static_cast<int>(rng.below(7));
    int cols = rows + static_cast<int>(rng.below(static_cast<std::uint64_t>(8 - rows)));
    WeightMatrix w = random_matrix(rng, rows, cols, 0.3);
    auto st = brute::enumerate_matchings(w);

    auto mwmc = min_weight_max_cardinality_matching(w);
    if (mwmc.cardinality() != st.max_cardinality) return false;
    if (st.max_cardinality > 0 &&
        std::abs(mwmc.total_weight - st.min_weight_at_max_card) > kTol)
      return false;

    if (st.perfect_min_weight < brute::kInf) {
      auto mwp = min_weight_perfect_matching(w);
      if (std::abs(mwp.total_weight - st.perfect_min_weight) > kTol) return false;
      auto bn = bottleneck_matching(w);
      if (std::abs(bn.bottleneck - st.perfect_min_bottleneck) > kTol) return false;
    } else {
      try {
        min_weight_perfect_matching(w);
        return false;
      } catch (const Error&) {
      }
      try {
        bottleneck_matching(w);
        return false;
      } catch (const Error&) {
      }
    }
  }
  return true;
}

// 2. Single-scenario exactness on 200 random instances.
bool criterion_single_exact() {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(2000 + seed);
    int m = 1 + static_cast<int>(rng.below(4));
    int s = 1 + static_cast<int>(rng.below(4));
    int nd = m + s + static_cast<int>(rng.below(static_cast<std::uint64_t>(10 - m - s)));
    auto inst = testutil::random_explicit(m, s, nd, 1, s, 2000 + seed);
    auto d1 = solve_single_scenario(inst, inst.scenarios.sets[0]);
    double total = eval_explicit(inst, d1).total;
    double opt = brute_force_opt(inst).total();
    if (std::abs(total - opt) > kTol) return false;
  }
  return true;
}

// 3. Greedy counterexample: exact totals and the linear ratio.
bool criterion_greedy_counterexample() {
  auto fig1 = gen_line_counterexample(3, 0.1);
  double greedy = eval_explicit(fig1, solve_greedy(fig1)).total;
  double opt = brute_force_opt(fig1).total();
  if (std::abs(greedy - 7.6) > kTol || std::abs(opt - 2.0) > kTol) return false;
  for (int m = 1; m <= 6; ++m) {
    auto inst = gen_line_counterexample(m, 0.1);
    double g = eval_explicit(inst, solve_greedy(inst)).total;
    double o = brute_force_opt(inst).total();
    if (std::abs(g / o - (2.0 - 0.1) * (m + 1) / 2.0) > kTol) return false;
  }
  return true;
}

// 4. Two scenarios: f <= OPT1 + 5*OPT2 on 200 random instances.
bool criterion_two_scenarios() {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(4000 + seed);
    int m = 1 + static_cast<int>(rng.below(4));
    int scen = 1 + static_cast<int>(rng.below(4));
    int nd = std::min(9, m + scen + static_cast<int>(rng.below(4)));
    int n = 2 * scen + static_cast<int>(rng.below(3));
    auto inst = testutil::random_explicit(m, n, nd, 2, scen, 4000 + seed);
    auto d1 = solve_two_scenarios(inst);
    auto opt = brute_force_opt(inst);
    if (eval_explicit(inst, d1).total > opt.opt1 + 5.0 * opt.opt2 + kTol) return false;
  }
  return true;
}

// 5. p = 4 scenarios: f <= OPT1 + 17*OPT2 on 100 random instances.
bool criterion_p_scenarios() {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(5000 + seed);
    int m = 1 + static_cast<int>(rng.below(3));
    int scen = 1 + static_cast<int>(rng.below(3));
    int nd = m + scen + static_cast<int>(rng.below(3));
    int n = 4 * scen + static_cast<int>(rng.below(3));
    auto inst = testutil::random_explicit(m, n, nd, 4, scen, 5000 + seed);
    auto d1 = solve_p_scenarios(inst);
    auto opt = brute_force_opt(inst);
    if (eval_explicit(inst, d1).total > opt.opt1 + 17.0 * opt.opt2 + kTol) return false;
  }
  return true;
}

// 6. Implicit, no surplus: f <= OPT1 + 3*OPT2 on 150 instances (n <= 8, k <= 3).
bool criterion_no_surplus() {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(6000 + seed);
    int k = 1 + static_cast<int>(rng.below(3));
    int n = k + static_cast<int>(rng.below(static_cast<std::uint64_t>(9 - k)));
    int m = 1 + static_cast<int>(rng.below(3));
    auto inst = testutil::random_implicit(m, n, m + k, k, 6000 + seed);
    auto d1 = solve_no_surplus(inst);
    auto opt = brute_force_opt(inst);
    if (eval_implicit_bruteforce(inst, d1).total > opt.opt1 + 3.0 * opt.opt2 + kTol)
      return false;
  }
  return true;
}

// 7. Small surplus (k = 3, l in {1,2}, n >= 2k^2): f <= 3*OPT1 + 17*OPT2.
bool criterion_small_surplus() {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    int l = 1 + static_cast<int>(seed % 2);
    int n = 18 + static_cast<int>(seed % 3);
    auto inst = testutil::random_implicit(3, n, 3 + 3 + l, 3, 7000 + seed);
    auto d1 = solve_small_surplus(inst);
    auto opt = brute_force_opt(inst, 20'000'000);
    double total = eval_implicit_bruteforce(inst, d1, 20'000'000).total;
    if (total > 3.0 * opt.opt1 + 17.0 * opt.opt2 + kTol) return false;
  }
  return true;
}

// 8. k = 1: f <= OPT1 + 15*OPT2 on 150 instances with surplus up to |D|/2,
//    plus bounded behavior on the surplus counterexample.
bool criterion_k1() {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(8000 + seed);
    int m = 2 + static_cast<int>(rng.below(3));
    // surplus l up to |D|/2: |D| = m + 1 + l and l <= (m + 1 + l)/2 iff l <= m + 1.
    int l = static_cast<int>(rng.below(static_cast<std::uint64_t>(m + 2)));
    int n = 2 + static_cast<int>(rng.below(6));
    auto inst = testutil::random_implicit(m, n, m + 1 + l, 1, 8000 + seed);
    auto d1 = solve_k1(inst);
    auto opt = brute_force_opt(inst);
    if (eval_implicit_bruteforce(inst, d1).total > opt.opt1 + 15.0 * opt.opt2 + kTol)
      return false;
  }
  double prev = 0.0;
  for (int m = 2; m <= 6; ++m) {
    auto inst = gen_surplus_counterexample(m);
    auto opt = brute_force_opt(inst);
    auto k1 = solve_k1(inst);
    if (eval_implicit_bruteforce(inst, k1).total > opt.opt1 + 15.0 * opt.opt2 + kTol)
      return false;
    auto biased = solve_single_scenario(inst, {0});
    double total = eval_implicit_bruteforce(inst, biased).total;
    if (total <= prev + 1.0) return false;  // must keep growing linearly
    prev = total;
  }
  return true;
}

// 9. p-supplier: radius <= 3x brute-force optimum on 100 instances.
bool criterion_p_supplier() {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(9000 + seed);
    int nf = 4 + static_cast<int>(rng.below(6));
    int nc = 2 + static_cast<int>(rng.below(6));
    int p = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(nf)));
    auto inst = testutil::random_implicit(2, nc, nf, 1, 9000 + seed);
    std::vector<int> clients, facilities;
    for (int r = 0; r < nc; ++r) clients.push_back(r);
    for (int t = 0; t < nf; ++t) facilities.push_back(t);
    auto picked = p_supplier_3approx(inst, clients, facilities, p);
    double radius = 0.0;
    for (int c : clients) {
      double nearest = brute::kInf;
      for (int f : picked)
        nearest = std::min(nearest, inst.dist.at(inst.r2_vertex(c), inst.d_vertex(f)));
      radius = std::max(radius, nearest);
    }
    if (radius > 3.0 * brute::opt_supplier_radius(inst, clients, facilities, p) + kTol)
      return false;
  }
  return true;
}

// 10. Variant guarantees against their exhaustive oracles (100 instances each).
bool criterion_variants() {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(10'000 + seed);
    int m = 1 + static_cast<int>(rng.below(3));
    int scen = 1 + static_cast<int>(rng.below(3));
    int n = 3 * scen + static_cast<int>(rng.below(4));
    auto inst = testutil::random_explicit(m, n, m + scen, 3, scen, 10'000 + seed);
    std::vector<double> probs = {0.5, 0.25, 0.25};
    auto d1 = solve_tssmb_no_surplus(inst, {probs});
    auto opt = brute_force_opt_stochastic(inst, probs);
    if (eval_stochastic(inst, d1, probs) > opt.opt1 + 3.0 * opt.opt2 + kTol) return false;
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(11'000 + seed);
    int m = 1 + static_cast<int>(rng.below(3));
    int scen = 1 + static_cast<int>(rng.below(3));
    int p = 1 + static_cast<int>(rng.below(3));
    int n = p * scen + static_cast<int>(rng.below(4));
    auto inst = testutil::random_explicit(m, n, m + scen, p, scen, 11'000 + seed);
    auto opt = brute_force_opt_tsrm(inst);
    if (eval_tsrm(inst, solve_tsrm_greedy(inst)).total > 3.0 * opt.opt1 + opt.opt2 + kTol)
      return false;
    if (eval_tsrm(inst, solve_tsrm_no_surplus(inst)).total > opt.opt1 + 5.0 * opt.opt2 + kTol)
      return false;
    if (eval_tsrm(inst, solve_tsrm_balanced(inst)).total > (7.0 / 3.0) * opt.total() + kTol)
      return false;
  }
  return true;
}

// 11. Reduction fidelity: exact 2/4 totals and the 2-partition closed form.
bool criterion_reductions() {
  const std::vector<std::array<int, 3>> yes = {
      {0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 1, 0}, {1, 2, 1}};
  const std::vector<std::array<int, 3>> no = {
      {0, 0, 0}, {1, 1, 1}, {2, 2, 0}, {2, 2, 1}, {0, 1, 2}};
  if (std::abs(brute_force_opt(gen_from_3dm(3, yes, 2)).total() - 2.0) > kTol) return false;
  if (std::abs(brute_force_opt(gen_from_3dm(3, no, 3)).total() - 4.0) > kTol) return false;
  if (std::abs(brute_force_opt(gen_from_set_cover(3, {{0, 1, 2}, {0}}, 1)).total() - 2.0) > kTol)
    return false;
  if (std::abs(brute_force_opt(gen_from_set_cover(3, {{0}, {1}, {2}}, 2)).total() - 4.0) > kTol)
    return false;
  if (std::abs(brute_force_opt_tsrm(gen_from_2partition({1, 1, 1, 1})).total() - 26.0) > kTol)
    return false;
  return true;
}

// 12. Pipeline determinism: byte-identical bench CSV, ratio exactly 1.
bool criterion_bench(const std::string& cli_path) {
  tripfix::write_planted_log("acceptance_planted.csv");
  std::string cmd = cli_path + " bench --trips acceptance_planted.csv --window \"" +
                    tripfix::kWindow + "\" --seed 3 --repeats 2 --format csv 2>/dev/null";
  auto run_once = [&]() {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
  };
  std::string a = run_once(), b = run_once();
  if (a.empty() || a != b) return false;
  // Second line, sixth column (alg_over_opt) must be exactly 1.
  auto line_start = a.find('\n') + 1;
  auto line = a.substr(line_start, a.find('\n', line_start) - line_start);
  int commas = 0;
  size_t pos = 0;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == ',') {
      ++commas;
      if (commas == 5) pos = i + 1;
      if (commas == 6) return line.substr(pos, i - pos) == "1.000000";
    }
  }
  return false;
}

}  // namespace

int main() {
  Harness h;
  h.criterion(1, "matching primitives equal brute force (500 matrices)", criterion_matching);
  h.criterion(2, "single-scenario solver exact on 200 random instances", criterion_single_exact);
  h.criterion(3, "greedy counterexample totals 7.6 / 2.0, linear ratio", criterion_greedy_counterexample);
  h.criterion(4, "two-scenario total <= OPT1 + 5*OPT2 (200 instances)", criterion_two_scenarios);
  h.criterion(5, "p=4 total <= OPT1 + 17*OPT2 (100 instances)", criterion_p_scenarios);
  h.criterion(6, "no-surplus total <= OPT1 + 3*OPT2 (150 instances)", criterion_no_surplus);
  h.criterion(7, "small-surplus total <= 3*OPT1 + 17*OPT2 (100 instances)", criterion_small_surplus);
  h.criterion(8, "k=1 total <= OPT1 + 15*OPT2 (150 instances + counterexample)", criterion_k1);
  h.criterion(9, "p-supplier radius <= 3x optimum (100 instances)", criterion_p_supplier);
  h.criterion(10, "variant guarantees: TSSMB 3*OPT2, TSRM 3/5/(7/3) bounds", criterion_variants);
  h.criterion(11, "reduction fidelity: 3-DM 2/4, set-cover 2/4, 2-partition 26", criterion_reductions);
  h.criterion(12, "bench pipeline: byte-identical CSV, in-sample ratio 1.0",
              [] { return criterion_bench(TSRMB_CLI_PATH); });
  return h.finish();
}
