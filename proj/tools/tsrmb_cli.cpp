// tsrmb: generate, solve, evaluate, oracle-check, and benchmark instances of
// the two-stage robust matching bottleneck problem and its variants.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsrmb/bench.hpp"
#include "tsrmb/evaluate.hpp"
#include "tsrmb/instances.hpp"
#include "tsrmb/json_io.hpp"
#include "tsrmb/solvers_explicit.hpp"
#include "tsrmb/solvers_implicit.hpp"
#include "tsrmb/trips.hpp"
#include "tsrmb/variants.hpp"

using namespace tsrmb;

namespace {

int exit_code_for(const Error& e) {
  static const std::set<std::string> usage = {"BadParameter", "MalformedTriples",
                                              "UncoveredElement", "OddCardinality",
                                              "BadDistribution"};
  static const std::set<std::string> io = {"IoError", "ParseError", "EmptyWindow",
                                           "DisconnectedVertices"};
  if (e.name() == "EnumerationTooLarge") return 4;
  if (usage.count(e.name())) return 2;
  if (io.count(e.name())) return 5;
  return 3;  // solver errors
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stoll(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

// "0,1;2,3" -> {{0,1},{2,3}}
std::vector<std::vector<int>> parse_groups(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::string group;
  for (char c : text + ";") {
    if (c == ';') {
      if (!group.empty()) {
        std::vector<int> g;
        for (long long v : parse_int_list(group)) g.push_back(static_cast<int>(v));
        out.push_back(std::move(g));
      }
      group.clear();
    } else {
      group += c;
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-")
    std::fputs(text.c_str(), stdout);
  else
    write_text_file(out_path, text);
}

std::vector<double> probs_or_uniform(const MetricInstance& inst, const std::string& probs_arg) {
  if (!inst.scenarios.is_explicit())
    fail("BadScenario", "scenario probabilities need explicit scenarios");
  size_t q = inst.scenarios.sets.size();
  if (probs_arg.empty()) return std::vector<double>(q, 1.0 / static_cast<double>(q));
  return parse_double_list(probs_arg);
}

// The planted 3-DM fixtures behind `gen 3dm --planted`.
std::vector<std::array<int, 3>> planted_3dm(int n, bool yes) {
  std::vector<std::array<int, 3>> triples;
  if (yes) {
    for (int i = 0; i < n; ++i) triples.push_back({i, i, i});
    for (int i = 0; i + 1 < n; ++i) triples.push_back({i, (i + 1) % n, i});
  } else {
    if (n != 3) fail("BadParameter", "--planted no is defined for n = 3");
    triples = {{0, 0, 0}, {1, 1, 1}, {2, 2, 0}, {2, 2, 1}, {0, 1, 2}};
  }
  return triples;
}

struct SolveArgs {
  std::string solver, instance_path, out_path, probs;
  std::int64_t enum_limit = kDefaultEnumLimit;
};

int run_solve(const SolveArgs& a) {
  MetricInstance inst = load_instance(a.instance_path);
  auto t_start = std::chrono::steady_clock::now();

  FirstStageDecision d1;
  double guess = -1.0;
  bool has_guess = false;
  std::string objective = "tsrmb";

  if (a.solver == "greedy") {
    d1 = solve_greedy(inst);
  } else if (a.solver == "single") {
    if (!inst.scenarios.is_explicit() || inst.scenarios.count() != 1)
      fail("BadScenario", "--solver single needs exactly one explicit scenario");
    d1 = solve_single_scenario(inst, inst.scenarios.sets[0]);
  } else if (a.solver == "two") {
    d1 = solve_two_scenarios(inst, &guess);
    has_guess = true;
  } else if (a.solver == "pscen") {
    d1 = solve_p_scenarios(inst, &guess);
    has_guess = inst.scenarios.count() > 1;
  } else if (a.solver == "nosurplus") {
    d1 = solve_no_surplus(inst);
  } else if (a.solver == "smallsurplus") {
    d1 = solve_small_surplus(inst);
  } else if (a.solver == "k1") {
    d1 = solve_k1(inst, &guess);
    has_guess = true;
  } else if (a.solver == "tssmb") {
    d1 = solve_tssmb_no_surplus(inst, ScenarioDistribution{probs_or_uniform(inst, a.probs)});
    objective = "tssmb";
  } else if (a.solver == "tsrm-greedy") {
    d1 = solve_tsrm_greedy(inst);
    objective = "tsrm";
  } else if (a.solver == "tsrm-ns") {
    d1 = solve_tsrm_no_surplus(inst);
    objective = "tsrm";
  } else if (a.solver == "tsrm-balanced") {
    d1 = solve_tsrm_balanced(inst);
    objective = "tsrm";
  } else {
    fail("BadParameter", "unknown solver '" + a.solver + "'");
  }

  SolveReport rep;
  if (objective == "tsrm") {
    rep = eval_tsrm(inst, d1);
  } else if (objective == "tssmb") {
    auto probs = probs_or_uniform(inst, a.probs);
    rep = eval_explicit(inst, d1);
    rep.worst_cost2 = eval_stochastic(inst, d1, probs) - rep.cost1;  // expected cost2
    rep.total = rep.cost1 + rep.worst_cost2;
    rep.worst_scenario.clear();
  } else if (inst.scenarios.is_explicit()) {
    rep = eval_explicit(inst, d1);
  } else {
    rep = eval_implicit_bruteforce(inst, d1, a.enum_limit);
  }
  rep.solver_name = a.solver;
  if (has_guess) rep.opt2_guess = guess;

  double wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t_start)
                       .count();
  emit(to_canonical_json(report_to_json(rep, d1, wall_ms)), a.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-stage robust matching bottleneck solver kit"};
  app.require_subcommand(1);

  // ---- gen ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  gen->require_subcommand(1);
  std::string gen_out;
  std::uint64_t gen_seed = 1;

  auto* gen_line = gen->add_subcommand("line", "greedy-defeating line instance");
  int line_m = 3;
  double line_eps = 0.1;
  gen_line->add_option("--m", line_m);
  gen_line->add_option("--eps", line_eps);
  gen_line->add_option("--out", gen_out);

  auto* gen_random = gen->add_subcommand("random", "uniform points in a square");
  int rr1 = 3, rr2 = 6, rd = 8, rscen = 2, rsize = 2, rimplicit = 0;
  double rbox = 100.0;
  gen_random->add_option("--r1", rr1);
  gen_random->add_option("--r2", rr2);
  gen_random->add_option("--d", rd);
  gen_random->add_option("--scenarios", rscen);
  gen_random->add_option("--scenario-size", rsize);
  gen_random->add_option("--implicit-k", rimplicit);
  gen_random->add_option("--box", rbox);
  gen_random->add_option("--seed", gen_seed);
  gen_random->add_option("--out", gen_out);

  auto* gen_surplus = gen->add_subcommand("surplus", "surplus-one counterexample");
  int surplus_m = 3;
  gen_surplus->add_option("--m", surplus_m);
  gen_surplus->add_option("--out", gen_out);

  auto* gen_3dm = gen->add_subcommand("3dm", "3-dimensional-matching reduction");
  int dm_n = 3, dm_scen = 2;
  std::string dm_planted = "yes", dm_triples;
  gen_3dm->add_option("--n", dm_n);
  gen_3dm->add_option("--planted", dm_planted)->check(CLI::IsMember({"yes", "no"}));
  gen_3dm->add_option("--scenarios", dm_scen)->check(CLI::IsMember({"2", "3"}));
  gen_3dm->add_option("--triples", dm_triples, "explicit triples 'u,v,w;u,v,w;...'");
  gen_3dm->add_option("--out", gen_out);

  auto* gen_cover = gen->add_subcommand("setcover", "set-cover reduction");
  int sc_universe = 3, sc_p = 1;
  std::string sc_sets = "0,1,2;0";
  gen_cover->add_option("--universe", sc_universe);
  gen_cover->add_option("--sets", sc_sets, "sets '0,1;2,3;...'");
  gen_cover->add_option("--p", sc_p);
  gen_cover->add_option("--out", gen_out);

  auto* gen_2part = gen->add_subcommand("2part", "2-partition reduction (TSRM)");
  std::string tp_values = "1,1,1,1";
  gen_2part->add_option("--values", tp_values);
  gen_2part->add_option("--out", gen_out);

  auto* gen_trips = gen->add_subcommand("trips", "ingest a trip-log window");
  std::string trips_csv, trips_window, trips_bbox = "-180,180,-90,90", trips_offsets = "7,14";
  gen_trips->add_option("--trips", trips_csv)->required();
  gen_trips->add_option("--window", trips_window, "YYYY-MM-DD HH:MM:SS")->required();
  gen_trips->add_option("--bbox", trips_bbox, "lon_min,lon_max,lat_min,lat_max");
  gen_trips->add_option("--offsets", trips_offsets, "scenario day offsets");
  gen_trips->add_option("--seed", gen_seed);
  gen_trips->add_option("--out", gen_out);

  // ---- solve / eval / oracle ----------------------------------------------
  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "run a solver and report the cost split");
  solve->add_option("--solver", solve_args.solver)
      ->required()
      ->check(CLI::IsMember({"greedy", "single", "two", "pscen", "nosurplus", "smallsurplus",
                             "k1", "tssmb", "tsrm-greedy", "tsrm-ns", "tsrm-balanced"}));
  solve->add_option("--instance", solve_args.instance_path)->required();
  solve->add_option("--out", solve_args.out_path);
  solve->add_option("--probs", solve_args.probs, "scenario probabilities (tssmb)");
  solve->add_option("--enum-limit", solve_args.enum_limit);

  auto* eval = app.add_subcommand("eval", "re-evaluate a stored decision");
  std::string eval_instance, eval_decision, eval_out, eval_objective = "tsrmb", eval_probs;
  std::int64_t eval_limit = kDefaultEnumLimit;
  eval->add_option("--instance", eval_instance)->required();
  eval->add_option("--decision", eval_decision, "decision or report JSON")->required();
  eval->add_option("--objective", eval_objective)
      ->check(CLI::IsMember({"tsrmb", "tsrm", "tssmb"}));
  eval->add_option("--probs", eval_probs);
  eval->add_option("--enum-limit", eval_limit);
  eval->add_option("--out", eval_out);

  auto* oracle = app.add_subcommand("oracle", "exhaustive optimum (OPT1/OPT2 split)");
  std::string oracle_instance, oracle_out, oracle_objective = "tsrmb", oracle_probs;
  std::int64_t oracle_limit = kDefaultEnumLimit;
  oracle->add_option("--instance", oracle_instance)->required();
  oracle->add_option("--objective", oracle_objective)
      ->check(CLI::IsMember({"tsrmb", "tsrm", "tssmb"}));
  oracle->add_option("--probs", oracle_probs);
  oracle->add_option("--enum-limit", oracle_limit);
  oracle->add_option("--out", oracle_out);

  // ---- bench ----------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "per-window ratio table");
  std::string bench_trips_path, bench_instances_dir, bench_bbox = "-180,180,-90,90";
  std::string bench_offsets = "7,14", bench_format = "csv", bench_out;
  std::vector<std::string> bench_windows;
  std::uint64_t bench_seed = 1;
  int bench_repeats = 10;
  bench->add_option("--trips", bench_trips_path);
  bench->add_option("--window", bench_windows, "repeatable; YYYY-MM-DD HH:MM:SS");
  bench->add_option("--instances", bench_instances_dir);
  bench->add_option("--bbox", bench_bbox);
  bench->add_option("--offsets", bench_offsets);
  bench->add_option("--seed", bench_seed);
  bench->add_option("--repeats", bench_repeats);
  bench->add_option("--format", bench_format)->check(CLI::IsMember({"csv", "json"}));
  bench->add_option("--out", bench_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      MetricInstance inst;
      std::vector<int> realized;  // appended as the last scenario for trips
      if (gen_line->parsed()) {
        inst = gen_line_counterexample(line_m, line_eps);
      } else if (gen_random->parsed()) {
        ScenarioSpec spec = rimplicit > 0 ? ScenarioSpec::implicit(rimplicit)
                                          : ScenarioSpec::explicit_random(rscen, rsize);
        inst = gen_random_euclidean(rr1, rr2, rd, spec, rbox, gen_seed);
      } else if (gen_surplus->parsed()) {
        inst = gen_surplus_counterexample(surplus_m);
      } else if (gen_3dm->parsed()) {
        std::vector<std::array<int, 3>> triples;
        if (!dm_triples.empty()) {
          for (const auto& g : parse_groups(dm_triples)) {
            if (g.size() != 3) fail("MalformedTriples", "each triple needs three indices");
            triples.push_back({g[0], g[1], g[2]});
          }
        } else {
          triples = planted_3dm(dm_n, dm_planted == "yes");
        }
        inst = gen_from_3dm(dm_n, triples, dm_scen);
      } else if (gen_cover->parsed()) {
        inst = gen_from_set_cover(sc_universe, parse_groups(sc_sets), sc_p);
      } else if (gen_2part->parsed()) {
        inst = gen_from_2partition(parse_int_list(tp_values));
      } else if (gen_trips->parsed()) {
        auto bbox_v = parse_double_list(trips_bbox);
        if (bbox_v.size() != 4) fail("BadParameter", "--bbox needs four numbers");
        WindowSpec spec;
        spec.t0 = parse_civil_utc(trips_window);
        spec.scenario_day_offsets.clear();
        for (long long v : parse_int_list(trips_offsets))
          spec.scenario_day_offsets.push_back(static_cast<int>(v));
        IngestResult got = ingest_trips_csv(
            trips_csv, spec, BoundingBox{bbox_v[0], bbox_v[1], bbox_v[2], bbox_v[3]}, gen_seed);
        inst = got.instance;
        auto sets = inst.scenarios.sets;
        sets.push_back(got.realized);
        inst.scenarios = ScenarioSet::explicit_sets(sets);
      }
      emit(to_canonical_json(instance_to_json(inst)), gen_out);
      int surplus_or_na = 0;
      bool have_surplus = true;
      try {
        surplus_or_na = surplus(inst);
      } catch (const Error&) {
        have_surplus = false;
      }
      std::fprintf(stderr, "instance: |R1|=%d |R2|=%d |D|=%d scenarios=%s surplus=%s\n",
                   inst.n_r1, inst.n_r2(), inst.n_d,
                   inst.scenarios.is_explicit()
                       ? std::to_string(inst.scenarios.count()).c_str()
                       : ("implicit k=" + std::to_string(inst.scenarios.k)).c_str(),
                   have_surplus ? std::to_string(surplus_or_na).c_str() : "n/a");
      return 0;
    }

    if (solve->parsed()) return run_solve(solve_args);

    if (eval->parsed()) {
      MetricInstance inst = load_instance(eval_instance);
      nlohmann::json dj = nlohmann::json::parse(read_text_file(eval_decision));
      FirstStageDecision d1 = decision_from_json(dj);
      SolveReport rep;
      if (eval_objective == "tsrm") {
        rep = eval_tsrm(inst, d1);
      } else if (eval_objective == "tssmb") {
        auto probs = probs_or_uniform(inst, eval_probs);
        rep = eval_explicit(inst, d1);
        rep.worst_cost2 = eval_stochastic(inst, d1, probs) - rep.cost1;
        rep.total = rep.cost1 + rep.worst_cost2;
        rep.worst_scenario.clear();
      } else if (inst.scenarios.is_explicit()) {
        rep = eval_explicit(inst, d1);
      } else {
        rep = eval_implicit_bruteforce(inst, d1, eval_limit);
      }
      rep.solver_name = "eval";
      emit(to_canonical_json(report_to_json(rep, d1, 0.0)), eval_out);
      return 0;
    }

    if (oracle->parsed()) {
      MetricInstance inst = load_instance(oracle_instance);
      OptDecomposition opt;
      if (oracle_objective == "tsrm")
        opt = brute_force_opt_tsrm(inst, oracle_limit);
      else if (oracle_objective == "tssmb")
        opt = brute_force_opt_stochastic(inst, probs_or_uniform(inst, oracle_probs), oracle_limit);
      else
        opt = brute_force_opt(inst, oracle_limit);
      emit(to_canonical_json(opt_to_json(opt)), oracle_out);
      return 0;
    }

    if (bench->parsed()) {
      std::vector<BenchRow> rows;
      if (!bench_instances_dir.empty()) {
        rows = bench_instances(bench_instances_dir);
      } else if (!bench_trips_path.empty()) {
        if (bench_windows.empty()) fail("BadParameter", "--window is required with --trips");
        auto bbox_v = parse_double_list(bench_bbox);
        if (bbox_v.size() != 4) fail("BadParameter", "--bbox needs four numbers");
        WindowSpec spec;
        spec.scenario_day_offsets.clear();
        for (long long v : parse_int_list(bench_offsets))
          spec.scenario_day_offsets.push_back(static_cast<int>(v));
        rows = bench_trips(bench_trips_path, bench_windows, spec,
                           BoundingBox{bbox_v[0], bbox_v[1], bbox_v[2], bbox_v[3]}, bench_seed,
                           bench_repeats);
      } else {
        fail("BadParameter", "bench needs --trips or --instances");
      }
      emit(bench_format == "csv" ? bench_csv(rows) : bench_json(rows), bench_out);
      return 0;
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "tsrmb: %s: %s\n", e.name().c_str(), e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "tsrmb: %s\n", e.what());
    return 5;
  }
  return 0;
}
