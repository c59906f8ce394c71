// Experiment driver over the C API: run single experiments, sweep parameter
// grids, estimate convergence orders, list the problem catalog.

#include <CLI11.hpp>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "scolloc.h"

using nlohmann::json;

namespace {

struct Options {
  std::string problem;
  double box_right = 0.0;
  int intervals = 10;
  int points_per_interval = 2;
  std::vector<std::string> patterns;
  std::vector<double> probes;
  int newnot_passes = 2;
  double newton_tol = 1e-6;
  int newton_max_iter = 25;
  std::string out;
  std::string format = "csv";
};

void add_common_flags(CLI::App& cmd, Options& opt) {
  cmd.add_option("--problem", opt.problem, "catalog id, e.g. hydrogen:n=1,l=0 or nls:eps=0.01")
      ->required();
  cmd.add_option("--pattern", opt.patterns,
                 "collocation pattern (repeatable): gaussian, equispaced, redistributed");
  cmd.add_option("--newnot-passes", opt.newnot_passes, "breakpoint redistribution passes");
  cmd.add_option("--newton-tol", opt.newton_tol, "nonlinear stopping tolerance");
  cmd.add_option("--newton-max-iter", opt.newton_max_iter, "nonlinear iteration cap");
}

json config_json(const Options& opt) {
  json j;
  j["problem"] = opt.problem;
  if (opt.box_right > 0.0) j["box_right"] = opt.box_right;
  j["intervals"] = opt.intervals;
  j["points_per_interval"] = opt.points_per_interval;
  if (!opt.patterns.empty()) j["patterns"] = opt.patterns;
  if (!opt.probes.empty()) j["probes"] = opt.probes;
  j["newnot_passes"] = opt.newnot_passes;
  j["newton_tol"] = opt.newton_tol;
  j["newton_max_iter"] = opt.newton_max_iter;
  return j;
}

struct CString {
  char* s = nullptr;
  ~CString() { sc_string_free(s); }
};

int run_one(const Options& opt, bool print_summary) {
  CString report;
  const sc_status st = sc_run_experiment(config_json(opt).dump().c_str(), &report.s);
  if (st != SC_OK) {
    std::fprintf(stderr, "error: %s: %s\n", sc_status_name(st), sc_last_error());
    return 1;
  }
  if (!opt.out.empty()) {
    const sc_status wst = sc_report_write(report.s, opt.format.c_str(), opt.out.c_str());
    if (wst != SC_OK) {
      std::fprintf(stderr, "error: %s: %s\n", sc_status_name(wst), sc_last_error());
      return 1;
    }
  } else if (!print_summary) {
    std::printf("%s\n", report.s);
  }

  int failures = 0;
  const json rep = json::parse(report.s);
  for (const json& w : rep["warnings"])
    std::fprintf(stderr, "warning: %s\n", w.get<std::string>().c_str());
  for (const json& p : rep["patterns"]) {
    if (!p["solved"].get<bool>()) {
      ++failures;
      std::fprintf(stderr, "pattern %s failed: %s\n", p["pattern"].get<std::string>().c_str(),
                   p.value("failure", "").c_str());
    } else if (print_summary) {
      std::printf("%s,%s,%.17g,%d,%d,%.17g,%.17g,%d\n", rep["problem"].get<std::string>().c_str(),
                  p["pattern"].get<std::string>().c_str(), rep["box_right"].get<double>(),
                  rep["intervals"].get<int>(), rep["points_per_interval"].get<int>(),
                  p["max_abs_error"].get<double>(), p["rms_error"].get<double>(),
                  p["iterations"].get<int>());
    }
  }
  return failures > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"B-spline collocation experiments for radial and cubic "
               "Schroedinger boundary value problems"};
  app.require_subcommand(1);
  app.set_config("--config");

  Options run_opt;
  CLI::App* run = app.add_subcommand("run", "solve one configuration and report probe errors");
  add_common_flags(*run, run_opt);
  run->add_option("--box-right", run_opt.box_right,
                  "right endpoint of the box (0 = recommended minimum)");
  run->add_option("--intervals", run_opt.intervals, "number of mesh subintervals");
  run->add_option("--points-per-interval", run_opt.points_per_interval,
                  "collocation sites per subinterval");
  run->add_option("--probes", run_opt.probes,
                  "explicit probe sites (default: breakpoints plus midpoints)");
  run->add_option("--out", run_opt.out, "output path (default: report JSON to stdout)");
  run->add_option("--format", run_opt.format, "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  Options sweep_opt;
  std::vector<int> sweep_l{10}, sweep_r{2};
  std::vector<double> sweep_box{0.0};
  CLI::App* sweep = app.add_subcommand("sweep", "grid over mesh, order and box size");
  add_common_flags(*sweep, sweep_opt);
  sweep->add_option("--intervals", sweep_l, "mesh sizes to sweep");
  sweep->add_option("--points-per-interval", sweep_r, "site counts to sweep");
  sweep->add_option("--box-right", sweep_box, "box sizes to sweep (0 = recommended)");

  Options conv_opt;
  std::vector<int> l_sequence{10, 20, 40};
  CLI::App* converge = app.add_subcommand("converge", "empirical convergence orders");
  add_common_flags(*converge, conv_opt);
  converge->add_option("--box-right", conv_opt.box_right,
                       "right endpoint of the box (0 = recommended minimum)");
  converge->add_option("--points-per-interval", conv_opt.points_per_interval,
                       "collocation sites per subinterval");
  converge->add_option("--intervals", l_sequence, "increasing mesh sizes (at least three)");

  CLI::App* list = app.add_subcommand("list", "list the problem catalog");

  CLI11_PARSE(app, argc, argv);

  if (list->parsed()) {
    CString ids;
    if (sc_catalog(&ids.s) != SC_OK) return 1;
    std::printf("%s\n", ids.s);
    return 0;
  }
  if (run->parsed()) return run_one(run_opt, false);
  if (sweep->parsed()) {
    std::printf(
        "problem,pattern,box_right,intervals,points_per_interval,max_abs_error,rms_error,"
        "iterations\n");
    int rc = 0;
    for (double box : sweep_box)
      for (int l : sweep_l)
        for (int r : sweep_r) {
          Options cell = sweep_opt;
          cell.box_right = box;
          cell.intervals = l;
          cell.points_per_interval = r;
          rc |= run_one(cell, true);
        }
    return rc;
  }
  if (converge->parsed()) {
    json cfg = config_json(conv_opt);
    cfg["l_sequence"] = l_sequence;
    CString orders;
    const sc_status st = sc_convergence_study(cfg.dump().c_str(), &orders.s);
    if (st != SC_OK) {
      std::fprintf(stderr, "error: %s: %s\n", sc_status_name(st), sc_last_error());
      return 1;
    }
    std::printf("%s\n", orders.s);
    return 0;
  }
  return 0;
}
