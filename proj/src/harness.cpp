#include "harness.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace sc {

using nlohmann::json;

std::string pattern_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::gaussian: return "gaussian";
    case PatternKind::equispaced: return "equispaced";
    case PatternKind::redistributed: return "redistributed";
  }
  return "?";
}

PatternKind pattern_from_name(const std::string& name) {
  if (name == "gaussian") return PatternKind::gaussian;
  if (name == "equispaced") return PatternKind::equispaced;
  if (name == "redistributed") return PatternKind::redistributed;
  throw std::invalid_argument("unknown pattern: " + name);
}

bool ErrorReport::all_solved() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PatternResult& r) { return r.solved; });
}

namespace {

// Breakpoints plus subinterval midpoints of the uniform mesh, in original
// coordinates (scaled back from the solved variable).
Vec default_probes(double box_right, int l, double scale) {
  Vec probes;
  probes.reserve(2 * l + 1);
  for (int i = 0; i < l; ++i) {
    probes.push_back(scale * box_right * i / l);
    probes.push_back(scale * box_right * (i + 0.5) / l);
  }
  probes.push_back(scale * box_right);
  return probes;
}

PatternResult run_pattern(const ProblemSetup& setup, const ExperimentConfig& cfg,
                          PatternKind pattern, const Vec& probes) {
  PatternResult res;
  res.pattern = pattern;
  CollocationConfig ccfg;
  ccfg.l = cfg.l;
  ccfg.r = cfg.r;
  ccfg.pattern = pattern;
  ccfg.newnot_passes = cfg.newnot_passes;
  ccfg.newton_tol = cfg.newton_tol;
  ccfg.newton_max_iter = cfg.newton_max_iter;

  Solution sol = solve(setup.problem, ccfg);
  res.solved = true;
  res.iterations = sol.iterations;
  res.converged = sol.converged;
  res.final_breaks = sol.breaks_used.xi;

  const BForm& bform = sol.bform;
  auto in_solved_var = [&bform](double y) { return bform_eval(bform, y); };
  auto approx = untransform(in_solved_var, setup.transform);

  res.probe_x = probes;
  res.approx.reserve(probes.size());
  res.exact.reserve(probes.size());
  res.errors.reserve(probes.size());
  double sumsq = 0.0;
  for (double x : probes) {
    const double fx = approx(x);
    const double ex = exact_solution(setup.id, x);
    const double err = fx - ex;
    res.approx.push_back(fx);
    res.exact.push_back(ex);
    res.errors.push_back(err);
    res.max_abs_error = std::max(res.max_abs_error, std::abs(err));
    sumsq += err * err;
  }
  if (!probes.empty()) res.rms_error = std::sqrt(sumsq / probes.size());
  return res;
}

double fit_slope(const Vec& log_h, const Vec& log_e) {
  const std::size_t n = log_h.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += log_h[i];
    sy += log_e[i];
    sxx += log_h[i] * log_h[i];
    sxy += log_h[i] * log_e[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

ErrorReport run_experiment(const ExperimentConfig& cfg) {
  if (cfg.patterns.empty()) throw std::invalid_argument("run_experiment: need at least one pattern");
  double box = cfg.box_right;
  ProblemSetup probe_setup = make_problem(cfg.problem, box > 0.0 ? box : 1.0);
  if (box <= 0.0) box = recommended_box_right(cfg.problem) / probe_setup.transform.scale;
  const ProblemSetup setup = make_problem(cfg.problem, box);

  ErrorReport rep;
  rep.problem = cfg.problem.to_string();
  rep.box_right = box;
  rep.l = cfg.l;
  rep.r = cfg.r;
  rep.warnings = setup.warnings;

  Vec probes = cfg.probes.empty() ? default_probes(box, cfg.l, setup.transform.scale) : cfg.probes;
  std::sort(probes.begin(), probes.end());
  const double xmax = setup.transform.scale * box;
  for (double x : probes) {
    if (x < 0.0 || x > xmax)
      throw std::invalid_argument("run_experiment: probe outside the box");
  }

  for (PatternKind pattern : cfg.patterns) {
    try {
      rep.results.push_back(run_pattern(setup, cfg, pattern, probes));
    } catch (const std::exception& e) {
      PatternResult failed;
      failed.pattern = pattern;
      failed.solved = false;
      failed.failure = e.what();
      rep.results.push_back(std::move(failed));
    }
  }
  return rep;
}

std::vector<OrderEstimate> convergence_study(const ExperimentConfig& cfg,
                                             const std::vector<int>& l_sequence) {
  if (l_sequence.size() < 3)
    throw std::invalid_argument("convergence_study: need at least three mesh sizes");
  for (std::size_t i = 0; i + 1 < l_sequence.size(); ++i) {
    if (l_sequence[i] >= l_sequence[i + 1])
      throw std::invalid_argument("convergence_study: mesh sizes must be strictly increasing");
  }

  std::vector<OrderEstimate> out;
  for (PatternKind pattern : cfg.patterns) {
    Vec log_h, log_eb, log_em;
    double emax = 0.0;
    for (int l : l_sequence) {
      ExperimentConfig cell = cfg;
      cell.l = l;
      cell.patterns = {pattern};
      cell.probes.clear();
      ErrorReport rep = run_experiment(cell);
      const PatternResult& res = rep.results.front();
      if (!res.solved)
        throw std::runtime_error("convergence_study: solve failed for pattern " +
                                 pattern_name(pattern) + ": " + res.failure);
      // Default probes alternate breakpoint, midpoint, ..., breakpoint.
      double eb = 0.0, em = 0.0;
      for (std::size_t q = 0; q < res.errors.size(); ++q) {
        double& acc = (q % 2 == 0) ? eb : em;
        acc = std::max(acc, std::abs(res.errors[q]));
      }
      log_h.push_back(std::log(rep.box_right / l));
      log_eb.push_back(std::log(std::max(eb, 1e-300)));
      log_em.push_back(std::log(std::max(em, 1e-300)));
      emax = std::max({emax, eb, em});
    }
    OrderEstimate est;
    est.pattern = pattern;
    if (emax <= 1e-13) {
      est.exact_to_roundoff = true;
    } else {
      est.breakpoint_order = fit_slope(log_h, log_eb);
      est.midpoint_order = fit_slope(log_h, log_em);
    }
    out.push_back(est);
  }
  return out;
}

namespace {

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json vec_to_json(const Vec& v) {
  json arr = json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

}  // namespace

std::string report_json(const ErrorReport& rep) {
  json j;
  j["problem"] = rep.problem;
  j["box_right"] = rep.box_right;
  j["intervals"] = rep.l;
  j["points_per_interval"] = rep.r;
  j["warnings"] = rep.warnings;
  j["patterns"] = json::array();
  for (const PatternResult& res : rep.results) {
    json p;
    p["pattern"] = pattern_name(res.pattern);
    p["solved"] = res.solved;
    if (!res.solved) {
      p["failure"] = res.failure;
    } else {
      p["probe_x"] = vec_to_json(res.probe_x);
      p["error"] = vec_to_json(res.errors);
      p["approx"] = vec_to_json(res.approx);
      p["exact"] = vec_to_json(res.exact);
      p["max_abs_error"] = res.max_abs_error;
      p["rms_error"] = res.rms_error;
      p["iterations"] = res.iterations;
      p["converged"] = res.converged;
      p["final_breaks"] = vec_to_json(res.final_breaks);
    }
    j["patterns"].push_back(std::move(p));
  }
  return j.dump(2);
}

ErrorReport report_from_json(const std::string& text) {
  const json j = json::parse(text);
  ErrorReport rep;
  rep.problem = j.at("problem").get<std::string>();
  rep.box_right = j.at("box_right").get<double>();
  rep.l = j.at("intervals").get<int>();
  rep.r = j.at("points_per_interval").get<int>();
  rep.warnings = j.at("warnings").get<std::vector<std::string>>();
  for (const json& p : j.at("patterns")) {
    PatternResult res;
    res.pattern = pattern_from_name(p.at("pattern").get<std::string>());
    res.solved = p.at("solved").get<bool>();
    if (!res.solved) {
      res.failure = p.value("failure", "");
    } else {
      res.probe_x = p.at("probe_x").get<Vec>();
      res.errors = p.at("error").get<Vec>();
      res.approx = p.at("approx").get<Vec>();
      res.exact = p.at("exact").get<Vec>();
      res.max_abs_error = p.at("max_abs_error").get<double>();
      res.rms_error = p.at("rms_error").get<double>();
      res.iterations = p.at("iterations").get<int>();
      res.converged = p.at("converged").get<bool>();
      res.final_breaks = p.at("final_breaks").get<Vec>();
    }
    rep.results.push_back(std::move(res));
  }
  return rep;
}

void emit_json(const ErrorReport& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << report_json(rep) << "\n";
  if (!out) throw std::runtime_error("write failed: " + path);
}

void emit_csv(const ErrorReport& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "pattern,probe_x,error,abs_error\n";
  for (const PatternResult& res : rep.results) {
    if (!res.solved) continue;
    for (std::size_t q = 0; q < res.probe_x.size(); ++q) {
      out << pattern_name(res.pattern) << ',' << fmt17(res.probe_x[q]) << ','
          << fmt17(res.errors[q]) << ',' << fmt17(std::abs(res.errors[q])) << "\n";
    }
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace sc
