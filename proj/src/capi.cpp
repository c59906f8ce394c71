#include "scolloc.h"

#include <algorithm>
#include <cstring>
#include <nlohmann/json.hpp>
#include <string>

#include "harness.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

sc_status fail(sc_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

sc_status translate(const std::exception& e) {
  if (dynamic_cast<const sc::SingularSystem*>(&e))
    return fail(SC_SINGULAR_SYSTEM, e.what());
  if (dynamic_cast<const std::invalid_argument*>(&e) ||
      dynamic_cast<const std::domain_error*>(&e))
    return fail(SC_INVALID_ARGUMENT, e.what());
  return fail(SC_INTERNAL_ERROR, e.what());
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sc::PatternKind to_kind(sc_pattern p) {
  switch (p) {
    case SC_PATTERN_GAUSSIAN: return sc::PatternKind::gaussian;
    case SC_PATTERN_EQUISPACED: return sc::PatternKind::equispaced;
    case SC_PATTERN_REDISTRIBUTED: return sc::PatternKind::redistributed;
  }
  throw std::invalid_argument("unknown pattern code");
}

sc::ExperimentConfig parse_config(const char* config_json) {
  if (!config_json) throw std::invalid_argument("config must not be null");
  const json j = json::parse(config_json);
  sc::ExperimentConfig cfg;
  cfg.problem = sc::ProblemId::parse(j.at("problem").get<std::string>());
  cfg.box_right = j.value("box_right", 0.0);
  cfg.l = j.value("intervals", cfg.l);
  cfg.r = j.value("points_per_interval", cfg.r);
  if (j.contains("patterns")) {
    cfg.patterns.clear();
    for (const json& name : j.at("patterns"))
      cfg.patterns.push_back(sc::pattern_from_name(name.get<std::string>()));
  }
  if (j.contains("probes")) cfg.probes = j.at("probes").get<sc::Vec>();
  cfg.newnot_passes = j.value("newnot_passes", cfg.newnot_passes);
  cfg.newton_tol = j.value("newton_tol", cfg.newton_tol);
  cfg.newton_max_iter = j.value("newton_max_iter", cfg.newton_max_iter);
  return cfg;
}

}  // namespace

struct sc_problem {
  sc::ProblemSetup setup;
};

struct sc_solution {
  sc::Solution solution;
  sc::TransformInfo transform;
};

extern "C" {

const char* sc_status_name(sc_status status) {
  switch (status) {
    case SC_OK: return "ok";
    case SC_INVALID_ARGUMENT: return "invalid argument";
    case SC_UNKNOWN_PROBLEM: return "unknown problem";
    case SC_SINGULAR_SYSTEM: return "singular system";
    case SC_IO_ERROR: return "i/o error";
    case SC_INTERNAL_ERROR: return "internal error";
  }
  return "?";
}

const char* sc_last_error(void) { return g_last_error.c_str(); }

void sc_string_free(char* s) { delete[] s; }

sc_status sc_problem_open(const char* id, double box_right, sc_problem** out) {
  if (!id || !out) return fail(SC_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    const sc::ProblemId pid = sc::ProblemId::parse(id);
    const double scale = (pid.family == sc::Family::hydrogen_lm)
                             ? ((pid.n_q == 2) ? 2.0 : 3.0)
                             : 1.0;
    const double box = box_right > 0.0 ? box_right : sc::recommended_box_right(pid) / scale;
    *out = new sc_problem{sc::make_problem(pid, box)};
    return SC_OK;
  } catch (const std::invalid_argument& e) {
    return fail(SC_UNKNOWN_PROBLEM, e.what());
  } catch (const std::exception& e) {
    return translate(e);
  }
}

void sc_problem_close(sc_problem* p) { delete p; }

sc_status sc_problem_exact(const sc_problem* p, double x, double* out) {
  if (!p || !out) return fail(SC_INVALID_ARGUMENT, "null argument");
  try {
    *out = sc::exact_solution(p->setup.id, x);
    return SC_OK;
  } catch (const std::exception& e) {
    return translate(e);
  }
}

sc_status sc_catalog(char** json_out) {
  if (!json_out) return fail(SC_INVALID_ARGUMENT, "null argument");
  json arr = json::array();
  for (const sc::ProblemId& id : sc::catalog()) arr.push_back(id.to_string());
  *json_out = dup_string(arr.dump(2));
  return SC_OK;
}

void sc_solve_options_init(sc_solve_options* opts) {
  if (!opts) return;
  const sc::CollocationConfig defaults;
  opts->intervals = defaults.l;
  opts->points_per_interval = defaults.r;
  opts->pattern = SC_PATTERN_GAUSSIAN;
  opts->newnot_passes = defaults.newnot_passes;
  opts->newton_tol = defaults.newton_tol;
  opts->newton_max_iter = defaults.newton_max_iter;
}

sc_status sc_solve(const sc_problem* p, const sc_solve_options* opts, sc_solution** out) {
  if (!p || !opts || !out) return fail(SC_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    sc::CollocationConfig cfg;
    cfg.l = opts->intervals;
    cfg.r = opts->points_per_interval;
    cfg.pattern = to_kind(opts->pattern);
    cfg.newnot_passes = opts->newnot_passes;
    cfg.newton_tol = opts->newton_tol;
    cfg.newton_max_iter = opts->newton_max_iter;
    *out = new sc_solution{sc::solve(p->setup.problem, cfg), p->setup.transform};
    return SC_OK;
  } catch (const std::exception& e) {
    return translate(e);
  }
}

void sc_solution_close(sc_solution* s) { delete s; }

sc_status sc_solution_eval(const sc_solution* s, double x, int deriv, double* out) {
  if (!s || !out) return fail(SC_INVALID_ARGUMENT, "null argument");
  try {
    *out = sc::bform_eval(s->solution.bform, x, deriv);
    return SC_OK;
  } catch (const std::exception& e) {
    return translate(e);
  }
}

sc_status sc_solution_eval_original(const sc_solution* s, double x, double* out) {
  if (!s || !out) return fail(SC_INVALID_ARGUMENT, "null argument");
  try {
    const sc::BForm& bform = s->solution.bform;
    auto g = [&bform](double y) { return sc::bform_eval(bform, y); };
    *out = sc::untransform(g, s->transform)(x);
    return SC_OK;
  } catch (const std::exception& e) {
    return translate(e);
  }
}

int sc_solution_iterations(const sc_solution* s) { return s ? s->solution.iterations : 0; }

int sc_solution_converged(const sc_solution* s) {
  return (s && s->solution.converged) ? 1 : 0;
}

sc_status sc_solution_breaks(const sc_solution* s, double* buf, int cap, int* count) {
  if (!s || !count) return fail(SC_INVALID_ARGUMENT, "null argument");
  const sc::Vec& xi = s->solution.breaks_used.xi;
  *count = static_cast<int>(xi.size());
  if (buf) {
    const int m = std::min(cap, *count);
    for (int i = 0; i < m; ++i) buf[i] = xi[i];
  }
  return SC_OK;
}

sc_status sc_run_experiment(const char* config_json, char** report_json_out) {
  if (!report_json_out) return fail(SC_INVALID_ARGUMENT, "null argument");
  *report_json_out = nullptr;
  try {
    const sc::ErrorReport rep = sc::run_experiment(parse_config(config_json));
    *report_json_out = dup_string(sc::report_json(rep));
    return SC_OK;
  } catch (const json::exception& e) {
    return fail(SC_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return translate(e);
  }
}

sc_status sc_convergence_study(const char* config_json, char** orders_json_out) {
  if (!orders_json_out) return fail(SC_INVALID_ARGUMENT, "null argument");
  *orders_json_out = nullptr;
  try {
    const json j = json::parse(config_json ? config_json : "");
    const std::vector<int> ls = j.at("l_sequence").get<std::vector<int>>();
    const auto orders = sc::convergence_study(parse_config(config_json), ls);
    json arr = json::array();
    for (const sc::OrderEstimate& est : orders) {
      json o;
      o["pattern"] = sc::pattern_name(est.pattern);
      if (est.exact_to_roundoff) {
        o["order"] = "exact";
      } else {
        o["breakpoint_order"] = est.breakpoint_order;
        o["midpoint_order"] = est.midpoint_order;
      }
      arr.push_back(std::move(o));
    }
    *orders_json_out = dup_string(arr.dump(2));
    return SC_OK;
  } catch (const json::exception& e) {
    return fail(SC_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return translate(e);
  }
}

sc_status sc_report_write(const char* report_json_text, const char* format, const char* path) {
  if (!report_json_text || !format || !path) return fail(SC_INVALID_ARGUMENT, "null argument");
  try {
    const sc::ErrorReport rep = sc::report_from_json(report_json_text);
    const std::string fmt = format;
    if (fmt == "csv") {
      sc::emit_csv(rep, path);
    } else if (fmt == "json") {
      sc::emit_json(rep, path);
    } else {
      return fail(SC_INVALID_ARGUMENT, "format must be csv or json");
    }
    return SC_OK;
  } catch (const json::exception& e) {
    return fail(SC_INVALID_ARGUMENT, e.what());
  } catch (const std::runtime_error& e) {
    return fail(SC_IO_ERROR, e.what());
  } catch (const std::exception& e) {
    return translate(e);
  }
}

}  // extern "C"
