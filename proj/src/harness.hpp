#pragma once

#include <string>
#include <vector>

#include "problems.hpp"

namespace sc {

std::string pattern_name(PatternKind kind);
PatternKind pattern_from_name(const std::string& name);

struct ExperimentConfig {
  ProblemId problem;
  double box_right = 0.0;   // 0 picks the recommended minimum
  int l = 10;
  int r = 2;
  std::vector<PatternKind> patterns = {PatternKind::gaussian, PatternKind::equispaced,
                                       PatternKind::redistributed};
  Vec probes;               // empty = breakpoints plus subinterval midpoints
  int newnot_passes = 2;
  double newton_tol = 1e-6;
  int newton_max_iter = 25;
};

/// Per-pattern outcome. Errors are signed approx - exact at each probe, in
/// original coordinates (after untransforming the angular-momentum cases).
struct PatternResult {
  PatternKind pattern = PatternKind::gaussian;
  bool solved = false;
  std::string failure;      // empty when solved
  Vec probe_x;
  Vec errors;
  Vec approx;
  Vec exact;
  double max_abs_error = 0.0;
  double rms_error = 0.0;
  int iterations = 0;
  bool converged = false;
  Vec final_breaks;
};

struct ErrorReport {
  std::string problem;
  double box_right = 0.0;
  int l = 0;
  int r = 0;
  std::vector<std::string> warnings;
  std::vector<PatternResult> results;

  bool all_solved() const;
};

ErrorReport run_experiment(const ExperimentConfig& cfg);

/// Log-log slope of max error vs mesh width, fitted separately at
/// breakpoints and at subinterval midpoints of the uniform mesh.
struct OrderEstimate {
  PatternKind pattern = PatternKind::gaussian;
  double breakpoint_order = 0.0;
  double midpoint_order = 0.0;
  bool exact_to_roundoff = false;  // errors at machine epsilon; slopes meaningless
};

std::vector<OrderEstimate> convergence_study(const ExperimentConfig& cfg,
                                             const std::vector<int>& l_sequence);

/// CSV columns: pattern, probe_x, error, abs_error; rows ordered by pattern
/// then ascending probe. Floats carry 17 significant digits.
void emit_csv(const ErrorReport& rep, const std::string& path);
void emit_json(const ErrorReport& rep, const std::string& path);
std::string report_json(const ErrorReport& rep);
ErrorReport report_from_json(const std::string& text);

}  // namespace sc
