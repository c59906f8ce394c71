#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "banded.hpp"
#include "bspline.hpp"
#include "points.hpp"

namespace sc {

/// alpha * z + beta * Dz = gamma at one endpoint of the box.
struct SideCondition {
  enum class End { left, right };
  End at;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Pointwise coefficients of v1 z + v2 Dz + v3 D^2 z = v4.
struct OdeCoeffs {
  double v1 = 0.0, v2 = 0.0, v3 = 0.0, v4 = 0.0;
};

using CoeffFn = std::function<OdeCoeffs(double)>;
using Approximant = std::function<double(double)>;
/// Rebuilds interior coefficients around a current approximant (one Newton
/// linearization step); absent for linear problems.
using RelinearizeFn = std::function<CoeffFn(const Approximant&)>;

/// Second-order two-point BVP in coefficient form over box [a, b].
struct BVPProblem {
  double a = 0.0;
  double b = 1.0;
  CoeffFn coeff;               // interior sites only; v3 must be nonzero there
  SideCondition left;
  SideCondition right;
  RelinearizeFn relinearize;   // present iff the problem is nonlinear
  std::function<double(double)> exact;  // optional oracle

  bool nonlinear() const { return static_cast<bool>(relinearize); }
};

struct CollocationConfig {
  int l = 10;                  // subintervals
  int r = 2;                   // collocation points per subinterval; order k = r + 2
  PatternKind pattern = PatternKind::gaussian;
  int newnot_passes = 2;
  double newton_tol = 1e-6;
  int newton_max_iter = 25;

  int order() const { return r + 2; }
};

struct Solution {
  BForm bform;
  PPForm ppform;
  Breakpoints breaks_used;
  int iterations = 0;
  bool converged = true;
};

/// l + 1 uniform breakpoints spanning [a, b].
Breakpoints build_breaks(double a, double b, int l);

/// Collocation matrix and right-hand side: one row per site, boundary rows
/// from the side conditions, interior rows v1 B + v2 DB + v3 D^2 B. Sites
/// must be ascending with sites.front() = a and sites.back() = b.
std::pair<BandedMatrix, Vec> assemble_system(const BVPProblem& p, const Breakpoints& breaks,
                                             int k, const Vec& sites);

Solution solve_linear(const BVPProblem& p, const CollocationConfig& cfg);

Solution solve_newton(const BVPProblem& p, const CollocationConfig& cfg,
                      const Approximant& initial = nullptr);

/// New breakpoints equidistributing a density built from the jumps of the
/// (k-1)-th derivative of the current approximant, estimating |D^k z|^{1/k}.
/// All jumps zero leaves a uniform mesh unchanged.
Breakpoints newnot_redistribute(const Solution& sol, int l);

/// Solve on uniform breaks, then repeat (redistribute -> solve with the
/// Gaussian template) cfg.newnot_passes times.
Solution solve_with_redistribution(const BVPProblem& p, const CollocationConfig& cfg);

/// Dispatches on cfg.pattern: plain solve for gaussian/equispaced, the
/// redistribution loop otherwise. Nonlinear problems go through Newton.
Solution solve(const BVPProblem& p, const CollocationConfig& cfg);

}  // namespace sc
