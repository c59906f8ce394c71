#pragma once

#include <string>
#include <vector>

#include "collocate.hpp"

namespace sc {

enum class Family { hydrogen_l0, hydrogen_lm, cubic_nls };

/// Catalog key: hydrogen radial equations by quantum numbers, or the cubic
/// nonlinear equation by perturbation parameter. String form is
/// "hydrogen:n=2,l=1" / "nls:eps=0.01".
struct ProblemId {
  Family family = Family::hydrogen_l0;
  int n_q = 1;
  int l_q = 0;
  double epsilon = 0.1;

  std::string to_string() const;
  static ProblemId parse(const std::string& id);
};

/// How the solved variable relates to the original one: the equation is
/// solved for G(y) with y = x / scale, and F(x) = (x/scale)^power G(x/scale).
struct TransformInfo {
  double scale = 1.0;
  int power = 0;

  bool identity() const { return scale == 1.0 && power == 0; }
};

struct ProblemSetup {
  ProblemId id;
  BVPProblem problem;         // in the solved variable, box [0, box_right]
  TransformInfo transform;
  std::vector<std::string> warnings;
};

/// Bound-state energy in Bohr-radius units, -1 / (2 n^2).
double rescaled_energy(int n_q);

/// Recommended minimum right endpoint (original x-coordinates) for the decay
/// condition to hold at the box edge.
double recommended_box_right(const ProblemId& id);

/// Coefficient-form problem actually solved, with a warning (not an error)
/// when box_right falls below the recommended minimum. box_right is in the
/// solved variable (y for the transformed angular-momentum cases).
ProblemSetup make_problem(const ProblemId& id, double box_right);

/// Closed-form solution in original coordinates (x for hydrogen, the box
/// variable for the cubic equation).
double exact_solution(const ProblemId& id, double x);

/// First and second derivatives of the closed form, for residual oracles.
double exact_solution_deriv(const ProblemId& id, double x, int deriv);

/// Closed form of the transformed G(y); hydrogen cases with l > 0 only.
double exact_transformed(const ProblemId& id, double y);
double exact_transformed_deriv(const ProblemId& id, double y, int deriv);

/// F(x) = (x/s)^p G(x/s).
std::function<double(double)> untransform(std::function<double(double)> g,
                                          const TransformInfo& info);

std::vector<ProblemId> catalog();

}  // namespace sc
