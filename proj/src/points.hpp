#pragma once

#include "bspline.hpp"

namespace sc {

enum class PatternKind { gaussian, equispaced, redistributed };

/// Interior collocation template on (-1, 1): r strictly increasing points.
/// The redistributed kind reuses the Gaussian template; redistribution is
/// realized by moving breakpoints, not per-interval template points.
struct PointPattern {
  PatternKind kind;
  int r;

  Vec interior_template() const;
};

/// Roots of the degree-r Legendre polynomial, ascending, symmetric about 0,
/// each converged to |P_r(root)| <= 1e-14. Supported for 1 <= r <= 24.
Vec legendre_roots(int r);

/// Equally spaced interior points rho_j = (2j - r - 1) / (r + 1), j = 1..r.
Vec equispaced_template(int r);

/// Affine map of a template to every subinterval [xi_i, xi_{i+1}]:
/// tau = (1 - rho) xi_i / 2 + (1 + rho) xi_{i+1} / 2, globally ascending.
/// Template values at +-1 are rejected so the mapped sites stay strictly
/// inside their subintervals.
Vec map_to_subintervals(const Vec& tmpl, const Breakpoints& breaks);

}  // namespace sc
