#include "points.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sc {

namespace {

// P_r(x) and P_r'(x) from the three-term recurrence.
std::pair<double, double> legendre(int r, double x) {
  double p0 = 1.0, p1 = x;
  if (r == 0) return {p0, 0.0};
  for (int m = 2; m <= r; ++m) {
    const double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
    p0 = p1;
    p1 = p2;
  }
  const double dp = r * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

Vec legendre_roots(int r) {
  if (r < 1 || r > 24) throw std::invalid_argument("legendre_roots: r must be in [1, 24]");
  Vec roots(r, 0.0);
  const int half = r / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev initial guess for the i-th root (ascending), Newton refined.
    double x = -std::cos(std::numbers::pi * (i + 0.75) / (r + 0.5));
    bool converged = false;
    for (int it = 0; it < 100 && !converged; ++it) {
      auto [p, dp] = legendre(r, x);
      converged = std::abs(p) <= 1e-14;
      if (!converged) x -= p / dp;
    }
    if (!converged) {
      // Bisection fallback on the bracket between adjacent Chebyshev guesses.
      double lo = (i == 0) ? -1.0 : -std::cos(std::numbers::pi * (i + 0.25) / (r + 0.5));
      double hi = -std::cos(std::numbers::pi * (i + 1.25) / (r + 0.5));
      double plo = legendre(r, lo).first;
      for (int it = 0; it < 200; ++it) {
        x = 0.5 * (lo + hi);
        const double p = legendre(r, x).first;
        if (std::abs(p) <= 1e-14) break;
        if ((p > 0) == (plo > 0)) {
          lo = x;
          plo = p;
        } else {
          hi = x;
        }
      }
    }
    roots[i] = x;
    roots[r - 1 - i] = -x;  // enforce exact symmetry
  }
  if (r % 2 == 1) roots[half] = 0.0;
  return roots;
}

Vec equispaced_template(int r) {
  if (r < 1) throw std::invalid_argument("equispaced_template: r must be positive");
  Vec rho(r);
  for (int j = 1; j <= r; ++j) rho[j - 1] = static_cast<double>(2 * j - r - 1) / (r + 1);
  return rho;
}

Vec PointPattern::interior_template() const {
  switch (kind) {
    case PatternKind::equispaced:
      return equispaced_template(r);
    case PatternKind::gaussian:
    case PatternKind::redistributed:
      return legendre_roots(r);
  }
  throw std::invalid_argument("point pattern: unknown kind");
}

Vec map_to_subintervals(const Vec& tmpl, const Breakpoints& breaks) {
  for (double rho : tmpl) {
    if (!(rho > -1.0 && rho < 1.0))
      throw std::invalid_argument("map_to_subintervals: template points must lie inside (-1, 1)");
  }
  Vec sites;
  sites.reserve(tmpl.size() * breaks.pieces());
  for (int i = 0; i < breaks.pieces(); ++i) {
    const double a = breaks.xi[i], b = breaks.xi[i + 1];
    for (double rho : tmpl) sites.push_back(0.5 * (1.0 - rho) * a + 0.5 * (1.0 + rho) * b);
  }
  return sites;
}

}  // namespace sc
