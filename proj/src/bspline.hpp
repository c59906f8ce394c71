#pragma once

#include <span>
#include <vector>

namespace sc {

using Vec = std::vector<double>;

/// Strictly increasing mesh sites xi[0..l]; l = number of polynomial pieces.
struct Breakpoints {
  Vec xi;

  explicit Breakpoints(Vec sites);

  int pieces() const { return static_cast<int>(xi.size()) - 1; }
  double left() const { return xi.front(); }
  double right() const { return xi.back(); }
};

/// Nondecreasing knot sequence t of length n + k for a B-spline basis of
/// order k and dimension n. No knot may repeat more than k times.
struct KnotVector {
  Vec t;
  int k = 0;

  KnotVector() = default;
  KnotVector(Vec knots, int order);

  int n() const { return static_cast<int>(t.size()) - k; }
  double left() const { return t[k - 1]; }
  double right() const { return t[n()]; }
};

/// Curry-Schoenberg knot construction: the left endpoint repeated k times,
/// each interior breakpoint xi[i] repeated k - nu[i-1] times, the right
/// endpoint repeated k times. nu[i-1] counts the continuity conditions
/// imposed at interior breakpoint xi[i].
KnotVector make_knots(const Breakpoints& breaks, int k, const std::vector<int>& nu);

/// Largest j in [lo, hi] with t[j] <= x and t[j] < t[j+1]; clamped to the
/// nearest nontrivial interval when x lies outside [t[lo], t[hi+1]].
/// Sites equal to an interior knot land in the interval to its right.
int find_interval(std::span<const double> t, double x, int lo, int hi);
int find_interval(const KnotVector& kv, double x);

/// Values (and derivatives) of the k B-splines possibly nonzero at x:
/// deriv[d][i] = D^d B_{interval-k+1+i, k, t}(x), indices zero-based.
struct BasisValues {
  int interval = 0;
  std::vector<Vec> deriv;

  int first_index() const { return interval - static_cast<int>(deriv[0].size()) + 1; }
};

BasisValues eval_basis(const KnotVector& kv, double x, int nderiv);

/// Spline as coefficients over a B-spline basis.
struct BForm {
  KnotVector knots;
  Vec coeffs;

  BForm() = default;
  BForm(KnotVector kv, Vec c);
};

double bform_eval(const BForm& f, double x, int deriv = 0);

/// Spline as per-piece local polynomial coefficients. coeffs[i][j] is the
/// Taylor coefficient of piece i at power j, i.e. D^j f(xi[i]+) / j!, so
/// piece i evaluates as sum_j coeffs[i][j] * (x - xi[i])^j.
struct PPForm {
  Breakpoints breaks;
  int order;
  std::vector<Vec> coeffs;
};

PPForm bform_to_ppform(const BForm& f);

double ppform_eval(const PPForm& p, double x, int deriv = 0);

}  // namespace sc
