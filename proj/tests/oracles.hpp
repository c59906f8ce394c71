// Independent brute-force oracles used only by tests. These deliberately
// avoid the implementation paths they are checking.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

using Vec = std::vector<double>;

// Divided difference [sites[0], ..., sites.back()] g over distinct sites.
inline double divided_difference(const Vec& sites, const std::function<double(double)>& g) {
  if (sites.size() == 1) return g(sites[0]);
  Vec left(sites.begin(), sites.end() - 1);
  Vec right(sites.begin() + 1, sites.end());
  const double span = sites.back() - sites.front();
  if (span == 0.0) throw std::invalid_argument("divided_difference: repeated sites unsupported");
  return (divided_difference(right, g) - divided_difference(left, g)) / span;
}

// Normalised B-spline value from the truncated-power divided-difference
// definition; requires simple (distinct) knots t[j..j+k].
inline double bspline_divided_difference(const Vec& t, int j, int k, double x) {
  Vec sites(t.begin() + j, t.begin() + j + k + 1);
  // (u - x)_+^{k-1}; the k = 1 case is the right-continuous step function.
  auto g = [k, x](double u) {
    if (k == 1) return u >= x ? 1.0 : 0.0;
    return std::pow(std::max(u - x, 0.0), k - 1);
  };
  return (t[j + k] - t[j]) * divided_difference(sites, g);
}

// Dense Gaussian elimination with partial pivoting.
inline Vec dense_solve(std::vector<Vec> a, Vec b) {
  const int n = static_cast<int>(b.size());
  for (int i = 0; i < n; ++i) {
    int piv = i;
    for (int r = i + 1; r < n; ++r)
      if (std::abs(a[r][i]) > std::abs(a[piv][i])) piv = r;
    std::swap(a[i], a[piv]);
    std::swap(b[i], b[piv]);
    if (a[i][i] == 0.0) throw std::runtime_error("dense_solve: singular");
    for (int r = i + 1; r < n; ++r) {
      const double m = a[r][i] / a[i][i];
      if (m == 0.0) continue;
      for (int c = i; c < n; ++c) a[r][c] -= m * a[i][c];
      b[r] -= m * b[i];
    }
  }
  Vec x(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

// Sign changes of P_r on a fine grid bracket each root; bisection finishes.
inline Vec legendre_roots_bisection(int r) {
  auto p = [r](double x) {
    double p0 = 1.0, p1 = x;
    for (int m = 2; m <= r; ++m) {
      const double p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
      p0 = p1;
      p1 = p2;
    }
    return r == 0 ? p0 : p1;
  };
  Vec roots;
  const int grid = 20000;
  double prev_x = -1.0, prev_p = p(prev_x);
  for (int i = 1; i <= grid; ++i) {
    const double x = -1.0 + 2.0 * i / grid;
    const double px = p(x);
    if ((prev_p < 0) != (px < 0)) {
      double lo = prev_x, hi = x, plo = prev_p;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double pm = p(mid);
        if ((pm < 0) == (plo < 0)) {
          lo = mid;
          plo = pm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_p = px;
  }
  return roots;
}

}  // namespace oracles
