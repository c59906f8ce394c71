#include "bspline.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace sc {

Breakpoints::Breakpoints(Vec sites) : xi(std::move(sites)) {
  if (xi.size() < 2) throw std::invalid_argument("breakpoints: need at least two sites");
  for (std::size_t i = 0; i + 1 < xi.size(); ++i) {
    if (!(xi[i] < xi[i + 1]))
      throw std::invalid_argument("breakpoints: sites must be strictly increasing");
  }
}

KnotVector::KnotVector(Vec knots, int order) : t(std::move(knots)), k(order) {
  if (k < 1) throw std::invalid_argument("knots: order must be positive");
  if (static_cast<int>(t.size()) < 2 * k)
    throw std::invalid_argument("knots: need at least 2k knots");
  for (std::size_t j = 0; j + 1 < t.size(); ++j) {
    if (t[j] > t[j + 1]) throw std::invalid_argument("knots: sequence must be nondecreasing");
  }
  for (std::size_t j = 0; j + k < t.size(); ++j) {
    if (!(t[j] < t[j + k]))
      throw std::invalid_argument("knots: multiplicity exceeds the order");
  }
}

KnotVector make_knots(const Breakpoints& breaks, int k, const std::vector<int>& nu) {
  const int l = breaks.pieces();
  if (k < 1) throw std::invalid_argument("make_knots: order must be positive");
  if (static_cast<int>(nu.size()) != l - 1)
    throw std::invalid_argument("make_knots: nu must have one entry per interior breakpoint");
  Vec t;
  t.reserve(static_cast<std::size_t>(k) * 2 + static_cast<std::size_t>(k) * (l - 1));
  t.insert(t.end(), k, breaks.xi.front());
  for (int i = 1; i < l; ++i) {
    const int mult = k - nu[i - 1];
    if (mult < 0 || nu[i - 1] < 0)
      throw std::invalid_argument("make_knots: continuity count out of range at breakpoint " +
                                  std::to_string(i));
    t.insert(t.end(), mult, breaks.xi[i]);
  }
  t.insert(t.end(), k, breaks.xi.back());
  return KnotVector(std::move(t), k);
}

int find_interval(std::span<const double> t, double x, int lo, int hi) {
  auto first = t.begin() + lo;
  auto last = t.begin() + hi + 2;
  int j = static_cast<int>(std::upper_bound(first, last, x) - t.begin()) - 1;
  j = std::clamp(j, lo, hi);
  while (j > lo && !(t[j] < t[j + 1])) --j;
  while (j < hi && !(t[j] < t[j + 1])) ++j;
  return j;
}

int find_interval(const KnotVector& kv, double x) {
  return find_interval(kv.t, x, kv.k - 1, kv.n() - 1);
}

BasisValues eval_basis(const KnotVector& kv, double x, int nderiv) {
  const int k = kv.k;
  if (nderiv < 0 || nderiv >= k)
    throw std::invalid_argument("eval_basis: derivative order must be below the spline order");
  const Vec& t = kv.t;
  const int j = find_interval(kv, x);

  // Triangle of values: vals[m-1][i] = B_{j-m+1+i, m, t}(x) for m = 1..k.
  std::vector<Vec> vals(k);
  vals[0] = {1.0};
  Vec deltar(k), deltal(k);
  {
    Vec biatx(k, 0.0);
    biatx[0] = 1.0;
    for (int m = 1; m < k; ++m) {
      deltar[m - 1] = t[j + m] - x;
      deltal[m - 1] = x - t[j + 1 - m];
      double saved = 0.0;
      for (int i = 0; i < m; ++i) {
        const double term = biatx[i] / (deltar[i] + deltal[m - 1 - i]);
        biatx[i] = saved + deltar[i] * term;
        saved = deltal[m - 1 - i] * term;
      }
      biatx[m] = saved;
      vals[m] = Vec(biatx.begin(), biatx.begin() + m + 1);
    }
  }

  BasisValues out;
  out.interval = j;
  out.deriv.assign(nderiv + 1, Vec(k, 0.0));
  out.deriv[0] = vals[k - 1];

  if (nderiv > 0) {
    // cmat[i] holds the coefficients of D^d B_{base+i,k} over the
    // order-(k-d) basis, indexed by global spline index p = base + q.
    const int base = j - k + 1;
    std::vector<Vec> cmat(k, Vec(k, 0.0));
    for (int i = 0; i < k; ++i) cmat[i][i] = 1.0;
    for (int d = 1; d <= nderiv; ++d) {
      const int m = k - d + 1;  // order being differentiated
      for (int i = 0; i < k; ++i) {
        Vec next(k, 0.0);
        for (int q = 0; q < k; ++q) {
          const int p = base + q;
          const double span = t[p + m - 1] - t[p];
          if (span > 0.0) {
            const double prev = (q > 0) ? cmat[i][q - 1] : 0.0;
            next[q] = (m - 1) * (cmat[i][q] - prev) / span;
          }
        }
        cmat[i] = std::move(next);
      }
      const int ord = k - d;
      const Vec& v = vals[ord - 1];
      for (int i = 0; i < k; ++i) {
        double s = 0.0;
        for (int a = 0; a < ord; ++a) {
          const int q = (j - ord + 1 + a) - base;
          s += cmat[i][q] * v[a];
        }
        out.deriv[d][i] = s;
      }
    }
  }
  return out;
}

BForm::BForm(KnotVector kv, Vec c) : knots(std::move(kv)), coeffs(std::move(c)) {
  if (static_cast<int>(coeffs.size()) != knots.n())
    throw std::invalid_argument("bform: coefficient count must equal the basis dimension");
}

double bform_eval(const BForm& f, double x, int deriv) {
  const BasisValues bv = eval_basis(f.knots, x, deriv);
  const int k = f.knots.k;
  const int base = bv.interval - k + 1;
  double s = 0.0;
  for (int i = 0; i < k; ++i) s += f.coeffs[base + i] * bv.deriv[deriv][i];
  return s;
}

PPForm bform_to_ppform(const BForm& f) {
  const int k = f.knots.k;
  const Vec& t = f.knots.t;
  // Distinct knots inside the basic interval form the breakpoint sequence.
  Vec xi;
  xi.push_back(f.knots.left());
  for (int j = k; j <= f.knots.n(); ++j) {
    if (t[j] > xi.back()) xi.push_back(t[j]);
  }
  Breakpoints breaks(std::move(xi));

  std::vector<Vec> coeffs(breaks.pieces(), Vec(k, 0.0));
  double factorial = 1.0;
  std::vector<double> inv_fact(k);
  for (int m = 0; m < k; ++m) {
    if (m > 0) factorial *= m;
    inv_fact[m] = 1.0 / factorial;
  }
  for (int i = 0; i < breaks.pieces(); ++i) {
    const BasisValues bv = eval_basis(f.knots, breaks.xi[i], k - 1);
    const int base = bv.interval - k + 1;
    for (int m = 0; m < k; ++m) {
      double dm = 0.0;
      for (int a = 0; a < k; ++a) dm += f.coeffs[base + a] * bv.deriv[m][a];
      coeffs[i][m] = dm * inv_fact[m];
    }
  }
  return PPForm{std::move(breaks), k, std::move(coeffs)};
}

double ppform_eval(const PPForm& p, double x, int deriv) {
  const int k = p.order;
  if (deriv < 0 || deriv >= k)
    throw std::invalid_argument("ppform_eval: derivative order must be below the order");
  const int i = find_interval(p.breaks.xi, x, 0, p.breaks.pieces() - 1);
  const double dx = x - p.breaks.xi[i];
  const Vec& c = p.coeffs[i];
  // Nested multiplication on the differentiated Taylor coefficients.
  double s = 0.0;
  for (int m = k - 1; m >= deriv; --m) {
    double falling = 1.0;
    for (int q = 0; q < deriv; ++q) falling *= (m - q);
    s = s * dx + c[m] * falling;
  }
  return s;
}

}  // namespace sc
