#include "collocate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sc {

namespace {

Vec collocation_sites(const Breakpoints& breaks, const Vec& tmpl) {
  Vec sites;
  sites.reserve(tmpl.size() * breaks.pieces() + 2);
  sites.push_back(breaks.left());
  const Vec interior = map_to_subintervals(tmpl, breaks);
  sites.insert(sites.end(), interior.begin(), interior.end());
  sites.push_back(breaks.right());
  return sites;
}

KnotVector collocation_knots(const Breakpoints& breaks, int k) {
  // Continuity of value and first derivative at every interior breakpoint.
  return make_knots(breaks, k, std::vector<int>(breaks.pieces() - 1, 2));
}

Solution make_solution(BForm bform, Breakpoints breaks, int iterations, bool converged) {
  PPForm pp = bform_to_ppform(bform);
  return Solution{std::move(bform), std::move(pp), std::move(breaks), iterations, converged};
}

// One linear collocation solve on the given mesh with the given template.
BForm solve_once(const BVPProblem& p, const CoeffFn& coeff, const Breakpoints& breaks, int k,
                 const Vec& tmpl) {
  const KnotVector knots = collocation_knots(breaks, k);
  const Vec sites = collocation_sites(breaks, tmpl);
  BVPProblem local = p;
  local.coeff = coeff;
  auto [matrix, rhs] = assemble_system(local, breaks, k, sites);
  Vec coeffs = factor_solve(std::move(matrix), rhs);
  return BForm(knots, std::move(coeffs));
}

Approximant line_through_side_conditions(const BVPProblem& p) {
  // c0 + c1 x matching both side conditions, the minimal unbiased start.
  const SideCondition& sl = p.left;
  const SideCondition& sr = p.right;
  const double m00 = sl.alpha, m01 = sl.alpha * p.a + sl.beta;
  const double m10 = sr.alpha, m11 = sr.alpha * p.b + sr.beta;
  const double det = m00 * m11 - m01 * m10;
  const double scale = std::max({std::abs(m00), std::abs(m01), std::abs(m10), std::abs(m11)});
  if (std::abs(det) <= 1e-12 * scale * scale) return [](double) { return 0.0; };
  const double c0 = (sl.gamma * m11 - sr.gamma * m01) / det;
  const double c1 = (m00 * sr.gamma - m10 * sl.gamma) / det;
  return [c0, c1](double x) { return c0 + c1 * x; };
}

void check_config(const BVPProblem& p, const CollocationConfig& cfg) {
  if (!(p.a < p.b)) throw std::invalid_argument("collocate: box must satisfy a < b");
  if (cfg.l < 1) throw std::invalid_argument("collocate: need at least one subinterval");
  if (cfg.r < 1) throw std::invalid_argument("collocate: need at least one point per subinterval");
}

}  // namespace

Breakpoints build_breaks(double a, double b, int l) {
  if (!(a < b)) throw std::invalid_argument("build_breaks: box must satisfy a < b");
  if (l < 1) throw std::invalid_argument("build_breaks: need at least one subinterval");
  Vec xi(l + 1);
  for (int i = 0; i <= l; ++i) xi[i] = a + (b - a) * i / l;
  xi[0] = a;
  xi[l] = b;
  return Breakpoints(std::move(xi));
}

std::pair<BandedMatrix, Vec> assemble_system(const BVPProblem& p, const Breakpoints& breaks,
                                             int k, const Vec& sites) {
  const KnotVector knots = collocation_knots(breaks, k);
  const int n = knots.n();
  if (static_cast<int>(sites.size()) != n)
    throw std::invalid_argument("assemble_system: expected n = kl - 2(l-1) sites");
  if (sites.front() != p.a || sites.back() != p.b)
    throw std::invalid_argument("assemble_system: first and last sites must be the endpoints");

  std::vector<RowSegment> rows;
  rows.reserve(n);
  Vec rhs(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double x = sites[i];
    Vec row(k, 0.0);
    int first_col = 0;
    if (i == 0 || i == n - 1) {
      const SideCondition& sc = (i == 0) ? p.left : p.right;
      const BasisValues bv = eval_basis(knots, x, 1);
      first_col = bv.first_index();
      for (int a = 0; a < k; ++a) row[a] = sc.alpha * bv.deriv[0][a] + sc.beta * bv.deriv[1][a];
      rhs[i] = sc.gamma;
    } else {
      const OdeCoeffs c = p.coeff(x);
      const BasisValues bv = eval_basis(knots, x, 2);
      first_col = bv.first_index();
      for (int a = 0; a < k; ++a)
        row[a] = c.v1 * bv.deriv[0][a] + c.v2 * bv.deriv[1][a] + c.v3 * bv.deriv[2][a];
      rhs[i] = c.v4;
    }
    rows.push_back(RowSegment{i, first_col, std::move(row)});
  }
  return {assemble(n, k - 1, k - 1, rows), std::move(rhs)};
}

Solution solve_linear(const BVPProblem& p, const CollocationConfig& cfg) {
  if (p.nonlinear()) throw std::invalid_argument("solve_linear: problem carries a relinearize rule");
  check_config(p, cfg);
  Breakpoints breaks = build_breaks(p.a, p.b, cfg.l);
  PointPattern pattern{cfg.pattern, cfg.r};
  BForm bform = solve_once(p, p.coeff, breaks, cfg.order(), pattern.interior_template());
  return make_solution(std::move(bform), std::move(breaks), 0, true);
}

namespace {

Solution newton_on_mesh(const BVPProblem& p, const CollocationConfig& cfg,
                        const Breakpoints& breaks, const Vec& tmpl, const Approximant& initial) {
  const Vec sites = collocation_sites(breaks, tmpl);
  Approximant current = initial ? initial : line_through_side_conditions(p);
  Vec prev_at_sites(sites.size());
  for (std::size_t s = 0; s < sites.size(); ++s) prev_at_sites[s] = current(sites[s]);

  BForm bform;
  bool converged = false;
  int iterations = 0;
  double first_delta = 0.0;
  bool restarted = false;
  while (iterations < cfg.newton_max_iter && !converged) {
    const CoeffFn coeff = p.relinearize(current);
    bform = solve_once(p, coeff, breaks, cfg.order(), tmpl);
    ++iterations;
    double delta = 0.0;
    Vec at_sites(sites.size());
    for (std::size_t s = 0; s < sites.size(); ++s) {
      at_sites[s] = bform_eval(bform, sites[s]);
      delta = std::max(delta, std::abs(at_sites[s] - prev_at_sites[s]));
    }
    if (iterations == 1) first_delta = delta;
    // The plain relinearization loop is only locally convergent; a start
    // outside the basin shows up as runaway iterates. Fall back once to the
    // zero function, whose first iterate keeps the boundary data but drops
    // the nonlinear feedback.
    if (!restarted && (!std::isfinite(delta) || delta > 20.0 * std::max(first_delta, 1.0))) {
      restarted = true;
      current = [](double) { return 0.0; };
      std::fill(prev_at_sites.begin(), prev_at_sites.end(), 0.0);
      continue;
    }
    prev_at_sites = std::move(at_sites);
    converged = delta < cfg.newton_tol;
    const BForm& frozen = bform;
    current = [frozen](double x) { return bform_eval(frozen, x); };
  }
  return make_solution(std::move(bform), breaks, iterations, converged);
}

}  // namespace

Solution solve_newton(const BVPProblem& p, const CollocationConfig& cfg,
                      const Approximant& initial) {
  if (!p.nonlinear()) throw std::invalid_argument("solve_newton: problem has no relinearize rule");
  check_config(p, cfg);
  Breakpoints breaks = build_breaks(p.a, p.b, cfg.l);
  PointPattern pattern{cfg.pattern, cfg.r};
  return newton_on_mesh(p, cfg, breaks, pattern.interior_template(), initial);
}

Breakpoints newnot_redistribute(const Solution& sol, int l) {
  const PPForm& pp = sol.ppform;
  const int k = pp.order;
  if (k < 2) throw std::invalid_argument("newnot_redistribute: order must be at least 2");
  const Breakpoints& breaks = pp.breaks;
  const int pieces = breaks.pieces();
  const double a = breaks.left(), b = breaks.right();

  // Leading Taylor coefficient per piece gives the piecewise-constant
  // (k-1)-th derivative up to the common factor (k-1)!.
  Vec lead(pieces);
  for (int i = 0; i < pieces; ++i) lead[i] = pp.coeffs[i][k - 1];

  // Jump magnitude of D^{k-1} across each interior breakpoint, divided by
  // the distance between adjacent piece midpoints, estimates |D^k z| there.
  // Jumps below roundoff noise for a solution of this magnitude on this mesh
  // count as zero; D^{k-1} of a size-M spline carries a factor 1/h^{k-1}.
  double value_scale = 0.0, h_min = b - a;
  for (int i = 0; i < pieces; ++i) {
    value_scale = std::max(value_scale, std::abs(pp.coeffs[i][0]));
    h_min = std::min(h_min, breaks.xi[i + 1] - breaks.xi[i]);
  }
  const double noise = 1e-10 * std::max(value_scale, 1e-300) / std::pow(h_min, k - 1);

  Vec g(pieces + 1, 0.0);
  bool any_jump = false;
  for (int i = 1; i < pieces; ++i) {
    const double gap = 0.5 * (breaks.xi[i + 1] - breaks.xi[i - 1]);
    const double jump = std::abs(lead[i] - lead[i - 1]);
    if (jump <= noise) continue;
    g[i] = jump / gap;
    any_jump = true;
  }
  if (!any_jump) return build_breaks(a, b, l);
  g[0] = g[1];
  g[pieces] = g[pieces - 1];

  // Piecewise-constant density |D^k z|^{1/k} with a floor keeping every
  // subinterval's share positive.
  Vec dens(pieces);
  double mean = 0.0;
  for (int i = 0; i < pieces; ++i) {
    dens[i] = std::pow(0.5 * (g[i] + g[i + 1]), 1.0 / k);
    mean += dens[i];
  }
  mean /= pieces;
  for (double& d : dens) d = std::max(d, 1e-3 * mean);

  // Equidistribute the cumulative density over l new subintervals.
  Vec cum(pieces + 1, 0.0);
  for (int i = 0; i < pieces; ++i)
    cum[i + 1] = cum[i] + dens[i] * (breaks.xi[i + 1] - breaks.xi[i]);
  const double total = cum[pieces];

  Vec xi(l + 1);
  xi[0] = a;
  xi[l] = b;
  int piece = 0;
  for (int j = 1; j < l; ++j) {
    const double target = total * j / l;
    while (piece < pieces - 1 && cum[piece + 1] < target) ++piece;
    xi[j] = breaks.xi[piece] + (target - cum[piece]) / dens[piece];
  }
  for (int j = 0; j < l; ++j) {
    if (!(xi[j] < xi[j + 1]))
      throw std::runtime_error("newnot_redistribute: degenerate mesh");
  }
  return Breakpoints(std::move(xi));
}

Solution solve_with_redistribution(const BVPProblem& p, const CollocationConfig& cfg) {
  check_config(p, cfg);
  if (cfg.newnot_passes < 1)
    throw std::invalid_argument("solve_with_redistribution: need at least one pass");
  const Vec tmpl = legendre_roots(cfg.r);
  Breakpoints breaks = build_breaks(p.a, p.b, cfg.l);

  Solution sol = p.nonlinear() ? newton_on_mesh(p, cfg, breaks, tmpl, nullptr)
                               : make_solution(solve_once(p, p.coeff, breaks, cfg.order(), tmpl),
                                               breaks, 0, true);
  for (int pass = 0; pass < cfg.newnot_passes; ++pass) {
    Breakpoints next = newnot_redistribute(sol, cfg.l);
    if (p.nonlinear()) {
      // Re-expand the previous solution on the new mesh as the initial guess.
      const BForm prev = sol.bform;
      Approximant guess = [prev](double x) { return bform_eval(prev, x); };
      sol = newton_on_mesh(p, cfg, next, tmpl, guess);
    } else {
      sol = make_solution(solve_once(p, p.coeff, next, cfg.order(), tmpl), next, 0, true);
    }
  }
  return sol;
}

Solution solve(const BVPProblem& p, const CollocationConfig& cfg) {
  if (cfg.pattern == PatternKind::redistributed) return solve_with_redistribution(p, cfg);
  return p.nonlinear() ? solve_newton(p, cfg) : solve_linear(p, cfg);
}

}  // namespace sc
