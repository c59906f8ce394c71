#include "problems.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sc {

namespace {

// poly(x) * exp(rate * x) with analytic derivatives.
struct PolyExp {
  Vec poly;
  double rate;

  double eval(double x, int deriv) const {
    Vec p = poly;
    for (int d = 0; d < deriv; ++d) {
      // (p e^{cx})' = (p' + c p) e^{cx}
      Vec q(p.size() + 1, 0.0);
      for (std::size_t m = 0; m < p.size(); ++m) {
        q[m] += rate * p[m];
        if (m >= 1) q[m - 1] += static_cast<double>(m) * p[m];
      }
      while (q.size() > 1 && q.back() == 0.0) q.pop_back();
      p = std::move(q);
    }
    double s = 0.0;
    for (std::size_t m = p.size(); m-- > 0;) s = s * x + p[m];
    return s * std::exp(rate * x);
  }
};

PolyExp hydrogen_form(int n_q, int l_q) {
  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0), s6 = std::sqrt(6.0),
               s30 = std::sqrt(30.0);
  if (l_q == 0) {
    switch (n_q) {
      case 1: return {{0.0, 2.0}, -1.0};
      case 2: {
        const double c = 1.0 / (2.0 * s2);
        return {{0.0, 2.0 * c, -c}, -0.5};
      }
      case 3: {
        const double c = 2.0 / (81.0 * s3);
        return {{0.0, 27.0 * c, -18.0 * c, 2.0 * c}, -1.0 / 3.0};
      }
    }
  } else if (n_q == 2 && l_q == 1) {
    return {{0.0, 0.0, 1.0 / (2.0 * s6)}, -0.5};
  } else if (n_q == 3 && l_q == 1) {
    const double c = 4.0 / (81.0 * s6);
    return {{0.0, 0.0, 6.0 * c, -c}, -1.0 / 3.0};
  } else if (n_q == 3 && l_q == 2) {
    return {{0.0, 0.0, 0.0, 4.0 / (81.0 * s30)}, -1.0 / 3.0};
  }
  throw std::invalid_argument("unsupported hydrogen quantum numbers");
}

PolyExp transformed_form(int n_q, int l_q) {
  const double s6 = std::sqrt(6.0), s30 = std::sqrt(30.0);
  if (n_q == 2 && l_q == 1) return {{0.0, 2.0 / s6}, -1.0};
  if (n_q == 3 && l_q == 1) {
    const double c = 4.0 / (3.0 * s6);
    return {{2.0 * c, -c}, -1.0};
  }
  if (n_q == 3 && l_q == 2) return {{0.0, 4.0 / (3.0 * s30)}, -1.0};
  throw std::invalid_argument("exact_transformed: defined for hydrogen l > 0 only");
}

void validate(const ProblemId& id) {
  switch (id.family) {
    case Family::hydrogen_l0:
      if (id.n_q < 1 || id.n_q > 3 || id.l_q != 0)
        throw std::invalid_argument("hydrogen_l0: supported cases are n in {1,2,3} with l = 0");
      return;
    case Family::hydrogen_lm:
      if (!((id.n_q == 2 && id.l_q == 1) || (id.n_q == 3 && id.l_q == 1) ||
            (id.n_q == 3 && id.l_q == 2)))
        throw std::invalid_argument("hydrogen_lm: supported cases are (2,1), (3,1), (3,2)");
      return;
    case Family::cubic_nls:
      if (!(id.epsilon > 0.0))
        throw std::invalid_argument("cubic_nls: epsilon must be positive");
      return;
  }
  throw std::invalid_argument("unknown problem family");
}

void guard_interior(double x) {
  if (x <= 0.0)
    throw std::domain_error("coefficients are singular at the left endpoint and below");
}

}  // namespace

std::string ProblemId::to_string() const {
  char buf[64];
  if (family == Family::cubic_nls) {
    std::snprintf(buf, sizeof buf, "nls:eps=%g", epsilon);
  } else {
    std::snprintf(buf, sizeof buf, "hydrogen:n=%d,l=%d", n_q, l_q);
  }
  return buf;
}

ProblemId ProblemId::parse(const std::string& id) {
  ProblemId out;
  int n = 0, l = 0;
  double eps = 0.0;
  if (std::sscanf(id.c_str(), "hydrogen:n=%d,l=%d", &n, &l) == 2) {
    out.family = (l == 0) ? Family::hydrogen_l0 : Family::hydrogen_lm;
    out.n_q = n;
    out.l_q = l;
  } else if (std::sscanf(id.c_str(), "nls:eps=%lf", &eps) == 1) {
    out.family = Family::cubic_nls;
    out.epsilon = eps;
  } else {
    throw std::invalid_argument("unknown problem id: " + id);
  }
  validate(out);
  return out;
}

double rescaled_energy(int n_q) {
  if (n_q < 1) throw std::invalid_argument("rescaled_energy: n must be positive");
  return -1.0 / (2.0 * n_q * n_q);
}

double recommended_box_right(const ProblemId& id) {
  if (id.family == Family::cubic_nls) return 1.0;
  switch (id.n_q) {
    case 1: return 10.0;
    case 2: return 30.0;
    default: return 50.0;
  }
}

ProblemSetup make_problem(const ProblemId& id, double box_right) {
  validate(id);
  if (!(box_right > 0.0)) throw std::invalid_argument("make_problem: box_right must be positive");

  ProblemSetup setup;
  setup.id = id;
  BVPProblem& p = setup.problem;
  p.a = 0.0;
  p.b = box_right;
  p.left = SideCondition{SideCondition::End::left, 0.0, 1.0, 0.0};
  p.right = SideCondition{SideCondition::End::right, 1.0, 0.0, 0.0};

  switch (id.family) {
    case Family::hydrogen_l0: {
      const double energy = rescaled_energy(id.n_q);
      p.coeff = [energy](double x) {
        guard_interior(x);
        return OdeCoeffs{1.0 / x + energy, 0.0, 0.5, 0.0};
      };
      p.left.gamma = exact_solution_deriv(id, 0.0, 1);
      break;
    }
    case Family::hydrogen_lm: {
      if (id.n_q == 2) {
        setup.transform = TransformInfo{2.0, 1};
        p.coeff = [](double y) {
          guard_interior(y);
          return OdeCoeffs{0.5 - y / 8.0 - 1.0 / (4.0 * y), 0.25, y / 8.0, 0.0};
        };
      } else if (id.l_q == 1) {
        setup.transform = TransformInfo{3.0, 2};
        p.coeff = [](double y) {
          guard_interior(y);
          return OdeCoeffs{1.0 / 3.0 - y / 18.0, 2.0 / 9.0, y / 18.0, 0.0};
        };
      } else {
        setup.transform = TransformInfo{3.0, 2};
        p.coeff = [](double y) {
          guard_interior(y);
          return OdeCoeffs{1.0 / 3.0 - y / 18.0 - 2.0 / (9.0 * y), 2.0 / 9.0, y / 18.0, 0.0};
        };
      }
      p.left.gamma = exact_transformed_deriv(id, 0.0, 1);
      break;
    }
    case Family::cubic_nls: {
      const double eps = id.epsilon;
      p.coeff = [eps](double x) {
        (void)x;
        // Placeholder linearization around zero; Newton replaces it.
        return OdeCoeffs{-0.5, 0.0, 0.5 * eps * eps, 0.0};
      };
      p.relinearize = [eps](const Approximant& z0) -> CoeffFn {
        return [eps, z0](double x) {
          const double z = z0(x);
          return OdeCoeffs{3.0 * z * z - 0.5, 0.0, 0.5 * eps * eps, 2.0 * z * z * z};
        };
      };
      p.left = SideCondition{SideCondition::End::left, 1.0, 0.0, 1.0};
      p.right = SideCondition{SideCondition::End::right, 1.0, 0.0, 0.0};
      break;
    }
  }

  {
    // Oracle in the solved variable: G(y) for the transformed cases.
    ProblemId pid = id;
    if (id.family == Family::hydrogen_lm) {
      p.exact = [pid](double y) { return exact_transformed(pid, y); };
    } else {
      p.exact = [pid](double x) { return exact_solution(pid, x); };
    }
  }

  const double covered = setup.transform.scale * box_right;
  const double rec = recommended_box_right(id);
  if (covered < rec) {
    setup.warnings.push_back("box right endpoint " + std::to_string(covered) +
                             " is below the recommended minimum " + std::to_string(rec) +
                             " for " + id.to_string());
  }
  return setup;
}

double exact_solution(const ProblemId& id, double x) { return exact_solution_deriv(id, x, 0); }

double exact_solution_deriv(const ProblemId& id, double x, int deriv) {
  validate(id);
  if (id.family == Family::cubic_nls) {
    const double u = x / id.epsilon;
    const double sech = 1.0 / std::cosh(u);
    const double tanh = std::tanh(u);
    switch (deriv) {
      case 0: return sech;
      case 1: return -sech * tanh / id.epsilon;
      case 2: return sech * (2.0 * tanh * tanh - 1.0) / (id.epsilon * id.epsilon);
      default: throw std::invalid_argument("exact_solution_deriv: derivatives up to 2 only");
    }
  }
  return hydrogen_form(id.n_q, id.l_q).eval(x, deriv);
}

double exact_transformed(const ProblemId& id, double y) {
  return exact_transformed_deriv(id, y, 0);
}

double exact_transformed_deriv(const ProblemId& id, double y, int deriv) {
  validate(id);
  if (id.family != Family::hydrogen_lm)
    throw std::invalid_argument("exact_transformed: defined for hydrogen l > 0 only");
  return transformed_form(id.n_q, id.l_q).eval(y, deriv);
}

std::function<double(double)> untransform(std::function<double(double)> g,
                                          const TransformInfo& info) {
  if (info.identity()) return g;
  const double s = info.scale;
  const int p = info.power;
  return [g = std::move(g), s, p](double x) {
    const double y = x / s;
    return std::pow(y, p) * g(y);
  };
}

std::vector<ProblemId> catalog() {
  std::vector<ProblemId> ids;
  for (int n = 1; n <= 3; ++n) ids.push_back(ProblemId{Family::hydrogen_l0, n, 0, 0.0});
  ids.push_back(ProblemId{Family::hydrogen_lm, 2, 1, 0.0});
  ids.push_back(ProblemId{Family::hydrogen_lm, 3, 1, 0.0});
  ids.push_back(ProblemId{Family::hydrogen_lm, 3, 2, 0.0});
  for (double eps : {0.1, 0.05, 0.025, 0.01, 0.005, 0.001})
    ids.push_back(ProblemId{Family::cubic_nls, 0, 0, eps});
  return ids;
}

}  // namespace sc
