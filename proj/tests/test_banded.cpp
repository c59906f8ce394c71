#include <doctest.h>

#include <cmath>
#include <random>

#include "banded.hpp"
#include "oracles.hpp"

using namespace sc;
using Vec = std::vector<double>;

namespace {

// Random banded, diagonally dominant system of size n.
BandedMatrix random_dominant(std::mt19937& rng, int n, int lb, int ub) {
  std::uniform_real_distribution<double> off(-1.0, 1.0);
  BandedMatrix a(n, lb, ub);
  for (int i = 0; i < n; ++i) {
    double row_sum = 0.0;
    for (int j = std::max(0, i - lb); j <= std::min(n - 1, i + ub); ++j) {
      if (j == i) continue;
      const double v = off(rng);
      a.set(i, j, v);
      row_sum += std::abs(v);
    }
    a.set(i, i, row_sum + 1.0 + std::abs(off(rng)));
  }
  return a;
}

std::vector<Vec> to_dense(const BandedMatrix& a) {
  std::vector<Vec> d(a.rows(), Vec(a.rows(), 0.0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.rows(); ++j)
      if (a.in_band(i, j)) d[i][j] = a.get(i, j);
  return d;
}

}  // namespace

TEST_CASE("identity system returns the right-hand side unchanged") {
  BandedMatrix a(4, 1, 1);
  for (int i = 0; i < 4; ++i) a.set(i, i, 1.0);
  Vec b{1.0, -2.0, 3.0, 0.5};
  Vec x = factor_solve(a, b);
  for (int i = 0; i < 4; ++i) CHECK(x[i] == doctest::Approx(b[i]).epsilon(1e-15));
}

TEST_CASE("2x2 tridiagonal example solves exactly") {
  BandedMatrix a(2, 1, 1);
  a.set(0, 0, 2.0);
  a.set(0, 1, 1.0);
  a.set(1, 0, 1.0);
  a.set(1, 1, 2.0);
  Vec x = factor_solve(a, {3.0, 3.0});
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("banded solve matches dense elimination on random systems") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 50 + trial * 20;  // up to 190
    const int lb = 1 + trial % 4, ub = 1 + (trial + 1) % 4;
    BandedMatrix a = random_dominant(rng, n, lb, ub);
    Vec b(n);
    for (double& v : b) v = unit(rng);
    std::vector<Vec> dense = to_dense(a);
    Vec x = factor_solve(a, b);
    Vec y = oracles::dense_solve(dense, b);
    double diff = 0.0, scale = 0.0;
    for (int i = 0; i < n; ++i) {
      diff = std::max(diff, std::abs(x[i] - y[i]));
      scale = std::max(scale, std::abs(y[i]));
    }
    CHECK(diff <= 1e-9 * std::max(1.0, scale));
    // residual check against the original matrix
    double rmax = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = b[i];
      for (int j = 0; j < n; ++j) r -= dense[i][j] * x[j];
      rmax = std::max(rmax, std::abs(r));
    }
    CHECK(rmax <= 1e-10 * std::max(1.0, scale) * n);
  }
}

TEST_CASE("zero pivot raises SingularSystem with the offending row") {
  BandedMatrix a(3, 1, 1);
  a.set(0, 0, 1.0);
  a.set(0, 1, 2.0);
  a.set(1, 0, 0.5);
  a.set(1, 1, 1.0);  // eliminates to exactly zero
  a.set(1, 2, 1.0);
  a.set(2, 1, 1.0);
  a.set(2, 2, 1.0);
  try {
    factor_solve(a, {1.0, 1.0, 1.0});
    FAIL("expected SingularSystem");
  } catch (const SingularSystem& e) {
    CHECK(e.row == 1);
  }
}

TEST_CASE("structurally zero diagonal is reported singular") {
  BandedMatrix a(2, 0, 1);
  a.set(0, 1, 1.0);
  a.set(1, 1, 1.0);
  CHECK_THROWS_AS(factor_solve(a, {1.0, 1.0}), SingularSystem);
}

TEST_CASE("BandedMatrix rejects out-of-band writes and reads zeros in range") {
  BandedMatrix a(4, 1, 1);
  CHECK_THROWS_AS(a.set(0, 2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(a.set(3, 1, 1.0), std::invalid_argument);
  CHECK(a.get(1, 2) == 0.0);
  CHECK_FALSE(a.in_band(0, 3));
  CHECK(a.in_band(2, 1));
}

TEST_CASE("assemble builds the matrix from row segments") {
  std::vector<RowSegment> rows;
  rows.push_back({0, 0, {2.0, 1.0}});
  rows.push_back({1, 0, {1.0, 2.0, 1.0}});
  rows.push_back({2, 1, {1.0, 2.0}});
  BandedMatrix a = assemble(3, 1, 1, rows, true);
  CHECK(a.get(0, 0) == 2.0);
  CHECK(a.get(1, 2) == 1.0);
  CHECK(a.get(2, 1) == 1.0);
}

TEST_CASE("assemble rejects out-of-band segments and strict-mode duplicates") {
  std::vector<RowSegment> wide;
  wide.push_back({0, 0, {1.0, 1.0, 1.0}});  // column 2 is outside band for lb=ub=1
  CHECK_THROWS_AS(assemble(3, 1, 1, wide, true), std::invalid_argument);

  std::vector<RowSegment> dup;
  dup.push_back({0, 0, {1.0}});
  dup.push_back({0, 0, {2.0}});
  CHECK_THROWS_AS(assemble(3, 1, 1, dup, true), std::invalid_argument);
  // non-strict mode lets the later write win
  BandedMatrix a = assemble(3, 1, 1, dup, false);
  CHECK(a.get(0, 0) == 2.0);
}

TEST_CASE("mismatched right-hand-side length is rejected") {
  BandedMatrix a(3, 1, 1);
  for (int i = 0; i < 3; ++i) a.set(i, i, 1.0);
  CHECK_THROWS_AS(factor_solve(a, {1.0, 2.0}), std::invalid_argument);
}
