#include "banded.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace sc {

BandedMatrix::BandedMatrix(int nrows, int lower_bw, int upper_bw)
    : nrows_(nrows),
      lower_(lower_bw),
      upper_(upper_bw),
      width_(lower_bw + upper_bw + 1),
      a_(static_cast<std::size_t>(nrows) * width_, 0.0) {
  if (nrows < 1) throw std::invalid_argument("banded: need at least one row");
  if (lower_ < 0 || upper_ < 0) throw std::invalid_argument("banded: bandwidths must be nonnegative");
}

bool BandedMatrix::in_band(int i, int j) const {
  return i >= 0 && i < nrows_ && j >= 0 && j < nrows_ && j - i >= -lower_ && j - i <= upper_;
}

double BandedMatrix::get(int i, int j) const {
  if (!in_band(i, j)) return 0.0;
  return a_[static_cast<std::size_t>(i) * width_ + (j - i + lower_)];
}

void BandedMatrix::set(int i, int j, double v) {
  if (!in_band(i, j))
    throw std::invalid_argument("banded: entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") is outside the band");
  a_[static_cast<std::size_t>(i) * width_ + (j - i + lower_)] = v;
}

BandedMatrix assemble(int nrows, int lower_bw, int upper_bw,
                      const std::vector<RowSegment>& rows, bool strict) {
  BandedMatrix m(nrows, lower_bw, upper_bw);
  std::vector<char> written;
  if (strict) written.assign(static_cast<std::size_t>(nrows) * nrows, 0);
  for (const RowSegment& seg : rows) {
    for (std::size_t q = 0; q < seg.values.size(); ++q) {
      const int j = seg.first_col + static_cast<int>(q);
      if (strict) {
        char& flag = written[static_cast<std::size_t>(seg.row) * nrows + j];
        if (flag)
          throw std::invalid_argument("assemble: duplicate write to entry (" +
                                      std::to_string(seg.row) + ", " + std::to_string(j) + ")");
        flag = 1;
      }
      m.set(seg.row, j, seg.values[q]);
    }
  }
  return m;
}

std::vector<double> factor_solve(BandedMatrix a, const std::vector<double>& b) {
  const int n = a.rows();
  if (static_cast<int>(b.size()) != n)
    throw std::invalid_argument("factor_solve: right-hand side length mismatch");
  const int lb = a.lower_bw();
  const int ub = a.upper_bw();

  std::vector<double> x = b;
  for (int i = 0; i < n; ++i) {
    double rowmax = 0.0;
    for (int j = std::max(0, i - lb); j <= std::min(n - 1, i + ub); ++j)
      rowmax = std::max(rowmax, std::abs(a.get(i, j)));
    const double pivot = a.get(i, i);
    if (std::abs(pivot) <= 1e-13 * rowmax || pivot == 0.0) throw SingularSystem(i);
    for (int r = i + 1; r <= std::min(n - 1, i + lb); ++r) {
      const double mult = a.get(r, i) / pivot;
      if (mult == 0.0) continue;
      a.set(r, i, mult);
      for (int c = i + 1; c <= std::min(n - 1, i + ub); ++c)
        a.set(r, c, a.get(r, c) - mult * a.get(i, c));
      x[r] -= mult * x[i];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    for (int c = i + 1; c <= std::min(n - 1, i + ub); ++c) s -= a.get(i, c) * x[c];
    x[i] = s / a.get(i, i);
  }
  return x;
}

}  // namespace sc
