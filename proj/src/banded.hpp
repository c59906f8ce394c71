#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sc {

/// Thrown when elimination meets a pivot that is zero to within tolerance.
/// This is the signal produced when a collocation/interpolation matrix
/// violates the Schoenberg-Whitney support condition.
struct SingularSystem : std::runtime_error {
  int row;
  explicit SingularSystem(int offending_row)
      : std::runtime_error("singular system: zero pivot in row " + std::to_string(offending_row)),
        row(offending_row) {}
};

/// Square matrix stored diagonal-packed: entry (i, j) lives at
/// storage[i * width + (j - i + lower_bw)] iff -lower_bw <= j - i <= upper_bw.
class BandedMatrix {
 public:
  BandedMatrix(int nrows, int lower_bw, int upper_bw);

  int rows() const { return nrows_; }
  int lower_bw() const { return lower_; }
  int upper_bw() const { return upper_; }
  bool in_band(int i, int j) const;

  double get(int i, int j) const;       // zero outside the band
  void set(int i, int j, double v);     // throws on out-of-band writes

  std::vector<double>& storage() { return a_; }
  const std::vector<double>& storage() const { return a_; }

 private:
  int nrows_, lower_, upper_, width_;
  std::vector<double> a_;
};

struct RowSegment {
  int row;
  int first_col;
  std::vector<double> values;
};

/// Packs dense row segments into a banded matrix; unset entries are zero.
/// Overlapping writes to the same entry: last write wins, rejected when
/// strict is set.
BandedMatrix assemble(int nrows, int lower_bw, int upper_bw,
                      const std::vector<RowSegment>& rows, bool strict = false);

/// Solves A x = b by Gaussian elimination without pivoting, staying inside
/// the band. A pivot with |pivot| <= 1e-13 * (max abs entry in its row)
/// raises SingularSystem with the offending row index.
std::vector<double> factor_solve(BandedMatrix a, const std::vector<double>& b);

}  // namespace sc
