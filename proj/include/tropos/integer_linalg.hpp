#pragma once

#include <optional>
#include <vector>

#include "tropos/rational.hpp"

namespace tropos {

using IntMatrix = std::vector<std::vector<BigInt>>;  // row-major

/// Exact solver for A x = b over the integers. The column echelon form
/// A U = H (U unimodular) is computed once; each solve is a forward
/// substitution on H with divisibility checks followed by x = U y.
class IntegerSolver {
 public:
  explicit IntegerSolver(IntMatrix a);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivot_row_.size(); }

  /// Some integer solution, or nothing when b is outside the image lattice.
  std::optional<std::vector<BigInt>> solve(const std::vector<BigInt>& b) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntMatrix h_;
  IntMatrix u_;
  std::vector<std::size_t> pivot_row_;  // pivot column c sits in row pivot_row_[c]
};

std::vector<BigInt> multiply(const IntMatrix& a, const std::vector<BigInt>& x);

}  // namespace tropos
