#include "tropos/integer_linalg.hpp"

#include <utility>

#include "tropos/error.hpp"

namespace tropos {

namespace {

// column j -= q * column k, applied to both matrices
void column_axpy(IntMatrix& h, IntMatrix& u, std::size_t j, std::size_t k, const BigInt& q, std::size_t from_row) {
  if (q == 0) return;
  for (std::size_t r = from_row; r < h.size(); ++r) h[r][j] -= q * h[r][k];
  for (auto& row : u) row[j] -= q * row[k];
}

void column_swap(IntMatrix& h, IntMatrix& u, std::size_t j, std::size_t k, std::size_t from_row) {
  if (j == k) return;
  for (std::size_t r = from_row; r < h.size(); ++r) std::swap(h[r][j], h[r][k]);
  for (auto& row : u) std::swap(row[j], row[k]);
}

void column_negate(IntMatrix& h, IntMatrix& u, std::size_t j, std::size_t from_row) {
  for (std::size_t r = from_row; r < h.size(); ++r) h[r][j] = -h[r][j];
  for (auto& row : u) row[j] = -row[j];
}

}  // namespace

IntegerSolver::IntegerSolver(IntMatrix a) : h_(std::move(a)) {
  rows_ = h_.size();
  cols_ = rows_ == 0 ? 0 : h_.front().size();
  for (const auto& row : h_) {
    if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged integer matrix");
  }
  u_.assign(cols_, std::vector<BigInt>(cols_, BigInt(0)));
  for (std::size_t i = 0; i < cols_; ++i) u_[i][i] = 1;

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < rows_ && pivot < cols_; ++r) {
    // Euclid on row r across the columns not yet used as pivots
    while (true) {
      std::size_t best = cols_;
      for (std::size_t c = pivot; c < cols_; ++c) {
        if (h_[r][c] != 0 && (best == cols_ || abs(h_[r][c]) < abs(h_[r][best]))) best = c;
      }
      if (best == cols_) break;
      column_swap(h_, u_, pivot, best, r);
      bool done = true;
      for (std::size_t c = pivot + 1; c < cols_; ++c) {
        if (h_[r][c] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), h_[r][c].get_mpz_t(), h_[r][pivot].get_mpz_t());
        column_axpy(h_, u_, c, pivot, q, r);
        if (h_[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (h_[r][pivot] == 0) continue;
    if (h_[r][pivot] < 0) column_negate(h_, u_, pivot, r);
    // keep earlier columns small in this row
    for (std::size_t c = 0; c < pivot; ++c) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), h_[r][c].get_mpz_t(), h_[r][pivot].get_mpz_t());
      column_axpy(h_, u_, c, pivot, q, r);
    }
    pivot_row_.push_back(r);
    ++pivot;
  }
}

std::optional<std::vector<BigInt>> IntegerSolver::solve(const std::vector<BigInt>& b) const {
  if (b.size() != rows_) throw Error(ErrorCode::InvalidArgument, "right-hand side has the wrong length");
  std::vector<BigInt> y(cols_, BigInt(0));
  std::size_t next_pivot = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    BigInt rest = b[r];
    for (std::size_t c = 0; c < next_pivot; ++c) rest -= h_[r][c] * y[c];
    if (next_pivot < pivot_row_.size() && pivot_row_[next_pivot] == r) {
      const BigInt& p = h_[r][next_pivot];
      if (!mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
      mpz_divexact(y[next_pivot].get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
      ++next_pivot;
    } else if (rest != 0) {
      return std::nullopt;
    }
  }
  return multiply(u_, y);
}

std::vector<BigInt> multiply(const IntMatrix& a, const std::vector<BigInt>& x) {
  std::vector<BigInt> out(a.size(), BigInt(0));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (x[c] != 0) out[r] += a[r][c] * x[c];
    }
  }
  return out;
}

}  // namespace tropos
