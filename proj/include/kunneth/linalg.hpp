#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace kunneth {

/// Exact rational coefficient. gmp keeps it canonical (lowest terms, positive denominator).
using Scalar = mpq_class;

/// Sparse linear combination of basis indices, sorted by index, no zero entries.
using SparseVec = std::vector<std::pair<int, Scalar>>;

/// Sorts by index, merges duplicates and drops zeros.
void canonicalize(SparseVec& v);

/// Appends `coeff * v` to `out` (caller canonicalizes).
void axpy(SparseVec& out, const Scalar& coeff, const SparseVec& v);

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

class NotAComplex : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable column-compressed sparse matrix over the rationals.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  /// Duplicates are summed; zero results are dropped; out-of-range indices throw.
  SparseMatrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
  /// Columns given directly as sparse vectors over row indices.
  SparseMatrix(std::size_t rows, std::vector<SparseVec> columns);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nnz() const;
  const SparseVec& col(std::size_t j) const { return cols_[j]; }
  Scalar at(std::size_t r, std::size_t c) const;

  SparseMatrix transpose() const;
  std::vector<std::vector<Scalar>> to_dense() const;
  bool is_zero() const { return nnz() == 0; }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVec> cols_;
};

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator*(const Scalar& s, const SparseMatrix& a);

/// Rank over Q by exact sparse elimination with Markowitz-style pivoting.
std::size_t rank(const SparseMatrix& m);

/// cols - rank.
std::size_t kernel_dim(const SparseMatrix& m);

/// Homology at the middle of  C' --d_in--> C --d_out--> C''.
/// Throws NotAComplex when d_out * d_in != 0 or the shapes do not chain.
std::size_t homology_dim(const SparseMatrix& d_in, const SparseMatrix& d_out);

}  // namespace kunneth
