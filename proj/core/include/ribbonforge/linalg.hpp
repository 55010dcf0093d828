#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ribbonforge/sparse.hpp"

namespace ribbonforge {

/// Row-major sparse matrix over Q(zeta_N). Rows are SparseVec keyed by column.
struct SparseMatrix {
  const cyc::CycContext* ctx = nullptr;
  std::size_t cols = 0;
  std::vector<SparseVec> rows;

  SparseMatrix() = default;
  SparseMatrix(const cyc::CycContext& c, std::size_t nrows, std::size_t ncols)
      : ctx(&c), cols(ncols), rows(nrows) {}

  std::size_t row_count() const noexcept { return rows.size(); }
  static SparseMatrix identity(const cyc::CycContext& c, std::size_t n);

  /// A * x for a sparse column vector x.
  SparseVec apply(const SparseVec& x) const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols == b.cols && a.rows == b.rows;
  }
};

/// Systems smaller than this (in both directions) use the dense eliminator.
inline constexpr std::size_t kDenseThreshold = 64;

/// Some solution of A x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero. The result is re-checked against A x = b.
std::optional<SparseVec> solve_linear(const SparseMatrix& a, const SparseVec& b);

/// Basis of ker A in reduced row echelon form (leading coefficient 1 at the
/// smallest index, no other basis vector nonzero there). Unique for a given
/// kernel, so the sparse and dense paths agree exactly.
std::vector<SparseVec> nullspace(const SparseMatrix& a);

/// Inverse of a square matrix, or nullopt when singular. Verified A A^-1 = I.
std::optional<SparseMatrix> invert_matrix(const SparseMatrix& a);

/// Rank of the span of the given vectors.
std::size_t rank_of(const std::vector<SparseVec>& vectors);

}  // namespace ribbonforge
