#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <cstdint>
#include <vector>

namespace hyperclust {

// Canonical sparse storage: sorted row-major, no duplicates, no explicit zeros.
using SpMat = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<double>;

// Largest rows*cols a sparse matrix may have before densification is refused.
inline constexpr std::int64_t kDenseLimit = std::int64_t(1) << 24;

// Builds a canonical sparse matrix. Out-of-range indices throw; duplicates
// either throw (reject_duplicates) or are summed.
SpMat sparse_from_triplets(Eigen::Index rows, Eigen::Index cols,
                           const std::vector<Triplet>& entries,
                           bool reject_duplicates = false);

SpMat sparse_from_dense(const Eigen::MatrixXd& m);

// Throws when rows*cols exceeds the limit.
Eigen::MatrixXd to_dense(const SpMat& m, std::int64_t limit = kDenseLimit);

// 0/1 pattern of the stored entries.
SpMat pattern(const SpMat& m);

Eigen::VectorXd sparse_row_sums(const SpMat& m);
Eigen::VectorXd sparse_col_sums(const SpMat& m);

// Exact equality of shape and canonical entries.
bool sparse_equal(const SpMat& a, const SpMat& b);

}  // namespace hyperclust
