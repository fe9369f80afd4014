#include "hyperclust/sparse.hpp"

#include <algorithm>
#include <string>

#include "hyperclust/errors.hpp"

namespace hyperclust {

SpMat sparse_from_triplets(Eigen::Index rows, Eigen::Index cols,
                           const std::vector<Triplet>& entries,
                           bool reject_duplicates) {
    if (rows < 0 || cols < 0) throw ValidationError("negative matrix dimensions");
    for (const auto& t : entries) {
        if (t.row() < 0 || t.row() >= rows || t.col() < 0 || t.col() >= cols) {
            throw ValidationError("entry (" + std::to_string(t.row()) + "," +
                                  std::to_string(t.col()) + ") out of range for " +
                                  std::to_string(rows) + "x" + std::to_string(cols));
        }
    }
    if (reject_duplicates) {
        std::vector<std::pair<Eigen::Index, Eigen::Index>> coords;
        coords.reserve(entries.size());
        for (const auto& t : entries) coords.emplace_back(t.row(), t.col());
        std::sort(coords.begin(), coords.end());
        auto dup = std::adjacent_find(coords.begin(), coords.end());
        if (dup != coords.end()) {
            throw ValidationError("duplicate entry at (" + std::to_string(dup->first) +
                                  "," + std::to_string(dup->second) + ")");
        }
    }
    SpMat m(rows, cols);
    m.setFromTriplets(entries.begin(), entries.end());
    m.prune(0.0, 0.0);
    m.makeCompressed();
    return m;
}

SpMat sparse_from_dense(const Eigen::MatrixXd& m) {
    std::vector<Triplet> entries;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0.0) entries.emplace_back(i, j, m(i, j));
    return sparse_from_triplets(m.rows(), m.cols(), entries);
}

Eigen::MatrixXd to_dense(const SpMat& m, std::int64_t limit) {
    const std::int64_t cells = std::int64_t(m.rows()) * std::int64_t(m.cols());
    if (cells > limit) {
        throw ValidationError("matrix too large to densify: " + std::to_string(m.rows()) +
                              "x" + std::to_string(m.cols()));
    }
    return Eigen::MatrixXd(m);
}

SpMat pattern(const SpMat& m) {
    SpMat p = m;
    for (Eigen::Index i = 0; i < p.outerSize(); ++i)
        for (SpMat::InnerIterator it(p, i); it; ++it) it.valueRef() = 1.0;
    return p;
}

Eigen::VectorXd sparse_row_sums(const SpMat& m) {
    return m * Eigen::VectorXd::Ones(m.cols());
}

Eigen::VectorXd sparse_col_sums(const SpMat& m) {
    return m.transpose() * Eigen::VectorXd::Ones(m.rows());
}

bool sparse_equal(const SpMat& a, const SpMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (a.nonZeros() != b.nonZeros()) return false;
    for (Eigen::Index i = 0; i < a.outerSize(); ++i) {
        SpMat::InnerIterator ia(a, i), ib(b, i);
        for (; ia && ib; ++ia, ++ib) {
            if (ia.col() != ib.col() || ia.value() != ib.value()) return false;
        }
        if (ia || ib) return false;
    }
    return true;
}

}  // namespace hyperclust
