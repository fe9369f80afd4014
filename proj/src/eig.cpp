#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "hyperclust/errors.hpp"
#include "hyperclust/numerics.hpp"
#include "hyperclust/rng.hpp"

namespace hyperclust {

namespace {

void check_symmetric(const Eigen::MatrixXd& s) {
    if (s.rows() != s.cols()) throw ValidationError("eigensolver input must be square");
    const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
    const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * scale) {
        throw ValidationError("matrix asymmetric beyond tolerance: max deviation " +
                              std::to_string(asym));
    }
}

EigResult dense_eigs(const Eigen::MatrixXd& s, int k) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s);
    if (solver.info() != Eigen::Success) {
        throw NonConvergenceError("dense eigendecomposition failed", 0.0, 0);
    }
    const Eigen::Index n = s.rows();
    EigResult out;
    out.values.resize(k);
    out.vectors.resize(n, k);
    for (int i = 0; i < k; ++i) {
        out.values[i] = solver.eigenvalues()[n - 1 - i];
        out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return out;
}

// Lanczos with full reorthogonalization and a seeded random start.
EigResult lanczos_eigs(const Eigen::MatrixXd& s, int k, const EigOpts& opts) {
    const Eigen::Index n = s.rows();
    const Eigen::Index m_max =
        opts.max_basis > 0 ? std::min<Eigen::Index>(opts.max_basis, n)
                           : std::min<Eigen::Index>(n, std::max<Eigen::Index>(6 * k + 40, 200));
    const double scale = std::max(s.norm(), 1e-300);
    const double thresh = opts.tol * scale / (2.0 * std::sqrt(static_cast<double>(k)));

    Rng rng(opts.seed);
    Eigen::MatrixXd q(n, m_max);
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = rng.uniform() - 0.5;
    v.normalize();
    q.col(0) = v;

    Eigen::VectorXd alpha(m_max), beta(m_max);
    double last_residual = 0.0;
    for (Eigen::Index j = 0; j < m_max; ++j) {
        Eigen::VectorXd w = s * q.col(j);
        alpha[j] = q.col(j).dot(w);
        w -= alpha[j] * q.col(j);
        if (j > 0) w -= beta[j - 1] * q.col(j - 1);
        for (int pass = 0; pass < 2; ++pass) {
            w -= q.leftCols(j + 1) * (q.leftCols(j + 1).transpose() * w);
        }
        beta[j] = w.norm();

        const Eigen::Index m = j + 1;
        bool exhausted = (m == m_max) || (m == n);
        bool breakdown = beta[j] <= 1e-14 * scale;

        if (m >= k && (breakdown || exhausted || j % 5 == 4)) {
            Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
            for (Eigen::Index i = 0; i < m; ++i) {
                t(i, i) = alpha[i];
                if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(t);
            double worst = 0.0;
            for (int i = 0; i < k; ++i) {
                const double tail = small.eigenvectors()(m - 1, m - 1 - i);
                worst = std::max(worst, std::abs(beta[j] * tail));
            }
            last_residual = worst;
            if (worst <= thresh || m == n) {
                EigResult out;
                out.values.resize(k);
                out.vectors.resize(n, k);
                for (int i = 0; i < k; ++i) {
                    out.values[i] = small.eigenvalues()[m - 1 - i];
                    out.vectors.col(i) = q.leftCols(m) * small.eigenvectors().col(m - 1 - i);
                    out.vectors.col(i).normalize();
                }
                return out;
            }
            if (exhausted) {
                throw NonConvergenceError("Lanczos did not converge within the basis limit",
                                          worst, static_cast<long>(m));
            }
        }
        if (exhausted) break;

        if (breakdown) {
            // invariant subspace found; continue from a fresh random direction
            for (Eigen::Index i = 0; i < n; ++i) w[i] = rng.uniform() - 0.5;
            w -= q.leftCols(m) * (q.leftCols(m).transpose() * w);
            const double wn = w.norm();
            if (wn <= 1e-14) {
                throw NonConvergenceError("Lanczos basis cannot be extended", last_residual,
                                          static_cast<long>(m));
            }
            w /= wn;
            beta[j] = 0.0;
        } else {
            w /= beta[j];
        }
        q.col(j + 1) = w;
    }
    throw NonConvergenceError("Lanczos did not converge", last_residual,
                              static_cast<long>(m_max));
}

}  // namespace

EigResult symmetric_eigs(const Eigen::MatrixXd& s, int k, const EigOpts& opts) {
    check_symmetric(s);
    if (k < 1 || k > s.rows()) {
        throw ValidationError("eigenpair count " + std::to_string(k) + " out of range [1," +
                              std::to_string(s.rows()) + "]");
    }
    if (s.rows() <= opts.dense_threshold) return dense_eigs(s, k);
    return lanczos_eigs(s, k, opts);
}

SvdResult truncated_svd(const Eigen::MatrixXd& m, int k) {
    const Eigen::Index rank_max = std::min(m.rows(), m.cols());
    if (k < 1 || k > rank_max) {
        throw ValidationError("singular triplet count " + std::to_string(k) +
                              " out of range [1," + std::to_string(rank_max) + "]");
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SvdResult out;
    out.U = svd.matrixU().leftCols(k);
    out.sigma = svd.singularValues().head(k);
    out.V = svd.matrixV().leftCols(k);
    return out;
}

}  // namespace hyperclust
