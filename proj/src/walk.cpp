#include "hyperclust/walk.hpp"

#include <cmath>
#include <string>

#include "hyperclust/errors.hpp"

namespace hyperclust {

SpMat transition_matrix(const Hypergraph& h) {
    require_valid(h);
    if (!is_connected(h)) {
        throw ValidationError(
            "hypergraph is disconnected; take largest_component (or cluster per component) first");
    }
    const Eigen::Index n = h.n_vertices();

    // vertex degree d(v) = sum of omega over incident edges, edge strength
    // delta(e) = sum of gamma_e over the edge
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd delta = Eigen::VectorXd::Zero(h.n_edges());
    for (Eigen::Index e = 0; e < h.R.outerSize(); ++e) {
        for (SpMat::InnerIterator it(h.R, e); it; ++it) {
            d[it.col()] += h.omega[e];
            delta[e] += it.value();
        }
    }

    // P(u, v) = sum_e [u in e] omega(e)/delta(e) * R(e, v) / d(u)
    std::vector<Triplet> entries;
    std::vector<Eigen::Index> members;
    for (Eigen::Index e = 0; e < h.R.outerSize(); ++e) {
        members.clear();
        for (SpMat::InnerIterator it(h.R, e); it; ++it) members.push_back(it.col());
        const double we = h.omega[e] / delta[e];
        for (Eigen::Index u : members) {
            const double row_scale = we / d[u];
            for (SpMat::InnerIterator it(h.R, e); it; ++it) {
                entries.emplace_back(u, it.col(), row_scale * it.value());
            }
        }
    }
    return sparse_from_triplets(n, n, entries);
}

StationaryResult stationary_distribution(const SpMat& P, double tol, long max_iter) {
    const Eigen::Index n = P.rows();
    if (n != P.cols() || n == 0) throw ValidationError("transition matrix must be square and nonempty");
    const Eigen::VectorXd row_sums = sparse_row_sums(P);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(row_sums[i] - 1.0) > 1e-8) {
            throw ValidationError("row " + std::to_string(i) + " of P sums to " +
                                  std::to_string(row_sums[i]) + ", not 1");
        }
    }

    const SpMat Pt = P.transpose();
    Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    double residual = 0.0;
    for (long iter = 1; iter <= max_iter; ++iter) {
        Eigen::VectorXd y = Pt * x;
        residual = (y - x).lpNorm<1>();
        if (residual <= tol) {
            if (x.minCoeff() <= 0.0) {
                throw NonConvergenceError("stationary distribution has a nonpositive entry",
                                          residual, iter);
            }
            return StationaryResult{x, residual, iter};
        }
        x = y / y.sum();
    }
    throw NonConvergenceError("stationary distribution did not converge to tol=" +
                                  std::to_string(tol),
                              residual, max_iter);
}

WalkState make_walk(const Hypergraph& h, const WalkOpts& opts) {
    WalkState w;
    w.P = transition_matrix(h);
    auto st = stationary_distribution(w.P, opts.tol, opts.max_iter);
    w.pi = std::move(st.pi);
    w.residual = st.residual;
    w.iterations = st.iterations;
    return w;
}

double detailed_balance_residual(const SpMat& P, const Eigen::VectorXd& pi) {
    if (pi.size() != P.rows() || P.rows() != P.cols()) {
        throw ValidationError("detailed balance: pi/P dimension mismatch");
    }
    SpMat flow = pi.asDiagonal() * P;
    SpMat diff = flow - SpMat(flow.transpose());
    double worst = 0.0;
    for (Eigen::Index i = 0; i < diff.outerSize(); ++i)
        for (SpMat::InnerIterator it(diff, i); it; ++it)
            worst = std::max(worst, std::abs(it.value()));
    return worst;
}

bool has_edvw(const Hypergraph& h) {
    require_valid(h);
    const Eigen::Index n = h.n_vertices();
    std::vector<double> first(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Eigen::Index e = 0; e < h.R.outerSize(); ++e) {
        for (SpMat::InnerIterator it(h.R, e); it; ++it) {
            const auto v = static_cast<std::size_t>(it.col());
            if (!seen[v]) {
                seen[v] = true;
                first[v] = it.value();
            } else if (it.value() != first[v]) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace hyperclust
