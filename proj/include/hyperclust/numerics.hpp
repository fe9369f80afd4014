#pragma once

#include <cstdint>
#include <vector>

#include "hyperclust/hypergraph.hpp"

namespace hyperclust {

struct EigResult {
    Eigen::VectorXd values;   // k largest-algebraic eigenvalues, descending
    Eigen::MatrixXd vectors;  // matching orthonormal columns
};

struct EigOpts {
    double tol = 1e-8;
    Eigen::Index dense_threshold = 2048;  // Lanczos above this dimension
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL;  // Lanczos start vector
    int max_basis = 0;                           // 0 = automatic
};

// k largest-algebraic eigenpairs of a symmetric matrix. Dense solve up to
// dense_threshold, Lanczos with full reorthogonalization above it.
EigResult symmetric_eigs(const Eigen::MatrixXd& s, int k, const EigOpts& opts = {});

struct SvdResult {
    Eigen::MatrixXd U;
    Eigen::VectorXd sigma;
    Eigen::MatrixXd V;
};

SvdResult truncated_svd(const Eigen::MatrixXd& m, int k);

struct KmeansOpts {
    std::uint64_t seed = 0;
    int restarts = 10;
    int max_iter = 300;
};

struct KmeansResult {
    Labeling labeling;
    double objective = 0.0;  // within-cluster sum of squared distances
    int iterations = 0;      // Lloyd iterations of the winning restart
};

// k-means++ seeding, Lloyd iterations to an assignment fixed point, best of
// `restarts` runs (restart r reseeds with seed + r); ties keep the earliest
// restart. Empty clusters are repaired with the point farthest from its
// current centroid.
KmeansResult kmeans(const Eigen::MatrixXd& points, int k, const KmeansOpts& opts = {});

// Permutation sigma maximizing sum_i score(i, sigma(i)) of a square matrix.
std::vector<int> hungarian(const Eigen::MatrixXd& score);

struct SolverOpts {
    std::uint64_t seed = 0;
    int max_iter = 500;
    double tol = 1e-5;  // relative objective change
};

// Result of an iterative factorization. Factor order by solver:
//   symnmf -> {F}, nmf -> {U, M}, jnmf -> {M, Z, Mtilde},
//   jsnmf  -> {M, Mhat, Mtilde}.
// The trace holds the full objective after each iteration (entry 0 is the
// value at initialization) and never increases.
struct FactorizationResult {
    std::vector<Eigen::MatrixXd> factors;
    std::vector<double> objective_trace;
    int iterations = 0;
    bool converged = false;

    double final_objective() const {
        return objective_trace.empty() ? 0.0 : objective_trace.back();
    }
};

// min_{F >= 0} ||S - F F^T||_F^2 by exact cyclic coordinate descent.
FactorizationResult symnmf(const Eigen::MatrixXd& s, int k, const SolverOpts& opts = {});

// min_{U, M >= 0} ||X - U M^T||_F^2 by alternating column-wise updates (HALS).
FactorizationResult nmf(const Eigen::MatrixXd& x, int k, const SolverOpts& opts = {});

// min_{Z, M, Mt >= 0} ||X - Z M^T||^2 + gamma ||S - M Mt^T||^2 + beta ||M - Mt||^2.
// With gamma = beta = 0 the updates reduce exactly to nmf on X.
FactorizationResult jnmf(const Eigen::MatrixXd& x, const Eigen::MatrixXd& s, int k,
                         double gamma, double beta, const SolverOpts& opts = {});

// min over nonnegative M, Mh, Mt of
// ||C - M Mh^T||^2 + alpha ||M - Mh||^2 + gamma ||S - M Mt^T||^2 + beta ||M - Mt||^2.
FactorizationResult jsnmf(const Eigen::MatrixXd& c, const Eigen::MatrixXd& s, int k,
                          double alpha, double gamma, double beta,
                          const SolverOpts& opts = {});

}  // namespace hyperclust
