#pragma once

#include "hyperclust/hypergraph.hpp"

namespace hyperclust {

// Random walk over a hypergraph: row-stochastic transition matrix P together
// with its stationary distribution pi (positive, unit 1-norm) and the
// fixed-point residual ||pi^T P - pi^T||_1 reached by the solver.
struct WalkState {
    SpMat P;
    Eigen::VectorXd pi;
    double residual = 0.0;
    long iterations = 0;
};

struct WalkOpts {
    double tol = 1e-10;
    long max_iter = 100000;
};

// P = D_V^{-1} W D_E^{-1} R for the edge-dependent vertex-weight walk, where
// W(v, e) = omega(e) for v in e, D_V = diag(W e) and D_E = diag(R e).
// Requires a valid connected hypergraph.
SpMat transition_matrix(const Hypergraph& h);

struct StationaryResult {
    Eigen::VectorXd pi;
    double residual;
    long iterations;
};

// Power iteration on P^T from the uniform start vector, renormalized to unit
// 1-norm each step. Throws NonConvergenceError (carrying the last residual)
// when max_iter is exhausted.
StationaryResult stationary_distribution(const SpMat& P, double tol = 1e-10,
                                         long max_iter = 100000);

WalkState make_walk(const Hypergraph& h, const WalkOpts& opts = {});

// max_{i,j} |pi_i P_ij - pi_j P_ji|; zero iff the chain is reversible.
double detailed_balance_residual(const SpMat& P, const Eigen::VectorXd& pi);

// True iff some column of R has two unequal nonzero entries, i.e. the vertex
// weighting is genuinely edge-dependent.
bool has_edvw(const Hypergraph& h);

}  // namespace hyperclust
