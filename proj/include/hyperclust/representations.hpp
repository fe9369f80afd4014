#pragma once

#include <string>

#include "hyperclust/walk.hpp"

namespace hyperclust {

enum class ReprKind { T, L, NormLap, Gamma, ZhouDelta, CrwcP, ChungA, CucuringuSkew };

const char* repr_kind_name(ReprKind kind);
ReprKind repr_kind_from_name(const std::string& name);

// A |V| x |V| matrix derived from a hypergraph walk. For CucuringuSkew the
// matrix is the real skew-symmetric part; the unit-imaginary factor that makes
// it Hermitian is carried implicitly.
struct Representation {
    ReprKind kind;
    Eigen::MatrixXd matrix;
};

// A = (Phi P + P^T Phi) / 2, the clique-expansion adjacency whose row sums
// equal pi.
Eigen::MatrixXd chung_adjacency(const WalkState& w);

// L = Phi - A
Eigen::MatrixXd combinatorial_laplacian(const WalkState& w);

// Normalized Laplacian Phi^{-1/2} L Phi^{-1/2}, computed as I - T so the two
// accessors are exact complements.
Eigen::MatrixXd normalized_laplacian(const WalkState& w);

// T = Phi^{-1/2} A Phi^{-1/2}; symmetric, nonnegative, eigenvalues in [-1, 1]
// with Perron pair (1, sqrt(pi)).
Eigen::MatrixXd core_matrix(const WalkState& w);

// Gamma = Phi^{1/2} (I - P) Phi^{-1/2}; its symmetric part is the normalized
// Laplacian.
Eigen::MatrixXd li_zhang_gamma(const WalkState& w);

// Delta = D_V^{-1/2} X^T Z D_E^{-1} X D_V^{-1/2} on the 0/1 pattern X of R,
// with Z = diag(omega), D_E = diag(X e), D_V(v) = sum_e omega(e) X(e, v).
// Adjacency-like: clustering uses its top-k eigenvectors.
Eigen::MatrixXd zhou_delta(const Hypergraph& h);

// Uniform (edge-independent) walk on the clique expansion:
// P = D_V^{-1} X^T Z D_E^{-1} X. Equals transition_matrix with all vertex
// weights replaced by 1, and is computed through that same path.
SpMat crwc_transition(const Hypergraph& h);

struct SkewResult {
    Eigen::MatrixXd skew;        // P - P^T
    Eigen::VectorXd normalizer;  // S(i) = sum_j |skew(i, j)|, 1 for zero rows
};

SkewResult cucuringu_skew(const SpMat& P);

// Random-walk Laplacian I - P (derived accessor only, not a pipeline input).
Eigen::MatrixXd bauer_laplacian(const SpMat& P);

Representation build_representation(const Hypergraph& h, ReprKind kind,
                                    const WalkOpts& opts = {});

}  // namespace hyperclust
