#include "hyperclust/representations.hpp"

#include <cmath>

#include "hyperclust/errors.hpp"

namespace hyperclust {

const char* repr_kind_name(ReprKind kind) {
    switch (kind) {
        case ReprKind::T: return "T";
        case ReprKind::L: return "L";
        case ReprKind::NormLap: return "normlap";
        case ReprKind::Gamma: return "gamma";
        case ReprKind::ZhouDelta: return "delta";
        case ReprKind::CrwcP: return "crwc";
        case ReprKind::ChungA: return "chungA";
        case ReprKind::CucuringuSkew: return "skew";
    }
    return "?";
}

ReprKind repr_kind_from_name(const std::string& name) {
    if (name == "T") return ReprKind::T;
    if (name == "L") return ReprKind::L;
    if (name == "normlap") return ReprKind::NormLap;
    if (name == "gamma") return ReprKind::Gamma;
    if (name == "delta") return ReprKind::ZhouDelta;
    if (name == "crwc") return ReprKind::CrwcP;
    if (name == "chungA") return ReprKind::ChungA;
    if (name == "skew") return ReprKind::CucuringuSkew;
    throw ValidationError("unknown representation kind '" + name +
                          "' (expected T|L|normlap|gamma|delta|crwc|chungA|skew)");
}

namespace {

void require_positive_pi(const WalkState& w) {
    if (w.pi.size() != w.P.rows()) throw ValidationError("walk state: pi/P dimension mismatch");
    if (w.pi.size() == 0 || w.pi.minCoeff() <= 0.0) {
        throw ValidationError("stationary distribution has a nonpositive entry; walk not converged");
    }
}

}  // namespace

Eigen::MatrixXd chung_adjacency(const WalkState& w) {
    require_positive_pi(w);
    const Eigen::MatrixXd pd = to_dense(w.P);
    const Eigen::MatrixXd m = w.pi.asDiagonal() * pd;
    return 0.5 * (m + m.transpose());
}

Eigen::MatrixXd combinatorial_laplacian(const WalkState& w) {
    Eigen::MatrixXd l = -chung_adjacency(w);
    l.diagonal() += w.pi;
    return l;
}

Eigen::MatrixXd core_matrix(const WalkState& w) {
    require_positive_pi(w);
    const Eigen::VectorXd inv_sqrt = w.pi.array().rsqrt();
    Eigen::MatrixXd t = chung_adjacency(w);
    t = inv_sqrt.asDiagonal() * t * inv_sqrt.asDiagonal();
    return 0.5 * (t + t.transpose().eval());
}

Eigen::MatrixXd normalized_laplacian(const WalkState& w) {
    Eigen::MatrixXd l = -core_matrix(w);
    l.diagonal().array() += 1.0;
    return l;
}

Eigen::MatrixXd li_zhang_gamma(const WalkState& w) {
    require_positive_pi(w);
    const Eigen::VectorXd s = w.pi.array().sqrt();
    const Eigen::VectorXd inv_s = w.pi.array().rsqrt();
    Eigen::MatrixXd g = -to_dense(w.P);
    g.diagonal().array() += 1.0;
    return s.asDiagonal() * g * inv_s.asDiagonal();
}

Eigen::MatrixXd zhou_delta(const Hypergraph& h) {
    require_valid(h);
    if (!is_connected(h)) {
        throw ValidationError("hypergraph is disconnected; take largest_component first");
    }
    const SpMat x = pattern(h.R);
    const Eigen::VectorXd edge_size = sparse_row_sums(x);
    Eigen::VectorXd dv = Eigen::VectorXd::Zero(h.n_vertices());
    for (Eigen::Index e = 0; e < x.outerSize(); ++e)
        for (SpMat::InnerIterator it(x, e); it; ++it) dv[it.col()] += h.omega[e];

    SpMat scaled = x;  // rows scaled by omega(e) / |e|
    for (Eigen::Index e = 0; e < scaled.outerSize(); ++e) {
        const double s = h.omega[e] / edge_size[e];
        for (SpMat::InnerIterator it(scaled, e); it; ++it) it.valueRef() = s;
    }
    Eigen::MatrixXd delta = to_dense(SpMat(x.transpose() * scaled));
    const Eigen::VectorXd inv_sqrt = dv.array().rsqrt();
    delta = inv_sqrt.asDiagonal() * delta * inv_sqrt.asDiagonal();
    return 0.5 * (delta + delta.transpose().eval());
}

SpMat crwc_transition(const Hypergraph& h) {
    Hypergraph unit{pattern(h.R), h.omega};
    return transition_matrix(unit);
}

SkewResult cucuringu_skew(const SpMat& P) {
    if (P.rows() != P.cols()) throw ValidationError("transition matrix must be square");
    const Eigen::MatrixXd pd = to_dense(P);
    SkewResult out;
    out.skew = pd - pd.transpose();
    out.normalizer = out.skew.cwiseAbs().rowwise().sum();
    for (Eigen::Index i = 0; i < out.normalizer.size(); ++i) {
        if (out.normalizer[i] == 0.0) out.normalizer[i] = 1.0;
    }
    return out;
}

Eigen::MatrixXd bauer_laplacian(const SpMat& P) {
    if (P.rows() != P.cols()) throw ValidationError("transition matrix must be square");
    Eigen::MatrixXd l = -to_dense(P);
    l.diagonal().array() += 1.0;
    return l;
}

Representation build_representation(const Hypergraph& h, ReprKind kind, const WalkOpts& opts) {
    switch (kind) {
        case ReprKind::ZhouDelta:
            return {kind, zhou_delta(h)};
        case ReprKind::CrwcP:
            return {kind, to_dense(crwc_transition(h))};
        default:
            break;
    }
    const WalkState w = make_walk(h, opts);
    switch (kind) {
        case ReprKind::T: return {kind, core_matrix(w)};
        case ReprKind::L: return {kind, combinatorial_laplacian(w)};
        case ReprKind::NormLap: return {kind, normalized_laplacian(w)};
        case ReprKind::Gamma: return {kind, li_zhang_gamma(w)};
        case ReprKind::ChungA: return {kind, chung_adjacency(w)};
        case ReprKind::CucuringuSkew: return {kind, cucuringu_skew(w.P).skew};
        default: break;
    }
    throw ValidationError("unhandled representation kind");
}

}  // namespace hyperclust
