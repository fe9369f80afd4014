#pragma once

#include <string>
#include <vector>

#include "hyperclust/sparse.hpp"

namespace hyperclust {

// Vertex -> cluster assignment with k clusters. Labels are dense 0-based
// cluster indices in [0, k); clusters may be empty.
struct Labeling {
    std::vector<int> labels;
    int k = 1;
};

std::vector<std::string> validate(const Labeling& l);
void require_valid(const Labeling& l);

// Hypergraph with edge-dependent vertex weights. R is the |E| x |V| weighted
// incidence matrix with R(e, v) = gamma_e(v) > 0 for v in e, and omega holds
// the positive hyperedge weights.
struct Hypergraph {
    SpMat R;
    Eigen::VectorXd omega;

    Eigen::Index n_vertices() const { return R.cols(); }
    Eigen::Index n_edges() const { return R.rows(); }
};

// Convenience constructor from a dense incidence matrix; zeros are dropped.
Hypergraph make_hypergraph(const Eigen::MatrixXd& r, const Eigen::VectorXd& omega);

// Returns every invariant violation (empty list = valid): no empty edges, no
// isolated vertices, strictly positive stored weights, matching omega length.
std::vector<std::string> validate(const Hypergraph& h);
void require_valid(const Hypergraph& h);

// Dual hypergraph: R transposed. The paper never fixes dual hyperedge
// weights, so the default is all ones; callers may supply their own.
Hypergraph dual(const Hypergraph& h);
Hypergraph dual(const Hypergraph& h, const Eigen::VectorXd& omega);

struct Component {
    std::vector<Eigen::Index> vertices;
    std::vector<Eigen::Index> edges;
};

// Partition of vertices and edges; two vertices share a component iff joined
// by a path of shared hyperedges. Components are ordered by smallest vertex.
std::vector<Component> connected_components(const Hypergraph& h);

bool is_connected(const Hypergraph& h);

struct SubHypergraph {
    Hypergraph h;
    std::vector<Eigen::Index> vertex_map;  // old -> new index, -1 if dropped
    std::vector<Eigen::Index> edge_map;    // old -> new index, -1 if dropped
};

// Sub-hypergraph induced on the largest vertex component; ties go to the
// component containing the smallest vertex index.
SubHypergraph largest_component(const Hypergraph& h);

// X^T X on the 0/1 pattern of R: entry (i, j) counts shared hyperedges,
// the diagonal holds vertex degrees in edges.
SpMat clique_adjacency(const Hypergraph& h);

}  // namespace hyperclust
