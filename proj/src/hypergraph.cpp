#include "hyperclust/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "hyperclust/errors.hpp"

namespace hyperclust {

std::vector<std::string> validate(const Labeling& l) {
    std::vector<std::string> out;
    if (l.k < 1) out.push_back("cluster count " + std::to_string(l.k) + " < 1");
    for (std::size_t i = 0; i < l.labels.size(); ++i) {
        if (l.labels[i] < 0 || l.labels[i] >= l.k) {
            out.push_back("label " + std::to_string(l.labels[i]) + " at vertex " +
                          std::to_string(i) + " outside [0," + std::to_string(l.k) + ")");
        }
    }
    return out;
}

namespace {

void throw_violations(const std::vector<std::string>& v, const char* what) {
    if (v.empty()) return;
    std::string msg = std::string("invalid ") + what + ":";
    for (const auto& s : v) msg += " " + s + ";";
    throw ValidationError(msg);
}

}  // namespace

void require_valid(const Labeling& l) { throw_violations(validate(l), "labeling"); }

Hypergraph make_hypergraph(const Eigen::MatrixXd& r, const Eigen::VectorXd& omega) {
    return Hypergraph{sparse_from_dense(r), omega};
}

std::vector<std::string> validate(const Hypergraph& h) {
    std::vector<std::string> out;
    const Eigen::Index m = h.n_edges(), n = h.n_vertices();
    if (h.omega.size() != m) {
        out.push_back("omega length " + std::to_string(h.omega.size()) +
                      " != edge count " + std::to_string(m));
    }
    std::vector<Eigen::Index> col_nnz(static_cast<std::size_t>(n), 0);
    for (Eigen::Index e = 0; e < h.R.outerSize(); ++e) {
        Eigen::Index row_nnz = 0;
        for (SpMat::InnerIterator it(h.R, e); it; ++it) {
            if (it.value() <= 0.0) {
                out.push_back("entry (" + std::to_string(e) + "," + std::to_string(it.col()) +
                              ") nonpositive");
            }
            ++col_nnz[static_cast<std::size_t>(it.col())];
            ++row_nnz;
        }
        if (row_nnz == 0) out.push_back("edge " + std::to_string(e) + " empty");
    }
    for (Eigen::Index v = 0; v < n; ++v) {
        if (col_nnz[static_cast<std::size_t>(v)] == 0)
            out.push_back("vertex " + std::to_string(v) + " isolated");
    }
    for (Eigen::Index e = 0; e < std::min<Eigen::Index>(m, h.omega.size()); ++e) {
        if (!(h.omega[e] > 0.0))
            out.push_back("edge weight " + std::to_string(e) + " nonpositive");
    }
    return out;
}

void require_valid(const Hypergraph& h) { throw_violations(validate(h), "hypergraph"); }

Hypergraph dual(const Hypergraph& h) {
    return dual(h, Eigen::VectorXd::Ones(h.n_vertices()));
}

Hypergraph dual(const Hypergraph& h, const Eigen::VectorXd& omega) {
    require_valid(h);
    if (omega.size() != h.n_vertices()) {
        throw ValidationError("dual omega length " + std::to_string(omega.size()) +
                              " != vertex count " + std::to_string(h.n_vertices()));
    }
    SpMat rt = h.R.transpose();
    rt.makeCompressed();
    return Hypergraph{std::move(rt), omega};
}

std::vector<Component> connected_components(const Hypergraph& h) {
    require_valid(h);
    const Eigen::Index m = h.n_edges(), n = h.n_vertices();

    // bipartite vertex/edge adjacency from the pattern of R
    std::vector<std::vector<Eigen::Index>> edges_of(static_cast<std::size_t>(n));
    std::vector<std::vector<Eigen::Index>> verts_of(static_cast<std::size_t>(m));
    for (Eigen::Index e = 0; e < h.R.outerSize(); ++e) {
        for (SpMat::InnerIterator it(h.R, e); it; ++it) {
            edges_of[static_cast<std::size_t>(it.col())].push_back(e);
            verts_of[static_cast<std::size_t>(e)].push_back(it.col());
        }
    }

    std::vector<bool> vseen(static_cast<std::size_t>(n), false);
    std::vector<bool> eseen(static_cast<std::size_t>(m), false);
    std::vector<Component> comps;
    for (Eigen::Index start = 0; start < n; ++start) {
        if (vseen[static_cast<std::size_t>(start)]) continue;
        Component c;
        std::deque<Eigen::Index> queue{start};
        vseen[static_cast<std::size_t>(start)] = true;
        while (!queue.empty()) {
            const Eigen::Index v = queue.front();
            queue.pop_front();
            c.vertices.push_back(v);
            for (Eigen::Index e : edges_of[static_cast<std::size_t>(v)]) {
                if (eseen[static_cast<std::size_t>(e)]) continue;
                eseen[static_cast<std::size_t>(e)] = true;
                c.edges.push_back(e);
                for (Eigen::Index u : verts_of[static_cast<std::size_t>(e)]) {
                    if (!vseen[static_cast<std::size_t>(u)]) {
                        vseen[static_cast<std::size_t>(u)] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        std::sort(c.vertices.begin(), c.vertices.end());
        std::sort(c.edges.begin(), c.edges.end());
        comps.push_back(std::move(c));
    }
    return comps;
}

bool is_connected(const Hypergraph& h) { return connected_components(h).size() == 1; }

SubHypergraph largest_component(const Hypergraph& h) {
    const auto comps = connected_components(h);
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i) {
        if (comps[i].vertices.size() > comps[best].vertices.size()) best = i;
    }
    const Component& c = comps[best];

    SubHypergraph out;
    out.vertex_map.assign(static_cast<std::size_t>(h.n_vertices()), -1);
    out.edge_map.assign(static_cast<std::size_t>(h.n_edges()), -1);
    for (std::size_t i = 0; i < c.vertices.size(); ++i)
        out.vertex_map[static_cast<std::size_t>(c.vertices[i])] = static_cast<Eigen::Index>(i);
    for (std::size_t i = 0; i < c.edges.size(); ++i)
        out.edge_map[static_cast<std::size_t>(c.edges[i])] = static_cast<Eigen::Index>(i);

    std::vector<Triplet> entries;
    for (Eigen::Index e = 0; e < h.R.outerSize(); ++e) {
        const Eigen::Index ne = out.edge_map[static_cast<std::size_t>(e)];
        if (ne < 0) continue;
        for (SpMat::InnerIterator it(h.R, e); it; ++it) {
            const Eigen::Index nv = out.vertex_map[static_cast<std::size_t>(it.col())];
            entries.emplace_back(ne, nv, it.value());
        }
    }
    Eigen::VectorXd omega(static_cast<Eigen::Index>(c.edges.size()));
    for (std::size_t i = 0; i < c.edges.size(); ++i) omega[static_cast<Eigen::Index>(i)] = h.omega[c.edges[i]];
    out.h = Hypergraph{sparse_from_triplets(static_cast<Eigen::Index>(c.edges.size()),
                                            static_cast<Eigen::Index>(c.vertices.size()), entries),
                       std::move(omega)};
    return out;
}

SpMat clique_adjacency(const Hypergraph& h) {
    require_valid(h);
    const SpMat x = pattern(h.R);
    SpMat a = (x.transpose() * x).pruned();
    a.makeCompressed();
    return a;
}

}  // namespace hyperclust
