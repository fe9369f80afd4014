#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hyperclust/errors.hpp"
#include "hyperclust/numerics.hpp"
#include "hyperclust/rng.hpp"

namespace hyperclust {

namespace {

// squared distance of every point to its assigned centroid
double assignment_objective(const Eigen::MatrixXd& points, const Eigen::MatrixXd& centroids,
                            const std::vector<int>& labels) {
    double obj = 0.0;
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        obj += (points.row(i) - centroids.row(labels[static_cast<std::size_t>(i)])).squaredNorm();
    }
    return obj;
}

Eigen::MatrixXd kmeanspp_seed(const Eigen::MatrixXd& points, int k, Rng& rng) {
    const Eigen::Index n = points.rows();
    Eigen::MatrixXd centroids(k, points.cols());
    centroids.row(0) = points.row(static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n))));
    Eigen::VectorXd dist2(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        dist2[i] = (points.row(i) - centroids.row(0)).squaredNorm();
    }
    for (int c = 1; c < k; ++c) {
        const double total = dist2.sum();
        Eigen::Index pick = 0;
        if (total > 0.0) {
            double target = rng.uniform() * total;
            for (Eigen::Index i = 0; i < n; ++i) {
                target -= dist2[i];
                if (target <= 0.0) { pick = i; break; }
                pick = i;
            }
        } else {
            pick = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n)));
        }
        centroids.row(c) = points.row(pick);
        for (Eigen::Index i = 0; i < n; ++i) {
            dist2[i] = std::min(dist2[i], (points.row(i) - centroids.row(c)).squaredNorm());
        }
    }
    return centroids;
}

struct LloydRun {
    std::vector<int> labels;
    double objective;
    int iterations;
};

LloydRun lloyd(const Eigen::MatrixXd& points, int k, int max_iter, Rng& rng) {
    const Eigen::Index n = points.rows();
    Eigen::MatrixXd centroids = kmeanspp_seed(points, k, rng);
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        bool changed = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            int best = 0;
            double best_d = (points.row(i) - centroids.row(0)).squaredNorm();
            for (int c = 1; c < k; ++c) {
                const double d = (points.row(i) - centroids.row(c)).squaredNorm();
                if (d < best_d) { best_d = d; best = c; }
            }
            if (labels[static_cast<std::size_t>(i)] != best) {
                labels[static_cast<std::size_t>(i)] = best;
                changed = true;
            }
        }

        std::vector<Eigen::Index> counts(static_cast<std::size_t>(k), 0);
        for (int l : labels) ++counts[static_cast<std::size_t>(l)];
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) continue;
            // repair: give the empty cluster the point farthest from its centroid
            Eigen::Index worst = -1;
            double worst_d = -1.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                const int l = labels[static_cast<std::size_t>(i)];
                if (counts[static_cast<std::size_t>(l)] <= 1) continue;
                const double d = (points.row(i) - centroids.row(l)).squaredNorm();
                if (d > worst_d) { worst_d = d; worst = i; }
            }
            if (worst >= 0) {
                --counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(worst)])];
                labels[static_cast<std::size_t>(worst)] = c;
                counts[static_cast<std::size_t>(c)] = 1;
                changed = true;
            }
        }

        centroids.setZero();
        for (Eigen::Index i = 0; i < n; ++i) {
            centroids.row(labels[static_cast<std::size_t>(i)]) += points.row(i);
        }
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) {
                centroids.row(c) /= static_cast<double>(counts[static_cast<std::size_t>(c)]);
            }
        }
        if (!changed) break;
    }
    const double objective = assignment_objective(points, centroids, labels);
    return LloydRun{std::move(labels), objective, iter};
}

}  // namespace

KmeansResult kmeans(const Eigen::MatrixXd& points, int k, const KmeansOpts& opts) {
    const Eigen::Index n = points.rows();
    if (k < 1) throw ValidationError("k must be at least 1");
    if (n < k) {
        throw ValidationError("fewer points (" + std::to_string(n) + ") than clusters (" +
                              std::to_string(k) + ")");
    }
    const int restarts = std::max(1, opts.restarts);
    KmeansResult best;
    best.objective = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        Rng rng(opts.seed + static_cast<std::uint64_t>(r));
        LloydRun run = lloyd(points, k, opts.max_iter, rng);
        if (run.objective < best.objective) {
            best.objective = run.objective;
            best.labeling = Labeling{std::move(run.labels), k};
            best.iterations = run.iterations;
        }
    }
    return best;
}

}  // namespace hyperclust
