#include <cmath>
#include <limits>
#include <vector>

#include "hyperclust/errors.hpp"
#include "hyperclust/numerics.hpp"

namespace hyperclust {

// Kuhn-Munkres via shortest augmenting paths with dual potentials, O(n^3).
// Internally minimizes -score.
std::vector<int> hungarian(const Eigen::MatrixXd& score) {
    const Eigen::Index n = score.rows();
    if (n != score.cols()) throw ValidationError("assignment matrix must be square");
    if (n == 0) return {};
    if (!score.allFinite()) throw ValidationError("assignment matrix must be finite");

    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<double> v(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<Eigen::Index> match(static_cast<std::size_t>(n) + 1, 0);  // col -> row
    std::vector<Eigen::Index> way(static_cast<std::size_t>(n) + 1, 0);

    for (Eigen::Index i = 1; i <= n; ++i) {
        match[0] = i;
        Eigen::Index j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(n) + 1, inf);
        std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
        do {
            used[static_cast<std::size_t>(j0)] = true;
            const Eigen::Index i0 = match[static_cast<std::size_t>(j0)];
            double delta = inf;
            Eigen::Index j1 = 0;
            for (Eigen::Index j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const double cur = -score(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] -
                                   v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (Eigen::Index j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(match[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (match[static_cast<std::size_t>(j0)] != 0);
        do {
            const Eigen::Index j1 = way[static_cast<std::size_t>(j0)];
            match[static_cast<std::size_t>(j0)] = match[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> perm(static_cast<std::size_t>(n), -1);
    for (Eigen::Index j = 1; j <= n; ++j) {
        perm[static_cast<std::size_t>(match[static_cast<std::size_t>(j)] - 1)] =
            static_cast<int>(j - 1);
    }
    return perm;
}

}  // namespace hyperclust
