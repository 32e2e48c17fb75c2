#include "lrc/structure.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "lrc/error.hpp"

namespace lrc {

std::vector<int> bfs_distances(const Graph& g, NodeId source, std::optional<int> max_depth) {
    if (source >= g.node_count()) fail(ErrorKind::invalid_argument, "source node out of range");
    std::vector<int> dist(g.node_count(), kUnreached);
    std::vector<NodeId> frontier{source};
    dist[source] = 0;
    std::size_t head = 0;
    while (head < frontier.size()) {
        const NodeId x = frontier[head++];
        if (max_depth && dist[x] >= *max_depth) continue;
        for (NodeId y : g.adjacency(x)) {
            if (dist[y] == kUnreached) {
                dist[y] = dist[x] + 1;
                frontier.push_back(y);
            }
        }
    }
    return dist;
}

Partition connected_components(const Graph& g) {
    Partition p;
    p.labels.assign(g.node_count(), -1);
    std::int64_t next = 0;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (p.labels[s] >= 0) continue;
        p.labels[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            const NodeId x = stack.back();
            stack.pop_back();
            for (NodeId y : g.adjacency(x)) {
                if (p.labels[y] < 0) {
                    p.labels[y] = next;
                    stack.push_back(y);
                }
            }
        }
        ++next;
    }
    return p;
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return false;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreached; });
}

int diameter(const Graph& g) {
    if (g.node_count() > kDiameterLimit) {
        fail(ErrorKind::precondition, "diameter is limited to n <= " + std::to_string(kDiameterLimit));
    }
    if (!is_connected(g)) fail(ErrorKind::precondition, "disconnected");
    int best = 0;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        const auto dist = bfs_distances(g, s);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

double spectral_gap(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n > kSpectralLimit) {
        fail(ErrorKind::precondition, "spectral_gap is limited to n <= " + std::to_string(kSpectralLimit));
    }
    if (n < 2 || !is_connected(g)) fail(ErrorKind::precondition, "disconnected");

    Eigen::MatrixXd laplacian = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (const Edge& e : g.edges()) {
        const double w = 1.0 / std::sqrt(static_cast<double>(g.degree(e.u)) * static_cast<double>(g.degree(e.v)));
        laplacian(e.u, e.v) = -w;
        laplacian(e.v, e.u) = -w;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) fail(ErrorKind::precondition, "eigensolver did not converge");
    // Connected: eigenvalue 0 is simple, so the second smallest is the gap.
    return solver.eigenvalues()(1);
}

double cheeger_constant(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n > kCheegerLimit) fail(ErrorKind::precondition, "brute force limit");
    if (n < 2 || !is_connected(g)) fail(ErrorKind::precondition, "disconnected");

    std::vector<std::uint32_t> neighbor_mask(n, 0);
    std::vector<int> degree(n, 0);
    int total_volume = 0;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j : g.adjacency(i)) neighbor_mask[i] |= 1U << j;
        degree[i] = static_cast<int>(g.adjacency(i).size());
        total_volume += degree[i];
    }
    double best = std::numeric_limits<double>::infinity();
    const std::uint32_t full = (1U << n) - 1U;
    for (std::uint32_t s = 1; s < full; ++s) {
        int volume = 0;
        int boundary = 0;
        for (NodeId i = 0; i < n; ++i) {
            if ((s >> i) & 1U) {
                volume += degree[i];
                boundary += std::popcount(neighbor_mask[i] & ~s & full);
            }
        }
        if (volume == 0 || 2 * volume > total_volume) continue;
        best = std::min(best, static_cast<double>(boundary) / volume);
    }
    return best;
}

}  // namespace lrc
