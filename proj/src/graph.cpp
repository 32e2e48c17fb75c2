#include "lrc/graph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lrc/error.hpp"

namespace lrc {

namespace {

void check_node(const Graph& g, NodeId i) {
    if (i >= g.node_count()) {
        fail(ErrorKind::invalid_argument,
             "node id " + std::to_string(i) + " out of range (n=" + std::to_string(g.node_count()) + ")");
    }
}

}  // namespace

Graph Graph::from_internal(std::vector<ExternalId> ids, std::span<const Edge> edges, BuildReport* report) {
    Graph g;
    const std::size_t n = ids.size();
    g.external_ = std::move(ids);
    g.internal_.reserve(n);
    for (NodeId i = 0; i < n; ++i) {
        if (!g.internal_.emplace(g.external_[i], i).second) {
            fail(ErrorKind::invalid_argument, "duplicate external id " + std::to_string(g.external_[i]));
        }
    }

    BuildReport local;
    g.edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u >= n || e.v >= n) fail(ErrorKind::invalid_argument, "edge endpoint out of range");
        if (e.u == e.v) {
            ++local.self_loops;
            continue;
        }
        if (e.u > e.v) std::swap(e.u, e.v);
        g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    const auto last = std::unique(g.edges_.begin(), g.edges_.end());
    local.duplicates = static_cast<std::size_t>(g.edges_.end() - last);
    g.edges_.erase(last, g.edges_.end());

    std::vector<std::size_t> degree(n, 0);
    for (const Edge& e : g.edges_) {
        ++degree[e.u];
        ++degree[e.v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
    g.adj_.resize(g.offsets_[n]);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Canonical order fills every list ascending: all (y, x) with y < x
    // precede all (x, z).
    for (const Edge& e : g.edges_) {
        g.adj_[cursor[e.u]++] = e.v;
        g.adj_[cursor[e.v]++] = e.u;
    }
    if (report) *report = local;
    return g;
}

std::span<const NodeId> Graph::neighbors(NodeId i) const {
    check_node(*this, i);
    return adjacency(i);
}

std::size_t Graph::degree(NodeId i) const {
    check_node(*this, i);
    return offsets_[i + 1] - offsets_[i];
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    check_node(*this, u);
    check_node(*this, v);
    const auto nu = adjacency(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::optional<std::size_t> Graph::edge_index(NodeId u, NodeId v) const {
    if (u > v) std::swap(u, v);
    const Edge key{u, v};
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

ExternalId Graph::external_id(NodeId i) const {
    check_node(*this, i);
    return external_[i];
}

std::optional<NodeId> Graph::internal_id(ExternalId id) const {
    const auto it = internal_.find(id);
    if (it == internal_.end()) return std::nullopt;
    return it->second;
}

std::uint64_t Graph::fingerprint() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(external_.size());
    for (const Edge& e : edges_) {
        mix(external_[e.u]);
        mix(external_[e.v]);
    }
    return h;
}

BuildResult build_graph(std::span<const std::pair<ExternalId, ExternalId>> pairs) {
    if (pairs.empty()) fail(ErrorKind::precondition, "empty graph");
    std::vector<ExternalId> ids;
    std::unordered_map<ExternalId, NodeId> seen;
    auto intern = [&](ExternalId x) {
        auto [it, inserted] = seen.emplace(x, static_cast<NodeId>(ids.size()));
        if (inserted) ids.push_back(x);
        return it->second;
    };
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        const NodeId u = intern(a);
        const NodeId v = intern(b);
        edges.push_back({u, v});
    }
    BuildResult result;
    result.graph = Graph::from_internal(std::move(ids), edges, &result.report);
    return result;
}

std::size_t Partition::community_count() const {
    std::vector<std::int64_t> sorted(labels);
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::size_t common_neighbor_count(const Graph& g, NodeId i, NodeId j) {
    const auto a = g.neighbors(i);
    const auto b = g.neighbors(j);
    std::size_t count = 0;
    auto x = a.begin();
    auto y = b.begin();
    while (x != a.end() && y != b.end()) {
        if (*x < *y) {
            ++x;
        } else if (*y < *x) {
            ++y;
        } else {
            ++count;
            ++x;
            ++y;
        }
    }
    return count;
}

Graph remove_edges(const Graph& g, const std::vector<bool>& keep) {
    if (keep.size() != g.edge_count()) fail(ErrorKind::invalid_argument, "keep mask does not match edge count");
    std::vector<Edge> kept;
    const auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (keep[k]) kept.push_back(edges[k]);
    }
    std::vector<ExternalId> ids(g.external_ids().begin(), g.external_ids().end());
    return Graph::from_internal(std::move(ids), kept);
}

Cover partition_to_cover(const Graph& g, const Partition& p) {
    if (p.size() != g.node_count()) fail(ErrorKind::invalid_argument, "partition size does not match graph");
    std::map<std::int64_t, std::vector<ExternalId>> groups;
    for (NodeId i = 0; i < p.size(); ++i) groups[p.labels[i]].push_back(g.external_id(i));
    Cover cover;
    for (auto& [label, members] : groups) cover.communities.push_back(std::move(members));
    return cover;
}

}  // namespace lrc
