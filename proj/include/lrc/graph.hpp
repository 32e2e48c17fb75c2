#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lrc {

using NodeId = std::uint32_t;
using ExternalId = std::uint64_t;

// Undirected edge in internal ids, always stored with u < v.
struct Edge {
    NodeId u = 0;
    NodeId v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct BuildReport {
    std::size_t self_loops = 0;
    std::size_t duplicates = 0;
};

// Immutable undirected simple graph in CSR form.
//
// Internal ids are dense (0..n-1); every node also carries the external id it
// was read with. Canonical edges are (u, v) with u < v sorted
// lexicographically, and every per-edge output in the library is aligned to
// that order.
class Graph {
public:
    Graph() = default;

    // Builds from an explicit node list (node i has external id ids[i]) and
    // internal-id edges. Self-loops and duplicates are dropped and counted.
    static Graph from_internal(std::vector<ExternalId> ids, std::span<const Edge> edges,
                               BuildReport* report = nullptr);

    std::size_t node_count() const noexcept { return external_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const NodeId> neighbors(NodeId i) const;
    std::size_t degree(NodeId i) const;
    bool has_edge(NodeId u, NodeId v) const;

    std::span<const Edge> edges() const noexcept { return edges_; }
    // Position of (u, v) in the canonical edge list.
    std::optional<std::size_t> edge_index(NodeId u, NodeId v) const;

    ExternalId external_id(NodeId i) const;
    std::optional<NodeId> internal_id(ExternalId id) const;
    std::span<const ExternalId> external_ids() const noexcept { return external_; }

    // FNV-1a over the canonical edge list (external ids).
    std::uint64_t fingerprint() const noexcept;

    // Unchecked neighbor access for hot loops; i must be < node_count().
    std::span<const NodeId> adjacency(NodeId i) const noexcept {
        return {adj_.data() + offsets_[i], adj_.data() + offsets_[i + 1]};
    }

private:
    std::vector<std::size_t> offsets_{0};
    std::vector<NodeId> adj_;
    std::vector<Edge> edges_;
    std::vector<ExternalId> external_;
    std::unordered_map<ExternalId, NodeId> internal_;
};

struct BuildResult {
    Graph graph;
    BuildReport report;
};

// Ids are remapped in order of first appearance. Throws on empty input.
BuildResult build_graph(std::span<const std::pair<ExternalId, ExternalId>> pairs);

// One label per internal node id.
struct Partition {
    std::vector<std::int64_t> labels;

    std::size_t size() const noexcept { return labels.size(); }
    std::size_t community_count() const;
};

// Possibly overlapping communities of external ids.
struct Cover {
    std::vector<std::vector<ExternalId>> communities;
};

std::size_t common_neighbor_count(const Graph& g, NodeId i, NodeId j);

// New graph over the same node set keeping edge k iff keep[k].
Graph remove_edges(const Graph& g, const std::vector<bool>& keep);

template <typename Predicate>
Graph remove_edges_if_not(const Graph& g, Predicate keep) {
    std::vector<bool> mask(g.edge_count());
    const auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) mask[k] = keep(edges[k]);
    return remove_edges(g, mask);
}

// Converts a partition to a cover of external ids (one set per label).
Cover partition_to_cover(const Graph& g, const Partition& p);

}  // namespace lrc
