#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lrc/graph.hpp"

namespace lrc {

namespace detail {
class SmallTransport;
}

// Exact min-cost transportation between integer supplies and demands with
// small non-negative integer costs. Primal-dual successive shortest paths on
// the dense bipartite residual graph: each round raises node potentials by a
// Dijkstra pass and then pushes a blocking flow (Dinic) through the
// zero-reduced-cost arcs. With costs bounded by c_max there are at most
// c_max rounds.
//
// Buffers are kept between calls; one instance per thread.
class TransportSolver {
public:
    // automatic uses the bitset variant when both sides have at most 64
    // entries; the other two force one implementation (tests compare them).
    enum class Method { automatic, dense, bitset };

    TransportSolver();
    ~TransportSolver();
    TransportSolver(TransportSolver&&) noexcept;
    TransportSolver& operator=(TransportSolver&&) noexcept;

    // cost is row-major, supply.size() x demand.size(). Total supply must
    // equal total demand.
    std::int64_t solve(std::span<const std::int64_t> supply, std::span<const std::int64_t> demand,
                       std::span<const int> cost, Method method = Method::automatic);

private:
    // Nodes: 0 source, 1..r rows, r+1..r+c columns, r+c+1 sink.
    int arc_count(int x) const;
    bool arc(int x, int k, int& y, std::int64_t& cap) const;
    void apply(int x, int k, std::int64_t f);
    bool raise_potentials();
    bool build_levels();
    std::int64_t push(int x, std::int64_t limit);

    int rows_ = 0;
    int cols_ = 0;
    int sink_ = 0;
    const int* cost_ = nullptr;
    std::vector<std::int64_t> flow_;
    std::vector<char> tight_;  // zero reduced cost under the current potentials
    std::vector<std::int64_t> supply_;
    std::vector<std::int64_t> demand_;
    std::vector<std::int64_t> left_supply_;
    std::vector<std::int64_t> left_demand_;
    std::vector<std::int64_t> potential_;
    std::vector<std::int64_t> dist_;
    std::vector<char> done_;
    std::vector<int> level_;
    std::vector<int> iter_;
    std::vector<int> queue_;
    std::unique_ptr<detail::SmallTransport> small_;
};

// Per-thread scratch for exact local Wasserstein-1 between neighbor measures.
// Keeps a distance cache for the last first endpoint seen, so edges sharing
// it (canonical order groups them) reuse the neighbor scan. A workspace must
// only be used with graphs that outlive it.
class W1Workspace {
public:
    // Returns the optimal transport cost scaled by deg(u) * deg(v), i.e. the
    // exact numerator of W1(m_u, m_v) over that integer denominator.
    std::int64_t scaled_cost(const Graph& g, NodeId u, NodeId v);

private:
    void grouped_costs(const Graph& g, NodeId u);
    void fill_costs_direct(const Graph& g);
    void compress();

    TransportSolver solver_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t token_ = 0;
    // For the cached node u: bit k of near_[x] is set when x is adjacent to
    // the k-th neighbor of u.
    const Graph* cached_graph_ = nullptr;
    NodeId cached_u_ = 0;
    bool cache_valid_ = false;
    std::vector<std::uint64_t> near_;
    std::vector<NodeId> touched_;

    std::vector<NodeId> sources_;
    std::vector<int> source_pos_;  // index of each source in N(u)
    std::vector<NodeId> sinks_;
    std::vector<std::int64_t> supply_;
    std::vector<std::int64_t> demand_;
    std::vector<int> cost_;
    std::vector<std::size_t> row_group_;
    std::vector<std::size_t> col_group_;
    std::vector<std::uint64_t> row_key_;
    std::vector<std::uint64_t> col_key_;
    std::vector<std::uint64_t> col_one_;
    std::vector<std::uint64_t> col_two_;
    std::vector<std::uint64_t> row_one_;
    std::vector<std::uint64_t> row_two_;
    std::vector<std::int64_t> merged_supply_;
    std::vector<std::int64_t> merged_demand_;
    std::vector<int> merged_cost_;
};

}  // namespace lrc
