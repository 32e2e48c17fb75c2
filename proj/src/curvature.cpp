#include "lrc/curvature.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

#include "lrc/error.hpp"
#include "lrc/transport.hpp"
#include "parallel.hpp"

namespace lrc {

namespace {

void require_edge(const Graph& g, NodeId u, NodeId v) {
    if (!g.has_edge(u, v)) {
        fail(ErrorKind::invalid_argument,
             "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    }
}

struct LocalCounts {
    double du;
    double dv;
    double common;
};

LocalCounts counts(const Graph& g, NodeId u, NodeId v) {
    return {static_cast<double>(g.adjacency(u).size()), static_cast<double>(g.adjacency(v).size()),
            static_cast<double>(common_neighbor_count(g, u, v))};
}

double frc_from(const LocalCounts& c) { return 4.0 - c.du - c.dv + 3.0 * c.common; }

double lrc_from(const LocalCounts& c) {
    const double hi = std::max(c.du, c.dv);
    const double lo = std::min(c.du, c.dv);
    return 2.0 / c.du + 2.0 / c.dv - 2.0 + 2.0 * c.common / hi + c.common / lo;
}

FourCycleStats four_cycles_unchecked(const Graph& g, NodeId u, NodeId v) {
    const auto nu = g.adjacency(u);
    const auto nv = g.adjacency(v);
    std::vector<NodeId> k_side;
    std::vector<NodeId> w_side;
    std::set_difference(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(k_side));
    std::set_difference(nv.begin(), nv.end(), nu.begin(), nu.end(), std::back_inserter(w_side));
    std::erase(k_side, v);
    std::erase(w_side, u);

    FourCycleStats stats;
    std::vector<std::int64_t> through_w(w_side.size(), 0);
    for (NodeId k : k_side) {
        std::int64_t through_k = 0;
        for (NodeId w : g.adjacency(k)) {
            const auto it = std::lower_bound(w_side.begin(), w_side.end(), w);
            if (it != w_side.end() && *it == w) {
                ++through_k;
                ++through_w[static_cast<std::size_t>(it - w_side.begin())];
            }
        }
        if (through_k > 0) ++stats.s_uv;
        stats.gamma_max = std::max(stats.gamma_max, through_k);
    }
    for (std::int64_t c : through_w) {
        if (c > 0) ++stats.s_vu;
        stats.gamma_max = std::max(stats.gamma_max, c);
    }
    return stats;
}

double bfc_unchecked(const Graph& g, NodeId u, NodeId v) {
    const LocalCounts c = counts(g, u, v);
    const FourCycleStats s = four_cycles_unchecked(g, u, v);
    double value = lrc_from(c);
    if (s.s_uv + s.s_vu > 0) {
        value += static_cast<double>(s.s_uv + s.s_vu) / (static_cast<double>(s.gamma_max) * std::max(c.du, c.dv));
    }
    return value;
}

double orc_from_scaled(const Graph& g, NodeId u, NodeId v, std::int64_t scaled) {
    const auto denom = static_cast<double>(g.adjacency(u).size() * g.adjacency(v).size());
    return 1.0 - static_cast<double>(scaled) / denom;
}

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace

std::string_view to_string(CurvatureKind kind) {
    switch (kind) {
        case CurvatureKind::frc: return "frc";
        case CurvatureKind::bfc: return "bfc";
        case CurvatureKind::lrc: return "lrc";
        case CurvatureKind::orc: return "orc";
    }
    return "unknown";
}

std::optional<CurvatureKind> parse_curvature_kind(std::string_view name) {
    for (CurvatureKind k : kAllCurvatures) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

double frc_edge(const Graph& g, NodeId u, NodeId v) {
    require_edge(g, u, v);
    return frc_from(counts(g, u, v));
}

double lrc_edge(const Graph& g, NodeId u, NodeId v) {
    require_edge(g, u, v);
    return lrc_from(counts(g, u, v));
}

FourCycleStats four_cycle_stats(const Graph& g, NodeId u, NodeId v) {
    require_edge(g, u, v);
    return four_cycles_unchecked(g, u, v);
}

double bfc_edge(const Graph& g, NodeId u, NodeId v) {
    require_edge(g, u, v);
    return bfc_unchecked(g, u, v);
}

LocalMeasure local_measure(const Graph& g, NodeId i) {
    const auto nbrs = g.neighbors(i);
    if (nbrs.empty()) fail(ErrorKind::precondition, "node " + std::to_string(i) + " is isolated");
    return {std::vector<NodeId>(nbrs.begin(), nbrs.end()), 1.0 / static_cast<double>(nbrs.size())};
}

double w1_local(const Graph& g, NodeId u, NodeId v) {
    require_edge(g, u, v);
    W1Workspace ws;
    const auto denom = static_cast<double>(g.adjacency(u).size() * g.adjacency(v).size());
    return static_cast<double>(ws.scaled_cost(g, u, v)) / denom;
}

double orc_edge(const Graph& g, NodeId u, NodeId v) {
    require_edge(g, u, v);
    W1Workspace ws;
    return orc_from_scaled(g, u, v, ws.scaled_cost(g, u, v));
}

double orc_upper_bound(const Graph& g, NodeId u, NodeId v) {
    require_edge(g, u, v);
    const LocalCounts c = counts(g, u, v);
    return c.common / std::max(c.du, c.dv);
}

double jost_liu_clamped_lower(const Graph& g, NodeId u, NodeId v) {
    require_edge(g, u, v);
    const LocalCounts c = counts(g, u, v);
    const double hi = std::max(c.du, c.dv);
    const double lo = std::min(c.du, c.dv);
    const double base = 1.0 - 1.0 / c.du - 1.0 / c.dv;
    return -positive_part(base - c.common / lo) - positive_part(base - c.common / hi) + c.common / hi;
}

bool clamps_inactive(const Graph& g, NodeId u, NodeId v) {
    require_edge(g, u, v);
    const LocalCounts c = counts(g, u, v);
    const double base = 1.0 - 1.0 / c.du - 1.0 / c.dv;
    return base - c.common / std::min(c.du, c.dv) >= 0.0 && base - c.common / std::max(c.du, c.dv) >= 0.0;
}

EdgeCurvatures curvature_all(const Graph& g, CurvatureKind kind, unsigned workers) {
    if (g.edge_count() == 0) fail(ErrorKind::precondition, "no edges");
    EdgeCurvatures out;
    out.kind = kind;
    out.graph_fingerprint = g.fingerprint();
    out.values.resize(g.edge_count());
    const auto edges = g.edges();
    detail::parallel_chunks(edges.size(), workers, [&](std::size_t begin, std::size_t end, unsigned) {
        W1Workspace ws;
        for (std::size_t k = begin; k < end; ++k) {
            const auto [u, v] = edges[k];
            double value = 0.0;
            switch (kind) {
                case CurvatureKind::frc: value = frc_from(counts(g, u, v)); break;
                case CurvatureKind::lrc: value = lrc_from(counts(g, u, v)); break;
                case CurvatureKind::bfc: value = bfc_unchecked(g, u, v); break;
                case CurvatureKind::orc: value = orc_from_scaled(g, u, v, ws.scaled_cost(g, u, v)); break;
            }
            out.values[k] = value;
        }
    });
    return out;
}

void write_curvature_csv(const Graph& g, const EdgeCurvatures& values, std::ostream& out) {
    if (values.values.size() != g.edge_count() || values.graph_fingerprint != g.fingerprint()) {
        fail(ErrorKind::invalid_argument, "curvature values do not belong to this graph");
    }
    out << "u,v,curvature\n";
    const auto ids = g.external_ids();
    const auto edges = g.edges();
    char buf[64];
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const double x = values.values[k] == 0.0 ? 0.0 : values.values[k];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        out << ids[edges[k].u] << ',' << ids[edges[k].v] << ',' << buf << '\n';
    }
}

}  // namespace lrc
