#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "lrc/graph.hpp"

namespace lrc {

enum class CurvatureKind { frc, bfc, lrc, orc };

inline constexpr CurvatureKind kAllCurvatures[] = {CurvatureKind::frc, CurvatureKind::bfc, CurvatureKind::lrc,
                                                   CurvatureKind::orc};

std::string_view to_string(CurvatureKind kind);
std::optional<CurvatureKind> parse_curvature_kind(std::string_view name);

// Values aligned to g.edges() of the graph they were computed on.
struct EdgeCurvatures {
    CurvatureKind kind = CurvatureKind::lrc;
    std::vector<double> values;
    std::uint64_t graph_fingerprint = 0;
};

// Forman: 4 - n_u - n_v + 3 n_uv.
double frc_edge(const Graph& g, NodeId u, NodeId v);

// Lower Ricci curvature from degrees and the triangle count only:
//   2/n_u + 2/n_v - 2 + 2 n_uv / max(n_u, n_v) + n_uv / min(n_u, n_v)
double lrc_edge(const Graph& g, NodeId u, NodeId v);

// Diagonal-free 4-cycles u-k-w-v based at edge (u, v): k in N(u) \ N(v),
// w in N(v) \ N(u), k ~ w, with k != v and w != u.
struct FourCycleStats {
    std::int64_t s_uv = 0;       // distinct k taking part in such a cycle
    std::int64_t s_vu = 0;       // distinct w taking part in such a cycle
    std::int64_t gamma_max = 0;  // most cycles through a single k or w; 0 if none
};
FourCycleStats four_cycle_stats(const Graph& g, NodeId u, NodeId v);

// Balanced Forman: LRC plus (s_uv + s_vu) / (gamma_max * max(n_u, n_v)); the
// square term is 0 when no diagonal-free 4-cycle exists.
double bfc_edge(const Graph& g, NodeId u, NodeId v);

// Uniform probability on N(i), no mass kept at i.
struct LocalMeasure {
    std::vector<NodeId> support;
    double mass = 0.0;
};
LocalMeasure local_measure(const Graph& g, NodeId i);

// Exact Wasserstein-1 between local_measure(u) and local_measure(v) with the
// graph distance of g as ground cost.
double w1_local(const Graph& g, NodeId u, NodeId v);

// Ollivier-Ricci: 1 - W1(m_u, m_v) since d(u, v) = 1 on an edge.
double orc_edge(const Graph& g, NodeId u, NodeId v);

// ORC upper bound n_uv / max(n_u, n_v).
double orc_upper_bound(const Graph& g, NodeId u, NodeId v);

// ORC lower bound with positive-part clamps:
//   -(1 - 1/n_u - 1/n_v - n_uv/min)_+ - (1 - 1/n_u - 1/n_v - n_uv/max)_+ + n_uv/max
// Without the clamps this is exactly lrc_edge.
double jost_liu_clamped_lower(const Graph& g, NodeId u, NodeId v);

// True when both clamp arguments above are >= 0, i.e. the clamped bound and
// LRC coincide.
bool clamps_inactive(const Graph& g, NodeId u, NodeId v);

// Curvature of every canonical edge. Output is identical for any worker count.
EdgeCurvatures curvature_all(const Graph& g, CurvatureKind kind, unsigned workers = 1);

// "u,v,curvature" CSV with external ids and 12 significant digits.
void write_curvature_csv(const Graph& g, const EdgeCurvatures& values, std::ostream& out);

}  // namespace lrc
