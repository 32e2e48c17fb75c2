#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lrc/curvature.hpp"
#include "lrc/gmm.hpp"
#include "lrc/graph.hpp"

namespace lrc {

struct PreprocessConfig {
    CurvatureKind curvature = CurvatureKind::lrc;
    // When set, prune at this cutoff and skip the mixture fit.
    std::optional<double> threshold;
    GmmConfig gmm;
    unsigned workers = 1;
};

struct PruneReport {
    std::size_t edges_before = 0;
    std::size_t edges_after = 0;
    std::size_t removed = 0;
    std::optional<double> beta_used;
    // kept[k] for canonical edge k of the input graph.
    std::vector<bool> kept;
};

struct PreprocessResult {
    Graph graph;
    EdgeCurvatures curvature;
    std::optional<GmmFit> fit;
    ThresholdResult threshold;
    PruneReport report;
};

// Keeps exactly the edges with values[k] >= beta; nodes are never dropped.
Graph prune_below(const Graph& g, std::span<const double> values, double beta, PruneReport* report = nullptr);

// Curvature-based edge pruning:
//   1. curvature of every edge (LRC by default),
//   2. two-component Gaussian mixture fit of those values,
//   3. valley threshold between the two means,
//   4. drop edges whose curvature is below the threshold.
// A degenerate fit leaves the graph unchanged. Throws "insufficient data" when
// the fit is needed and the graph has fewer than 10 edges.
PreprocessResult preprocess(const Graph& g, const PreprocessConfig& config = {});

}  // namespace lrc
