#include "lrc/preprocess.hpp"

#include <algorithm>
#include <functional>

#include "lrc/error.hpp"

namespace lrc {

Graph prune_below(const Graph& g, std::span<const double> values, double beta, PruneReport* report) {
    if (values.size() != g.edge_count()) fail(ErrorKind::invalid_argument, "one value per edge required");
    std::vector<bool> keep(values.size());
    std::size_t kept = 0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        keep[k] = values[k] >= beta;
        kept += keep[k] ? 1 : 0;
    }
    Graph pruned = remove_edges(g, keep);
    if (report) {
        report->edges_before = g.edge_count();
        report->edges_after = kept;
        report->removed = g.edge_count() - kept;
        report->beta_used = beta;
        report->kept = std::move(keep);
    }
    return pruned;
}

PreprocessResult preprocess(const Graph& g, const PreprocessConfig& config) {
    if (!config.threshold && g.edge_count() < kMinGmmValues) fail(ErrorKind::precondition, "insufficient data");

    PreprocessResult result;
    result.curvature = curvature_all(g, config.curvature, config.workers);
    const std::vector<double>& values = result.curvature.values;

    if (config.threshold) {
        result.threshold.mode = ThresholdMode::explicit_cutoff;
        result.threshold.beta = *config.threshold;
    } else {
        const bool constant = std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
        if (!constant) {
            result.fit = fit_gmm2(values, config.gmm);
            result.threshold = find_threshold(*result.fit);
        }
    }

    if (result.threshold.beta) {
        result.graph = prune_below(g, values, *result.threshold.beta, &result.report);
    } else {
        result.graph = g;
        result.report.edges_before = g.edge_count();
        result.report.edges_after = g.edge_count();
        result.report.removed = 0;
        result.report.kept.assign(g.edge_count(), true);
    }
    return result;
}

}  // namespace lrc
