#pragma once

#include <cstdint>
#include <vector>

#include "lrc/graph.hpp"

namespace lrc {

// Co-assignment counts of two partitions over the same nodes.
struct ContingencyTable {
    std::vector<std::vector<std::int64_t>> counts;  // rows: clusters of a, cols: clusters of b
    std::vector<std::int64_t> row_sums;
    std::vector<std::int64_t> col_sums;
    std::int64_t total = 0;
};

ContingencyTable contingency(const Partition& a, const Partition& b);

// Hubert-Arabie adjusted Rand index; 1.0 when both the index and its
// normaliser vanish (both partitions trivial and equal).
double ari(const Partition& a, const Partition& b);

// Adjusted mutual information with natural logs, exact expected mutual
// information under the hypergeometric model and arithmetic-mean
// normalisation. Clipped to [-1, 1].
double ami(const Partition& a, const Partition& b);

// Symmetric average best-match F1 between two covers.
double overlapping_f1(const Cover& truth, const Cover& pred);

struct DetectionResult {
    Partition partition;
    int iterations = 0;
    std::uint64_t seed = 0;
};

// Asynchronous label propagation. Every node starts with its own label; each
// sweep visits nodes in a seeded random order and moves a node to the most
// frequent label among its neighbours, choosing uniformly among tied labels.
// A node whose current label is already among the most frequent keeps it, so
// a sweep with no change means every node holds a majority label.
DetectionResult lpa_detect(const Graph& g, std::uint64_t seed, int max_sweeps = 100);

}  // namespace lrc
