#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lrc/graph.hpp"

namespace lrc {

inline constexpr int kUnreached = -1;

// Hop distances from source; nodes beyond max_depth (or in another
// component) hold kUnreached.
std::vector<int> bfs_distances(const Graph& g, NodeId source, std::optional<int> max_depth = std::nullopt);

// Labels are component indices in order of each component's smallest node id.
Partition connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Test-scale structural quantities. Each has a hard size guard and throws
// ErrorKind::precondition outside it.
inline constexpr std::size_t kDiameterLimit = 10000;
inline constexpr std::size_t kSpectralLimit = 2000;
inline constexpr std::size_t kCheegerLimit = 20;

int diameter(const Graph& g);

// Smallest non-zero eigenvalue of I - D^{-1/2} A D^{-1/2}.
double spectral_gap(const Graph& g);

// min over S with vol(S) <= vol(V)/2 of |boundary(S)| / vol(S), by exhaustive
// enumeration of subsets.
double cheeger_constant(const Graph& g);

}  // namespace lrc
