#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lrc/graph.hpp"

namespace lrc {

// SNAP-style edge list: '#' comments, two non-negative integer ids per line
// separated by spaces or tabs. Blank lines are ignored.
BuildResult parse_edge_list(std::istream& in);

// GML subset: `node [ id N value V ... ]` and `edge [ source A target B ... ]`
// inside a `graph [ ... ]` block. Every other key is ignored. Nodes keep their
// declaration order; the partition comes from each node's integer `value`.
struct GmlGraph {
    Graph graph;
    Partition partition;
    BuildReport report;
};
GmlGraph parse_gml_subset(std::istream& in);

// SNAP `cmty` format: one community per line, external ids.
Cover parse_community_file(std::istream& in);

// "u<TAB>v" per canonical edge, external ids.
void write_edge_list(const Graph& g, std::ostream& out);

// "node<TAB>label" files written by `detect`.
using LabelList = std::vector<std::pair<ExternalId, std::int64_t>>;
LabelList parse_label_file(std::istream& in);
void write_label_file(const Graph& g, const Partition& p, std::ostream& out);

}  // namespace lrc
