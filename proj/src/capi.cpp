#include "lrc/lrc.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <new>
#include <sstream>
#include <string>
#include <unordered_map>

#include "lrc/curvature.hpp"
#include "lrc/error.hpp"
#include "lrc/io.hpp"
#include "lrc/metrics.hpp"
#include "lrc/preprocess.hpp"
#include "lrc/sbm.hpp"
#include "lrc/structure.hpp"

struct lrc_graph {
    lrc::Graph graph;
};

struct lrc_curvature {
    lrc::EdgeCurvatures data;
};

struct lrc_partition {
    lrc::LabelList entries;
};

struct lrc_cover {
    lrc::Cover cover;
};

struct lrc_grid {
    lrc::GridResult result;
};

namespace {

thread_local std::string g_last_error;

lrc_status set_error(lrc_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

lrc_status status_of(lrc::ErrorKind kind) {
    switch (kind) {
        case lrc::ErrorKind::io: return LRC_ERR_IO;
        case lrc::ErrorKind::format: return LRC_ERR_FORMAT;
        case lrc::ErrorKind::precondition: return LRC_ERR_PRECONDITION;
        case lrc::ErrorKind::invalid_argument: return LRC_ERR_INVALID_ARGUMENT;
    }
    return LRC_ERR_INTERNAL;
}

template <typename Body>
lrc_status guarded(Body body) {
    try {
        body();
        g_last_error.clear();
        return LRC_OK;
    } catch (const lrc::Error& e) {
        return set_error(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(LRC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(LRC_ERR_INTERNAL, e.what());
    }
}

void require(bool ok, const char* what) {
    if (!ok) lrc::fail(lrc::ErrorKind::invalid_argument, what);
}

std::ifstream open_input(const char* path) {
    require(path != nullptr, "null path");
    std::ifstream in(path, std::ios::binary);
    if (!in) lrc::fail(lrc::ErrorKind::io, std::string("cannot open '") + path + "' for reading");
    return in;
}

// Prefixes parse errors with the file name so messages point at the input.
template <typename Parse>
auto parse_file(const char* path, Parse parse) {
    std::ifstream in = open_input(path);
    try {
        return parse(in);
    } catch (const lrc::Error& e) {
        lrc::fail(e.kind(), std::string(path) + ": " + e.what());
    }
}

template <typename Write>
void write_output(const char* path, Write write) {
    require(path != nullptr, "null path");
    if (std::string_view(path) == "-") {
        write(std::cout);
        std::cout.flush();
        if (!std::cout) lrc::fail(lrc::ErrorKind::io, "write to stdout failed");
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) lrc::fail(lrc::ErrorKind::io, std::string("cannot open '") + path + "' for writing");
    write(out);
    out.flush();
    if (!out) lrc::fail(lrc::ErrorKind::io, std::string("write to '") + path + "' failed");
}

lrc::CurvatureKind kind_from(const char* name) {
    require(name != nullptr, "null curvature name");
    const auto kind = lrc::parse_curvature_kind(name);
    if (!kind) lrc::fail(lrc::ErrorKind::invalid_argument, std::string("unknown curvature '") + name + "'");
    return *kind;
}

lrc_partition* partition_over(const lrc::Graph& g, const lrc::Partition& p) {
    auto* out = new lrc_partition;
    out->entries.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out->entries.emplace_back(g.external_id(static_cast<lrc::NodeId>(i)), p.labels[i]);
    }
    return out;
}

// Labels of b listed in the node order of a.
std::pair<lrc::Partition, lrc::Partition> aligned(const lrc_partition* a, const lrc_partition* b) {
    require(a != nullptr && b != nullptr, "null partition");
    if (a->entries.size() != b->entries.size()) {
        lrc::fail(lrc::ErrorKind::precondition, "partitions cover different node sets");
    }
    std::unordered_map<lrc::ExternalId, std::int64_t> lookup;
    lookup.reserve(b->entries.size());
    for (const auto& [id, label] : b->entries) lookup.emplace(id, label);
    lrc::Partition pa, pb;
    pa.labels.reserve(a->entries.size());
    pb.labels.reserve(a->entries.size());
    for (const auto& [id, label] : a->entries) {
        const auto it = lookup.find(id);
        if (it == lookup.end()) lrc::fail(lrc::ErrorKind::precondition, "partitions cover different node sets");
        pa.labels.push_back(label);
        pb.labels.push_back(it->second);
    }
    return {std::move(pa), std::move(pb)};
}

void check_unique_ids(const lrc::LabelList& entries) {
    std::unordered_map<lrc::ExternalId, bool> seen;
    seen.reserve(entries.size());
    for (const auto& [id, label] : entries) {
        if (!seen.emplace(id, true).second) {
            lrc::fail(lrc::ErrorKind::format, "node " + std::to_string(id) + " listed twice");
        }
    }
}

const char* static_name(lrc::CurvatureKind kind) {
    switch (kind) {
        case lrc::CurvatureKind::frc: return "frc";
        case lrc::CurvatureKind::bfc: return "bfc";
        case lrc::CurvatureKind::lrc: return "lrc";
        case lrc::CurvatureKind::orc: return "orc";
    }
    return "unknown";
}

const char* static_name(lrc::Score score) {
    switch (score) {
        case lrc::Score::aer: return "AER";
        case lrc::Score::aop: return "AOP";
        case lrc::Score::pps: return "PPS";
    }
    return "unknown";
}

}  // namespace

extern "C" {

const char* lrc_last_error(void) { return g_last_error.c_str(); }

const char* lrc_status_name(lrc_status status) {
    switch (status) {
        case LRC_OK: return "ok";
        case LRC_ERR_IO: return "io";
        case LRC_ERR_FORMAT: return "format";
        case LRC_ERR_PRECONDITION: return "precondition";
        case LRC_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case LRC_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* lrc_version(void) { return "0.1.0"; }

lrc_status lrc_graph_read_edge_list(const char* path, lrc_graph** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        auto built = parse_file(path, [](std::istream& in) { return lrc::parse_edge_list(in); });
        *out = new lrc_graph{std::move(built.graph)};
    });
}

lrc_status lrc_graph_read_gml(const char* path, lrc_graph** out, lrc_partition** labels) {
    return guarded([&] {
        require(out != nullptr, "null output");
        auto gml = parse_file(path, [](std::istream& in) { return lrc::parse_gml_subset(in); });
        if (labels) *labels = partition_over(gml.graph, gml.partition);
        *out = new lrc_graph{std::move(gml.graph)};
    });
}

lrc_status lrc_graph_from_edges(const uint64_t* pairs, size_t count, lrc_graph** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        require(pairs != nullptr || count == 0, "null edge array");
        std::vector<std::pair<lrc::ExternalId, lrc::ExternalId>> list(count);
        for (std::size_t k = 0; k < count; ++k) list[k] = {pairs[2 * k], pairs[2 * k + 1]};
        *out = new lrc_graph{lrc::build_graph(list).graph};
    });
}

void lrc_graph_free(lrc_graph* g) { delete g; }

size_t lrc_graph_node_count(const lrc_graph* g) { return g ? g->graph.node_count() : 0; }
size_t lrc_graph_edge_count(const lrc_graph* g) { return g ? g->graph.edge_count() : 0; }

lrc_status lrc_graph_edges(const lrc_graph* g, uint64_t* out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        std::size_t k = 0;
        for (const lrc::Edge& e : g->graph.edges()) {
            out[k++] = g->graph.external_id(e.u);
            out[k++] = g->graph.external_id(e.v);
        }
    });
}

lrc_status lrc_graph_node_ids(const lrc_graph* g, uint64_t* out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        const auto ids = g->graph.external_ids();
        std::copy(ids.begin(), ids.end(), out);
    });
}

lrc_status lrc_graph_write_edge_list(const lrc_graph* g, const char* path) {
    return guarded([&] {
        require(g != nullptr, "null graph");
        write_output(path, [&](std::ostream& out) { lrc::write_edge_list(g->graph, out); });
    });
}

lrc_status lrc_curvature_compute(const lrc_graph* g, const char* kind, unsigned workers, lrc_curvature** out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        const lrc::CurvatureKind k = kind_from(kind);
        *out = new lrc_curvature{lrc::curvature_all(g->graph, k, std::max(1U, workers))};
    });
}

void lrc_curvature_free(lrc_curvature* c) { delete c; }
size_t lrc_curvature_size(const lrc_curvature* c) { return c ? c->data.values.size() : 0; }
const double* lrc_curvature_values(const lrc_curvature* c) { return c ? c->data.values.data() : nullptr; }
const char* lrc_curvature_kind(const lrc_curvature* c) { return c ? static_name(c->data.kind) : ""; }

lrc_status lrc_curvature_write_csv(const lrc_graph* g, const lrc_curvature* c, const char* path) {
    return guarded([&] {
        require(g != nullptr && c != nullptr, "null argument");
        write_output(path, [&](std::ostream& out) { lrc::write_curvature_csv(g->graph, c->data, out); });
    });
}

void lrc_preprocess_options_init(lrc_preprocess_options* options) {
    if (!options) return;
    options->curvature = nullptr;
    options->has_threshold = 0;
    options->threshold = 0.0;
    options->workers = 1;
}

lrc_status lrc_preprocess(const lrc_graph* g, const lrc_preprocess_options* options, lrc_graph** pruned,
                          lrc_curvature** curvature, lrc_preprocess_report* report) {
    return guarded([&] {
        require(g != nullptr && pruned != nullptr, "null argument");
        lrc::PreprocessConfig config;
        if (options) {
            if (options->curvature) config.curvature = kind_from(options->curvature);
            if (options->has_threshold) config.threshold = options->threshold;
            config.workers = std::max(1U, options->workers);
        }
        lrc::PreprocessResult result = lrc::preprocess(g->graph, config);
        if (report) {
            *report = lrc_preprocess_report{};
            report->edges_before = result.report.edges_before;
            report->edges_after = result.report.edges_after;
            report->has_beta = result.threshold.beta.has_value();
            report->beta = result.threshold.beta.value_or(0.0);
            report->has_fit = result.fit.has_value();
            if (result.fit) {
                report->mu1 = result.fit->mu1;
                report->mu2 = result.fit->mu2;
                report->sigma1 = result.fit->sigma1;
                report->sigma2 = result.fit->sigma2;
                report->pi1 = result.fit->pi1;
                report->gmm_iterations = result.fit->iterations;
            }
            report->mode = lrc::to_string(result.threshold.mode);
        }
        auto* out_graph = new lrc_graph{std::move(result.graph)};
        if (curvature) {
            try {
                *curvature = new lrc_curvature{std::move(result.curvature)};
            } catch (...) {
                delete out_graph;
                throw;
            }
        }
        *pruned = out_graph;
    });
}

lrc_status lrc_sbm_sample_blocks(size_t n, size_t communities, const double* block, uint64_t seed,
                                 lrc_graph** out, lrc_partition** labels) {
    return guarded([&] {
        require(out != nullptr && block != nullptr, "null argument");
        lrc::SbmSpec spec;
        spec.n = n;
        spec.communities = communities;
        spec.block.assign(block, block + communities * communities);
        spec.seed = seed;
        lrc::SbmSample sample = lrc::sample_sbm(spec);
        if (labels) *labels = partition_over(sample.graph, sample.labels);
        *out = new lrc_graph{std::move(sample.graph)};
    });
}

lrc_status lrc_sbm_sample(size_t n, size_t communities, double p_in, double p_out, uint64_t seed, lrc_graph** out,
                          lrc_partition** labels) {
    const lrc::SbmSpec spec = lrc::SbmSpec::planted(n, communities, p_in, p_out, seed);
    return lrc_sbm_sample_blocks(n, communities, spec.block.data(), seed, out, labels);
}

void lrc_grid_options_init(lrc_grid_options* options) {
    if (!options) return;
    *options = lrc_grid_options{};
    options->n = 100;
    options->communities = 2;
    options->replicates = 100;
    options->workers = 1;
}

lrc_status lrc_simulate(const lrc_grid_options* options, lrc_grid** out) {
    return guarded([&] {
        require(options != nullptr && out != nullptr, "null argument");
        lrc::GridSpec spec;
        spec.n = options->n;
        spec.communities = options->communities;
        spec.replicates = options->replicates;
        spec.base_seed = options->base_seed;
        spec.workers = std::max(1U, options->workers);
        if (options->cell_count == 0) {
            spec.cells = lrc::default_grid();
        } else {
            require(options->p1 != nullptr && options->p2 != nullptr, "null grid arrays");
            for (std::size_t c = 0; c < options->cell_count; ++c) spec.cells.emplace_back(options->p1[c], options->p2[c]);
        }
        if (options->curvatures) {
            spec.curvatures.clear();
            std::stringstream list(options->curvatures);
            std::string name;
            while (std::getline(list, name, ',')) {
                const lrc::CurvatureKind kind = kind_from(name.c_str());
                if (std::find(spec.curvatures.begin(), spec.curvatures.end(), kind) != spec.curvatures.end()) {
                    lrc::fail(lrc::ErrorKind::invalid_argument, "curvature '" + name + "' listed twice");
                }
                spec.curvatures.push_back(kind);
            }
        }
        *out = new lrc_grid{lrc::run_grid(spec)};
    });
}

void lrc_grid_free(lrc_grid* grid) { delete grid; }
size_t lrc_grid_record_count(const lrc_grid* grid) { return grid ? grid->result.records.size() : 0; }
size_t lrc_grid_outcome_count(const lrc_grid* grid) { return grid ? grid->result.outcomes.size() : 0; }

lrc_status lrc_grid_record_at(const lrc_grid* grid, size_t i, lrc_grid_record* out) {
    return guarded([&] {
        require(grid != nullptr && out != nullptr, "null argument");
        require(i < grid->result.records.size(), "record index out of range");
        const lrc::GridRecord& r = grid->result.records[i];
        *out = lrc_grid_record{r.p1, r.p2, static_name(r.curvature), static_name(r.score), r.value};
    });
}

lrc_status lrc_grid_outcome_at(const lrc_grid* grid, size_t i, lrc_grid_outcome* out) {
    return guarded([&] {
        require(grid != nullptr && out != nullptr, "null argument");
        require(i < grid->result.outcomes.size(), "outcome index out of range");
        const lrc::ReplicateOutcome& o = grid->result.outcomes[i];
        *out = lrc_grid_outcome{o.p1, o.p2, static_name(o.curvature), o.replicate, o.pps, o.aer, o.aop};
    });
}

lrc_status lrc_grid_write_csv(const lrc_grid* grid, const char* path) {
    return guarded([&] {
        require(grid != nullptr, "null grid");
        write_output(path, [&](std::ostream& out) { lrc::write_grid_csv(grid->result.records, out); });
    });
}

lrc_status lrc_partition_read(const char* path, lrc_partition** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        auto entries = parse_file(path, [](std::istream& in) { return lrc::parse_label_file(in); });
        check_unique_ids(entries);
        *out = new lrc_partition{std::move(entries)};
    });
}

lrc_status lrc_partition_from_cover(const lrc_cover* cover, lrc_partition** out) {
    return guarded([&] {
        require(cover != nullptr && out != nullptr, "null argument");
        lrc::LabelList entries;
        std::int64_t label = 0;
        for (const auto& members : cover->cover.communities) {
            for (lrc::ExternalId id : members) entries.emplace_back(id, label);
            ++label;
        }
        try {
            check_unique_ids(entries);
        } catch (const lrc::Error& e) {
            lrc::fail(lrc::ErrorKind::precondition, std::string("cover is not a partition: ") + e.what());
        }
        *out = new lrc_partition{std::move(entries)};
    });
}

lrc_status lrc_partition_from_labels(const uint64_t* ids, const int64_t* labels, size_t count, lrc_partition** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        require((ids != nullptr && labels != nullptr) || count == 0, "null array");
        lrc::LabelList entries(count);
        for (std::size_t i = 0; i < count; ++i) entries[i] = {ids[i], labels[i]};
        check_unique_ids(entries);
        *out = new lrc_partition{std::move(entries)};
    });
}

void lrc_partition_free(lrc_partition* p) { delete p; }
size_t lrc_partition_size(const lrc_partition* p) { return p ? p->entries.size() : 0; }

size_t lrc_partition_community_count(const lrc_partition* p) {
    if (!p) return 0;
    std::vector<std::int64_t> labels;
    labels.reserve(p->entries.size());
    for (const auto& entry : p->entries) labels.push_back(entry.second);
    std::sort(labels.begin(), labels.end());
    return static_cast<size_t>(std::unique(labels.begin(), labels.end()) - labels.begin());
}

lrc_status lrc_partition_entries(const lrc_partition* p, uint64_t* ids, int64_t* labels) {
    return guarded([&] {
        require(p != nullptr, "null partition");
        for (std::size_t i = 0; i < p->entries.size(); ++i) {
            if (ids) ids[i] = p->entries[i].first;
            if (labels) labels[i] = p->entries[i].second;
        }
    });
}

lrc_status lrc_partition_write(const lrc_partition* p, const char* path) {
    return guarded([&] {
        require(p != nullptr, "null partition");
        write_output(path, [&](std::ostream& out) {
            for (const auto& [id, label] : p->entries) out << id << '\t' << label << '\n';
        });
    });
}

lrc_status lrc_cover_read(const char* path, lrc_cover** out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        *out = new lrc_cover{parse_file(path, [](std::istream& in) { return lrc::parse_community_file(in); })};
    });
}

lrc_status lrc_cover_from_partition(const lrc_partition* p, lrc_cover** out) {
    return guarded([&] {
        require(p != nullptr && out != nullptr, "null argument");
        std::map<std::int64_t, std::vector<lrc::ExternalId>> groups;
        for (const auto& [id, label] : p->entries) groups[label].push_back(id);
        auto* cover = new lrc_cover;
        for (auto& [label, members] : groups) cover->cover.communities.push_back(std::move(members));
        *out = cover;
    });
}

void lrc_cover_free(lrc_cover* c) { delete c; }
size_t lrc_cover_size(const lrc_cover* c) { return c ? c->cover.communities.size() : 0; }

lrc_status lrc_detect_lpa(const lrc_graph* g, uint64_t seed, int max_sweeps, lrc_partition** out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        require(max_sweeps > 0, "max_sweeps must be positive");
        *out = partition_over(g->graph, lrc::lpa_detect(g->graph, seed, max_sweeps).partition);
    });
}

lrc_status lrc_detect_components(const lrc_graph* g, lrc_partition** out) {
    return guarded([&] {
        require(g != nullptr && out != nullptr, "null argument");
        *out = partition_over(g->graph, lrc::connected_components(g->graph));
    });
}

lrc_status lrc_ari(const lrc_partition* a, const lrc_partition* b, double* out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        if (a && a->entries.empty()) lrc::fail(lrc::ErrorKind::precondition, "empty partition");
        const auto [pa, pb] = aligned(a, b);
        *out = lrc::ari(pa, pb);
    });
}

lrc_status lrc_ami(const lrc_partition* a, const lrc_partition* b, double* out) {
    return guarded([&] {
        require(out != nullptr, "null output");
        if (a && a->entries.empty()) lrc::fail(lrc::ErrorKind::precondition, "empty partition");
        const auto [pa, pb] = aligned(a, b);
        *out = lrc::ami(pa, pb);
    });
}

lrc_status lrc_overlapping_f1(const lrc_cover* truth, const lrc_cover* pred, double* out) {
    return guarded([&] {
        require(truth != nullptr && pred != nullptr && out != nullptr, "null argument");
        *out = lrc::overlapping_f1(truth->cover, pred->cover);
    });
}

}  // extern "C"
