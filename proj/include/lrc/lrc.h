/* C interface to the curvature library. Every object is an opaque handle
 * released with its *_free function. Functions return an lrc_status; on
 * failure lrc_last_error() describes the problem (per thread). Paths equal to
 * "-" mean stdout for writers. */
#ifndef LRC_LRC_H
#define LRC_LRC_H

#include <stddef.h>
#include <stdint.h>

#if defined(LRC_BUILDING_LIBRARY)
#define LRC_API __attribute__((visibility("default")))
#else
#define LRC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lrc_status {
    LRC_OK = 0,
    LRC_ERR_IO = 1,
    LRC_ERR_FORMAT = 2,
    LRC_ERR_PRECONDITION = 3,
    LRC_ERR_INVALID_ARGUMENT = 4,
    LRC_ERR_INTERNAL = 5
} lrc_status;

typedef struct lrc_graph lrc_graph;
typedef struct lrc_curvature lrc_curvature;
typedef struct lrc_partition lrc_partition;
typedef struct lrc_cover lrc_cover;
typedef struct lrc_grid lrc_grid;

LRC_API const char* lrc_last_error(void);
/* "ok", "io", "format", "precondition", "invalid_argument", "internal" */
LRC_API const char* lrc_status_name(lrc_status status);
LRC_API const char* lrc_version(void);

/* ---- graphs ---- */

LRC_API lrc_status lrc_graph_read_edge_list(const char* path, lrc_graph** out);
/* labels (may be NULL) receives the per-node integer `value` attribute. */
LRC_API lrc_status lrc_graph_read_gml(const char* path, lrc_graph** out, lrc_partition** labels);
/* pairs holds 2*count external ids: u0 v0 u1 v1 ... */
LRC_API lrc_status lrc_graph_from_edges(const uint64_t* pairs, size_t count, lrc_graph** out);
LRC_API void lrc_graph_free(lrc_graph* g);

LRC_API size_t lrc_graph_node_count(const lrc_graph* g);
LRC_API size_t lrc_graph_edge_count(const lrc_graph* g);
/* Canonical edges as external-id pairs; out must hold 2 * edge_count values. */
LRC_API lrc_status lrc_graph_edges(const lrc_graph* g, uint64_t* out);
/* External id of each internal node; out must hold node_count values. */
LRC_API lrc_status lrc_graph_node_ids(const lrc_graph* g, uint64_t* out);
LRC_API lrc_status lrc_graph_write_edge_list(const lrc_graph* g, const char* path);

/* ---- curvature ---- */

/* kind: "frc", "bfc", "lrc" or "orc". */
LRC_API lrc_status lrc_curvature_compute(const lrc_graph* g, const char* kind, unsigned workers,
                                         lrc_curvature** out);
LRC_API void lrc_curvature_free(lrc_curvature* c);
LRC_API size_t lrc_curvature_size(const lrc_curvature* c);
/* Values aligned with lrc_graph_edges of the graph they were computed on. */
LRC_API const double* lrc_curvature_values(const lrc_curvature* c);
LRC_API const char* lrc_curvature_kind(const lrc_curvature* c);
LRC_API lrc_status lrc_curvature_write_csv(const lrc_graph* g, const lrc_curvature* c, const char* path);

/* ---- preprocessing ---- */

typedef struct lrc_preprocess_options {
    const char* curvature; /* NULL means "lrc" */
    int has_threshold;     /* nonzero: prune at `threshold`, no mixture fit */
    double threshold;
    unsigned workers;
} lrc_preprocess_options;

typedef struct lrc_preprocess_report {
    size_t edges_before;
    size_t edges_after;
    int has_beta;
    double beta;
    int has_fit;
    double mu1, mu2, sigma1, sigma2, pi1;
    int gmm_iterations;
    const char* mode; /* "valley", "degenerate_skip" or "explicit"; static storage */
} lrc_preprocess_report;

LRC_API void lrc_preprocess_options_init(lrc_preprocess_options* options);
/* curvature (may be NULL) receives the per-edge values of the input graph. */
LRC_API lrc_status lrc_preprocess(const lrc_graph* g, const lrc_preprocess_options* options, lrc_graph** pruned,
                                  lrc_curvature** curvature, lrc_preprocess_report* report);

/* ---- stochastic block model ---- */

/* labels (may be NULL) receives the planted community of each node. */
LRC_API lrc_status lrc_sbm_sample(size_t n, size_t communities, double p_in, double p_out, uint64_t seed,
                                  lrc_graph** out, lrc_partition** labels);
/* block is a communities x communities symmetric row-major matrix. */
LRC_API lrc_status lrc_sbm_sample_blocks(size_t n, size_t communities, const double* block, uint64_t seed,
                                         lrc_graph** out, lrc_partition** labels);

typedef struct lrc_grid_options {
    size_t n;
    size_t communities;
    size_t replicates;
    const double* p1; /* cell_count values; cell_count == 0 selects the default grid */
    const double* p2;
    size_t cell_count;
    const char* curvatures; /* comma-separated names; NULL means all four */
    uint64_t base_seed;
    unsigned workers;
} lrc_grid_options;

typedef struct lrc_grid_record {
    double p1;
    double p2;
    const char* curvature;
    const char* score; /* "AER", "AOP" or "PPS" */
    double value;
} lrc_grid_record;

typedef struct lrc_grid_outcome {
    double p1;
    double p2;
    const char* curvature;
    size_t replicate;
    int pps;
    double aer;
    double aop;
} lrc_grid_outcome;

LRC_API void lrc_grid_options_init(lrc_grid_options* options);
LRC_API lrc_status lrc_simulate(const lrc_grid_options* options, lrc_grid** out);
LRC_API void lrc_grid_free(lrc_grid* grid);
LRC_API size_t lrc_grid_record_count(const lrc_grid* grid);
LRC_API lrc_status lrc_grid_record_at(const lrc_grid* grid, size_t i, lrc_grid_record* out);
LRC_API size_t lrc_grid_outcome_count(const lrc_grid* grid);
LRC_API lrc_status lrc_grid_outcome_at(const lrc_grid* grid, size_t i, lrc_grid_outcome* out);
LRC_API lrc_status lrc_grid_write_csv(const lrc_grid* grid, const char* path);

/* ---- partitions, covers, detection, metrics ---- */

/* A partition is a list of (external node id, label) pairs. */
LRC_API lrc_status lrc_partition_read(const char* path, lrc_partition** out);
/* Each node must belong to exactly one community of the cover. */
LRC_API lrc_status lrc_partition_from_cover(const lrc_cover* cover, lrc_partition** out);
LRC_API lrc_status lrc_partition_from_labels(const uint64_t* ids, const int64_t* labels, size_t count,
                                             lrc_partition** out);
LRC_API void lrc_partition_free(lrc_partition* p);
LRC_API size_t lrc_partition_size(const lrc_partition* p);
LRC_API size_t lrc_partition_community_count(const lrc_partition* p);
LRC_API lrc_status lrc_partition_entries(const lrc_partition* p, uint64_t* ids, int64_t* labels);
LRC_API lrc_status lrc_partition_write(const lrc_partition* p, const char* path);

LRC_API lrc_status lrc_cover_read(const char* path, lrc_cover** out);
LRC_API lrc_status lrc_cover_from_partition(const lrc_partition* p, lrc_cover** out);
LRC_API void lrc_cover_free(lrc_cover* c);
LRC_API size_t lrc_cover_size(const lrc_cover* c);

LRC_API lrc_status lrc_detect_lpa(const lrc_graph* g, uint64_t seed, int max_sweeps, lrc_partition** out);
LRC_API lrc_status lrc_detect_components(const lrc_graph* g, lrc_partition** out);

/* Partitions are matched by node id and must cover the same node set. */
LRC_API lrc_status lrc_ari(const lrc_partition* a, const lrc_partition* b, double* out);
LRC_API lrc_status lrc_ami(const lrc_partition* a, const lrc_partition* b, double* out);
LRC_API lrc_status lrc_overlapping_f1(const lrc_cover* truth, const lrc_cover* pred, double* out);

#ifdef __cplusplus
}
#endif

#endif
