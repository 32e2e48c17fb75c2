#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lrc/curvature.hpp"
#include "lrc/graph.hpp"

namespace lrc {

std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Stochastic block model. Communities are contiguous id ranges; with n not
// divisible by K the first n mod K communities get one extra node.
struct SbmSpec {
    std::size_t n = 0;
    std::size_t communities = 1;
    std::vector<double> block;  // communities x communities, row-major, symmetric
    std::uint64_t seed = 0;

    // p_in on the diagonal, p_out everywhere else.
    static SbmSpec planted(std::size_t n, std::size_t communities, double p_in, double p_out, std::uint64_t seed);
};

struct SbmSample {
    Graph graph;  // external id of node i is i
    Partition labels;
};

// Each pair {i, j} is an edge independently with probability
// block[z_i][z_j]; sparse blocks are sampled by geometric skipping.
SbmSample sample_sbm(const SbmSpec& spec);

// Curvature values split by whether the edge joins two nodes of the same
// planted community.
struct ReplicateStats {
    std::vector<double> within;
    std::vector<double> across;
};

ReplicateStats split_by_labels(const Graph& g, const Partition& labels, std::span<const double> values);

// |{x in set : x <= v}| / |set|. Throws on an empty set.
double percentile_rank(double v, std::span<const double> set);

// 1 iff min(within) >= max(across); an empty side counts as separated.
int pps_indicator(const ReplicateStats& stats);
// Fraction of within values strictly below max(across); 0 if either side is empty.
double aer(const ReplicateStats& stats);
// rank(min within | across) + 1 - rank(max across | within); 2 if either side is empty.
double aop(const ReplicateStats& stats);

enum class Score { aer, aop, pps };
std::string_view to_string(Score score);

struct GridRecord {
    double p1 = 0.0;
    double p2 = 0.0;
    CurvatureKind curvature = CurvatureKind::lrc;
    Score score = Score::pps;
    double value = 0.0;
    std::size_t replicates = 0;
    std::uint64_t base_seed = 0;
};

struct ReplicateOutcome {
    double p1 = 0.0;
    double p2 = 0.0;
    CurvatureKind curvature = CurvatureKind::lrc;
    std::size_t replicate = 0;
    int pps = 0;
    double aer = 0.0;
    double aop = 0.0;
};

struct GridSpec {
    std::vector<std::pair<double, double>> cells;  // (p1, p2) with p2 < p1
    std::size_t n = 100;
    std::size_t communities = 2;
    std::size_t replicates = 100;
    std::vector<CurvatureKind> curvatures{kAllCurvatures, kAllCurvatures + 4};
    std::uint64_t base_seed = 0;
    unsigned workers = 1;
};

struct GridResult {
    // Sorted by (p1, p2, curvature name, score name).
    std::vector<GridRecord> records;
    // Cell-major, then replicate, then curvature in GridSpec order.
    std::vector<ReplicateOutcome> outcomes;
};

// Seed of replicate r: splitmix64(base_seed ^ r). Every curvature of a
// replicate is computed on the same sampled graph.
GridResult run_grid(const GridSpec& spec);

// 10 x 10 demonstration grid: p1 in {0.1, ..., 1.0}; for each p1 the ten
// values p2 = 0.01 + j (p1 - 0.01) / 10, j = 0..9.
std::vector<std::pair<double, double>> default_grid();

// "p1,p2,curvature,score,value,replicates,base_seed", 6 significant digits.
void write_grid_csv(const std::vector<GridRecord>& records, std::ostream& out);

}  // namespace lrc
