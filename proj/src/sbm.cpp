#include "lrc/sbm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <tuple>

#include "lrc/error.hpp"
#include "parallel.hpp"

namespace lrc {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

SbmSpec SbmSpec::planted(std::size_t n, std::size_t communities, double p_in, double p_out, std::uint64_t seed) {
    SbmSpec spec;
    spec.n = n;
    spec.communities = communities;
    spec.seed = seed;
    spec.block.assign(communities * communities, p_out);
    for (std::size_t k = 0; k < communities; ++k) spec.block[k * communities + k] = p_in;
    return spec;
}

namespace {

void validate(const SbmSpec& spec) {
    const std::size_t k = spec.communities;
    if (k < 1 || spec.n < k) fail(ErrorKind::invalid_argument, "SBM needs 1 <= K <= n");
    if (spec.block.size() != k * k) fail(ErrorKind::invalid_argument, "block matrix must be K x K");
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            const double p = spec.block[a * k + b];
            if (!(p >= 0.0 && p <= 1.0)) fail(ErrorKind::invalid_argument, "block probabilities must lie in [0, 1]");
            if (p != spec.block[b * k + a]) fail(ErrorKind::invalid_argument, "block matrix must be symmetric");
        }
    }
}

// Calls emit(t) for each index t in [0, count) kept with probability p.
template <typename Emit>
void bernoulli_indices(std::uint64_t count, double p, std::mt19937_64& rng, Emit emit) {
    if (p <= 0.0 || count == 0) return;
    if (p >= 1.0) {
        for (std::uint64_t t = 0; t < count; ++t) emit(t);
        return;
    }
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const double log_q = std::log1p(-p);
    std::uint64_t t = 0;
    for (;;) {
        const double skip = std::floor(std::log(1.0 - uniform(rng)) / log_q);
        if (skip >= static_cast<double>(count - t)) return;
        t += static_cast<std::uint64_t>(skip);
        emit(t);
        if (++t >= count) return;
    }
}

}  // namespace

SbmSample sample_sbm(const SbmSpec& spec) {
    validate(spec);
    const std::size_t k = spec.communities;
    std::vector<std::size_t> start(k + 1, 0);
    for (std::size_t c = 0; c < k; ++c) start[c + 1] = start[c] + spec.n / k + (c < spec.n % k ? 1 : 0);

    SbmSample out;
    out.labels.labels.resize(spec.n);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t i = start[c]; i < start[c + 1]; ++i) out.labels.labels[i] = static_cast<std::int64_t>(c);
    }

    std::mt19937_64 rng(spec.seed);
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < k; ++a) {
        const std::uint64_t size_a = start[a + 1] - start[a];
        // Within block: pair index t enumerates (i, j), i > j, row by row.
        std::uint64_t row = 1, row_base = 0;
        bernoulli_indices(size_a * (size_a - 1) / 2, spec.block[a * k + a], rng, [&](std::uint64_t t) {
            while (t >= row_base + row) {
                row_base += row;
                ++row;
            }
            const auto i = static_cast<NodeId>(start[a] + row);
            const auto j = static_cast<NodeId>(start[a] + (t - row_base));
            edges.push_back({j, i});
        });
        for (std::size_t b = a + 1; b < k; ++b) {
            const std::uint64_t size_b = start[b + 1] - start[b];
            bernoulli_indices(size_a * size_b, spec.block[a * k + b], rng, [&](std::uint64_t t) {
                edges.push_back({static_cast<NodeId>(start[a] + t / size_b), static_cast<NodeId>(start[b] + t % size_b)});
            });
        }
    }
    std::vector<ExternalId> ids(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) ids[i] = i;
    out.graph = Graph::from_internal(std::move(ids), edges);
    return out;
}

ReplicateStats split_by_labels(const Graph& g, const Partition& labels, std::span<const double> values) {
    if (labels.size() != g.node_count()) fail(ErrorKind::invalid_argument, "labels do not match graph");
    if (values.size() != g.edge_count()) fail(ErrorKind::invalid_argument, "one value per edge required");
    ReplicateStats stats;
    const auto edges = g.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (labels.labels[edges[k].u] == labels.labels[edges[k].v]) {
            stats.within.push_back(values[k]);
        } else {
            stats.across.push_back(values[k]);
        }
    }
    return stats;
}

double percentile_rank(double v, std::span<const double> set) {
    if (set.empty()) fail(ErrorKind::invalid_argument, "percentile of an empty set");
    const auto below = std::count_if(set.begin(), set.end(), [v](double x) { return x <= v; });
    return static_cast<double>(below) / static_cast<double>(set.size());
}

int pps_indicator(const ReplicateStats& s) {
    if (s.within.empty() || s.across.empty()) return 1;
    return *std::min_element(s.within.begin(), s.within.end()) >= *std::max_element(s.across.begin(), s.across.end())
               ? 1
               : 0;
}

double aer(const ReplicateStats& s) {
    if (s.within.empty() || s.across.empty()) return 0.0;
    const double top = *std::max_element(s.across.begin(), s.across.end());
    const auto below = std::count_if(s.within.begin(), s.within.end(), [top](double x) { return x < top; });
    return static_cast<double>(below) / static_cast<double>(s.within.size());
}

double aop(const ReplicateStats& s) {
    if (s.within.empty() || s.across.empty()) return 2.0;
    const double low = *std::min_element(s.within.begin(), s.within.end());
    const double top = *std::max_element(s.across.begin(), s.across.end());
    return percentile_rank(low, s.across) + 1.0 - percentile_rank(top, s.within);
}

std::string_view to_string(Score score) {
    switch (score) {
        case Score::aer: return "AER";
        case Score::aop: return "AOP";
        case Score::pps: return "PPS";
    }
    return "unknown";
}

GridResult run_grid(const GridSpec& spec) {
    if (spec.replicates == 0) fail(ErrorKind::invalid_argument, "replicates must be positive");
    if (spec.curvatures.empty()) fail(ErrorKind::invalid_argument, "no curvature requested");
    for (const auto& [p1, p2] : spec.cells) {
        if (!(p2 < p1)) fail(ErrorKind::invalid_argument, "grid cells require p2 < p1");
    }

    const std::size_t kinds = spec.curvatures.size();
    const std::size_t units = spec.cells.size() * spec.replicates;
    GridResult result;
    result.outcomes.resize(units * kinds);
    detail::parallel_chunks(units, spec.workers, [&](std::size_t begin, std::size_t end, unsigned) {
        for (std::size_t unit = begin; unit < end; ++unit) {
            const std::size_t cell = unit / spec.replicates;
            const std::size_t r = unit % spec.replicates;
            const auto [p1, p2] = spec.cells[cell];
            const SbmSample sample =
                sample_sbm(SbmSpec::planted(spec.n, spec.communities, p1, p2, splitmix64(spec.base_seed ^ r)));
            for (std::size_t c = 0; c < kinds; ++c) {
                ReplicateStats stats;
                if (sample.graph.edge_count() > 0) {
                    const EdgeCurvatures values = curvature_all(sample.graph, spec.curvatures[c]);
                    stats = split_by_labels(sample.graph, sample.labels, values.values);
                }
                result.outcomes[unit * kinds + c] =
                    ReplicateOutcome{p1, p2, spec.curvatures[c], r, pps_indicator(stats), aer(stats), aop(stats)};
            }
        }
    });

    const auto rdiv = static_cast<double>(spec.replicates);
    for (std::size_t cell = 0; cell < spec.cells.size(); ++cell) {
        for (std::size_t c = 0; c < kinds; ++c) {
            double sum_pps = 0.0, sum_aer = 0.0, sum_aop = 0.0;
            for (std::size_t r = 0; r < spec.replicates; ++r) {
                const ReplicateOutcome& o = result.outcomes[(cell * spec.replicates + r) * kinds + c];
                sum_pps += o.pps;
                sum_aer += o.aer;
                sum_aop += o.aop;
            }
            const auto [p1, p2] = spec.cells[cell];
            for (auto [score, sum] : {std::pair{Score::aer, sum_aer}, std::pair{Score::aop, sum_aop},
                                      std::pair{Score::pps, sum_pps}}) {
                result.records.push_back({p1, p2, spec.curvatures[c], score, sum / rdiv, spec.replicates, spec.base_seed});
            }
        }
    }
    std::stable_sort(result.records.begin(), result.records.end(), [](const GridRecord& a, const GridRecord& b) {
        return std::make_tuple(a.p1, a.p2, to_string(a.curvature), to_string(a.score)) <
               std::make_tuple(b.p1, b.p2, to_string(b.curvature), to_string(b.score));
    });
    return result;
}

std::vector<std::pair<double, double>> default_grid() {
    std::vector<std::pair<double, double>> cells;
    for (int i = 1; i <= 10; ++i) {
        const double p1 = i / 10.0;
        for (int j = 0; j < 10; ++j) cells.emplace_back(p1, 0.01 + j * (p1 - 0.01) / 10.0);
    }
    return cells;
}

void write_grid_csv(const std::vector<GridRecord>& records, std::ostream& out) {
    out << "p1,p2,curvature,score,value,replicates,base_seed\n";
    char buf[160];
    for (const GridRecord& r : records) {
        std::snprintf(buf, sizeof buf, "%.6g,%.6g,", r.p1, r.p2);
        out << buf << to_string(r.curvature) << ',' << to_string(r.score) << ',';
        std::snprintf(buf, sizeof buf, "%.6g", r.value);
        out << buf << ',' << r.replicates << ',' << r.base_seed << '\n';
    }
}

}  // namespace lrc
