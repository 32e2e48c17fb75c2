#include "lrc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

#include "lrc/error.hpp"

namespace lrc {

namespace {

double comb2(double x) { return x * (x - 1.0) / 2.0; }

std::vector<std::size_t> dense_labels(const Partition& p, std::size_t& count) {
    std::map<std::int64_t, std::size_t> index;
    std::vector<std::size_t> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] = index.emplace(p.labels[i], index.size()).first->second;
    }
    count = index.size();
    return out;
}

bool same_clustering(const ContingencyTable& t) {
    for (const auto& row : t.counts) {
        if (std::count_if(row.begin(), row.end(), [](std::int64_t c) { return c > 0; }) != 1) return false;
    }
    for (std::size_t j = 0; j < t.col_sums.size(); ++j) {
        std::size_t nonzero = 0;
        for (const auto& row : t.counts) nonzero += row[j] > 0 ? 1 : 0;
        if (nonzero != 1) return false;
    }
    return true;
}

double entropy(const std::vector<std::int64_t>& sums, double n) {
    double h = 0.0;
    for (std::int64_t s : sums) {
        if (s > 0) h -= (s / n) * std::log(s / n);
    }
    return h;
}

double expected_mutual_information(const ContingencyTable& t) {
    const double n = static_cast<double>(t.total);
    const double lg_n = std::lgamma(n + 1.0);
    double emi = 0.0;
    for (std::int64_t a : t.row_sums) {
        for (std::int64_t b : t.col_sums) {
            const std::int64_t lo = std::max<std::int64_t>(1, a + b - t.total);
            const std::int64_t hi = std::min(a, b);
            const double fixed = std::lgamma(a + 1.0) + std::lgamma(b + 1.0) + std::lgamma(n - a + 1.0) +
                                 std::lgamma(n - b + 1.0) - lg_n;
            for (std::int64_t k = lo; k <= hi; ++k) {
                const double kd = static_cast<double>(k);
                const double log_p = fixed - std::lgamma(kd + 1.0) - std::lgamma(a - kd + 1.0) -
                                     std::lgamma(b - kd + 1.0) - std::lgamma(n - a - b + kd + 1.0);
                emi += (kd / n) * std::log(n * kd / (static_cast<double>(a) * static_cast<double>(b))) * std::exp(log_p);
            }
        }
    }
    return emi;
}

std::vector<std::vector<ExternalId>> normalized(const Cover& c) {
    std::vector<std::vector<ExternalId>> out;
    out.reserve(c.communities.size());
    for (const auto& members : c.communities) {
        auto sorted = members;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        out.push_back(std::move(sorted));
    }
    return out;
}

// Mean over `from` of the best F1 against any set in `to`.
double mean_best_f1(const std::vector<std::vector<ExternalId>>& from, const std::vector<std::vector<ExternalId>>& to) {
    std::unordered_map<ExternalId, std::vector<std::size_t>> owners;
    for (std::size_t j = 0; j < to.size(); ++j) {
        for (ExternalId x : to[j]) owners[x].push_back(j);
    }
    std::unordered_map<std::size_t, std::size_t> overlap;
    double total = 0.0;
    for (const auto& set : from) {
        overlap.clear();
        for (ExternalId x : set) {
            const auto it = owners.find(x);
            if (it == owners.end()) continue;
            for (std::size_t j : it->second) ++overlap[j];
        }
        double best = 0.0;
        for (const auto& [j, common] : overlap) {
            best = std::max(best, 2.0 * static_cast<double>(common) / static_cast<double>(set.size() + to[j].size()));
        }
        total += best;
    }
    return total / static_cast<double>(from.size());
}

}  // namespace

ContingencyTable contingency(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) fail(ErrorKind::invalid_argument, "partitions cover different node sets");
    std::size_t ra = 0, rb = 0;
    const auto la = dense_labels(a, ra);
    const auto lb = dense_labels(b, rb);
    ContingencyTable t;
    t.counts.assign(ra, std::vector<std::int64_t>(rb, 0));
    t.row_sums.assign(ra, 0);
    t.col_sums.assign(rb, 0);
    t.total = static_cast<std::int64_t>(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ++t.counts[la[i]][lb[i]];
        ++t.row_sums[la[i]];
        ++t.col_sums[lb[i]];
    }
    return t;
}

double ari(const Partition& a, const Partition& b) {
    const ContingencyTable t = contingency(a, b);
    double index = 0.0, sum_a = 0.0, sum_b = 0.0;
    for (const auto& row : t.counts) {
        for (std::int64_t c : row) index += comb2(static_cast<double>(c));
    }
    for (std::int64_t s : t.row_sums) sum_a += comb2(static_cast<double>(s));
    for (std::int64_t s : t.col_sums) sum_b += comb2(static_cast<double>(s));
    const double pairs = comb2(static_cast<double>(t.total));
    const double expected = pairs > 0.0 ? sum_a * sum_b / pairs : 0.0;
    const double numerator = index - expected;
    const double denominator = 0.5 * (sum_a + sum_b) - expected;
    if (numerator == 0.0 && denominator == 0.0) return 1.0;
    return numerator / denominator;
}

double ami(const Partition& a, const Partition& b) {
    const ContingencyTable t = contingency(a, b);
    if (t.total == 0) fail(ErrorKind::invalid_argument, "empty partitions");
    const double n = static_cast<double>(t.total);
    double mi = 0.0;
    for (std::size_t i = 0; i < t.counts.size(); ++i) {
        for (std::size_t j = 0; j < t.counts[i].size(); ++j) {
            const double c = static_cast<double>(t.counts[i][j]);
            if (c > 0.0) {
                mi += (c / n) *
                      std::log(n * c / (static_cast<double>(t.row_sums[i]) * static_cast<double>(t.col_sums[j])));
            }
        }
    }
    const double emi = expected_mutual_information(t);
    const double denominator = 0.5 * (entropy(t.row_sums, n) + entropy(t.col_sums, n)) - emi;
    if (std::abs(denominator) <= 1e-12) return same_clustering(t) ? 1.0 : 0.0;
    return std::clamp((mi - emi) / denominator, -1.0, 1.0);
}

double overlapping_f1(const Cover& truth, const Cover& pred) {
    if (truth.communities.empty() || pred.communities.empty()) fail(ErrorKind::precondition, "empty cover");
    const auto t = normalized(truth);
    const auto p = normalized(pred);
    for (const auto* c : {&t, &p}) {
        for (const auto& s : *c) {
            if (s.empty()) fail(ErrorKind::precondition, "empty community in cover");
        }
    }
    return 0.5 * (mean_best_f1(t, p) + mean_best_f1(p, t));
}

DetectionResult lpa_detect(const Graph& g, std::uint64_t seed, int max_sweeps) {
    const std::size_t n = g.node_count();
    DetectionResult result;
    result.seed = seed;
    result.partition.labels.resize(n);
    auto& labels = result.partition.labels;
    std::iota(labels.begin(), labels.end(), std::int64_t{0});

    std::mt19937_64 rng(seed);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::vector<int> freq(n, 0);
    std::vector<std::int64_t> seen;
    std::vector<std::int64_t> tied;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        std::shuffle(order.begin(), order.end(), rng);
        bool changed = false;
        for (NodeId x : order) {
            const auto nbrs = g.adjacency(x);
            if (nbrs.empty()) continue;
            seen.clear();
            int best = 0;
            for (NodeId y : nbrs) {
                const auto l = static_cast<std::size_t>(labels[y]);
                if (freq[l]++ == 0) seen.push_back(labels[y]);
                best = std::max(best, freq[l]);
            }
            tied.clear();
            for (std::int64_t l : seen) {
                if (freq[static_cast<std::size_t>(l)] == best) tied.push_back(l);
            }
            for (std::int64_t l : seen) freq[static_cast<std::size_t>(l)] = 0;
            if (std::find(tied.begin(), tied.end(), labels[x]) != tied.end()) continue;
            std::uniform_int_distribution<std::size_t> pick(0, tied.size() - 1);
            labels[x] = tied[pick(rng)];
            changed = true;
        }
        result.iterations = sweep + 1;
        if (!changed) break;
    }
    return result;
}

}  // namespace lrc
