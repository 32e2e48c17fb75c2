#include "lrc/transport.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>

#include "lrc/error.hpp"

namespace lrc {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

}  // namespace

namespace detail {

// The same primal-dual scheme for at most 64 rows and 64 columns, with node
// sets held as bit masks so level graphs and blocking flows are built with
// word operations.
class SmallTransport {
public:
    static constexpr int kMax = 64;

    std::int64_t solve(std::span<const std::int64_t> supply, std::span<const std::int64_t> demand,
                       std::span<const int> cost, std::int64_t total);

private:
    using Mask = std::uint64_t;

    bool raise_potentials();
    bool build_levels();
    std::int64_t push_row(int i, std::int64_t limit);
    std::int64_t push_col(int j, std::int64_t limit);

    static Mask bit(int k) { return Mask{1} << k; }

    int rows_ = 0;
    int cols_ = 0;
    std::array<std::int64_t, kMax> supply_{}, demand_{}, left_supply_{}, left_demand_{};
    std::array<std::int64_t, kMax> pot_row_{}, pot_col_{}, dist_row_{}, dist_col_{};
    std::int64_t pot_source_ = 0, pot_sink_ = 0;
    std::array<std::array<int, kMax>, kMax> cost_{};
    std::array<std::array<std::int64_t, kMax>, kMax> flow_{};
    std::array<Mask, kMax> tight_row_{};  // columns j with zero reduced cost from row i
    std::array<Mask, kMax> tight_col_{};  // rows i with zero reduced cost into column j
    std::array<Mask, kMax> carrying_{};   // rows i with flow into column j
    std::array<int, kMax> level_row_{}, level_col_{};
    int level_sink_ = -1;
    Mask alive_rows_ = 0, alive_cols_ = 0;
};

bool SmallTransport::raise_potentials() {
    dist_row_.fill(kInf);
    dist_col_.fill(kInf);
    std::int64_t dist_sink = kInf;
    Mask done_rows = 0, done_cols = 0;
    bool sink_done = false;
    for (int i = 0; i < rows_; ++i) {
        if (left_supply_[i] > 0) dist_row_[i] = std::min(dist_row_[i], pot_source_ - pot_row_[i]);
    }
    for (;;) {
        int best = -1;  // rows 0..63, columns 64..127, sink 128
        std::int64_t d = kInf;
        for (int i = 0; i < rows_; ++i) {
            if (!(done_rows & bit(i)) && dist_row_[i] < d) d = dist_row_[i], best = i;
        }
        for (int j = 0; j < cols_; ++j) {
            if (!(done_cols & bit(j)) && dist_col_[j] < d) d = dist_col_[j], best = kMax + j;
        }
        if (!sink_done && dist_sink < d) d = dist_sink, best = 2 * kMax;
        if (best < 0) break;
        if (best < kMax) {
            const int i = best;
            done_rows |= bit(i);
            const std::int64_t base = d + pot_row_[i];
            for (int j = 0; j < cols_; ++j) {
                const std::int64_t nd = base + cost_[i][j] - pot_col_[j];
                if (nd < dist_col_[j]) dist_col_[j] = nd;
            }
        } else if (best < 2 * kMax) {
            const int j = best - kMax;
            done_cols |= bit(j);
            const std::int64_t base = d + pot_col_[j];
            for (Mask m = carrying_[j]; m; m &= m - 1) {
                const int i = std::countr_zero(m);
                const std::int64_t nd = base - cost_[i][j] - pot_row_[i];
                if (nd < dist_row_[i]) dist_row_[i] = nd;
            }
            if (left_demand_[j] > 0) dist_sink = std::min(dist_sink, base - pot_sink_);
        } else {
            sink_done = true;
            const std::int64_t base = d + pot_sink_;
            for (int j = 0; j < cols_; ++j) {
                if (left_demand_[j] < demand_[j]) dist_col_[j] = std::min(dist_col_[j], base - pot_col_[j]);
            }
        }
    }
    if (dist_sink >= kInf) return false;
    for (int i = 0; i < rows_; ++i) pot_row_[i] += std::min(dist_row_[i], dist_sink);
    for (int j = 0; j < cols_; ++j) pot_col_[j] += std::min(dist_col_[j], dist_sink);
    pot_sink_ += dist_sink;

    tight_col_.fill(0);
    for (int i = 0; i < rows_; ++i) {
        Mask m = 0;
        for (int j = 0; j < cols_; ++j) {
            if (cost_[i][j] + pot_row_[i] == pot_col_[j]) {
                m |= bit(j);
                tight_col_[j] |= bit(i);
            }
        }
        tight_row_[i] = m;
    }
    return true;
}

bool SmallTransport::build_levels() {
    Mask rows = 0;
    for (int i = 0; i < rows_; ++i) {
        if (left_supply_[i] > 0 && pot_row_[i] == pot_source_) rows |= bit(i);
    }
    Mask seen_rows = rows, seen_cols = 0;
    level_sink_ = -1;
    int level = 1;
    while (rows) {
        Mask cols = 0;
        for (Mask m = rows; m; m &= m - 1) {
            const int i = std::countr_zero(m);
            level_row_[i] = level;
            cols |= tight_row_[i];
        }
        cols &= ~seen_cols;
        if (!cols) break;
        seen_cols |= cols;
        ++level;
        Mask next = 0;
        for (Mask m = cols; m; m &= m - 1) {
            const int j = std::countr_zero(m);
            level_col_[j] = level;
            if (left_demand_[j] > 0 && pot_col_[j] == pot_sink_) level_sink_ = level + 1;
            next |= tight_col_[j] & carrying_[j];
        }
        if (level_sink_ > 0) break;
        rows = next & ~seen_rows;
        seen_rows |= rows;
        ++level;
    }
    alive_rows_ = seen_rows;
    alive_cols_ = seen_cols;
    return level_sink_ > 0;
}

std::int64_t SmallTransport::push_row(int i, std::int64_t limit) {
    for (Mask m = tight_row_[i] & alive_cols_; m; m &= m - 1) {
        const int j = std::countr_zero(m);
        if (level_col_[j] != level_row_[i] + 1) continue;
        if (const std::int64_t pushed = push_col(j, limit)) {
            if (flow_[i][j] == 0) carrying_[j] |= bit(i);
            flow_[i][j] += pushed;
            return pushed;
        }
    }
    alive_rows_ &= ~bit(i);
    return 0;
}

std::int64_t SmallTransport::push_col(int j, std::int64_t limit) {
    if (level_col_[j] + 1 == level_sink_) {
        if (left_demand_[j] > 0 && pot_col_[j] == pot_sink_) {
            const std::int64_t pushed = std::min(limit, left_demand_[j]);
            left_demand_[j] -= pushed;
            return pushed;
        }
    } else {
        for (Mask m = tight_col_[j] & carrying_[j] & alive_rows_; m; m &= m - 1) {
            const int i = std::countr_zero(m);
            if (level_row_[i] != level_col_[j] + 1) continue;
            if (const std::int64_t pushed = push_row(i, std::min(limit, flow_[i][j]))) {
                flow_[i][j] -= pushed;
                if (flow_[i][j] == 0) carrying_[j] &= ~bit(i);
                return pushed;
            }
        }
    }
    alive_cols_ &= ~bit(j);
    return 0;
}

std::int64_t SmallTransport::solve(std::span<const std::int64_t> supply, std::span<const std::int64_t> demand,
                                   std::span<const int> cost, std::int64_t total) {
    rows_ = static_cast<int>(supply.size());
    cols_ = static_cast<int>(demand.size());
    for (int i = 0; i < rows_; ++i) {
        supply_[i] = left_supply_[i] = supply[i];
        pot_row_[i] = 0;
        for (int j = 0; j < cols_; ++j) {
            cost_[i][j] = cost[i * cols_ + j];
            flow_[i][j] = 0;
        }
    }
    for (int j = 0; j < cols_; ++j) {
        demand_[j] = left_demand_[j] = demand[j];
        pot_col_[j] = 0;
        carrying_[j] = 0;
    }
    pot_source_ = pot_sink_ = 0;

    std::int64_t moved = 0;
    while (moved < total && raise_potentials()) {
        while (build_levels()) {
            for (;;) {
                std::int64_t pushed = 0;
                for (Mask m = alive_rows_; m && !pushed; m &= m - 1) {
                    const int i = std::countr_zero(m);
                    if (level_row_[i] != 1 || left_supply_[i] == 0) continue;
                    pushed = push_row(i, left_supply_[i]);
                    left_supply_[i] -= pushed;
                }
                if (!pushed) break;
                moved += pushed;
            }
        }
    }
    if (moved != total) fail(ErrorKind::invalid_argument, "transport problem infeasible");

    std::int64_t result = 0;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) result += flow_[i][j] * cost_[i][j];
    }
    return result;
}

}  // namespace detail

TransportSolver::TransportSolver() = default;
TransportSolver::~TransportSolver() = default;
TransportSolver::TransportSolver(TransportSolver&&) noexcept = default;
TransportSolver& TransportSolver::operator=(TransportSolver&&) noexcept = default;

// Residual arcs of the dense network, by node type:
//   source -> row i        capacity left_supply[i]
//   row i -> source        capacity supply[i] - left_supply[i]
//   row i -> column j      unbounded, cost c_ij
//   column j -> row i      capacity flow_ij, cost -c_ij
//   column j -> sink       capacity left_demand[j]
//   sink -> column j       capacity demand[j] - left_demand[j]
// Arcs into the source never shorten a path from it and are skipped.

// Dense Dijkstra on reduced costs. Potentials grow by min(dist, dist(sink)) so
// that reduced costs stay non-negative on every residual arc.
bool TransportSolver::raise_potentials() {
    const int n = sink_ + 1;
    dist_.assign(n, kInf);
    done_.assign(n, 0);
    dist_[0] = 0;
    const auto relax = [&](int y, std::int64_t d) {
        if (d < dist_[y]) dist_[y] = d;
    };
    for (;;) {
        int x = -1;
        for (int i = 0; i < n; ++i) {
            if (!done_[i] && dist_[i] < kInf && (x < 0 || dist_[i] < dist_[x])) x = i;
        }
        if (x < 0) break;
        done_[x] = 1;
        const std::int64_t base = dist_[x] + potential_[x];
        if (x == 0) {
            for (int i = 0; i < rows_; ++i) {
                if (left_supply_[i] > 0) relax(1 + i, base - potential_[1 + i]);
            }
        } else if (x == sink_) {
            for (int j = 0; j < cols_; ++j) {
                if (left_demand_[j] < demand_[j]) relax(1 + rows_ + j, base - potential_[1 + rows_ + j]);
            }
        } else if (x <= rows_) {
            const int* c = cost_ + (x - 1) * cols_;
            const std::int64_t* pc = potential_.data() + 1 + rows_;
            std::int64_t* dc = dist_.data() + 1 + rows_;
            for (int j = 0; j < cols_; ++j) {
                const std::int64_t d = base + c[j] - pc[j];
                if (d < dc[j]) dc[j] = d;
            }
        } else {
            const int j = x - 1 - rows_;
            for (int i = 0; i < rows_; ++i) {
                if (flow_[i * cols_ + j] > 0) relax(1 + i, base - cost_[i * cols_ + j] - potential_[1 + i]);
            }
            if (left_demand_[j] > 0) relax(sink_, base - potential_[sink_]);
        }
    }
    const std::int64_t reach = dist_[sink_];
    if (reach >= kInf) return false;
    for (int i = 0; i < n; ++i) potential_[i] += std::min(dist_[i], reach);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            tight_[i * cols_ + j] = cost_[i * cols_ + j] + potential_[1 + i] == potential_[1 + rows_ + j];
        }
    }
    return true;
}

int TransportSolver::arc_count(int x) const {
    if (x == 0) return rows_;
    if (x == sink_) return cols_;
    return x <= rows_ ? cols_ : rows_ + 1;
}

// k-th admissible arc of x (positive capacity, zero reduced cost).
bool TransportSolver::arc(int x, int k, int& y, std::int64_t& cap) const {
    if (x == 0) {
        y = 1 + k;
        cap = left_supply_[k];
    } else if (x == sink_) {
        y = 1 + rows_ + k;
        cap = demand_[k] - left_demand_[k];
    } else if (x <= rows_) {
        y = 1 + rows_ + k;
        cap = kInf;
        return tight_[(x - 1) * cols_ + k] != 0;
    } else if (k == rows_) {
        y = sink_;
        cap = left_demand_[x - 1 - rows_];
    } else {
        y = 1 + k;
        const int a = k * cols_ + (x - 1 - rows_);
        cap = tight_[a] ? flow_[a] : 0;
        return cap > 0;
    }
    return cap > 0 && potential_[x] == potential_[y];
}

void TransportSolver::apply(int x, int k, std::int64_t f) {
    if (x == 0) {
        left_supply_[k] -= f;
    } else if (x == sink_) {
        left_demand_[k] += f;
    } else if (x <= rows_) {
        flow_[(x - 1) * cols_ + k] += f;
    } else if (k == rows_) {
        left_demand_[x - 1 - rows_] -= f;
    } else {
        flow_[k * cols_ + (x - 1 - rows_)] -= f;
    }
}

bool TransportSolver::build_levels() {
    level_.assign(sink_ + 1, -1);
    queue_.clear();
    queue_.push_back(0);
    level_[0] = 0;
    for (std::size_t q = 0; q < queue_.size() && level_[sink_] < 0; ++q) {
        const int x = queue_[q];
        const int arcs = arc_count(x);
        for (int k = 0; k < arcs; ++k) {
            int y = 0;
            std::int64_t cap = 0;
            if (arc(x, k, y, cap) && level_[y] < 0) {
                level_[y] = level_[x] + 1;
                queue_.push_back(y);
            }
        }
    }
    return level_[sink_] >= 0;
}

std::int64_t TransportSolver::push(int x, std::int64_t limit) {
    if (x == sink_) return limit;
    const int arcs = arc_count(x);
    for (int& k = iter_[x]; k < arcs; ++k) {
        int y = 0;
        std::int64_t cap = 0;
        if (!arc(x, k, y, cap) || level_[y] != level_[x] + 1) continue;
        const std::int64_t pushed = push(y, std::min(limit, cap));
        if (pushed > 0) {
            apply(x, k, pushed);
            return pushed;
        }
    }
    return 0;
}

std::int64_t TransportSolver::solve(std::span<const std::int64_t> supply, std::span<const std::int64_t> demand,
                                    std::span<const int> cost, Method method) {
    if (cost.size() != supply.size() * demand.size()) {
        fail(ErrorKind::invalid_argument, "cost matrix shape mismatch");
    }
    const std::int64_t total = std::accumulate(supply.begin(), supply.end(), std::int64_t{0});
    if (total != std::accumulate(demand.begin(), demand.end(), std::int64_t{0})) {
        fail(ErrorKind::invalid_argument, "supply and demand totals differ");
    }
    for (const auto* side : {&supply, &demand}) {
        if (std::any_of(side->begin(), side->end(), [](std::int64_t m) { return m < 0; })) {
            fail(ErrorKind::invalid_argument, "negative mass");
        }
    }
    if (std::any_of(cost.begin(), cost.end(), [](int c) { return c < 0; })) {
        fail(ErrorKind::invalid_argument, "negative cost");
    }
    if (total == 0) return 0;

    const bool small = supply.size() <= detail::SmallTransport::kMax && demand.size() <= detail::SmallTransport::kMax;
    if (method == Method::bitset && !small) fail(ErrorKind::invalid_argument, "bitset solver limited to 64 x 64");
    if (method != Method::dense && small) {
        if (!small_) small_ = std::make_unique<detail::SmallTransport>();
        return small_->solve(supply, demand, cost, total);
    }

    rows_ = static_cast<int>(supply.size());
    cols_ = static_cast<int>(demand.size());
    sink_ = rows_ + cols_ + 1;
    cost_ = cost.data();
    supply_.assign(supply.begin(), supply.end());
    demand_.assign(demand.begin(), demand.end());
    left_supply_ = supply_;
    left_demand_.assign(demand.begin(), demand.end());
    flow_.assign(cost.size(), 0);
    tight_.assign(cost.size(), 0);
    potential_.assign(sink_ + 1, 0);

    std::int64_t moved = 0;
    while (moved < total && raise_potentials()) {
        while (build_levels()) {
            iter_.assign(sink_ + 1, 0);
            while (const std::int64_t pushed = push(0, kInf)) moved += pushed;
        }
    }
    if (moved != total) fail(ErrorKind::invalid_argument, "transport problem infeasible");

    std::int64_t result = 0;
    for (std::size_t k = 0; k < flow_.size(); ++k) result += flow_[k] * cost[k];
    return result;
}

std::int64_t W1Workspace::scaled_cost(const Graph& g, NodeId u, NodeId v) {
    const auto nu = g.adjacency(u);
    const auto nv = g.adjacency(v);
    const auto du = static_cast<std::int64_t>(nu.size());
    const auto dv = static_cast<std::int64_t>(nv.size());

    // Mass scaled by du*dv: each neighbor of u supplies dv, each neighbor of
    // v demands du. Mass shared by both supports stays in place at zero cost,
    // which is optimal for a metric ground cost.
    sources_.clear();
    source_pos_.clear();
    sinks_.clear();
    supply_.clear();
    demand_.clear();
    auto x = nu.begin();
    auto y = nv.begin();
    const auto add_source = [&](auto it, std::int64_t mass) {
        sources_.push_back(*it);
        source_pos_.push_back(static_cast<int>(it - nu.begin()));
        supply_.push_back(mass);
    };
    while (x != nu.end() || y != nv.end()) {
        if (y == nv.end() || (x != nu.end() && *x < *y)) {
            add_source(x++, dv);
        } else if (x == nu.end() || *y < *x) {
            sinks_.push_back(*y++);
            demand_.push_back(du);
        } else {
            if (dv > du) {
                add_source(x, dv - du);
            } else if (du > dv) {
                sinks_.push_back(*x);
                demand_.push_back(du - dv);
            }
            ++x;
            ++y;
        }
    }
    if (sources_.empty()) return 0;

    // Every a in N(u) and b in N(v) satisfy d(a, b) <= 3 via a-u-v-b, so
    // the ground distance is 1 if adjacent, 2 if they share a neighbor,
    // and 3 otherwise.
    if (nu.size() <= 64 && sinks_.size() <= 64) {
        grouped_costs(g, u);
    } else {
        cost_.resize(sources_.size() * sinks_.size());
        fill_costs_direct(g);
        compress();
    }
    return solver_.solve(supply_, demand_, cost_);
}

// Builds the already merged problem: a column is described by which sources
// it is adjacent to and which it is two steps from, and a row by the column
// groups it reaches at cost 1 and 2.
void W1Workspace::grouped_costs(const Graph& g, NodeId u) {
    if (!cache_valid_ || cached_graph_ != &g || cached_u_ != u || near_.size() != g.node_count()) {
        if (near_.size() != g.node_count()) {
            near_.assign(g.node_count(), 0);
        } else {
            for (NodeId t : touched_) near_[t] = 0;
        }
        touched_.clear();
        const auto nu = g.adjacency(u);
        for (std::size_t k = 0; k < nu.size(); ++k) {
            for (NodeId w : g.adjacency(nu[k])) {
                if (near_[w] == 0) touched_.push_back(w);
                near_[w] |= std::uint64_t{1} << k;
            }
        }
        cached_graph_ = &g;
        cached_u_ = u;
        cache_valid_ = true;
    }

    std::uint64_t source_bits = 0;
    for (int pos : source_pos_) source_bits |= std::uint64_t{1} << pos;

    // b is adjacent to the k-th neighbor of u when bit k of near_[b] is set,
    // and at distance 2 when some neighbor of b carries that bit.
    col_one_.clear();
    col_two_.clear();
    merged_demand_.clear();
    for (std::size_t j = 0; j < sinks_.size(); ++j) {
        const std::uint64_t one = near_[sinks_[j]] & source_bits;
        std::uint64_t two = 0;
        for (NodeId w : g.adjacency(sinks_[j])) two |= near_[w];
        two &= source_bits & ~one;
        std::size_t h = 0;
        while (h < col_one_.size() && !(col_one_[h] == one && col_two_[h] == two)) ++h;
        if (h == col_one_.size()) {
            col_one_.push_back(one);
            col_two_.push_back(two);
            merged_demand_.push_back(0);
        }
        merged_demand_[h] += demand_[j];
    }

    const std::size_t cols = col_one_.size();
    row_one_.clear();
    row_two_.clear();
    merged_supply_.clear();
    for (std::size_t i = 0; i < sources_.size(); ++i) {
        const std::uint64_t b = std::uint64_t{1} << source_pos_[i];
        std::uint64_t one = 0, two = 0;
        for (std::size_t h = 0; h < cols; ++h) {
            if (col_one_[h] & b) one |= std::uint64_t{1} << h;
            if (col_two_[h] & b) two |= std::uint64_t{1} << h;
        }
        std::size_t r = 0;
        while (r < row_one_.size() && !(row_one_[r] == one && row_two_[r] == two)) ++r;
        if (r == row_one_.size()) {
            row_one_.push_back(one);
            row_two_.push_back(two);
            merged_supply_.push_back(0);
        }
        merged_supply_[r] += supply_[i];
    }

    cost_.resize(row_one_.size() * cols);
    for (std::size_t r = 0; r < row_one_.size(); ++r) {
        for (std::size_t h = 0; h < cols; ++h) {
            const std::uint64_t b = std::uint64_t{1} << h;
            cost_[r * cols + h] = (row_one_[r] & b) ? 1 : (row_two_[r] & b) ? 2 : 3;
        }
    }
    supply_.swap(merged_supply_);
    demand_.swap(merged_demand_);
}

void W1Workspace::fill_costs_direct(const Graph& g) {
    if (stamp_.size() != g.node_count()) {
        stamp_.assign(g.node_count(), 0);
        token_ = 0;
    }
    for (std::size_t i = 0; i < sources_.size(); ++i) {
        if (++token_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            token_ = 1;
        }
        for (NodeId w : g.adjacency(sources_[i])) stamp_[w] = token_;
        int* row = cost_.data() + i * sinks_.size();
        for (std::size_t j = 0; j < sinks_.size(); ++j) {
            const NodeId b = sinks_[j];
            if (stamp_[b] == token_) {
                row[j] = 1;
                continue;
            }
            row[j] = 3;
            for (NodeId w : g.adjacency(b)) {
                if (stamp_[w] == token_) {
                    row[j] = 2;
                    break;
                }
            }
        }
    }
}

// Rows (and columns) with identical costs are interchangeable, so merging them
// and adding their masses leaves the optimum unchanged. Away from dense
// regions most neighbors look alike and the problem shrinks to a few rows.
void W1Workspace::compress() {
    const std::size_t rows = supply_.size();
    const std::size_t cols = demand_.size();
    // Groups items by key, confirming key matches with an exact comparison.
    const auto group = [](std::size_t count, const std::vector<std::uint64_t>& key, std::vector<std::size_t>& out,
                          auto same) {
        out.assign(count, 0);
        std::vector<std::size_t> heads;
        for (std::size_t k = 0; k < count; ++k) {
            std::size_t g = 0;
            while (g < heads.size() && !(key[heads[g]] == key[k] && same(heads[g], k))) ++g;
            if (g == heads.size()) heads.push_back(k);
            out[k] = g;
        }
        return heads.size();
    };

    row_key_.assign(rows, 14695981039346656037ULL);
    col_key_.assign(cols, 14695981039346656037ULL);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const auto c = static_cast<std::uint64_t>(cost_[i * cols + j]);
            row_key_[i] = (row_key_[i] ^ c) * 1099511628211ULL;
            col_key_[j] = (col_key_[j] ^ c) * 1099511628211ULL;
        }
    }
    const std::size_t new_rows = group(rows, row_key_, row_group_, [&](std::size_t a, std::size_t b) {
        return std::equal(cost_.begin() + a * cols, cost_.begin() + (a + 1) * cols, cost_.begin() + b * cols);
    });
    const std::size_t new_cols = group(cols, col_key_, col_group_, [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i) {
            if (cost_[i * cols + a] != cost_[i * cols + b]) return false;
        }
        return true;
    });
    if (new_rows == rows && new_cols == cols) return;

    merged_supply_.assign(new_rows, 0);
    merged_demand_.assign(new_cols, 0);
    merged_cost_.assign(new_rows * new_cols, 0);
    for (std::size_t i = 0; i < rows; ++i) merged_supply_[row_group_[i]] += supply_[i];
    for (std::size_t j = 0; j < cols; ++j) merged_demand_[col_group_[j]] += demand_[j];
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            merged_cost_[row_group_[i] * new_cols + col_group_[j]] = cost_[i * cols + j];
        }
    }
    supply_.swap(merged_supply_);
    demand_.swap(merged_demand_);
    cost_.swap(merged_cost_);
}

}  // namespace lrc
