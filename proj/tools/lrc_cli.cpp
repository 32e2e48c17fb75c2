// lrc: command-line front end. Uses the library only through lrc/lrc.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lrc/lrc.h"

namespace {

using json = nlohmann::ordered_json;

struct Failure {
    lrc_status status;
    std::string message;
};

void check(lrc_status status) {
    if (status != LRC_OK) throw Failure{status, lrc_last_error()};
}

[[noreturn]] void usage_error(const std::string& message) { throw Failure{LRC_ERR_INVALID_ARGUMENT, message}; }

template <typename T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<lrc_graph, Deleter<lrc_graph, lrc_graph_free>>;
using CurvaturePtr = std::unique_ptr<lrc_curvature, Deleter<lrc_curvature, lrc_curvature_free>>;
using PartitionPtr = std::unique_ptr<lrc_partition, Deleter<lrc_partition, lrc_partition_free>>;
using CoverPtr = std::unique_ptr<lrc_cover, Deleter<lrc_cover, lrc_cover_free>>;
using GridPtr = std::unique_ptr<lrc_grid, Deleter<lrc_grid, lrc_grid_free>>;

int exit_code(lrc_status status) {
    switch (status) {
        case LRC_OK: return 0;
        case LRC_ERR_IO:
        case LRC_ERR_FORMAT:
        case LRC_ERR_INVALID_ARGUMENT: return 2;
        case LRC_ERR_PRECONDITION: return 3;
        case LRC_ERR_INTERNAL: return 1;
    }
    return 1;
}

void report_error(const std::string& kind, const std::string& message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

bool is_gml(const std::string& path, const std::string& format) {
    if (format == "gml") return true;
    if (format == "edgelist") return false;
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".gml") == 0;
}

struct LoadedGraph {
    GraphPtr graph;
    PartitionPtr labels;  // GML node values, if any
};

LoadedGraph load_graph(const std::string& path, const std::string& format) {
    LoadedGraph out;
    lrc_graph* g = nullptr;
    if (is_gml(path, format)) {
        lrc_partition* labels = nullptr;
        check(lrc_graph_read_gml(path.c_str(), &g, &labels));
        out.labels.reset(labels);
    } else {
        check(lrc_graph_read_edge_list(path.c_str(), &g));
    }
    out.graph.reset(g);
    return out;
}

std::optional<double> parse_threshold(const std::string& text) {
    if (text == "auto") return std::nullopt;
    try {
        std::size_t used = 0;
        const double value = std::stod(text, &used);
        if (used == text.size()) return value;
    } catch (const std::exception&) {
    }
    usage_error("--threshold expects 'auto' or a number, got '" + text + "'");
}

json nullable(bool present, double value) { return present ? json(value) : json(nullptr); }

json report_json(const lrc_preprocess_report& r) {
    return json{{"edges_before", r.edges_before},
                {"edges_after", r.edges_after},
                {"beta", nullable(r.has_beta, r.beta)},
                {"mu1", nullable(r.has_fit, r.mu1)},
                {"mu2", nullable(r.has_fit, r.mu2)},
                {"sigma1", nullable(r.has_fit, r.sigma1)},
                {"sigma2", nullable(r.has_fit, r.sigma2)},
                {"pi1", nullable(r.has_fit, r.pi1)},
                {"mode", r.mode}};
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Failure{LRC_ERR_IO, "cannot open '" + path + "' for writing"};
    out << text;
    if (!out.flush()) throw Failure{LRC_ERR_IO, "write to '" + path + "' failed"};
}

// "p1:p2,p1:p2,..." or "default".
void parse_grid(const std::string& text, std::vector<double>& p1, std::vector<double>& p2) {
    if (text == "default") return;
    std::stringstream list(text);
    std::string cell;
    while (std::getline(list, cell, ',')) {
        const auto colon = cell.find(':');
        if (colon == std::string::npos) usage_error("grid cell '" + cell + "' is not p1:p2");
        try {
            p1.push_back(std::stod(cell.substr(0, colon)));
            p2.push_back(std::stod(cell.substr(colon + 1)));
        } catch (const std::exception&) {
            usage_error("grid cell '" + cell + "' is not numeric");
        }
    }
    if (p1.empty()) usage_error("empty grid");
}

PartitionPtr read_partition(const std::string& path, const std::string& format) {
    lrc_partition* p = nullptr;
    if (format == "labels") {
        check(lrc_partition_read(path.c_str(), &p));
    } else if (format == "cmty") {
        lrc_cover* c = nullptr;
        check(lrc_cover_read(path.c_str(), &c));
        CoverPtr cover(c);
        check(lrc_partition_from_cover(cover.get(), &p));
    } else {
        lrc_graph* g = nullptr;
        check(lrc_graph_read_gml(path.c_str(), &g, &p));
        lrc_graph_free(g);
    }
    return PartitionPtr(p);
}

CoverPtr read_cover(const std::string& path, const std::string& format) {
    lrc_cover* c = nullptr;
    if (format == "cmty") {
        check(lrc_cover_read(path.c_str(), &c));
    } else {
        PartitionPtr p = read_partition(path, format);
        check(lrc_cover_from_partition(p.get(), &c));
    }
    return CoverPtr(c);
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

// key=value lines; '#' starts a comment. Keys are long option names.
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{LRC_ERR_IO, "cannot open config '" + path + "'"};
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int line_no = 0;
    const auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw Failure{LRC_ERR_FORMAT, path + ": line " + std::to_string(line_no) + ": expected key=value"};
        }
        pairs.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return pairs;
}

// Appends config entries for options not already given on the command line.
std::vector<std::string> merge_config(std::vector<std::string> args) {
    std::optional<std::string> config;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) config = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) config = args[i].substr(9);
    }
    if (!config) return args;
    for (const auto& [key, value] : read_config(*config)) {
        const std::string flag = "--" + key;
        const bool given = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!given) {
            args.push_back(flag);
            args.push_back(value);
        }
    }
    return args;
}

struct Options {
    std::string config;
    unsigned workers = 1;
    std::optional<std::uint64_t> seed;
    std::string input;
    std::string format = "auto";
    std::string output = "-";

    std::string measure = "lrc";

    std::string curvature = "lrc";
    std::string threshold = "auto";
    std::string report;
    std::string curvature_csv;

    std::size_t n = 100;
    std::size_t communities = 2;
    std::size_t replicates = 100;
    std::string curvatures = "frc,bfc,lrc,orc";
    std::string grid = "default";

    std::string algo = "lpa";
    int max_sweeps = 100;

    std::string truth;
    std::string pred;
    std::string metric = "ari";
    std::string truth_format = "labels";
    std::string pred_format = "labels";

    std::size_t runs = 1;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--config", o.config, "key=value file; command-line flags take precedence");
    cmd->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1U, 1024U));
}

int cmd_curvature(const Options& o) {
    LoadedGraph g = load_graph(o.input, o.format);
    lrc_curvature* c = nullptr;
    check(lrc_curvature_compute(g.graph.get(), o.measure.c_str(), o.workers, &c));
    CurvaturePtr values(c);
    check(lrc_curvature_write_csv(g.graph.get(), values.get(), o.output.c_str()));
    return 0;
}

int cmd_preprocess(const Options& o) {
    LoadedGraph g = load_graph(o.input, o.format);
    lrc_preprocess_options options;
    lrc_preprocess_options_init(&options);
    options.curvature = o.curvature.c_str();
    options.workers = o.workers;
    if (const auto t = parse_threshold(o.threshold)) {
        options.has_threshold = 1;
        options.threshold = *t;
    }
    lrc_graph* pruned = nullptr;
    lrc_curvature* c = nullptr;
    lrc_preprocess_report report;
    check(lrc_preprocess(g.graph.get(), &options, &pruned, &c, &report));
    GraphPtr out(pruned);
    CurvaturePtr values(c);
    check(lrc_graph_write_edge_list(out.get(), o.output.c_str()));
    if (!o.curvature_csv.empty()) check(lrc_curvature_write_csv(g.graph.get(), values.get(), o.curvature_csv.c_str()));
    const std::string line = report_json(report).dump() + "\n";
    if (o.report.empty()) {
        std::cerr << line;
    } else {
        write_text(o.report, line);
    }
    return 0;
}

int cmd_simulate(const Options& o) {
    std::vector<double> p1, p2;
    parse_grid(o.grid, p1, p2);
    lrc_grid_options options;
    lrc_grid_options_init(&options);
    options.n = o.n;
    options.communities = o.communities;
    options.replicates = o.replicates;
    options.p1 = p1.data();
    options.p2 = p2.data();
    options.cell_count = p1.size();
    options.curvatures = o.curvatures.c_str();
    options.base_seed = *o.seed;
    options.workers = o.workers;
    lrc_grid* grid = nullptr;
    check(lrc_simulate(&options, &grid));
    GridPtr result(grid);
    check(lrc_grid_write_csv(result.get(), o.output.c_str()));
    return 0;
}

PartitionPtr detect(const lrc_graph* g, const std::string& algo, std::uint64_t seed, int max_sweeps) {
    lrc_partition* p = nullptr;
    if (algo == "lpa") {
        check(lrc_detect_lpa(g, seed, max_sweeps, &p));
    } else {
        check(lrc_detect_components(g, &p));
    }
    return PartitionPtr(p);
}

int cmd_detect(const Options& o) {
    if (o.algo == "lpa" && !o.seed) usage_error("--seed is required for --algo lpa");
    LoadedGraph g = load_graph(o.input, o.format);
    PartitionPtr p = detect(g.graph.get(), o.algo, o.seed.value_or(0), o.max_sweeps);
    check(lrc_partition_write(p.get(), o.output.c_str()));
    return 0;
}

int cmd_eval(const Options& o) {
    double value = 0.0;
    if (o.metric == "f1") {
        CoverPtr truth = read_cover(o.truth, o.truth_format);
        CoverPtr pred = read_cover(o.pred, o.pred_format);
        check(lrc_overlapping_f1(truth.get(), pred.get(), &value));
    } else {
        PartitionPtr truth = read_partition(o.truth, o.truth_format);
        PartitionPtr pred = read_partition(o.pred, o.pred_format);
        check((o.metric == "ari" ? lrc_ari : lrc_ami)(truth.get(), pred.get(), &value));
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f\n", value);
    write_text(o.output, buf);
    return 0;
}

// preprocess -> detect -> eval on the raw and the pruned graph, one JSON line
// per seed followed by a summary line with medians.
int cmd_pipeline(const Options& o) {
    LoadedGraph g = load_graph(o.input, o.format);
    PartitionPtr truth;
    if (!o.truth.empty()) {
        truth = read_partition(o.truth, o.truth_format);
    } else if (g.labels) {
        truth = std::move(g.labels);
    } else {
        usage_error("--truth is required unless the input is GML with node values");
    }

    lrc_preprocess_options options;
    lrc_preprocess_options_init(&options);
    options.curvature = o.curvature.c_str();
    options.workers = o.workers;
    if (const auto t = parse_threshold(o.threshold)) {
        options.has_threshold = 1;
        options.threshold = *t;
    }
    lrc_graph* pruned_raw = nullptr;
    lrc_preprocess_report report;
    check(lrc_preprocess(g.graph.get(), &options, &pruned_raw, nullptr, &report));
    GraphPtr pruned(pruned_raw);

    std::string text;
    std::vector<double> ari_before, ari_after, ami_before, ami_after;
    for (std::size_t r = 0; r < o.runs; ++r) {
        const std::uint64_t seed = *o.seed + r;
        PartitionPtr before = detect(g.graph.get(), o.algo, seed, o.max_sweeps);
        PartitionPtr after = detect(pruned.get(), o.algo, seed, o.max_sweeps);
        double v[4];
        check(lrc_ari(truth.get(), before.get(), &v[0]));
        check(lrc_ari(truth.get(), after.get(), &v[1]));
        check(lrc_ami(truth.get(), before.get(), &v[2]));
        check(lrc_ami(truth.get(), after.get(), &v[3]));
        ari_before.push_back(v[0]);
        ari_after.push_back(v[1]);
        ami_before.push_back(v[2]);
        ami_after.push_back(v[3]);
        text += json{{"seed", seed}, {"ari_before", v[0]}, {"ari_after", v[1]}, {"ami_before", v[2]},
                     {"ami_after", v[3]}}
                    .dump() +
                "\n";
    }
    json summary = report_json(report);
    summary["runs"] = o.runs;
    summary["median_ari_before"] = median(ari_before);
    summary["median_ari_after"] = median(ari_after);
    summary["median_ami_before"] = median(ami_before);
    summary["median_ami_after"] = median(ami_after);
    text += summary.dump() + "\n";
    write_text(o.output, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lower Ricci curvature tools"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::string> kinds{"lrc", "frc", "bfc", "orc"};
    const std::vector<std::string> graph_formats{"auto", "edgelist", "gml"};

    auto* curvature = app.add_subcommand("curvature", "per-edge curvature CSV");
    add_common(curvature, o);
    curvature->add_option("-i,--input", o.input, "graph file")->required();
    curvature->add_option("--format", o.format)->check(CLI::IsMember(graph_formats));
    curvature->add_option("--measure", o.measure)->check(CLI::IsMember(kinds));
    curvature->add_option("-o,--output", o.output, "CSV path or - for stdout");

    auto* preprocess = app.add_subcommand("preprocess", "curvature-threshold edge pruning");
    add_common(preprocess, o);
    preprocess->add_option("-i,--input", o.input)->required();
    preprocess->add_option("--format", o.format)->check(CLI::IsMember(graph_formats));
    preprocess->add_option("--curvature", o.curvature)->check(CLI::IsMember(kinds));
    preprocess->add_option("--threshold", o.threshold, "auto or a numeric cutoff");
    preprocess->add_option("-o,--output", o.output, "pruned edge list");
    preprocess->add_option("--report", o.report, "JSON report path (default: stderr)");
    preprocess->add_option("--curvature-csv", o.curvature_csv, "per-edge curvature of the input graph");

    auto* simulate = app.add_subcommand("simulate", "SBM separation scores over a (p1, p2) grid");
    add_common(simulate, o);
    simulate->add_option("--seed", o.seed)->required();
    simulate->add_option("-n,--n", o.n);
    simulate->add_option("-k,--communities", o.communities);
    simulate->add_option("-r,--replicates", o.replicates);
    simulate->add_option("--curvatures", o.curvatures, "comma-separated list");
    simulate->add_option("--grid", o.grid, "default or p1:p2,p1:p2,...");
    simulate->add_option("-o,--output", o.output);

    auto* detect_cmd = app.add_subcommand("detect", "community detection");
    add_common(detect_cmd, o);
    detect_cmd->add_option("-i,--input", o.input)->required();
    detect_cmd->add_option("--format", o.format)->check(CLI::IsMember(graph_formats));
    detect_cmd->add_option("--algo", o.algo)->check(CLI::IsMember({"lpa", "components"}));
    detect_cmd->add_option("--seed", o.seed);
    detect_cmd->add_option("--max-sweeps", o.max_sweeps)->check(CLI::PositiveNumber);
    detect_cmd->add_option("-o,--output", o.output);

    const std::vector<std::string> label_formats{"labels", "cmty", "gml"};
    auto* eval = app.add_subcommand("eval", "compare two community assignments");
    add_common(eval, o);
    eval->add_option("--truth", o.truth)->required();
    eval->add_option("--pred", o.pred)->required();
    eval->add_option("--metric", o.metric)->check(CLI::IsMember({"ari", "ami", "f1"}));
    eval->add_option("--truth-format", o.truth_format)->check(CLI::IsMember(label_formats));
    eval->add_option("--pred-format", o.pred_format)->check(CLI::IsMember(label_formats));
    eval->add_option("-o,--output", o.output);

    auto* pipeline = app.add_subcommand("pipeline", "preprocess, detect and score before/after");
    add_common(pipeline, o);
    pipeline->add_option("-i,--input", o.input)->required();
    pipeline->add_option("--format", o.format)->check(CLI::IsMember(graph_formats));
    pipeline->add_option("--truth", o.truth, "ground-truth labels (default: GML node values)");
    pipeline->add_option("--truth-format", o.truth_format)->check(CLI::IsMember(label_formats));
    pipeline->add_option("--seed", o.seed)->required();
    pipeline->add_option("--runs", o.runs, "seeds seed, seed+1, ...")->check(CLI::PositiveNumber);
    pipeline->add_option("--algo", o.algo)->check(CLI::IsMember({"lpa", "components"}));
    pipeline->add_option("--max-sweeps", o.max_sweeps)->check(CLI::PositiveNumber);
    pipeline->add_option("--curvature", o.curvature)->check(CLI::IsMember(kinds));
    pipeline->add_option("--threshold", o.threshold);
    pipeline->add_option("-o,--output", o.output);

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = merge_config(std::move(args));
        std::reverse(args.begin(), args.end());
        app.parse(args);

        if (app.got_subcommand(curvature)) return cmd_curvature(o);
        if (app.got_subcommand(preprocess)) return cmd_preprocess(o);
        if (app.got_subcommand(simulate)) return cmd_simulate(o);
        if (app.got_subcommand(detect_cmd)) return cmd_detect(o);
        if (app.got_subcommand(eval)) return cmd_eval(o);
        return cmd_pipeline(o);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report_error("usage", e.what());
        return 2;
    } catch (const Failure& f) {
        report_error(lrc_status_name(f.status), f.message);
        return exit_code(f.status);
    } catch (const std::exception& e) {
        report_error("internal", e.what());
        return 1;
    }
}
