#include <doctest.h>

#include <json.hpp>

#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "cli_support.hpp"

namespace {

using json = nlohmann::json;

std::set<std::pair<std::string, std::string>> edge_set(const std::string& text) {
    std::set<std::pair<std::string, std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string u, v;
        fields >> u >> v;
        out.emplace(std::min(u, v), std::max(u, v));
    }
    return out;
}

json error_line(const cli::Result& r) { return json::parse(r.err.substr(0, r.err.find('\n'))); }

const char* kTriangle = "0 1\n1 2\n2 0\n";
const char* kTwoTriangles = "0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n";

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("curvature on a triangle") {
        cli::Sandbox box("cli_curv");
        box.write("t.txt", kTriangle);
        const auto r = box.run({"curvature", "-i", box.path("t.txt"), "--measure", "lrc"});
        CHECK(r.code == 0);
        CHECK(r.out == "u,v,curvature\n0,1,1.5\n0,2,1.5\n1,2,1.5\n");
        const auto f = box.run({"curvature", "-i", box.path("t.txt"), "--measure", "frc"});
        CHECK(f.out == "u,v,curvature\n0,1,3\n0,2,3\n1,2,3\n");
    }

    TEST_CASE("ORC on a single edge") {
        cli::Sandbox box("cli_k2");
        box.write("k2.txt", "4 9\n");
        const auto r = box.run({"curvature", "-i", box.path("k2.txt"), "--measure", "orc", "-o", box.path("c.csv")});
        CHECK(r.code == 0);
        CHECK(box.read("c.csv") == "u,v,curvature\n4,9,0\n");
    }

    TEST_CASE("missing input file") {
        cli::Sandbox box("cli_missing");
        const std::string path = box.path("absent.txt");
        const auto r = box.run({"curvature", "-i", path});
        CHECK(r.code == 2);
        const json e = error_line(r);
        CHECK(e["error"] == "io");
        CHECK(e["message"].get<std::string>().find(path) != std::string::npos);
    }

    TEST_CASE("malformed input file") {
        cli::Sandbox box("cli_bad");
        box.write("bad.txt", "0 1\n1 2 3\n");
        const auto r = box.run({"curvature", "-i", box.path("bad.txt")});
        CHECK(r.code == 2);
        CHECK(error_line(r)["error"] == "format");
    }

    TEST_CASE("preprocess finds a valley on a two-block graph") {
        cli::Sandbox box("cli_pre");
        const auto r = box.run({"preprocess", "-i", cli::data("sbm60.txt"), "-o", box.path("out.txt")});
        REQUIRE(r.code == 0);
        const json report = json::parse(r.err);
        CHECK(report["mode"] == "valley");
        CHECK(report["edges_after"].get<int>() < report["edges_before"].get<int>());
        CHECK(cli::line_count(box.read("out.txt")) == report["edges_after"].get<std::size_t>());
        for (const char* key : {"beta", "mu1", "mu2", "sigma1", "sigma2", "pi1"}) CHECK(report[key].is_number());
    }

    TEST_CASE("explicit threshold keeps edges at or above it") {
        cli::Sandbox box("cli_explicit");
        const auto r = box.run({"preprocess", "-i", cli::data("sbm60.txt"), "--threshold", "0.0", "-o",
                                box.path("out.txt"), "--report", box.path("report.json"), "--curvature-csv",
                                box.path("c.csv")});
        REQUIRE(r.code == 0);
        CHECK(r.err.empty());
        const json report = json::parse(box.read("report.json"));
        CHECK(report["mode"] == "explicit");
        CHECK(report["beta"] == 0.0);
        CHECK(report["mu1"].is_null());
        std::set<std::pair<std::string, std::string>> expected;
        std::istringstream csv(box.read("c.csv"));
        std::string line;
        std::getline(csv, line);
        while (std::getline(csv, line)) {
            const auto a = line.find(',');
            const auto b = line.find(',', a + 1);
            if (std::stod(line.substr(b + 1)) >= 0.0) {
                const std::string u = line.substr(0, a), v = line.substr(a + 1, b - a - 1);
                expected.emplace(std::min(u, v), std::max(u, v));
            }
        }
        CHECK(edge_set(box.read("out.txt")) == expected);
    }

    TEST_CASE("unimodal graph is passed through") {
        cli::Sandbox box("cli_er");
        const auto r = box.run({"preprocess", "-i", cli::data("er200.txt"), "-o", box.path("out.txt")});
        REQUIRE(r.code == 0);
        const json report = json::parse(r.err);
        CHECK(report["mode"] == "degenerate_skip");
        CHECK(report["edges_after"] == report["edges_before"]);
        CHECK(edge_set(box.read("out.txt")) == edge_set(cli::slurp(cli::data("er200.txt"))));
    }

    TEST_CASE("preprocess with too few edges") {
        cli::Sandbox box("cli_small");
        box.write("t.txt", kTriangle);
        const auto r = box.run({"preprocess", "-i", box.path("t.txt")});
        CHECK(r.code == 3);
        const json e = error_line(r);
        CHECK(e["error"] == "precondition");
        CHECK(e["message"].get<std::string>().find("insufficient data") != std::string::npos);
        CHECK(box.run({"preprocess", "-i", box.path("t.txt"), "--threshold", "bogus"}).code == 2);
    }

    TEST_CASE("simulate on the default grid") {
        cli::Sandbox box("cli_sim");
        const std::vector<std::string> args{"simulate", "--seed", "3", "-r", "5", "-n", "30"};
        const auto r = box.run(args);
        REQUIRE(r.code == 0);
        CHECK(cli::line_count(r.out) == 1 + 100 * 4 * 3);
        CHECK(r.out.rfind("p1,p2,curvature,score,value,replicates,base_seed\n", 0) == 0);
        CHECK(box.run(args).out == r.out);
    }

    TEST_CASE("simulate rejects bad parameters") {
        cli::Sandbox box("cli_sim_bad");
        CHECK(box.run({"simulate", "--seed", "1", "-r", "0"}).code == 2);
        CHECK(box.run({"simulate", "--seed", "1", "--grid", "0.5"}).code == 2);
        CHECK(box.run({"simulate", "--seed", "1", "--curvatures", "lrc,xyz"}).code == 2);
        CHECK(box.run({"simulate", "-r", "1"}).code == 2);
    }

    TEST_CASE("detect and eval") {
        cli::Sandbox box("cli_detect");
        box.write("g.txt", kTwoTriangles);
        const auto r = box.run({"detect", "-i", box.path("g.txt"), "--algo", "components", "-o", box.path("l.txt")});
        REQUIRE(r.code == 0);
        std::set<std::string> labels;
        std::istringstream in(box.read("l.txt"));
        std::string node, label;
        while (in >> node >> label) labels.insert(label);
        CHECK(labels.size() == 2);
        const auto e = box.run({"eval", "--truth", box.path("l.txt"), "--pred", box.path("l.txt")});
        CHECK(e.code == 0);
        CHECK(e.out == "1.000000\n");
        CHECK(box.run({"eval", "--truth", box.path("l.txt"), "--pred", box.path("l.txt"), "--metric", "ami"}).out ==
              "1.000000\n");
        CHECK(box.run({"detect", "-i", box.path("g.txt")}).code == 2);
        CHECK(box.run({"detect", "-i", box.path("g.txt"), "--seed", "4"}).code == 0);
    }

    TEST_CASE("eval f1 with an empty prediction") {
        cli::Sandbox box("cli_f1");
        box.write("empty.txt", "");
        const auto r = box.run({"eval", "--metric", "f1", "--truth", cli::data("snap_sample.cmty.txt"),
                                "--truth-format", "cmty", "--pred", box.path("empty.txt"), "--pred-format", "cmty"});
        CHECK(r.code == 3);
        CHECK(error_line(r)["error"] == "precondition");
        const auto same = box.run({"eval", "--metric", "f1", "--truth", cli::data("snap_sample.cmty.txt"),
                                   "--truth-format", "cmty", "--pred", cli::data("snap_sample.cmty.txt"),
                                   "--pred-format", "cmty"});
        CHECK(same.out == "1.000000\n");
    }

    TEST_CASE("pipeline") {
        cli::Sandbox box("cli_pipe");
        const auto r = box.run({"pipeline", "-i", cli::data("sbm60.txt"), "--truth", cli::data("sbm60_labels.txt"),
                                "--seed", "10", "--runs", "3"});
        REQUIRE(r.code == 0);
        std::istringstream in(r.out);
        std::string line;
        std::vector<json> rows;
        while (std::getline(in, line)) rows.push_back(json::parse(line));
        REQUIRE(rows.size() == 4);
        CHECK(rows[0]["seed"] == 10);
        CHECK(rows[2]["seed"] == 12);
        CHECK(rows[3]["mode"] == "valley");
        CHECK(rows[3]["runs"] == 3);
        CHECK(rows[3]["median_ari_after"].get<double>() >= rows[3]["median_ari_before"].get<double>());
        CHECK(box.run({"pipeline", "-i", cli::data("sbm60.txt"), "--seed", "1"}).code == 2);
    }

    TEST_CASE("config file with flag override") {
        cli::Sandbox box("cli_config");
        box.write("t.txt", kTriangle);
        box.write("run.conf", "# curvature settings\nmeasure = frc\nworkers=2\n");
        const auto r = box.run({"curvature", "-i", box.path("t.txt"), "--config", box.path("run.conf")});
        CHECK(r.code == 0);
        CHECK(r.out == "u,v,curvature\n0,1,3\n0,2,3\n1,2,3\n");
        const auto o = box.run(
            {"curvature", "-i", box.path("t.txt"), "--config", box.path("run.conf"), "--measure", "lrc"});
        CHECK(o.out == "u,v,curvature\n0,1,1.5\n0,2,1.5\n1,2,1.5\n");
        box.write("bad.conf", "measure\n");
        CHECK(box.run({"curvature", "-i", box.path("t.txt"), "--config", box.path("bad.conf")}).code == 2);
        CHECK(box.run({"curvature", "-i", box.path("t.txt"), "--config", box.path("none.conf")}).code == 2);
    }

    TEST_CASE("usage errors") {
        cli::Sandbox box("cli_usage");
        box.write("t.txt", kTriangle);
        const auto r = box.run({"curvature", "-i", box.path("t.txt"), "--bogus"});
        CHECK(r.code == 2);
        CHECK(error_line(r)["error"] == "usage");
        CHECK(box.run({}).code == 2);
        CHECK(box.run({"curvature", "-i", box.path("t.txt"), "--measure", "xyz"}).code == 2);
        CHECK(box.run({"curvature", "-i", box.path("t.txt"), "--workers", "0"}).code == 2);
        CHECK(box.run({"curvature", "-i", box.path("t.txt"), "--workers", "2000"}).code == 2);
    }
}
