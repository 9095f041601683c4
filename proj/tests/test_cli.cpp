#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "hg3/cli.hpp"
#include "hg3/hypergraph.hpp"

using namespace hg3;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run(std::vector<std::string> args) {
    std::vector<const char*> argv = {"hg3"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream captured;
    std::streambuf* old = std::cout.rdbuf(captured.rdbuf());
    CliResult r;
    r.exit_code = run_cli(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old);
    r.out = captured.str();
    return r;
}

std::filesystem::path tmp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hg3_cli_" + name);
}

std::filesystem::path write_sequence(const std::string& name,
                                     const std::string& content) {
    auto p = tmp_file(name);
    std::ofstream(p) << content;
    return p;
}

}  // namespace

TEST_CASE("threshold subcommand") {
    CliResult r = run({"threshold", "--c2", "0.721934"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("c1_star=0.278066") != std::string::npos);
    CHECK(r.out.find("alpha_star=") != std::string::npos);
    CHECK(r.out.find("branch=") != std::string::npos);
}

TEST_CASE("plot-data emits a CSV header and 91 rows") {
    CliResult r = run({"plot-data", "--c2-min", "0.05", "--c2-max", "0.95",
                       "--step", "0.01"});
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "c2,c1_star,alpha_star");
    int rows = 0;
    while (std::getline(is, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 91);
}

TEST_CASE("critical subcommand prints the sequence") {
    CliResult r = run({"critical", "--n", "6", "--k", "3", "--dmax", "4"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n2\n2\n4\n4\n4\n");
}

TEST_CASE("decide exit codes") {
    auto bad = write_sequence("mod3.txt", "2 2 2 2\n");
    CliResult r = run({"decide", "--in", bad.string()});
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("fails_mod3") != std::string::npos);

    auto good = write_sequence("reg.txt", "4 4 4 4 4 4\n");
    r = run({"decide", "--in", good.string()});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("graphic") != std::string::npos);

    auto low = write_sequence("low.txt", "0 2 2 3 4 4\n");
    r = run({"decide", "--in", low.string()});
    CHECK(r.exit_code == 4);
    CHECK(r.out.find("below_threshold") != std::string::npos);
}

TEST_CASE("decide reports class membership when both bounds are given") {
    auto good = write_sequence("reg2.txt", "4 4 4 4 4 4\n");
    CliResult r = run({"decide", "--in", good.string(), "--c1", "0.3", "--c2",
                       "0.5"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("in_class=true") != std::string::npos);
}

TEST_CASE("realize writes a hypergraph that re-parses and recounts") {
    auto in = write_sequence("all6.txt", "6 6 6 6 6\n");
    auto out = tmp_file("all6.hg");
    CliResult r = run({"realize", "--in", in.string(), "--out", out.string()});
    REQUIRE(r.exit_code == 0);
    std::ifstream is(out);
    REQUIRE(is.good());
    Hypergraph3 h = Hypergraph3::load(is);
    CHECK(h.num_vertices() == 5);
    CHECK(h.num_edges() == 10);
    for (int v = 0; v < 5; ++v) CHECK(h.degree(v) == 6);
}

TEST_CASE("oracle subcommand exit codes") {
    auto g = write_sequence("k4.txt", "3 3 3 3\n");
    CHECK(run({"oracle", "--in", g.string()}).exit_code == 0);
    auto ng = write_sequence("ng.txt", "10 10 10 0 0 0\n");
    CliResult r = run({"oracle", "--in", ng.string()});
    CHECK(r.exit_code == 1);
    CHECK(r.out == "non_graphic\n");
}

TEST_CASE("oracle writes its witness") {
    auto g = write_sequence("k4b.txt", "3 3 3 3\n");
    auto out = tmp_file("k4.hg");
    CHECK(run({"oracle", "--in", g.string(), "--out", out.string()})
              .exit_code == 0);
    std::ifstream is(out);
    REQUIRE(is.good());
    Hypergraph3 h = Hypergraph3::load(is);
    CHECK(h.num_edges() == 4);
}

TEST_CASE("certify subcommand") {
    CliResult r = run({"certify", "--t", "3", "--p", "0.5", "--n", "6"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("sound=true") != std::string::npos);
    CHECK(r.out.find("max_delta=12") != std::string::npos);
}

TEST_CASE("reduce subcommand reports the gadget parameters") {
    auto in = write_sequence("d0.txt", "1 1 1 1 1 1\n");
    auto out = tmp_file("db.txt");
    CliResult r = run({"reduce", "--in", in.string(), "--c2", "0.5",
                       "--epsilon", "0.9", "--out", out.string()});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n=16") != std::string::npos);
    CHECK(r.out.find("k_star=8") != std::string::npos);
    CHECK(r.out.find("case=1") != std::string::npos);
    std::ifstream is(out);
    REQUIRE(is.good());
    DegreeSequence db = DegreeSequence::load(is);
    CHECK(db.size() == 16);
    CHECK(db.sum() % 3 == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"threshold"}).exit_code == 2);           // missing --c2
    CHECK(run({"no-such-command"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);                      // subcommand required
    CHECK(run({"decide", "--in", "/nonexistent/x"}).exit_code == 2);
}

TEST_CASE("reruns are byte-identical") {
    CliResult a = run({"threshold", "--c2", "0.6"});
    CliResult b = run({"threshold", "--c2", "0.6"});
    CHECK(a.out == b.out);
    CliResult c = run({"plot-data", "--c2-min", "0.2", "--c2-max", "0.4",
                       "--step", "0.05"});
    CliResult d = run({"plot-data", "--c2-min", "0.2", "--c2-max", "0.4",
                       "--step", "0.05"});
    CHECK(c.out == d.out);
}
