#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bettilab/atlas.hpp"
#include "bettilab/betti.hpp"
#include "bettilab/cli.hpp"
#include "bettilab/homology.hpp"
#include "bettilab/ideal_io.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using namespace bettilab;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    CliResult r;
    r.code = run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_CASE("betti subcommand prints the diagram and totals") {
    CliResult r = cli({"betti", "-"}, "x1*x2\nx2*x3\nx3*x4\n");
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out.find("kind: minimal, field: q") != std::string::npos);
    CHECK(r.out.find("2:  3  2\n") != std::string::npos);
    CHECK(r.out.find("total: 3 2\n") != std::string::npos);
}

TEST_CASE("betti subcommand emits json") {
    CliResult r = cli({"betti", "-", "--json"}, "x1*x2\nx2*x3\n");
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == kTableSchemaVersion);
    CHECK(j["kind"] == "minimal");
    CHECK(j["field"] == "q");
    CHECK(j["entries"].size() == 2);

    CliResult taylor = cli({"betti", "-", "--taylor", "--json"}, "x1*x2\nx3*x4\n");
    REQUIRE(taylor.code == 0);
    nlohmann::json tj = nlohmann::json::parse(taylor.out);
    CHECK(tj["kind"] == "taylor");
    CHECK(tj["field"].is_null());
}

TEST_CASE("betti subcommand accepts a field choice") {
    CliResult r = cli({"betti", "-", "--field", "gf:2"}, "x1*x2\nx2*x3\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("field: gf:2") != std::string::npos);

    CliResult bad = cli({"betti", "-", "--field", "gf(2)"}, "x1*x2\n");
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("betti subcommand reports caps with exit 3") {
    CliResult r = cli({"betti", "-"}, "x1*x23\n");
    CHECK(r.code == 3);
    CHECK(r.err.find("error:") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("check subcommand verifies bounds") {
    std::string path6 = "x1*x2\nx2*x3\nx3*x4\nx4*x5\nx5*x6\n";
    CliResult r = cli({"check", "tree_lb", "-"}, path6);
    CHECK(r.code == 0);
    CHECK(r.out.find("j=2") != std::string::npos);
    CHECK(r.out.find("result: holds\n") != std::string::npos);

    CliResult diam = cli({"check", "diameter_eq", "-"}, path6);
    CHECK(diam.code == 0);
    CHECK(diam.out.find("result: holds\n") != std::string::npos);

    CliResult triangle = cli({"check", "tree_lb", "-"}, "x1*x2\nx2*x3\nx1*x3\n");
    CHECK(triangle.code == 1);
    CHECK(triangle.err.find("error:") != std::string::npos);

    CliResult unknown = cli({"check", "nonsense", "-"}, path6);
    CHECK(unknown.code == 1);
}

TEST_CASE("color subcommand prints a coloring or exits 2") {
    CliResult r = cli({"color", "-"}, "x1*x2\nx2*x3\nx3*x4\n");
    CHECK(r.code == 0);
    CHECK(r.out.find("vertex 1: color 1\n") != std::string::npos);
    CHECK(r.out.find("vertex 2: color 2\n") != std::string::npos);
    CHECK(r.out.find("vertex 4: color") != std::string::npos);

    CliResult triangle = cli({"color", "-"}, "x1*x2\nx2*x3\nx1*x3\n");
    CHECK(triangle.code == 2);
    CHECK(triangle.out.find("not colorable with 2 colors") != std::string::npos);

    CliResult three = cli({"color", "-", "-d", "3"}, "x1*x2\nx2*x3\nx1*x3\n");
    CHECK(three.code == 0);
}

TEST_CASE("gen subcommand writes a parseable family") {
    CliResult r = cli({"gen", "path", "6"});
    REQUIRE(r.code == 0);
    IdealDocument doc = parse_ideal(r.out);
    Hypergraph g = doc.hypergraph();
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 5);
    CHECK(doc.provenance.empty());

    CliResult unknown = cli({"gen", "mystery", "3"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("error:") != std::string::npos);
}

TEST_CASE("gen output feeds betti through a pipe") {
    CliResult gen = cli({"gen", "path", "6"});
    REQUIRE(gen.code == 0);
    CliResult betti = cli({"betti", "-"}, gen.out);
    REQUIRE(betti.code == 0);

    std::vector<std::int64_t> totals = total_betti(betti_table(gen_path(6), FieldSpec::rationals()));
    std::string expected = "total:";
    for (std::int64_t v : totals) expected += " " + std::to_string(v);
    expected += "\n";
    CHECK(betti.out.find(expected) != std::string::npos);
    CHECK(totals.at(1) == 7);
}

TEST_CASE("witness subcommand confirms the construction") {
    CliResult gen = cli({"gen", "extremal_hypertree", "2", "2", "2"});
    REQUIRE(gen.code == 0);
    CliResult w = cli({"witness", "-", "--blue", "1", "--bprime", "1,3"}, gen.out);
    REQUIRE(w.code == 0);
    CHECK(w.out.find("U' = ") != std::string::npos);
    CHECK(w.out.find("B' = {1,3}") != std::string::npos);
    CHECK(w.out.find("homology degree = ") != std::string::npos);
    CHECK(w.out.find("reduced homology is nonzero: confirmed\n") != std::string::npos);

    CliResult bad = cli({"witness", "-", "--blue", "9", "--bprime", "1"}, gen.out);
    CHECK(bad.code == 1);

    CliResult garbage = cli({"witness", "-", "--blue", "1", "--bprime", "zebra"}, gen.out);
    CHECK(garbage.code == 1);
}

TEST_CASE("search triple-union lists the classes") {
    CliResult r = cli({"search", "triple-union", "--t", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("t=3: 3 classes\n") != std::string::npos);
    int lines = 0;
    for (char c : r.out)
        if (c == '\n') ++lines;
    CHECK(lines == 4);
}

TEST_CASE("search section4 reproduces the survey") {
    CliResult r = cli({"search", "section4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("t=6: 1 class (matches degree3_unique); t=7: 0 classes\n") !=
          std::string::npos);
    CHECK(r.out.find("result: holds\n") != std::string::npos);
}

TEST_CASE("search conjecture scans small edge counts") {
    CliResult r = cli({"search", "conjecture", "--t", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("result: holds\n") != std::string::npos);

    CliResult unknown = cli({"search", "sideways"});
    CHECK(unknown.code == 1);
}

TEST_CASE("search respects the node budget") {
    CliResult r = cli({"search", "section4", "--budget", "10"});
    CHECK(r.code == 3);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("turan subcommand prints the covering number") {
    CliResult r = cli({"turan", "--n", "7", "--k", "7", "--l", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    CliResult small = cli({"turan", "--n", "4", "--k", "4", "--l", "2"});
    CHECK(small.out == "1\n");

    CliResult big = cli({"turan", "--n", "13", "--k", "4", "--l", "2"});
    CHECK(big.code == 3);
}

TEST_CASE("usage and help") {
    CliResult none = cli({});
    CHECK(none.code == 1);
    CHECK(none.err.find("error:") != std::string::npos);

    CliResult help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("betti") != std::string::npos);
    CHECK(help.out.find("witness") != std::string::npos);

    CliResult badfile = cli({"betti", "/no/such/file"});
    CHECK(badfile.code == 1);
    CHECK(badfile.err.find("cannot open") != std::string::npos);
}

TEST_CASE("results go to stdout and diagnostics to stderr") {
    CliResult good = cli({"betti", "-"}, "x1*x2\n");
    CHECK(good.err.empty());
    CHECK(!good.out.empty());

    CliResult bad = cli({"betti", "-"}, "x1*+\n");
    CHECK(bad.code == 1);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("error:") != std::string::npos);
}
