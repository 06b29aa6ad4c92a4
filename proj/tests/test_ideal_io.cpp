#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bettilab/betti.hpp"
#include "bettilab/errors.hpp"
#include "bettilab/hypergraph.hpp"
#include "bettilab/ideal_io.hpp"

#include <json.hpp>

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

using namespace bettilab;

namespace {

Hypergraph H(int n, const std::vector<std::vector<int>>& edges, bool minimalize = false) {
    return bettilab::make_hypergraph(n, edges, minimalize);
}

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::runtime_error("expected an Error");
}

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    throw std::runtime_error("expected an Error");
}

std::vector<std::vector<int>> generator_lists(const IdealDocument& doc) {
    std::vector<std::vector<int>> out;
    for (VertexSet gen : doc.generators) out.push_back(set_to_vertices(gen));
    return out;
}

} // namespace

TEST_CASE("monomials with x-indexed variables") {
    IdealDocument doc = parse_ideal("x1*x2\nx2*x3\n");
    CHECK(doc.n == 3);
    CHECK(doc.format == "monomials");
    CHECK(doc.variable_names.empty());
    CHECK(generator_lists(doc) == std::vector<std::vector<int>>{{1, 2}, {2, 3}});
    CHECK(doc.variable(1) == "x1");
    CHECK(doc.variable(3) == "x3");

    IdealDocument gap = parse_ideal("x2*x7\n");
    CHECK(gap.n == 7);
    CHECK(generator_lists(gap) == std::vector<std::vector<int>>{{2, 7}});

    IdealDocument ones = parse_ideal("x1^1*x2^1\n");
    CHECK(generator_lists(ones) == std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("monomials with juxtaposed variables") {
    IdealDocument doc = parse_ideal("x1x2x4\nx3x5x6\n");
    CHECK(doc.n == 6);
    CHECK(generator_lists(doc) == std::vector<std::vector<int>>{{1, 2, 4}, {3, 5, 6}});

    IdealDocument two_digit = parse_ideal("x2x10x3\n");
    CHECK(two_digit.n == 10);
    CHECK(generator_lists(two_digit) == std::vector<std::vector<int>>{{2, 3, 10}});

    IdealDocument lone = parse_ideal("x12\n");
    CHECK(lone.n == 12);
    CHECK(generator_lists(lone) == std::vector<std::vector<int>>{{12}});
    CHECK(lone.variable_names.empty());

    IdealDocument mixed = parse_ideal("x1x2 * x4\n");
    CHECK(generator_lists(mixed) == std::vector<std::vector<int>>{{1, 2, 4}});
}

TEST_CASE("monomials with named variables") {
    IdealDocument doc = parse_ideal("a*b\nb*c\n");
    CHECK(doc.n == 3);
    CHECK(doc.variable_names == std::vector<std::string>{"a", "b", "c"});
    CHECK(generator_lists(doc) == std::vector<std::vector<int>>{{1, 2}, {2, 3}});
    CHECK(doc.variable(1) == "a");
    CHECK(doc.variable(3) == "c");

    IdealDocument order = parse_ideal("z*y\ny*w\n");
    CHECK(order.variable_names == std::vector<std::string>{"z", "y", "w"});
    CHECK(generator_lists(order) == std::vector<std::vector<int>>{{1, 2}, {2, 3}});

    IdealDocument underscore = parse_ideal("alpha_1*beta\n");
    CHECK(underscore.variable_names == std::vector<std::string>{"alpha_1", "beta"});

    IdealDocument xy = parse_ideal("xy*x1\n");
    CHECK(xy.variable_names == std::vector<std::string>{"xy", "x1"});
}

TEST_CASE("comments and blank lines are ignored") {
    IdealDocument doc = parse_ideal("# header\n\nx1*x2  # trailing\n   \n# footer\nx2*x3\n");
    CHECK(generator_lists(doc) == std::vector<std::vector<int>>{{1, 2}, {2, 3}});

    IdealDocument idx = parse_ideal("# header\n1 2\n\n2 3 # pair\n", "indices");
    CHECK(generator_lists(idx) == std::vector<std::vector<int>>{{1, 2}, {2, 3}});

    IdealDocument empty = parse_ideal("# nothing here\n\n");
    CHECK(empty.n == 0);
    CHECK(empty.generators.empty());
}

TEST_CASE("monomials reject non-squarefree input") {
    CHECK(code_of([] { parse_ideal("x1*x1*x2\n"); }) == Errc::NotSquarefree);
    CHECK(code_of([] { parse_ideal("x1^2\n"); }) == Errc::NotSquarefree);
    CHECK(code_of([] { parse_ideal("x1^3*x2\n"); }) == Errc::NotSquarefree);
    CHECK(code_of([] { parse_ideal("x1x2^2\n"); }) == Errc::NotSquarefree);
    CHECK(code_of([] { parse_ideal("a*a\n"); }) == Errc::NotSquarefree);
    CHECK(message_of([] { parse_ideal("x1\nx1^2\n"); }).find("line 2") != std::string::npos);
}

TEST_CASE("monomial parse errors carry line and column") {
    std::string msg = message_of([] { parse_ideal("x1+x2\n"); });
    CHECK(code_of([] { parse_ideal("x1+x2\n"); }) == Errc::ParseError);
    CHECK(msg.find("line 1") != std::string::npos);
    CHECK(msg.find("column 3") != std::string::npos);

    std::string second = message_of([] { parse_ideal("x1*x2\n3*x2\n"); });
    CHECK(second.find("line 2") != std::string::npos);
    CHECK(second.find("column 1") != std::string::npos);

    CHECK(code_of([] { parse_ideal("x1^\n"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_ideal("x1^0\n"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_ideal("x0*x2\n"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_ideal("x65\n"); }) == Errc::TooManyVertices);
}

TEST_CASE("indices format") {
    IdealDocument doc = parse_ideal("1 2\n2 3\n", "indices");
    CHECK(doc.n == 3);
    CHECK(doc.format == "indices");
    CHECK(generator_lists(doc) == std::vector<std::vector<int>>{{1, 2}, {2, 3}});

    IdealDocument commas = parse_ideal("1,2,5\n", "indices");
    CHECK(commas.n == 5);
    CHECK(generator_lists(commas) == std::vector<std::vector<int>>{{1, 2, 5}});

    CHECK(code_of([] { parse_ideal("0 1\n", "indices"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_ideal("1 a\n", "indices"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_ideal("65\n", "indices"); }) == Errc::TooManyVertices);
    CHECK(code_of([] { parse_ideal("1 1\n", "indices"); }) == Errc::NotSquarefree);
    std::string msg = message_of([] { parse_ideal("1 2\n2 x\n", "indices"); });
    CHECK(msg.find("line 2") != std::string::npos);
    CHECK(msg.find("column 3") != std::string::npos);
}

TEST_CASE("json format") {
    IdealDocument doc = parse_ideal(R"({"n": 4, "edges": [[1, 2], [3]]})", "json");
    CHECK(doc.n == 4);
    CHECK(doc.format == "json");
    CHECK(generator_lists(doc) == std::vector<std::vector<int>>{{1, 2}, {3}});

    IdealDocument inferred = parse_ideal(R"({"edges": [[1, 2], [2, 5]]})", "json");
    CHECK(inferred.n == 5);

    IdealDocument named = parse_ideal(
        R"({"n": 2, "edges": [[1, 2]], "variables": ["u", "v"]})", "json");
    CHECK(named.variable_names == std::vector<std::string>{"u", "v"});
    CHECK(named.variable(2) == "v");

    IdealDocument commented = parse_ideal("# produced by hand\n{\"edges\": [[1, 2]]}\n", "json");
    CHECK(commented.n == 2);

    CHECK(code_of([] { parse_ideal(R"({"n": 2, "edges": [[1, 3]]})", "json"); }) ==
          Errc::ParseError);
    CHECK(code_of([] { parse_ideal(R"({"n": 65, "edges": [[1]]})", "json"); }) ==
          Errc::ParseError);
    CHECK(code_of([] {
              parse_ideal(R"({"n": 3, "edges": [[1, 2]], "variables": ["u"]})", "json");
          }) == Errc::ParseError);
    CHECK(code_of([] { parse_ideal(R"({"edges": [[1, 1]]})", "json"); }) ==
          Errc::NotSquarefree);
    CHECK(code_of([] { parse_ideal(R"({"edges": [[0]]})", "json"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_ideal(R"({"edges": "nope"})", "json"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_ideal(R"([1, 2])", "json"); }) == Errc::ParseError);
    CHECK(code_of([] { parse_ideal("{\"edges\": [[1, 2]", "json"); }) == Errc::ParseError);
}

TEST_CASE("parsed documents form valid hypergraphs") {
    CHECK(code_of([] { parse_ideal("x1\nx1*x2\n"); }) == Errc::NotAntichain);
    CHECK(code_of([] { parse_ideal(R"({"edges": [[1, 2], [2]]})", "json"); }) ==
          Errc::NotAntichain);
    CHECK(code_of([] { parse_ideal(R"({"edges": [[]]})", "json"); }) == Errc::EmptyEdge);

    IdealDocument doc = parse_ideal("x1*x2\nx2*x3\n");
    Hypergraph g = doc.hypergraph();
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("format auto-detection") {
    CHECK(parse_ideal("x1*x2\n").format == "monomials");
    CHECK(parse_ideal("a*b\n").format == "monomials");
    CHECK(parse_ideal("1 2\n").format == "indices");
    CHECK(parse_ideal("# comment first\n{\"edges\": [[1, 2]]}").format == "json");
    CHECK(parse_ideal("").format == "monomials");
    CHECK(code_of([] { parse_ideal("x1*x2\n", "csv"); }) == Errc::BadParams);
}

TEST_CASE("formatting round-trips every format") {
    std::vector<std::string> inputs = {
        "x1*x2\nx2*x3\nx3*x4\n",
        "a*b\nb*c\n",
        "x1x2x4\nx3x5x6\n",
    };
    for (const std::string& text : inputs) {
        IdealDocument doc = parse_ideal(text);
        IdealDocument again = parse_ideal(format_ideal(doc), doc.format);
        CHECK(again == doc);
    }

    IdealDocument idx = parse_ideal("1 2\n3 4 5\n", "indices");
    CHECK(parse_ideal(format_ideal(idx), "indices") == idx);
    CHECK(parse_ideal(format_ideal(idx)) == idx);

    IdealDocument js = parse_ideal(
        R"({"n": 6, "edges": [[1, 2], [4, 5]], "variables": ["a", "b", "c", "d", "e", "f"]})",
        "json");
    CHECK(parse_ideal(format_ideal(js), "json") == js);
    CHECK(parse_ideal(format_ideal(js)) == js);

    CHECK(format_ideal(parse_ideal("x1*x2\n")) == "x1*x2\n");
    CHECK(format_ideal(parse_ideal("z*y\n")) == "z*y\n");
    CHECK(format_ideal(parse_ideal("1 2 5\n", "indices")) == "1 2 5\n");

    IdealDocument bad;
    bad.format = "csv";
    CHECK(code_of([&] { format_ideal(bad); }) == Errc::BadParams);
}

TEST_CASE("document_from picks a format the hypergraph survives") {
    IdealDocument covered = document_from(H(4, {{1, 2}, {2, 3}, {3, 4}}), "test");
    CHECK(covered.format == "monomials");
    CHECK(covered.n == 4);
    CHECK(covered.provenance == "test");
    CHECK(parse_ideal(format_ideal(covered), covered.format) == covered);

    IdealDocument isolated = document_from(H(3, {{1, 2}}));
    CHECK(isolated.format == "json");
    CHECK(isolated.n == 3);
    CHECK(parse_ideal(format_ideal(isolated), "json") == isolated);

    Hypergraph g = H(5, {{1, 3}, {1, 4}, {2, 5}});
    IdealDocument doc = document_from(g);
    Hypergraph back = doc.hypergraph();
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("betti table json output") {
    Hypergraph star = H(4, {{1, 2}, {1, 3}, {1, 4}});
    BettiTable table = betti_table(star, FieldSpec::rationals());
    nlohmann::json j = nlohmann::json::parse(format_betti_table(table, "json"));
    CHECK(j["schema"] == kTableSchemaVersion);
    CHECK(j["schema"] == "bettilab-table-1");
    CHECK(j["kind"] == "minimal");
    CHECK(j["field"] == "q");
    REQUIRE(j["entries"].is_array());
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["entries"][0]["i"] == 0);
    CHECK(j["entries"][0]["a"] == 2);
    CHECK(j["entries"][0]["value"] == 3);
    CHECK(j["entries"][1]["i"] == 1);
    CHECK(j["entries"][1]["a"] == 3);
    CHECK(j["entries"][1]["value"] == 3);
    CHECK(j["entries"][2]["i"] == 2);
    CHECK(j["entries"][2]["a"] == 4);
    CHECK(j["entries"][2]["value"] == 1);
    std::pair<int, int> prev{-1, -1};
    for (const auto& entry : j["entries"]) {
        std::pair<int, int> cur{entry["i"].get<int>(), entry["a"].get<int>()};
        CHECK(prev < cur);
        prev = cur;
    }

    nlohmann::json gf2 = nlohmann::json::parse(
        format_betti_table(betti_table(star, FieldSpec::gf(2)), "json"));
    CHECK(gf2["field"] == "gf:2");

    nlohmann::json taylor = nlohmann::json::parse(format_betti_table(taylor_table(star), "json"));
    CHECK(taylor["kind"] == "taylor");
    CHECK(taylor["field"].is_null());
}

TEST_CASE("betti table diagram output") {
    Hypergraph star = H(4, {{1, 2}, {1, 3}, {1, 4}});
    CHECK(format_betti_table(betti_table(star, FieldSpec::rationals()), "diagram") ==
          "    0  1  2\n"
          "2:  3  3  1\n");

    Hypergraph disjoint = H(4, {{1, 2}, {3, 4}});
    CHECK(format_betti_table(betti_table(disjoint, FieldSpec::rationals()), "diagram") ==
          "    0  1\n"
          "2:  2  .\n"
          "3:  .  1\n");

    BettiTable empty;
    std::string rendered = format_betti_table(empty, "diagram");
    CHECK(!rendered.empty());
    CHECK(rendered.find('.') != std::string::npos);

    BettiTable wide;
    wide.entries[{0, 2}] = 12;
    wide.entries[{1, 3}] = 5;
    std::string lines = format_betti_table(wide, "diagram");
    CHECK(lines.find("12") != std::string::npos);
    CHECK(lines.find(" 5") != std::string::npos);

    CHECK(code_of([&] { format_betti_table(empty, "fancy"); }) == Errc::BadParams);
}
