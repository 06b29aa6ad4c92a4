#include "bettilab/cli.hpp"

#include "bettilab/atlas.hpp"
#include "bettilab/betti.hpp"
#include "bettilab/bounds.hpp"
#include "bettilab/errors.hpp"
#include "bettilab/hypergraph.hpp"
#include "bettilab/ideal_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace bettilab {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) fail(Errc::ParseError, "cannot open '" + path + "'");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

Hypergraph load_hypergraph(const std::string& path, std::istream& in) {
    return parse_ideal(read_input(path, in), "auto", path).hypergraph();
}

std::string set_text(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : set_to_vertices(s)) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

std::string edges_text(const Hypergraph& g) {
    std::string out;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i) out += ' ';
        out += set_text(g.edge(i));
    }
    return out.empty() ? "{}" : out;
}

void print_report(const Report& report, std::ostream& out) {
    for (const Comparison& c : report.comparisons)
        out << c.label << ": computed " << c.computed << ", bound " << c.bound << " -> "
            << verdict_name(c.verdict) << "\n";
    for (const std::string& d : report.details) out << "note: " << d << "\n";
    for (const std::string& w : report.witnesses) out << "witness: " << w << "\n";
    out << "result: " << (report.passed() ? "holds" : "violated") << "\n";
}

int exit_code(const Error& e) {
    switch (e.code()) {
    case Errc::BudgetExceeded:
    case Errc::TooLarge:
    case Errc::TooManyEdges:
    case Errc::TooManyVertices:
    case Errc::TooManyFaces:
        return 3;
    default:
        return 1;
    }
}

VertexSet parse_vertex_list(const std::string& text) {
    VertexSet out = 0;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            fail(Errc::BadParams, "bad vertex '" + item + "'");
        }
        if (used != item.size() || v < 1 || v > kMaxVertices)
            fail(Errc::BadParams, "bad vertex '" + item + "'");
        out |= singleton(v);
    }
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"graded Betti numbers of edge ideals via Hochster's formula"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: all cores or BETTILAB_THREADS)");

    std::string file, field_text = "q";
    bool taylor = false, json = false;
    CLI::App* betti = app.add_subcommand("betti", "print the graded Betti table of an ideal");
    betti->add_option("file", file, "ideal file, or - for stdin")->required();
    betti->add_option("--field", field_text, "coefficient field: q or gf:P");
    betti->add_flag("--taylor", taylor, "print the Taylor table instead of the minimal one");
    betti->add_flag("--json", json, "emit JSON instead of the diagram");

    std::string theorem;
    CLI::App* check = app.add_subcommand("check", "verify a bound on a concrete ideal");
    check->add_option("theorem", theorem, "tree_lb, forest_lb, beta35, b36, or diameter_eq")
        ->required();
    check->add_option("file", file, "ideal file, or - for stdin")->required();
    check->add_option("--field", field_text, "coefficient field: q or gf:P");

    int colors = 0;
    CLI::App* color = app.add_subcommand("color", "find a proper vertex coloring");
    color->add_option("file", file, "ideal file, or - for stdin")->required();
    color->add_option("-d,--colors", colors, "number of colors (default: the degree)");

    std::string family, out_path;
    std::vector<int> family_params;
    CLI::App* gen = app.add_subcommand("gen", "write a named example family");
    gen->add_option("family", family,
                    "extremal_hypertree, path, beta35_extremal, taylor_equality, "
                    "degree3_unique, or b36_extremal")
        ->required();
    gen->add_option("params", family_params, "integer parameters of the family");
    gen->add_option("-o,--output", out_path, "output file (default: stdout)");

    int blue = 0;
    std::string bprime_text;
    CLI::App* witness = app.add_subcommand("witness", "run the lower-bound witness construction");
    witness->add_option("file", file, "ideal file, or - for stdin")->required();
    witness->add_option("--blue", blue, "index of the blue color class")->required();
    witness->add_option("--bprime", bprime_text, "comma-separated blue vertices to keep")
        ->required();
    witness->add_option("--field", field_text, "coefficient field: q or gf:P");

    std::string search_kind;
    int search_t = 0;
    std::int64_t budget_nodes = 20'000'000;
    CLI::App* search = app.add_subcommand("search", "exhaustive isomorphism-class searches");
    search->add_option("kind", search_kind, "section4, triple-union, or conjecture")->required();
    search->add_option("--t", search_t, "edge count (triple-union: default 6; conjecture: max, default 4)");
    search->add_option("--budget", budget_nodes, "node budget for the search");
    search->add_option("--field", field_text, "coefficient field: q or gf:P");

    int tn = 0, tk = 0, tl = 0;
    CLI::App* turan = app.add_subcommand("turan", "covering Turan number T(n,k,l)");
    turan->add_option("--n", tn, "ground set size")->required();
    turan->add_option("--k", tk, "subsets to be met")->required();
    turan->add_option("--l", tl, "size of the covering sets")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (threads > 0) set_thread_count(threads);

        if (app.got_subcommand(betti)) {
            Hypergraph g = load_hypergraph(file, in);
            BettiTable table =
                taylor ? taylor_table(g) : betti_table(g, parse_field(field_text));
            if (json) {
                out << format_betti_table(table, "json");
            } else {
                out << "kind: " << (taylor ? "taylor" : "minimal");
                if (table.field) out << ", field: " << field_name(*table.field);
                out << "\n" << format_betti_table(table, "diagram");
                out << "total:";
                for (std::int64_t v : total_betti(table)) out << ' ' << v;
                out << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(check)) {
            Hypergraph g = load_hypergraph(file, in);
            Report report = verify_bound(theorem, g, parse_field(field_text));
            print_report(report, out);
            return report.passed() ? 0 : 2;
        }

        if (app.got_subcommand(color)) {
            Hypergraph g = load_hypergraph(file, in);
            int d = colors > 0 ? colors : std::max(g.degree(), 1);
            auto kappa = proper_coloring(g, d);
            if (!kappa) {
                out << "not colorable with " << d << " colors\n";
                return 2;
            }
            for (int v = 1; v <= g.vertex_count(); ++v)
                out << "vertex " << v << ": color " << kappa->color_of(v) << "\n";
            return 0;
        }

        if (app.got_subcommand(gen)) {
            Hypergraph g = generate({family, family_params});
            std::string provenance = family;
            for (int p : family_params) provenance += " " + std::to_string(p);
            std::string text = format_ideal(document_from(g, provenance));
            if (out_path.empty()) {
                out << text;
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) fail(Errc::ParseError, "cannot open '" + out_path + "'");
                f << text;
            }
            return 0;
        }

        if (app.got_subcommand(witness)) {
            Hypergraph g = load_hypergraph(file, in);
            if (g.edge_count() == 0)
                fail(Errc::NotApplicable, "the empty ideal has no witness");
            auto kappa = proper_coloring(g, g.degree());
            if (!kappa) fail(Errc::NotColorable, "no proper degree-coloring exists");
            WitnessSubset w = witness_subset(g, *kappa, blue, parse_vertex_list(bprime_text),
                                             parse_field(field_text));
            out << "U' = " << set_text(w.u_prime) << "\n";
            out << "B' = " << set_text(w.b_prime) << "\n";
            out << "deleted =";
            for (int v : w.deleted) out << ' ' << v;
            if (w.deleted.empty()) out << " (none)";
            out << "\n";
            out << "homology degree = " << w.homology_degree << "\n";
            out << "reduced homology is nonzero: confirmed\n";
            return 0;
        }

        if (app.got_subcommand(search)) {
            SearchBudget budget;
            budget.max_nodes = budget_nodes;
            budget.progress = &err;
            FieldSpec field = parse_field(field_text);
            if (search_kind == "section4") {
                Report report = reproduce_section4(field, budget);
                std::int64_t seven = report.comparisons.at(0).computed;
                std::int64_t survivors = report.comparisons.at(1).computed;
                bool match = report.comparisons.at(2).computed == 1;
                out << "t=6: " << survivors << (survivors == 1 ? " class" : " classes") << " ("
                    << (match ? "matches degree3_unique" : "no match to degree3_unique")
                    << "); t=7: " << seven << (seven == 1 ? " class" : " classes") << "\n";
                print_report(report, out);
                return report.passed() ? 0 : 2;
            }
            if (search_kind == "triple-union") {
                int t = search_t > 0 ? search_t : 6;
                std::vector<Hypergraph> classes = triple_union_survey(t, budget);
                out << "t=" << t << ": " << classes.size()
                    << (classes.size() == 1 ? " class" : " classes") << "\n";
                for (const Hypergraph& g : classes) out << edges_text(g) << "\n";
                return 0;
            }
            if (search_kind == "conjecture") {
                int t = search_t > 0 ? search_t : 4;
                Report report = conjecture_scan(t, field, budget);
                print_report(report, out);
                return report.passed() ? 0 : 2;
            }
            fail(Errc::BadParams, "unknown search '" + search_kind + "'");
        }

        if (app.got_subcommand(turan)) {
            out << turan_number(tn, tk, tl) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace bettilab
