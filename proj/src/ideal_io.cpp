#include "bettilab/ideal_io.hpp"

#include "bettilab/errors.hpp"
#include "bettilab/homology.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace bettilab {

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
    fail(Errc::ParseError,
         "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

struct Line {
    std::string text; // comment stripped
    int number = 0;
};

std::vector<Line> meaningful_lines(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view raw =
            text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                             : end - start);
        ++number;
        std::string cleaned(raw.substr(0, raw.find('#')));
        if (cleaned.find_first_not_of(" \t\r") != std::string::npos)
            lines.push_back({std::move(cleaned), number});
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return lines;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
    });
}

struct RawVariable {
    std::string name;
    long long exponent = 1;
    int line = 0;
    int col = 0;
};

/// Splits "x1x2x10" into x1, x2, x10; returns false when the token is not of
/// that shape (then it is an ordinary identifier).
bool split_juxtaposed(const std::string& token, std::vector<std::string>& parts) {
    if (token.size() < 4 || token[0] != 'x') return false;
    parts.clear();
    std::size_t i = 0;
    while (i < token.size()) {
        if (token[i] != 'x') return false;
        std::size_t j = i + 1;
        while (j < token.size() && std::isdigit(static_cast<unsigned char>(token[j]))) ++j;
        if (j == i + 1) return false;
        parts.push_back(token.substr(i, j - i));
        i = j;
    }
    return parts.size() >= 2;
}

std::vector<std::vector<RawVariable>> tokenize_monomials(const std::vector<Line>& lines) {
    std::vector<std::vector<RawVariable>> generators;
    for (const Line& line : lines) {
        std::vector<RawVariable> vars;
        std::size_t i = 0;
        const std::string& s = line.text;
        while (i < s.size()) {
            char c = s[i];
            if (c == ' ' || c == '\t' || c == '\r' || c == '*') {
                ++i;
                continue;
            }
            if (!is_ident_start(c))
                parse_fail(line.number, static_cast<int>(i) + 1,
                           std::string("unexpected character '") + c + "'");
            std::size_t start = i;
            while (i < s.size() && is_ident_char(s[i])) ++i;
            std::string token = s.substr(start, i - start);
            long long exponent = 1;
            if (i < s.size() && s[i] == '^') {
                std::size_t estart = ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == estart)
                    parse_fail(line.number, static_cast<int>(estart) + 1,
                               "'^' must be followed by an exponent");
                exponent = std::stoll(s.substr(estart, i - estart));
                if (exponent < 1)
                    parse_fail(line.number, static_cast<int>(estart) + 1,
                               "exponents must be positive");
            }
            std::vector<std::string> parts;
            if (split_juxtaposed(token, parts)) {
                if (exponent != 1)
                    fail(Errc::NotSquarefree, "line " + std::to_string(line.number) +
                                                  ": exponent on a juxtaposed monomial");
                for (std::string& p : parts)
                    vars.push_back({std::move(p), 1, line.number, static_cast<int>(start) + 1});
            } else {
                vars.push_back({std::move(token), exponent, line.number,
                                static_cast<int>(start) + 1});
            }
        }
        if (!vars.empty()) generators.push_back(std::move(vars));
    }
    return generators;
}

void add_vertex(VertexSet& mask, int v, int line) {
    if (contains(mask, v))
        fail(Errc::NotSquarefree,
             "line " + std::to_string(line) + ": repeated variable in a generator");
    mask |= singleton(v);
}

IdealDocument parse_monomials(const std::vector<Line>& lines) {
    auto generators = tokenize_monomials(lines);
    bool all_x_indexed = true;
    for (const auto& gen : generators)
        for (const RawVariable& var : gen)
            if (var.name[0] != 'x' || !is_digits(std::string_view(var.name).substr(1)))
                all_x_indexed = false;

    IdealDocument doc;
    if (all_x_indexed) {
        for (const auto& gen : generators) {
            VertexSet mask = 0;
            for (const RawVariable& var : gen) {
                long long v = std::stoll(var.name.substr(1));
                if (v < 1) parse_fail(var.line, var.col, "variable indices start at 1");
                if (v > kMaxVertices)
                    fail(Errc::TooManyVertices, "line " + std::to_string(var.line) +
                                                    ": at most 64 variables are supported");
                if (var.exponent > 1)
                    fail(Errc::NotSquarefree,
                         "line " + std::to_string(var.line) + ": exponent above 1");
                add_vertex(mask, static_cast<int>(v), var.line);
                doc.n = std::max(doc.n, static_cast<int>(v));
            }
            doc.generators.push_back(mask);
        }
    } else {
        std::map<std::string, int> index;
        for (const auto& gen : generators) {
            VertexSet mask = 0;
            for (const RawVariable& var : gen) {
                auto [it, fresh] = index.try_emplace(var.name, 0);
                if (fresh) {
                    it->second = static_cast<int>(index.size());
                    if (it->second > kMaxVertices)
                        fail(Errc::TooManyVertices,
                             "line " + std::to_string(var.line) +
                                 ": at most 64 variables are supported");
                    doc.variable_names.push_back(var.name);
                }
                if (var.exponent > 1)
                    fail(Errc::NotSquarefree,
                         "line " + std::to_string(var.line) + ": exponent above 1");
                add_vertex(mask, it->second, var.line);
            }
            doc.generators.push_back(mask);
        }
        doc.n = static_cast<int>(index.size());
    }
    doc.format = "monomials";
    return doc;
}

IdealDocument parse_indices(const std::vector<Line>& lines) {
    IdealDocument doc;
    for (const Line& line : lines) {
        const std::string& s = line.text;
        VertexSet mask = 0;
        std::size_t i = 0;
        bool any = false;
        while (i < s.size()) {
            char c = s[i];
            if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
                ++i;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(c)))
                parse_fail(line.number, static_cast<int>(i) + 1,
                           std::string("expected a vertex index, found '") + c + "'");
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            long long v = std::stoll(s.substr(start, i - start));
            if (v < 1) parse_fail(line.number, static_cast<int>(start) + 1,
                                  "vertex indices start at 1");
            if (v > kMaxVertices)
                fail(Errc::TooManyVertices, "line " + std::to_string(line.number) +
                                                ": at most 64 vertices are supported");
            add_vertex(mask, static_cast<int>(v), line.number);
            doc.n = std::max(doc.n, static_cast<int>(v));
            any = true;
        }
        if (any) doc.generators.push_back(mask);
    }
    doc.format = "indices";
    return doc;
}

IdealDocument parse_json(std::string_view text) {
    std::string stripped;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view raw =
            text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                             : end - start);
        std::size_t head = raw.find_first_not_of(" \t\r");
        if (head == std::string_view::npos || raw[head] != '#') {
            stripped += raw;
            stripped += '\n';
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(stripped);
    } catch (const nlohmann::json::parse_error& e) {
        fail(Errc::ParseError, std::string("invalid json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
        fail(Errc::ParseError, "json input must be an object with an \"edges\" array");

    IdealDocument doc;
    doc.format = "json";
    int max_vertex = 0;
    for (const auto& edge : j["edges"]) {
        if (!edge.is_array()) fail(Errc::ParseError, "each edge must be an array of integers");
        VertexSet mask = 0;
        for (const auto& entry : edge) {
            if (!entry.is_number_integer())
                fail(Errc::ParseError, "each edge must be an array of integers");
            long long v = entry.get<long long>();
            if (v < 1) fail(Errc::ParseError, "vertex indices start at 1");
            if (v > kMaxVertices)
                fail(Errc::TooManyVertices, "at most 64 vertices are supported");
            if (contains(mask, static_cast<int>(v)))
                fail(Errc::NotSquarefree, "repeated vertex in an edge");
            mask |= singleton(static_cast<int>(v));
            max_vertex = std::max(max_vertex, static_cast<int>(v));
        }
        doc.generators.push_back(mask);
    }
    if (j.contains("n")) {
        if (!j["n"].is_number_integer() || j["n"].get<long long>() < max_vertex ||
            j["n"].get<long long>() > kMaxVertices)
            fail(Errc::ParseError, "\"n\" must be an integer covering every vertex index");
        doc.n = j["n"].get<int>();
    } else {
        doc.n = max_vertex;
    }
    if (j.contains("variables")) {
        if (!j["variables"].is_array() ||
            static_cast<int>(j["variables"].size()) != doc.n)
            fail(Errc::ParseError, "\"variables\" must list one name per vertex");
        for (const auto& name : j["variables"]) {
            if (!name.is_string()) fail(Errc::ParseError, "variable names must be strings");
            doc.variable_names.push_back(name.get<std::string>());
        }
    }
    return doc;
}

std::string detect_format(const std::vector<Line>& lines) {
    if (lines.empty()) return "monomials";
    for (char c : lines.front().text) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        if (c == '{') return "json";
        if (is_ident_start(c)) return "monomials";
        return "indices";
    }
    return "monomials";
}

} // namespace

std::string IdealDocument::variable(int v) const {
    if (!variable_names.empty() && v >= 1 && v <= static_cast<int>(variable_names.size()))
        return variable_names[v - 1];
    return "x" + std::to_string(v);
}

Hypergraph IdealDocument::hypergraph() const { return make_hypergraph(n, generators); }

IdealDocument parse_ideal(std::string_view text, const std::string& format,
                          const std::string& provenance) {
    std::vector<Line> lines = meaningful_lines(text);
    std::string chosen = format == "auto" ? detect_format(lines) : format;
    IdealDocument doc;
    if (chosen == "monomials")
        doc = parse_monomials(lines);
    else if (chosen == "indices")
        doc = parse_indices(lines);
    else if (chosen == "json")
        doc = parse_json(text);
    else
        fail(Errc::BadParams, "unknown ideal format '" + chosen + "'");
    doc.provenance = provenance;
    doc.hypergraph(); // validates the antichain and vertex range
    return doc;
}

IdealDocument document_from(const Hypergraph& g, const std::string& provenance) {
    IdealDocument doc;
    doc.n = g.vertex_count();
    doc.generators = g.edges();
    doc.provenance = provenance;
    doc.format = g.support() == full_mask(g.vertex_count()) ? "monomials" : "json";
    return doc;
}

std::string format_ideal(const IdealDocument& doc) {
    std::ostringstream out;
    if (doc.format == "monomials") {
        for (VertexSet gen : doc.generators) {
            bool first = true;
            for (int v : set_to_vertices(gen)) {
                if (!first) out << '*';
                out << doc.variable(v);
                first = false;
            }
            out << '\n';
        }
    } else if (doc.format == "indices") {
        for (VertexSet gen : doc.generators) {
            bool first = true;
            for (int v : set_to_vertices(gen)) {
                if (!first) out << ' ';
                out << v;
                first = false;
            }
            out << '\n';
        }
    } else if (doc.format == "json") {
        nlohmann::json j;
        j["n"] = doc.n;
        j["edges"] = nlohmann::json::array();
        for (VertexSet gen : doc.generators) j["edges"].push_back(set_to_vertices(gen));
        if (!doc.variable_names.empty()) j["variables"] = doc.variable_names;
        out << j.dump(2) << '\n';
    } else {
        fail(Errc::BadParams, "unknown ideal format '" + doc.format + "'");
    }
    return out.str();
}

std::string format_betti_table(const BettiTable& table, const std::string& style) {
    if (style == "json") {
        nlohmann::json j;
        j["schema"] = kTableSchemaVersion;
        j["kind"] = table.kind == BettiTable::Kind::Taylor ? "taylor" : "minimal";
        if (table.field)
            j["field"] = field_name(*table.field);
        else
            j["field"] = nullptr;
        j["entries"] = nlohmann::json::array();
        for (const auto& [key, value] : table.entries) {
            nlohmann::json entry;
            entry["i"] = key.first;
            entry["a"] = key.second;
            entry["value"] = value;
            j["entries"].push_back(entry);
        }
        return j.dump(2) + "\n";
    }
    if (style != "diagram") fail(Errc::BadParams, "unknown table style '" + style + "'");

    int imax = 0, rmin = 0, rmax = 0;
    bool first = true;
    for (const auto& [key, value] : table.entries) {
        int r = key.second - key.first;
        if (first) {
            rmin = rmax = r;
            first = false;
        }
        imax = std::max(imax, key.first);
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    std::size_t width = 1;
    for (const auto& [key, value] : table.entries)
        width = std::max(width, std::to_string(value).size());
    width = std::max(width, std::to_string(imax).size());
    std::size_t label = std::max<std::size_t>(std::to_string(rmin).size(),
                                              std::to_string(rmax).size());

    std::ostringstream out;
    auto cell = [&](const std::string& s) {
        out << "  " << std::string(width > s.size() ? width - s.size() : 0, ' ') << s;
    };
    out << std::string(label + 1, ' ');
    for (int i = 0; i <= imax; ++i) cell(std::to_string(i));
    out << '\n';
    for (int r = rmin; r <= rmax; ++r) {
        std::string rl = std::to_string(r);
        out << std::string(label - rl.size(), ' ') << rl << ':';
        for (int i = 0; i <= imax; ++i) {
            auto it = table.entries.find({i, r + i});
            cell(it == table.entries.end() || it->second == 0 ? "."
                                                              : std::to_string(it->second));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace bettilab
