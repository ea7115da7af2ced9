#include "rigclique/codec.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "rigclique/error.hpp"

namespace rigclique {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

/// Splits into non-empty, non-comment lines, keeping 1-based line numbers.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') continue;
        out.push_back({number, line});
    }
    return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_count(std::string_view tok, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return value;
}

Vertex parse_id(std::string_view tok, std::size_t line) {
    auto value = parse_count(tok, line);
    if (value > std::numeric_limits<Vertex>::max())
        throw ParseError(line, "id '" + std::string(tok) + "' too large");
    return static_cast<Vertex>(value);
}

std::pair<std::uint64_t, std::uint64_t> parse_header(const std::vector<Line>& lines,
                                                     const char* what) {
    if (lines.empty()) throw ParseError(1, std::string("missing header '") + what + "'");
    auto toks = tokens(lines[0].text);
    if (toks.size() != 2)
        throw ParseError(lines[0].number, std::string("malformed header, expected '") + what + "'");
    return {parse_count(toks[0], lines[0].number), parse_count(toks[1], lines[0].number)};
}

} // namespace

Graph decode_graph(std::string_view text) {
    auto lines = content_lines(text);
    auto [n, e] = parse_header(lines, "n e");
    if (n > std::numeric_limits<Vertex>::max()) throw ParseError(lines[0].number, "n too large");
    if (lines.size() - 1 != e)
        throw ParseError(lines.back().number, "header declares " + std::to_string(e) +
                                                  " edges, found " + std::to_string(lines.size() - 1));
    std::vector<Edge> edges;
    edges.reserve(e);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        auto toks = tokens(lines[k].text);
        if (toks.size() != 2) throw ParseError(lines[k].number, "expected 'u v'");
        edges.emplace_back(parse_id(toks[0], lines[k].number), parse_id(toks[1], lines[k].number));
    }
    return build_graph(n, edges);
}

std::string encode_graph(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

LabelRepresentation decode_labels(std::string_view text) {
    auto lines = content_lines(text);
    auto [n, m] = parse_header(lines, "n m");
    if (n > std::numeric_limits<Vertex>::max() || m > std::numeric_limits<Label>::max())
        throw ParseError(lines[0].number, "n or m too large");
    std::vector<std::vector<Label>> sets(n);
    std::size_t expected = 0;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto number = lines[k].number;
        auto toks = tokens(lines[k].text);
        auto head = toks.front();
        if (head.back() != ':') throw ParseError(number, "expected 'v: labels...'");
        head.remove_suffix(1);
        Vertex v = parse_id(head, number);
        if (v >= n) throw ParseError(number, "vertex " + std::to_string(v) + " out of range");
        if (v < expected) throw ParseError(number, "vertex " + std::to_string(v) + " duplicated");
        if (v > expected) throw ParseError(number, "vertex " + std::to_string(expected) + " missing");
        ++expected;
        for (std::size_t t = 1; t < toks.size(); ++t) {
            Label i = parse_id(toks[t], number);
            if (i >= m) throw ParseError(number, "label " + std::to_string(i) + " out of range");
            if (!sets[v].empty() && i <= sets[v].back())
                throw ParseError(number, "labels must be strictly ascending");
            sets[v].push_back(i);
        }
    }
    if (expected != n) throw ParseError(lines.back().number, "vertex " + std::to_string(expected) + " missing");
    return LabelRepresentation(m, std::move(sets));
}

std::string encode_labels(const LabelRepresentation& rep) {
    std::ostringstream out;
    out << rep.n() << ' ' << rep.m() << '\n';
    for (Vertex v = 0; v < rep.n(); ++v) {
        out << v << ':';
        for (Label i : rep.labels_of(v)) out << ' ' << i;
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path.string() + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw Error("write to '" + path.string() + "' failed");
}

} // namespace rigclique
