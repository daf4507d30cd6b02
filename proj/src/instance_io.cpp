#include "atfp/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "atfp/errors.hpp"

namespace atfp {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

// Non-blank, non-comment lines split on spaces and tabs.
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        ++number;
        pos = end + 1;
        if (!raw.empty() && raw.front() == '#') continue;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
            if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

long long to_int(const Line& line, const Token& tok) {
    long long v = 0;
    const auto* first = tok.text.data();
    const auto* last = first + tok.text.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last || v < 0)
        throw ParseError(line.number, tok.column, "expected a non-negative integer, got '" + std::string(tok.text) + "'");
    return v;
}

void expect_tokens(const Line& line, std::size_t count, const char* what) {
    if (line.tokens.size() != count) {
        const std::size_t col = line.tokens.size() > count ? line.tokens[count].column : line.tokens.back().column;
        throw ParseError(line.number, col,
                         std::string(what) + ": expected " + std::to_string(count) + " integers, got " +
                             std::to_string(line.tokens.size()));
    }
}

}  // namespace

Instance parse_instance(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "missing header 'n m k'");
    expect_tokens(lines[0], 3, "header");
    const long long n = to_int(lines[0], lines[0].tokens[0]);
    const long long m = to_int(lines[0], lines[0].tokens[1]);
    const long long k = to_int(lines[0], lines[0].tokens[2]);
    if (static_cast<long long>(lines.size()) - 1 != m + k) {
        const std::size_t at = lines.size() > static_cast<std::size_t>(m + k) + 1
                                   ? lines[static_cast<std::size_t>(m + k) + 1].number
                                   : lines.back().number + 1;
        throw ParseError(at, 1, "header announces " + std::to_string(m) + " edges and " + std::to_string(k) +
                                    " pairs but the body has " + std::to_string(lines.size() - 1) + " lines");
    }
    Instance inst{Graph(static_cast<int>(n)), {}};
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const bool is_edge = static_cast<long long>(i) <= m;
        expect_tokens(lines[i], 2, is_edge ? "edge" : "pair");
        long long ends[2];
        for (int e = 0; e < 2; ++e) {
            ends[e] = to_int(lines[i], lines[i].tokens[e]);
            if (ends[e] >= n)
                throw ParseError(lines[i].number, lines[i].tokens[e].column,
                                 "vertex " + std::to_string(ends[e]) + " out of range for n = " + std::to_string(n));
        }
        const auto u = static_cast<Vertex>(ends[0]);
        const auto v = static_cast<Vertex>(ends[1]);
        if (is_edge) {
            if (u == v) throw ParseError(lines[i].number, lines[i].tokens[1].column, "self-loop");
            inst.g.add_edge(u, v);
        } else {
            inst.pairs.push_back({u, v});
        }
    }
    validate_instance(inst);
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    const auto edges = inst.g.edges();
    os << inst.g.n() << ' ' << edges.size() << ' ' << inst.pairs.size() << '\n';
    for (const auto& [u, v] : edges) os << u << ' ' << v << '\n';
    for (const auto& p : inst.pairs) os << p.s << ' ' << p.t << '\n';
    return os.str();
}

std::vector<VertexSeq> parse_paths(std::string_view text) {
    std::vector<VertexSeq> out;
    for (const auto& line : content_lines(text)) {
        VertexSeq p;
        for (const auto& tok : line.tokens) p.push_back(static_cast<Vertex>(to_int(line, tok)));
        out.push_back(std::move(p));
    }
    return out;
}

std::string serialize_paths(const std::vector<VertexSeq>& paths) {
    std::ostringstream os;
    for (const auto& p : paths) {
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i];
        os << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << text;
}

std::string report_json(const ResultReport& r) {
    nlohmann::ordered_json j;
    j["answer"] = r.yes ? "yes" : "no";
    if (r.yes) j["paths"] = r.paths;
    nlohmann::ordered_json st;
    st["n"] = r.stats.n;
    st["m"] = r.stats.m;
    st["k"] = r.stats.k;
    st["components"] = r.stats.components;
    st["interference_edges"] = r.stats.interference_edges;
    st["table_entries"] = r.stats.table_entries;
    st["max_nprime"] = r.stats.max_nprime;
    st["component_calls"] = r.stats.component_calls;
    if (r.wall_ms) st["wall_ms"] = *r.wall_ms;
    j["stats"] = st;
    j["solver"] = r.solver;
    j["seed"] = r.seed;
    return j.dump(2) + "\n";
}

std::string report_text(const ResultReport& r, bool emit_paths) {
    std::ostringstream os;
    os << "answer: " << (r.yes ? "yes" : "no") << '\n';
    if (r.yes && emit_paths) os << serialize_paths(r.paths);
    os << "n=" << r.stats.n << " m=" << r.stats.m << " k=" << r.stats.k << " components=" << r.stats.components
       << " interference_edges=" << r.stats.interference_edges << " table_entries=" << r.stats.table_entries << '\n';
    if (r.wall_ms) os << "wall_ms=" << *r.wall_ms << '\n';
    os << "solver=" << r.solver << " seed=" << r.seed << '\n';
    return os.str();
}

}  // namespace atfp
