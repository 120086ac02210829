#include "alphawidth/graph_io.hpp"

#include <sstream>

#include "alphawidth/errors.hpp"

namespace alphawidth {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

bool printable6(unsigned char c) { return c >= 63 && c <= 126; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    std::size_t pos = 0;
    if (text.substr(0, 2) == ">>") {
        if (text.substr(0, kHeader.size()) != kHeader) throw ParseError("malformed graph6 header", 0);
        pos = kHeader.size();
    }
    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw ParseError("graph6 input truncated", i);
        const auto c = static_cast<unsigned char>(text[i]);
        if (!printable6(c)) throw ParseError("byte outside the graph6 range 63..126", i);
        return c - kBias;
    };

    std::uint64_t n = 0;
    if (pos >= text.size()) throw ParseError("empty graph6 string", pos);
    if (static_cast<unsigned char>(text[pos]) != 126) {
        n = static_cast<std::uint64_t>(byte_at(pos));
        pos += 1;
    } else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
        for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos + 2 + i));
        pos += 8;
    } else {
        for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos + 1 + i));
        pos += 4;
    }
    if (n > static_cast<std::uint64_t>(kMaxBitsetVertices))
        throw SizeCapError("graph6 graph has " + std::to_string(n) + " vertices; the bitset tier holds 64");

    const int order = static_cast<int>(n);
    const std::size_t bit_count = static_cast<std::size_t>(order) * (order - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    std::vector<VertexSet> rows(order);
    std::size_t bit = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int value = byte_at(pos + bit / 6);
            if ((value >> (5 - bit % 6)) & 1) {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    // Validate padding bytes too when the triangle is empty.
    for (std::size_t i = 0; i < byte_count; ++i) byte_at(pos + i);
    if (pos + byte_count != text.size())
        throw ParseError("trailing bytes after graph6 data", pos + byte_count);
    return Graph::from_adjacency(std::move(rows));
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    return out;
}

Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view t = trim(line);
        if (t.empty() || t.front() == 'c') continue;
        std::istringstream fields{std::string(t)};
        std::string kind;
        fields >> kind;
        if (kind == "p") {
            if (n >= 0) throw ParseError("duplicate problem line", lineno);
            std::string format;
            long long nn = -1;
            long long m = -1;
            if (!(fields >> format >> nn >> m) || (format != "edge" && format != "col") || nn < 0)
                throw ParseError("malformed problem line", lineno);
            if (nn > kMaxBitsetVertices) throw SizeCapError("DIMACS graph exceeds 64 vertices");
            n = static_cast<int>(nn);
        } else if (kind == "e") {
            if (n < 0) throw ParseError("edge before the problem line", lineno);
            long long u = 0;
            long long v = 0;
            if (!(fields >> u >> v)) throw ParseError("malformed edge line", lineno);
            if (u < 1 || v < 1 || u > n || v > n) throw ParseError("edge endpoint out of range", lineno);
            if (u == v) throw ParseError("self-loop", lineno);
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw ParseError("unknown DIMACS line type '" + kind + "'", lineno);
        }
    }
    if (n < 0) throw ParseError("missing problem line", lineno);
    return Graph(n, edges);
}

std::string emit_dimacs(const Graph& g) {
    auto edges = g.edges();
    std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
    for (auto [u, v] : edges) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

std::string to_dot(const Graph& g, std::string_view name) {
    std::string out = "graph " + std::string(name) + " {\n";
    for (int v = 0; v < g.order(); ++v) {
        out += "  " + std::to_string(v);
        if (!g.labels().empty()) out += " [label=\"" + g.labels()[v] + "\"]";
        out += ";\n";
    }
    for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view t = trim(line);
        if (!t.empty()) out.emplace_back(t);
    }
    return out;
}

Graph parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::string first;
    while (std::getline(in, line)) {
        std::string_view t = trim(line);
        if (t.empty()) continue;
        if (t == "c" || t.starts_with("c ") || t.starts_with("p ") || t.starts_with("e ")) return parse_dimacs(text);
        if (first.empty()) first = std::string(t);
    }
    if (first.empty()) throw ParseError("no graph in input", 0);
    return parse_graph6(first);
}

}  // namespace alphawidth
