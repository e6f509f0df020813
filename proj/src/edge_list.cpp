#include "netrob/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "netrob/error.hpp"

namespace netrob {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
    std::uint64_t x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return x;
}

struct Header {
    bool directed;
    std::uint64_t n;
    std::uint64_t m;
};

// Returns a header when the comment line is one; other comments yield nullopt.
std::optional<Header> parse_header(std::string_view comment) {
    auto tok = split_ws(comment);
    if (tok.size() != 3 || (tok[0] != "directed" && tok[0] != "undirected")) return std::nullopt;
    auto n = parse_uint(tok[1]);
    auto m = parse_uint(tok[2]);
    if (!n || !m) return std::nullopt;
    return Header{tok[0] == "directed", *n, *m};
}

}  // namespace

Graph read_edge_list(std::istream& in, bool default_directed) {
    std::optional<Header> header;
    std::vector<Edge> edges;
    std::uint64_t max_id = 0;
    bool any = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        const auto first = sv.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        sv.remove_prefix(first);
        if (sv.front() == '#') {
            if (!header && !any) header = parse_header(sv.substr(1));
            continue;
        }
        auto tok = split_ws(sv);
        if (tok.size() != 2) throw ParseError("expected 'u v' pair", lineno);
        auto u = parse_uint(tok[0]);
        auto v = parse_uint(tok[1]);
        if (!u || !v) throw ParseError("node ids must be non-negative integers", lineno);
        if (*u > std::numeric_limits<NodeId>::max() - 1 || *v > std::numeric_limits<NodeId>::max() - 1)
            throw ParseError("node id too large", lineno);
        if (header && (*u >= header->n || *v >= header->n))
            throw ParseError("node id exceeds header N=" + std::to_string(header->n), lineno);
        if (*u == *v) throw ParseError("self-loop", lineno);
        edges.push_back({static_cast<NodeId>(*u), static_cast<NodeId>(*v)});
        max_id = std::max({max_id, *u, *v});
        any = true;
    }
    if (header && header->m != edges.size()) {
        throw ParseError("header declares M=" + std::to_string(header->m) + " but " +
                         std::to_string(edges.size()) + " edges were read");
    }
    const std::size_t n = header ? header->n : (any ? max_id + 1 : 0);
    const bool directed = header ? header->directed : default_directed;
    try {
        return Graph(n, std::move(edges), directed);
    } catch (const ParameterError& e) {
        throw ParseError(e.what());
    }
}

Graph read_edge_list(const std::filesystem::path& path, bool default_directed) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge list '" + path.string() + "'");
    try {
        return read_edge_list(in, default_directed);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& graph) {
    out << "# " << (graph.directed() ? "directed" : "undirected") << ' ' << graph.node_count() << ' '
        << graph.edge_count() << '\n';
    for (const auto& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& graph) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    write_edge_list(out, graph);
}

}  // namespace netrob
