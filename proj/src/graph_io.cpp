#include "clawtop/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "clawtop/errors.hpp"

namespace clawtop {

Graph read_edge_list(std::istream& in) {
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw InputError("edge list: missing 'n m' header");
    if (n < 0 || m < 0) throw InputError("edge list: negative header values");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw InputError("edge list: expected " + std::to_string(m) +
                                              " edges, got " + std::to_string(i));
        if (u >= v) throw InputError("edge list: edges must satisfy u < v");
        g.add_edge(u, v);
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.n() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

constexpr int kG6Bias = 63;

int g6_value(char c) {
    int v = int(static_cast<unsigned char>(c)) - kG6Bias;
    if (v < 0 || v > 63) throw InputError("graph6: byte out of range");
    return v;
}

}  // namespace

Graph parse_graph6(const std::string& raw) {
    std::string s = raw;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s = s.substr(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw InputError("graph6: empty string");

    size_t pos = 0;
    long long n;
    if (s[0] != '~') {
        n = g6_value(s[pos++]);
    } else {
        if (s.size() >= 2 && s[1] == '~')
            throw InputError("graph6: graphs beyond 258047 vertices not supported");
        if (s.size() < 4) throw InputError("graph6: truncated vertex count");
        n = 0;
        ++pos;
        for (int i = 0; i < 3; ++i) n = (n << 6) | g6_value(s[pos++]);
    }

    Graph g(static_cast<int>(n));
    long long bits_needed = n * (n - 1) / 2;
    if (static_cast<long long>(s.size() - pos) * 6 < bits_needed)
        throw InputError("graph6: truncated adjacency data");

    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int chunk = g6_value(s[pos + bit / 6]);
            if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    return g;
}

std::string to_graph6(const Graph& g) {
    const long long n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(char(kG6Bias + n));
    } else if (n <= 258047) {
        out.push_back('~');
        out.push_back(char(kG6Bias + ((n >> 12) & 63)));
        out.push_back(char(kG6Bias + ((n >> 6) & 63)));
        out.push_back(char(kG6Bias + (n & 63)));
    } else {
        throw InputError("graph6: graphs beyond 258047 vertices not supported");
    }

    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(kG6Bias + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    if (filled) out.push_back(char(kG6Bias + (chunk << (6 - filled))));
    return out;
}

Graph read_graph_auto(std::istream& in) {
    std::string first;
    while (std::getline(in, first)) {
        if (!first.empty() && first.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    if (first.empty()) throw InputError("graph input: empty stream");
    size_t start = first.find_first_not_of(" \t");
    if (std::isdigit(static_cast<unsigned char>(first[start]))) {
        std::ostringstream rest;
        rest << first << '\n' << in.rdbuf();
        std::istringstream full(rest.str());
        return read_edge_list(full);
    }
    return parse_graph6(first);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file: " + path);
    return read_graph_auto(in);
}

void write_graph_file(const Graph& g, const std::string& path, bool graph6) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open output file: " + path);
    if (graph6)
        out << to_graph6(g) << '\n';
    else
        out << to_edge_list(g);
}

}  // namespace clawtop
