#include "hhfree/graph_io.hpp"

#include <sstream>

namespace hhfree {

namespace {

constexpr int kGraph6Max = 258047;  // 18-bit size field

void append_bits(std::string& out, int& acc, int& nacc, int bit) {
    acc = (acc << 1) | bit;
    if (++nacc == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nacc = 0;
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    int n = g.n();
    if (n > kGraph6Max) throw Error("graph6: graph too large");
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nacc = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) append_bits(out, acc, nacc, g.adjacent(i, j) ? 1 : 0);
    if (nacc > 0) {
        acc <<= (6 - nacc);
        out.push_back(static_cast<char>(acc + 63));
    }
    return out;
}

Graph from_graph6(const std::string& s) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (pos + k > s.size()) throw Error("graph6: truncated input");
    };
    auto byte = [&](size_t i) {
        int b = static_cast<unsigned char>(s[i]);
        if (b < 63 || b > 126) throw Error("graph6: invalid byte at position " + std::to_string(i));
        return b - 63;
    };
    need(1);
    long long n;
    if (s[0] == '~') {
        need(4);
        if (s.size() >= 2 && s[1] == '~') throw Error("graph6: sizes beyond 18 bits unsupported");
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = byte(0);
        pos = 1;
    }
    long long nbits = n * (n - 1) / 2;
    size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
    need(nbytes);
    if (pos + nbytes != s.size()) throw Error("graph6: trailing bytes");
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    return Graph::build(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n, m;
    if (!(in >> n >> m)) throw Error("edge list: missing \"n m\" header");
    if (n < 0 || m < 0) throw Error("edge list: negative counts");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw Error("edge list: expected " + std::to_string(m) + " edges");
        edges.emplace_back(u, v);
    }
    return Graph::build(static_cast<int>(n), edges);
}

}  // namespace hhfree
