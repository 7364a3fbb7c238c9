#include "hhfree/graph.hpp"

#include <algorithm>

namespace hhfree {

Graph graph_from_rows(int n, std::vector<Bits> rows) {
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(rows);
    return g;
}

Graph Graph::build(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw Error("vertex count must be non-negative");
    std::vector<Bits> rows(n, Bits(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw Error("self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                        ") is not allowed");
        rows[u].set(v);
        rows[v].set(u);
    }
    return graph_from_rows(n, std::move(rows));
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph complement(const Graph& g) {
    int n = g.n();
    std::vector<Bits> rows(n, Bits(n));
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v)
            if (u != v && !g.adjacent(u, v)) rows[u].set(v);
    }
    return graph_from_rows(n, std::move(rows));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.n() + h.n();
    std::vector<Bits> rows(n, Bits(n));
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.row(u).first(); v >= 0; v = g.row(u).next(v)) rows[u].set(v);
    int off = g.n();
    for (int u = 0; u < h.n(); ++u)
        for (int v = h.row(u).first(); v >= 0; v = h.row(u).next(v)) rows[u + off].set(v + off);
    return graph_from_rows(n, std::move(rows));
}

static void check_vertex_set(const Graph& g, const std::vector<int>& s, const char* what) {
    for (int v : s)
        if (v < 0 || v >= g.n())
            throw Error(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

Graph induced(const Graph& g, const std::vector<int>& s) {
    check_vertex_set(g, s, "induced");
    std::vector<int> keep = s;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    int k = static_cast<int>(keep.size());
    std::vector<Bits> rows(k, Bits(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(keep[i], keep[j])) {
                rows[i].set(j);
                rows[j].set(i);
            }
    return graph_from_rows(k, std::move(rows));
}

Graph subgraph_complementation(const Graph& g, const std::vector<int>& s) {
    check_vertex_set(g, s, "subgraph_complementation");
    Bits in_s = Bits::of(g.n(), s);
    std::vector<Bits> rows;
    rows.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) rows.push_back(g.row(v));
    auto sv = in_s.to_vector();
    for (size_t i = 0; i < sv.size(); ++i)
        for (size_t j = i + 1; j < sv.size(); ++j) {
            rows[sv[i]].flip(sv[j]);
            rows[sv[j]].flip(sv[i]);
        }
    return graph_from_rows(g.n(), std::move(rows));
}

Graph bipartite_complementation(const Graph& g, const std::vector<int>& s,
                                const std::vector<int>& t) {
    check_vertex_set(g, s, "bipartite_complementation");
    check_vertex_set(g, t, "bipartite_complementation");
    Bits in_s = Bits::of(g.n(), s), in_t = Bits::of(g.n(), t);
    if (in_s.intersects(in_t)) throw Error("bipartite_complementation: S and T overlap");
    std::vector<Bits> rows;
    rows.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) rows.push_back(g.row(v));
    for (int u = in_s.first(); u >= 0; u = in_s.next(u))
        for (int v = in_t.first(); v >= 0; v = in_t.next(v)) {
            rows[u].flip(v);
            rows[v].flip(u);
        }
    return graph_from_rows(g.n(), std::move(rows));
}

Graph delete_vertices(const Graph& g, const std::vector<int>& s) {
    check_vertex_set(g, s, "delete_vertices");
    Bits drop = Bits::of(g.n(), s);
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!drop.test(v)) keep.push_back(v);
    return induced(g, keep);
}

std::vector<Component> components(const Graph& g) {
    int n = g.n();
    std::vector<int> comp(n, -1);
    std::vector<Component> out;
    for (int start = 0; start < n; ++start) {
        if (comp[start] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> stack{start};
        comp[start] = id;
        std::vector<int> members;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u = g.row(v).first(); u >= 0; u = g.row(v).next(u))
                if (comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(Component{std::move(members), false});
        out.back().nontrivial = out.back().vertices.size() >= 2;
    }
    return out;
}

bool is_connected(const Graph& g) { return g.n() == 0 || components(g).size() == 1; }

Graph add_dominating_clique(const Graph& g, int k) {
    if (k < 0) throw Error("add_dominating_clique: k must be non-negative");
    int n = g.n() + k;
    std::vector<Bits> rows(n, Bits(n));
    for (int u = 0; u < g.n(); ++u)
        for (int v = g.row(u).first(); v >= 0; v = g.row(u).next(v)) rows[u].set(v);
    for (int w = g.n(); w < n; ++w)
        for (int v = 0; v < n; ++v)
            if (v != w) {
                rows[w].set(v);
                rows[v].set(w);
            }
    return graph_from_rows(n, std::move(rows));
}

std::optional<std::vector<std::vector<int>>> is_complete_multipartite(const Graph& g) {
    // Complete multipartite iff the complement is a disjoint union of
    // complete graphs; the classes are the complement's components.
    Graph co = complement(g);
    std::vector<std::vector<int>> classes;
    for (const Component& c : components(co)) {
        for (size_t i = 0; i < c.vertices.size(); ++i)
            for (size_t j = i + 1; j < c.vertices.size(); ++j)
                if (!co.adjacent(c.vertices[i], c.vertices[j])) return std::nullopt;
        classes.push_back(c.vertices);
    }
    return classes;
}

bool is_complete(const Graph& g) {
    return g.m() == static_cast<long long>(g.n()) * (g.n() - 1) / 2;
}

bool is_edgeless(const Graph& g) { return g.m() == 0; }

}  // namespace hhfree
