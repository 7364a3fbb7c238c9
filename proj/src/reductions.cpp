#include "hhfree/reductions.hpp"

#include <algorithm>

#include "hhfree/catalog.hpp"

namespace hhfree {

GadgetGraph reduce_diamond_2p3(const Graph& g) {
    int n = g.n();
    auto ge = g.edges();
    int m = static_cast<int>(ge.size());
    int total = n + 2 * m;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    std::vector<Role> parts(total, Role::A);
    std::vector<int> cls(total, 0);
    for (int v = 0; v < n; ++v) cls[v] = v;
    for (int j = 0; j < m; ++j) {
        auto [v, w] = ge[j];
        int vw = n + 2 * j, wv = n + 2 * j + 1;
        edges.emplace_back(v, vw);
        edges.emplace_back(vw, wv);
        edges.emplace_back(wv, w);
        parts[vw] = parts[wv] = Role::B;
        cls[vw] = cls[wv] = j;
    }
    return GadgetGraph{Graph::build(total, edges), std::move(parts), std::move(cls)};
}

GadgetGraph reduce_diamond_p6(const Graph& g) {
    int n = g.n();
    auto ge = g.edges();
    int m = static_cast<int>(ge.size());
    int total = n + 3 * m;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int j = 0; j < m; ++j) edges.emplace_back(u, n + j);
    std::vector<Role> parts(total, Role::A);
    std::vector<int> cls(total, 0);
    for (int v = 0; v < n; ++v) cls[v] = v;
    for (int j = 0; j < m; ++j) {
        auto [v, w] = ge[j];
        int e = n + j;
        int vw = n + m + 2 * j, wv = n + m + 2 * j + 1;
        edges.emplace_back(v, vw);
        edges.emplace_back(vw, e);
        edges.emplace_back(e, wv);
        edges.emplace_back(wv, w);
        parts[e] = Role::C;
        cls[e] = j;
        parts[vw] = parts[wv] = Role::B;
        cls[vw] = cls[wv] = j;
    }
    return GadgetGraph{Graph::build(total, edges), std::move(parts), std::move(cls)};
}

GadgetGraph reduce_gem_p1_2p2(const Graph& g) {
    int n = g.n();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0)
            throw Error("reduce_gem_p1_2p2: vertex " + std::to_string(v) +
                        " is isolated; its class would be empty");
    auto ge = g.edges();
    int m = static_cast<int>(ge.size());
    int a_total = 0;
    std::vector<int> a_start(n + 1, 0);
    for (int v = 0; v < n; ++v) {
        a_start[v] = a_total;
        a_total += g.degree(v);
    }
    a_start[n] = a_total;  // == 2m
    int total = a_total + 2 * m;

    std::vector<Role> parts(total, Role::A);
    std::vector<int> cls(total, 0);
    for (int v = 0; v < n; ++v)
        for (int s = a_start[v]; s < a_start[v + 1]; ++s) cls[s] = v;
    for (int j = 0; j < m; ++j) {
        parts[a_total + 2 * j] = parts[a_total + 2 * j + 1] = Role::B;
        cls[a_total + 2 * j] = cls[a_total + 2 * j + 1] = j;
    }

    std::vector<std::pair<int, int>> edges;
    // complete multipartite on A
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int s = a_start[u]; s < a_start[u + 1]; ++s)
                for (int t = a_start[v]; t < a_start[v + 1]; ++t) edges.emplace_back(s, t);
    // complete multipartite on B (parts of size 2)
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y)
                    edges.emplace_back(a_total + 2 * i + x, a_total + 2 * j + y);
    // perfect matching: edges in ascending order, slots within each class in
    // ascending index
    std::vector<int> next_slot = a_start;
    for (int j = 0; j < m; ++j) {
        auto [v, w] = ge[j];
        edges.emplace_back(a_total + 2 * j, next_slot[v]++);
        edges.emplace_back(a_total + 2 * j + 1, next_slot[w]++);
    }
    for (int v = 0; v < n; ++v)
        if (next_slot[v] != a_start[v + 1]) throw InternalError("gem reduction matching is not perfect");
    return GadgetGraph{Graph::build(total, edges), std::move(parts), std::move(cls)};
}

ReductionKind reduction_kind_from_string(const std::string& id) {
    if (id == "diamond-2p3") return ReductionKind::Diamond2P3;
    if (id == "diamond-p6") return ReductionKind::DiamondP6;
    if (id == "gem-p1-2p2") return ReductionKind::GemP12P2;
    throw Error("unknown reduction \"" + id + "\" (expected diamond-2p3, diamond-p6 or gem-p1-2p2)");
}

std::string to_string(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::Diamond2P3: return "diamond-2p3";
        case ReductionKind::DiamondP6: return "diamond-p6";
        case ReductionKind::GemP12P2: return "gem-p1-2p2";
    }
    return "?";
}

GadgetGraph hardness_instance(const Graph& g, ReductionKind kind) {
    switch (kind) {
        case ReductionKind::Diamond2P3:
            return reduce_diamond_2p3(g);
        case ReductionKind::DiamondP6:
            return reduce_diamond_p6(add_dominating_clique(g, 4));
        case ReductionKind::GemP12P2:
            return reduce_gem_p1_2p2(add_dominating_clique(g, 4));
    }
    throw Error("unreachable reduction kind");
}

std::vector<Graph> forbidden_pair(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::Diamond2P3: return {make("diamond"), make("2P3")};
        case ReductionKind::DiamondP6: return {make("diamond"), make("P6")};
        case ReductionKind::GemP12P2: return {make("gem"), make("P1+2P2")};
    }
    throw Error("unreachable reduction kind");
}

}  // namespace hhfree
