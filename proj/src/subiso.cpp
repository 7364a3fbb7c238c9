#include "hhfree/subiso.hpp"

#include <algorithm>

namespace hhfree {

namespace {

// Static assignment order for H: per component (by smallest vertex), start at
// the component's max-degree vertex, then repeatedly take the vertex with the
// most already-placed neighbours (ties: higher degree, then lower index).
// Keeps candidate sets tight early.
std::vector<int> h_order(const Graph& h) {
    int hn = h.n();
    std::vector<int> order;
    std::vector<bool> placed(hn, false);
    for (const Component& comp : components(h)) {
        int start = comp.vertices[0];
        for (int v : comp.vertices)
            if (h.degree(v) > h.degree(start)) start = v;
        order.push_back(start);
        placed[start] = true;
        for (size_t step = 1; step < comp.vertices.size(); ++step) {
            int best = -1, best_adj = -1;
            for (int v : comp.vertices) {
                if (placed[v]) continue;
                int adj = 0;
                for (int u : order)
                    if (h.adjacent(u, v)) ++adj;
                if (adj > best_adj ||
                    (adj == best_adj && (h.degree(v) > h.degree(best) ||
                                         (h.degree(v) == h.degree(best) && v < best)))) {
                    best = v;
                    best_adj = adj;
                }
            }
            order.push_back(best);
            placed[best] = true;
        }
    }
    return order;
}

struct Searcher {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;       // H-vertices in assignment order
    std::vector<int> image;       // order position -> G-vertex
    std::vector<int> map;         // H-vertex -> G-vertex
    std::vector<Bits> base_cand;  // per H-vertex: degree-feasible G-vertices

    Searcher(const Graph& g_, const Graph& h_) : g(g_), h(h_) {
        order = h_order(h);
        image.assign(h.n(), -1);
        map.assign(h.n(), -1);
        base_cand.assign(h.n(), Bits(g.n()));
        for (int hv = 0; hv < h.n(); ++hv) {
            int dh = h.degree(hv);
            int coh = h.n() - 1 - dh;
            for (int gv = 0; gv < g.n(); ++gv) {
                int dg = g.degree(gv);
                if (dg >= dh && g.n() - 1 - dg >= coh) base_cand[hv].set(gv);
            }
        }
    }

    bool search(int depth, Bits used) {
        if (depth == h.n()) return true;
        int hv = order[depth];
        Bits cand = base_cand[hv];
        cand.andnot(used);
        for (int d = 0; d < depth; ++d) {
            int pu = order[d];
            if (h.adjacent(pu, hv)) {
                cand &= g.row(image[d]);
            } else {
                cand.andnot(g.row(image[d]));
            }
            if (cand.none()) return false;
        }
        for (int gv = cand.first(); gv >= 0; gv = cand.next(gv)) {
            image[depth] = gv;
            map[hv] = gv;
            Bits used2 = used;
            used2.set(gv);
            if (search(depth + 1, used2)) return true;
            map[hv] = -1;
        }
        return false;
    }
};

void verify_embedding(const Graph& g, const Graph& h, const std::vector<int>& map) {
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v)
            if (h.adjacent(u, v) != g.adjacent(map[u], map[v]))
                throw InternalError("embedding violates the induced condition");
}

}  // namespace

std::optional<Embedding> find_induced(const Graph& g, const Graph& h) {
    if (h.n() > g.n()) return std::nullopt;
    if (h.n() == 0) return Embedding{};
    Searcher s(g, h);
    if (!s.search(0, Bits(g.n()))) return std::nullopt;
    verify_embedding(g, h, s.map);
    return Embedding{s.map};
}

bool is_free(const Graph& g, const std::vector<Graph>& family) {
    for (const Graph& h : family)
        if (find_induced(g, h)) return false;
    return true;
}

}  // namespace hhfree
