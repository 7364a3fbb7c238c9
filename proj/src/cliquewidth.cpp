#include "hhfree/cliquewidth.hpp"

#include <algorithm>
#include <map>

#include "hhfree/reductions.hpp"
#include "hhfree/catalog.hpp"

namespace hhfree {

namespace {

struct Labeled {
    std::vector<int> labels;
    std::vector<std::pair<int, int>> edges;
};

Labeled eval_node(const CwExpression& expr, int idx) {
    const auto& node = expr.nodes[idx];
    auto check_label = [&](int l) {
        if (l < 1 || l > expr.label_count)
            throw Error("expression label " + std::to_string(l) + " outside 1.." +
                        std::to_string(expr.label_count));
    };
    switch (node.op) {
        case CwExpression::Op::Create: {
            check_label(node.a);
            return Labeled{{node.a}, {}};
        }
        case CwExpression::Op::Union: {
            Labeled l = eval_node(expr, node.left);
            Labeled r = eval_node(expr, node.right);
            int off = static_cast<int>(l.labels.size());
            for (int lab : r.labels) l.labels.push_back(lab);
            for (auto [u, v] : r.edges) l.edges.emplace_back(u + off, v + off);
            return l;
        }
        case CwExpression::Op::Join: {
            check_label(node.a);
            check_label(node.b);
            if (node.a == node.b) throw Error("join needs two distinct labels");
            Labeled l = eval_node(expr, node.left);
            int n = static_cast<int>(l.labels.size());
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if ((l.labels[u] == node.a && l.labels[v] == node.b) ||
                        (l.labels[u] == node.b && l.labels[v] == node.a))
                        l.edges.emplace_back(u, v);
            return l;
        }
        case CwExpression::Op::Rename: {
            check_label(node.a);
            check_label(node.b);
            Labeled l = eval_node(expr, node.left);
            for (int& lab : l.labels)
                if (lab == node.a) lab = node.b;
            return l;
        }
    }
    throw Error("malformed expression");
}

// ---- exact search ----------------------------------------------------------
//
// A search state is a labeled graph built so far, recorded as the vertex set
// S, the partition of S into label classes, and the set of edges of G inside
// S that the expression has not yet created ("missing"). Two facts keep the
// space small:
//   - vertices sharing a label are treated identically by every later
//     operation, so they must have identical neighbourhoods outside S, and a
//     missing edge between two classes forces every pair between those
//     classes to be a G-edge (the covering join adds them all);
//   - a missing edge inside one class can never be created.
// States violating either can never evaluate to G and are dropped.

using Mask = uint32_t;

struct State {
    std::vector<Mask> classes;  // sorted ascending
    uint64_t missing = 0;       // triangular pair bitmap

    bool operator==(const State& o) const { return classes == o.classes && missing == o.missing; }
    bool operator<(const State& o) const {
        if (missing != o.missing) return missing < o.missing;
        return classes < o.classes;
    }
};

struct Prov {
    enum Kind { Leaf, Union, Join, Merge } kind;
    int p1 = -1, p2 = -1;  // arena ids of parents
    int i = 0, j = 0;      // class indices into the parent's canonical order
    std::vector<std::pair<int, int>> matching;  // Union: (class of p1, class of p2)
    int vertex = -1;       // Leaf
    State state;
};

struct Search {
    const Graph& g;
    int n, k;
    std::vector<Mask> adj;  // adjacency masks
    std::vector<Prov> arena;
    std::vector<std::map<State, int>> reach;  // per subset: state -> arena id

    Search(const Graph& g_, int k_) : g(g_), n(g_.n()), k(k_) {
        adj.assign(n, 0);
        for (auto [u, v] : g.edges()) {
            adj[u] |= Mask{1} << v;
            adj[v] |= Mask{1} << u;
        }
        reach.assign(size_t{1} << n, {});
    }

    int pair_index(int u, int v) const {  // u < v
        return u * n - u * (u + 1) / 2 + (v - u - 1);
    }

    uint64_t pairs_between(Mask a, Mask b) const {
        uint64_t out = 0;
        for (int u = 0; u < n; ++u) {
            if (!((a >> u) & 1)) continue;
            Mask rest = b & ~(Mask{1} << u);
            for (int v = 0; v < n; ++v)
                if ((rest >> v) & 1) out |= uint64_t{1} << (u < v ? pair_index(u, v) : pair_index(v, u));
        }
        return out;
    }

    // Every pair with one end in a, the other in b, is an edge of G.
    bool fully_adjacent(Mask a, Mask b) const {
        for (int u = 0; u < n; ++u)
            if ((a >> u) & 1)
                if ((b & ~(Mask{1} << u) & ~adj[u]) != 0) return false;
        return true;
    }

    // G-edges crossing between disjoint masks, as a pair bitmap.
    uint64_t cross_edges(Mask a, Mask b) const {
        uint64_t out = 0;
        for (int u = 0; u < n; ++u)
            if ((a >> u) & 1) {
                Mask hits = adj[u] & b;
                for (int v = 0; v < n; ++v)
                    if ((hits >> v) & 1) out |= uint64_t{1} << (u < v ? pair_index(u, v) : pair_index(v, u));
            }
        return out;
    }

    bool has_cross_edge(Mask a, Mask b) const {
        for (int u = 0; u < n; ++u)
            if ((a >> u) & 1 && (adj[u] & b)) return true;
        return false;
    }

    // Valid states keep outside-of-S neighbourhoods uniform within every
    // class, so one representative row suffices.
    Mask outside_nbrs(Mask cls, Mask s) const {
        int v = __builtin_ctz(cls);
        return adj[v] & ~s;
    }

    bool state_valid(const State& st) const {
        for (size_t i = 0; i < st.classes.size(); ++i) {
            if (st.missing & pairs_between(st.classes[i], st.classes[i])) return false;
            for (size_t j = i + 1; j < st.classes.size(); ++j) {
                uint64_t p = pairs_between(st.classes[i], st.classes[j]);
                if ((st.missing & p) && !fully_adjacent(st.classes[i], st.classes[j])) return false;
            }
        }
        return true;
    }

    void canonicalize(State& st) const { std::sort(st.classes.begin(), st.classes.end()); }

    // Insert a state (and its closure under join/rename) for subset s.
    void add_state(Mask s, State st, Prov prov) {
        canonicalize(st);
        if (!state_valid(st)) return;
        auto [it, inserted] = reach[s].emplace(st, -1);
        if (!inserted) return;
        prov.state = st;
        arena.push_back(std::move(prov));
        it->second = static_cast<int>(arena.size()) - 1;
        int id = it->second;

        int nc = static_cast<int>(st.classes.size());
        for (int i = 0; i < nc; ++i)
            for (int j = 0; j < nc; ++j) {
                if (i == j) continue;
                if (i < j) {
                    // join classes i and j
                    if (fully_adjacent(st.classes[i], st.classes[j])) {
                        uint64_t p = pairs_between(st.classes[i], st.classes[j]);
                        if (st.missing & p) {
                            State nxt = st;
                            nxt.missing &= ~p;
                            Prov np;
                            np.kind = Prov::Join;
                            np.p1 = id;
                            np.i = i;
                            np.j = j;
                            add_state(s, std::move(nxt), std::move(np));
                        }
                    }
                }
                if (i < j) {
                    // merge class i into class j (rename)
                    Mask a = st.classes[i], b = st.classes[j];
                    if (st.missing & pairs_between(a, b)) continue;
                    if (outside_nbrs(a, s) != outside_nbrs(b, s)) continue;
                    State nxt;
                    nxt.missing = st.missing;
                    for (int t = 0; t < nc; ++t)
                        if (t != i && t != j) nxt.classes.push_back(st.classes[t]);
                    nxt.classes.push_back(a | b);
                    Prov np;
                    np.kind = Prov::Merge;
                    np.p1 = id;
                    np.i = i;
                    np.j = j;
                    add_state(s, std::move(nxt), std::move(np));
                }
            }
    }

    // Enumerate partial matchings between the classes of two states and emit
    // every union state within the label budget.
    void unions(Mask s, int id1, int id2, Mask s1, Mask s2) {
        // copies: add_state grows the arena, invalidating references into it
        const State a = arena[id1].state;
        const State b = arena[id2].state;
        int ca = static_cast<int>(a.classes.size());
        int cb = static_cast<int>(b.classes.size());
        uint64_t base_missing = a.missing | b.missing | cross_edges(s1, s2);

        std::vector<std::pair<int, int>> match;
        std::vector<bool> used_b(cb, false);

        auto emit = [&]() {
            int total = ca + cb - static_cast<int>(match.size());
            if (total > k) return;
            State st;
            st.missing = base_missing;
            std::vector<bool> a_matched(ca, false), b_matched(cb, false);
            for (auto [i, j] : match) {
                st.classes.push_back(a.classes[i] | b.classes[j]);
                a_matched[i] = true;
                b_matched[j] = true;
            }
            for (int i = 0; i < ca; ++i)
                if (!a_matched[i]) st.classes.push_back(a.classes[i]);
            for (int j = 0; j < cb; ++j)
                if (!b_matched[j]) st.classes.push_back(b.classes[j]);
            Prov np;
            np.kind = Prov::Union;
            np.p1 = id1;
            np.p2 = id2;
            np.matching = match;
            add_state(s, std::move(st), std::move(np));
        };

        // depth-first over match choices for each class of `a`
        auto rec = [&](auto&& self, int i) -> void {
            if (i == ca) {
                emit();
                return;
            }
            self(self, i + 1);  // leave class i unmatched
            for (int j = 0; j < cb; ++j) {
                if (used_b[j]) continue;
                Mask ma = a.classes[i], mb = b.classes[j];
                if (has_cross_edge(ma, mb)) continue;  // would trap a missing edge in-class
                if (outside_nbrs(ma, s) != outside_nbrs(mb, s)) continue;
                used_b[j] = true;
                match.emplace_back(i, j);
                self(self, i + 1);
                match.pop_back();
                used_b[j] = false;
            }
        };
        rec(rec, 0);
    }

    std::optional<int> run() {
        Mask full = (n >= 32) ? ~Mask{0} : ((Mask{1} << n) - 1);
        for (int v = 0; v < n; ++v) {
            Prov np;
            np.kind = Prov::Leaf;
            np.vertex = v;
            State st;
            st.classes.push_back(Mask{1} << v);
            add_state(Mask{1} << v, std::move(st), std::move(np));
        }
        std::vector<Mask> order;
        for (Mask s = 1; s <= full; ++s)
            if (__builtin_popcount(s) >= 2) order.push_back(s);
        std::sort(order.begin(), order.end(), [](Mask x, Mask y) {
            int px = __builtin_popcount(x), py = __builtin_popcount(y);
            return px != py ? px < py : x < y;
        });
        for (Mask s : order) {
            Mask low = s & (~s + 1);
            // proper submasks containing the lowest bit
            for (Mask s1 = (s - 1) & s; s1 > 0; s1 = (s1 - 1) & s) {
                if (!(s1 & low)) continue;
                Mask s2 = s & ~s1;
                if (s2 == 0) continue;
                for (auto& [st1, id1] : reach[s1])
                    for (auto& [st2, id2] : reach[s2]) unions(s, id1, id2, s1, s2);
            }
        }
        for (auto& [st, id] : reach[full])
            if (st.missing == 0) return id;
        return std::nullopt;
    }

    // ---- witness reconstruction ----

    std::vector<int> leaf_order;  // create order -> original vertex

    int emit_node(CwExpression& expr, CwExpression::Node node) {
        expr.nodes.push_back(node);
        return static_cast<int>(expr.nodes.size()) - 1;
    }

    // `targets` assigns a label (1..k) to each class of arena[id].state, in
    // canonical class order.
    int rebuild(CwExpression& expr, int id, const std::vector<int>& targets) {
        const Prov& p = arena[id];
        const State& st = p.state;
        switch (p.kind) {
            case Prov::Leaf:
                leaf_order.push_back(p.vertex);
                return emit_node(expr, {CwExpression::Op::Create, targets[0], 0, -1, -1});
            case Prov::Join: {
                const State& parent = arena[p.p1].state;
                // same partition: map targets through equal class masks
                std::vector<int> pt(parent.classes.size());
                for (size_t x = 0; x < parent.classes.size(); ++x) {
                    auto it = std::find(st.classes.begin(), st.classes.end(), parent.classes[x]);
                    pt[x] = targets[it - st.classes.begin()];
                }
                int child = rebuild(expr, p.p1, pt);
                return emit_node(expr, {CwExpression::Op::Join, pt[p.i], pt[p.j], child, -1});
            }
            case Prov::Merge: {
                const State& parent = arena[p.p1].state;
                Mask merged = parent.classes[p.i] | parent.classes[p.j];
                auto mit = std::find(st.classes.begin(), st.classes.end(), merged);
                int merged_target = targets[mit - st.classes.begin()];
                std::vector<int> pt(parent.classes.size(), 0);
                std::vector<bool> used(k + 1, false);
                used[merged_target] = true;
                for (size_t x = 0; x < parent.classes.size(); ++x) {
                    if (static_cast<int>(x) == p.i || static_cast<int>(x) == p.j) continue;
                    auto it = std::find(st.classes.begin(), st.classes.end(), parent.classes[x]);
                    pt[x] = targets[it - st.classes.begin()];
                    used[pt[x]] = true;
                }
                pt[p.j] = merged_target;
                int free_label = 0;
                for (int l = 1; l <= k; ++l)
                    if (!used[l]) {
                        free_label = l;
                        break;
                    }
                if (free_label == 0) throw InternalError("no free label during rebuild");
                pt[p.i] = free_label;
                int child = rebuild(expr, p.p1, pt);
                return emit_node(expr, {CwExpression::Op::Rename, free_label, merged_target, child, -1});
            }
            case Prov::Union: {
                const State& a = arena[p.p1].state;
                const State& b = arena[p.p2].state;
                auto target_of = [&](Mask part) {
                    for (size_t x = 0; x < st.classes.size(); ++x)
                        if ((st.classes[x] & part) == part) return targets[x];
                    throw InternalError("class lost during rebuild");
                };
                std::vector<int> ta(a.classes.size()), tb(b.classes.size());
                for (size_t x = 0; x < a.classes.size(); ++x) ta[x] = target_of(a.classes[x]);
                for (size_t x = 0; x < b.classes.size(); ++x) tb[x] = target_of(b.classes[x]);
                int left = rebuild(expr, p.p1, ta);
                int right = rebuild(expr, p.p2, tb);
                return emit_node(expr, {CwExpression::Op::Union, 0, 0, left, right});
            }
        }
        throw InternalError("malformed provenance");
    }
};

}  // namespace

Graph evaluate(const CwExpression& expr) {
    if (expr.root < 0) return Graph::build(0, {});
    Labeled l = eval_node(expr, expr.root);
    return Graph::build(static_cast<int>(l.labels.size()), l.edges);
}

std::optional<CwResult> exact_cliquewidth(const Graph& g, int limit) {
    if (g.n() > kCliquewidthCap)
        throw Error("exact_cliquewidth: graph has " + std::to_string(g.n()) +
                    " vertices, cap is " + std::to_string(kCliquewidthCap));
    if (limit < 1) return std::nullopt;
    if (g.n() == 0) return CwResult{0, CwExpression{}};
    for (int k = 1; k <= std::min(limit, std::max(1, g.n())); ++k) {
        Search search(g, k);
        std::optional<int> goal = search.run();
        if (!goal) continue;
        CwExpression expr;
        expr.label_count = k;
        const State& st = search.arena[*goal].state;
        std::vector<int> targets(st.classes.size());
        for (size_t i = 0; i < targets.size(); ++i) targets[i] = static_cast<int>(i) + 1;
        expr.root = search.rebuild(expr, *goal, targets);
        Graph check = evaluate(expr);
        // evaluate() numbers vertices by create order; compare against g
        // relabeled the same way.
        if (check.n() != g.n()) throw InternalError("clique-width witness has wrong size");
        for (int i = 0; i < check.n(); ++i)
            for (int j = i + 1; j < check.n(); ++j)
                if (check.adjacent(i, j) != g.adjacent(search.leaf_order[i], search.leaf_order[j]))
                    throw InternalError("clique-width witness does not evaluate to the input");
        return CwResult{k, std::move(expr)};
    }
    return std::nullopt;
}

int verify_grid_certificate(const Graph& g, const GridPartitionCertificate& cert) {
    int n = cert.n, m = cert.m;
    if (m < 1) throw Error("grid certificate: m must be >= 1");
    if (n <= m + 1) throw Error("grid certificate: need n > m + 1");
    if (static_cast<int>(cert.cell.size()) != g.n())
        throw Error("grid certificate: expected one cell per vertex");
    for (int v = 0; v < g.n(); ++v) {
        auto [i, j] = cert.cell[v];
        if (i < 1 || i > n || j < 1 || j > n)
            throw Error("grid certificate: vertex " + std::to_string(v) + " has cell (" +
                        std::to_string(i) + "," + std::to_string(j) + ") outside the grid");
    }
    // premise 1: every cell non-empty
    std::vector<std::vector<int>> count(n + 1, std::vector<int>(n + 1, 0));
    for (int v = 0; v < g.n(); ++v) ++count[cert.cell[v].first][cert.cell[v].second];
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (count[i][j] == 0)
                throw CertificateError(1, "cell (" + std::to_string(i) + "," + std::to_string(j) +
                                              ") is empty");
    // premise 2: row unions connected
    for (int i = 1; i <= n; ++i) {
        std::vector<int> row;
        for (int v = 0; v < g.n(); ++v)
            if (cert.cell[v].first == i) row.push_back(v);
        if (!is_connected(induced(g, row)))
            throw CertificateError(2, "row " + std::to_string(i) + " does not induce a connected graph");
    }
    // premise 3: column unions connected
    for (int j = 1; j <= n; ++j) {
        std::vector<int> col;
        for (int v = 0; v < g.n(); ++v)
            if (cert.cell[v].second == j) col.push_back(v);
        if (!is_connected(induced(g, col)))
            throw CertificateError(3, "column " + std::to_string(j) + " does not induce a connected graph");
    }
    // premise 4: adjacency only between cells within distance m per axis
    for (auto [u, v] : g.edges()) {
        auto [i, j] = cert.cell[u];
        auto [kk, ll] = cert.cell[v];
        if (std::abs(kk - i) > m || std::abs(ll - j) > m)
            throw CertificateError(4, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                          ") joins cell (" + std::to_string(i) + "," + std::to_string(j) +
                                          ") to cell (" + std::to_string(kk) + "," + std::to_string(ll) + ")");
    }
    return (n - 1) / (m + 1) + 1;
}

std::pair<Graph, GridPartitionCertificate> build_hn_prime(int n) {
    if (n < 3) throw Error("build_hn_prime: need n >= 3");
    Graph grid = make_grid(n);
    GadgetGraph q = reduce_gem_p1_2p2(grid);
    int total = q.graph.n();
    std::vector<int> a_side, b_side;
    for (int v = 0; v < total; ++v)
        (q.parts[v] == Role::A ? a_side : b_side).push_back(v);
    // matched construction-side neighbour of each B-vertex (its unique
    // A-neighbour before complementation)
    std::vector<int> matched_class(total, -1);
    Bits a_mask = Bits::of(total, a_side);
    for (int b : b_side) {
        Bits hits = q.graph.row(b) & a_mask;
        if (hits.count() != 1) throw InternalError("gem gadget matching is not a matching");
        matched_class[b] = q.part_classes[hits.first()];
    }
    Graph hp = subgraph_complementation(subgraph_complementation(q.graph, a_side), b_side);
    GridPartitionCertificate cert;
    cert.n = n;
    cert.m = 1;
    cert.cell.assign(total, {0, 0});
    auto cell_of = [n](int grid_vertex) {
        return std::pair<int, int>{grid_vertex / n + 1, grid_vertex % n + 1};
    };
    for (int v = 0; v < total; ++v)
        cert.cell[v] = cell_of(q.parts[v] == Role::A ? q.part_classes[v] : matched_class[v]);
    return {std::move(hp), std::move(cert)};
}

}  // namespace hhfree
