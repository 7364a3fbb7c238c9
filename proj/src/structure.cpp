#include "hhfree/structure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "hhfree/catalog.hpp"
#include "hhfree/iso.hpp"
#include "hhfree/subiso.hpp"

namespace hhfree {

namespace {

// Enumerate induced K5s in lexicographic order; the callback returns false to
// stop early.
void for_each_k5(const Graph& g, const std::function<bool(const std::array<int, 5>&)>& cb) {
    int n = g.n();
    std::array<int, 5> cur{};
    bool stopped = false;
    std::function<void(int, const Bits&)> rec = [&](int depth, const Bits& cand) {
        if (stopped) return;
        if (depth == 5) {
            stopped = !cb(cur);
            return;
        }
        int from = depth == 0 ? -1 : cur[depth - 1];
        for (int v = cand.next(from); v >= 0 && !stopped; v = cand.next(v)) {
            cur[depth] = v;
            rec(depth + 1, cand & g.row(v));
        }
    };
    rec(0, Bits::full(n));
}

std::vector<std::vector<int>> components_of_subset(const Graph& g, const std::vector<int>& subset) {
    Bits in = Bits::of(g.n(), subset);
    Bits seen(g.n());
    std::vector<std::vector<int>> out;
    for (int start : subset) {
        if (seen.test(start)) continue;
        std::vector<int> stack{start}, members;
        seen.set(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            Bits nb = g.row(v) & in;
            for (int u = nb.first(); u >= 0; u = nb.next(u))
                if (!seen.test(u)) {
                    seen.set(u);
                    stack.push_back(u);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

[[noreturn]] void throw_cohouse_witness(const Graph& g, const std::string& context) {
    auto emb = find_induced(g, make("crossed-house"));
    if (!emb) throw InternalError(context + ": decomposition failed on a co-(2P1+P3)-free graph");
    throw PreconditionError(context + ": input contains an induced co-(2P1+P3)", emb->map);
}

void verify_partition(const Graph& g, const K5Partition& part) {
    int n = g.n();
    Bits covered(n);
    auto mark = [&](const std::vector<int>& vs) {
        for (int v : vs) {
            if (covered.test(v)) throw InternalError("k5 partition: sets overlap");
            covered.set(v);
        }
    };
    for (const auto& cls : part.A) mark(cls);
    for (const auto& att : part.N) mark(att);
    mark(part.B);
    if (covered.count() != n) throw InternalError("k5 partition: sets do not cover V");
    if (part.p() < 5) throw InternalError("k5 partition: fewer than five classes");
    Bits core(n);
    for (const auto& cls : part.A)
        for (int v : cls) core.set(v);
    for (int v : part.k5)
        if (!core.test(v)) throw InternalError("k5 partition: clique not inside the core");
    // core is complete multipartite with the stated classes
    std::vector<int> cls_of(n, -1);
    for (int i = 0; i < part.p(); ++i)
        for (int v : part.A[i]) cls_of[v] = i;
    for (int u = core.first(); u >= 0; u = core.next(u))
        for (int v = core.next(u); v >= 0; v = core.next(v))
            if (g.adjacent(u, v) != (cls_of[u] != cls_of[v]))
                throw InternalError("k5 partition: core is not complete multipartite");
    // attachments touch their class and no other
    for (int i = 0; i < part.p(); ++i)
        for (int v : part.N[i]) {
            bool own = false;
            for (int u = core.first(); u >= 0; u = core.next(u))
                if (g.adjacent(v, u)) {
                    if (cls_of[u] != i) throw InternalError("k5 partition: attachment touches a foreign class");
                    own = true;
                }
            if (!own) throw InternalError("k5 partition: attachment without a class neighbour");
        }
    for (int v : part.B)
        for (int u = core.first(); u >= 0; u = core.next(u))
            if (g.adjacent(v, u)) throw InternalError("k5 partition: rest vertex touches the core");
}

struct DriverContext {
    std::string name;
    GiDriverTrace trace;

    bool oracle(const Graph& a, const Graph& b) {
        ++trace.oracle_calls;
        return are_isomorphic(a, b).has_value();
    }

    void record(DriverBranch branch, int gi, int hi, std::string note = {}) {
        trace.entries.push_back(TraceEntry{branch, gi, hi, std::move(note)});
    }
};

// Partitions of g keyed by distinct core sets L (same L means the identical
// partition).
std::vector<K5Partition> partitions_by_core(const Graph& g) {
    std::vector<K5Partition> out;
    std::set<std::vector<int>> seen;
    for (const auto& k : all_k5(g)) {
        K5Partition part = k5_extension_partition(g, k);
        if (seen.insert(part.L()).second) out.push_back(std::move(part));
    }
    return out;
}

int attachments_nonempty(const K5Partition& part) {
    int cnt = 0;
    for (const auto& att : part.N)
        if (!att.empty()) ++cnt;
    return cnt;
}

// ---- driver for the P5 companion class ----

// Type of a core: the sorted sizes of classes without attachments.
std::vector<int> core_type(const K5Partition& part) {
    std::vector<int> t;
    for (int i = 0; i < part.p(); ++i)
        if (part.N[i].empty()) t.push_back(static_cast<int>(part.A[i].size()));
    std::sort(t.begin(), t.end());
    return t;
}

std::map<std::vector<int>, int> type_census(const std::vector<K5Partition>& parts) {
    std::map<std::vector<int>, int> census;
    for (const auto& part : parts) ++census[core_type(part)];
    return census;
}

// Replace every detachable core part by a type-indexed biclique complete to
// the rest of its core. Detachable parts of distinct cores are disjoint, so
// the replacements commute; the result is K5-free.
Graph core_replacement(const Graph& g, const std::vector<K5Partition>& parts,
                       const std::map<std::vector<int>, int>& type_index) {
    int n0 = g.n();
    Bits removed(n0);
    struct Block {
        int type = 0;       // 1-based
        int anchor_min = 0;
        std::vector<int> anchors;  // old labels
    };
    std::vector<Block> blocks;
    for (const auto& part : parts) {
        Block blk;
        blk.type = type_index.at(core_type(part));
        std::vector<int> detach;
        for (int i = 0; i < part.p(); ++i) {
            auto& dst = part.N[i].empty() ? detach : blk.anchors;
            dst.insert(dst.end(), part.A[i].begin(), part.A[i].end());
        }
        if (detach.empty()) throw InternalError("core replacement: no detachable class");
        blk.anchor_min = *std::min_element(detach.begin(), detach.end());
        for (int v : detach) {
            if (removed.test(v)) throw InternalError("core replacement: detachable parts overlap");
            removed.set(v);
        }
        blocks.push_back(std::move(blk));
    }
    for (const Block& blk : blocks)
        for (int v : blk.anchors)
            if (removed.test(v)) throw InternalError("core replacement: anchor was detached");
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        return a.type != b.type ? a.type < b.type : a.anchor_min < b.anchor_min;
    });

    std::vector<int> relabel(n0, -1);
    int next = 0;
    for (int v = 0; v < n0; ++v)
        if (!removed.test(v)) relabel[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (relabel[u] >= 0 && relabel[v] >= 0) edges.emplace_back(relabel[u], relabel[v]);
    for (const Block& blk : blocks) {
        int side = n0 + blk.type;
        int s1 = next, s2 = next + side;
        next += 2 * side;
        for (int a = 0; a < side; ++a)
            for (int b = 0; b < side; ++b) edges.emplace_back(s1 + a, s2 + b);
        for (int v : blk.anchors)
            for (int a = 0; a < 2 * side; ++a) edges.emplace_back(relabel[v], s1 + a);
    }
    Graph out = Graph::build(next, edges);
    if (find_k5(out)) throw InternalError("core replacement left a K5 behind");
    return out;
}

bool t3_connected(DriverContext& ctx, const Graph& cg, const Graph& ch, int gi, int hi) {
    if (cg.n() != ch.n() || cg.m() != ch.m()) {
        ctx.record(DriverBranch::StructureMismatch, gi, hi, "size");
        return false;
    }
    std::vector<K5Partition> pg = partitions_by_core(cg);
    std::vector<K5Partition> ph = partitions_by_core(ch);
    if (pg.empty() || ph.empty()) {
        if (pg.empty() != ph.empty()) {
            ctx.record(DriverBranch::K5PresenceMismatch, gi, hi);
            return false;
        }
        ctx.record(DriverBranch::OracleK5Free, gi, hi);
        return ctx.oracle(cg, ch);
    }
    bool g3 = false, h3 = false;
    for (const auto& part : pg) g3 = g3 || attachments_nonempty(part) >= 3;
    for (const auto& part : ph) h3 = h3 || attachments_nonempty(part) >= 3;
    if (g3 || h3) {
        if (g3 != h3) {
            ctx.record(DriverBranch::StructureMismatch, gi, hi, "attachment profile");
            return false;
        }
        ctx.record(DriverBranch::BoundedCliquewidth, gi, hi);
        return ctx.oracle(cg, ch);
    }
    auto census_g = type_census(pg), census_h = type_census(ph);
    if (census_g != census_h) {
        ctx.record(DriverBranch::TypeCensusMismatch, gi, hi);
        return false;
    }
    std::map<std::vector<int>, int> type_index;
    int next = 1;
    for (const auto& [t, cnt] : census_g) type_index[t] = next++;
    Graph gp = core_replacement(cg, pg, type_index);
    Graph hp = core_replacement(ch, ph, type_index);
    ctx.record(DriverBranch::TypeReduction, gi, hi);
    return ctx.oracle(gp, hp);
}

// ---- driver for the P2+P3 companion class ----

void check_rest_comps_are_cliques(const Graph& g, const std::vector<std::vector<int>>& comps) {
    for (const auto& c : comps)
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = i + 1; j < c.size(); ++j)
                if (!g.adjacent(c[i], c[j]))
                    throw InternalError("rest graph has a non-clique component");
}

struct RestShape {
    std::vector<std::vector<int>> comps;
    int nontrivial = 0;
    int max_comp = 0;
};

RestShape rest_shape(const Graph& g, const K5Partition& part) {
    RestShape shape;
    shape.comps = components_of_subset(g, part.D());
    check_rest_comps_are_cliques(g, shape.comps);
    for (const auto& c : shape.comps) {
        if (c.size() >= 2) ++shape.nontrivial;
        shape.max_comp = std::max(shape.max_comp, static_cast<int>(c.size()));
    }
    return shape;
}

// Census that any core-respecting isomorphism must preserve.
struct CoreCensus {
    std::vector<std::pair<int, int>> class_profile;  // sorted (|A_i|, |N_i|)
    int b_size = 0;
    bool operator==(const CoreCensus&) const = default;
};

CoreCensus core_census(const K5Partition& part) {
    CoreCensus c;
    for (int i = 0; i < part.p(); ++i)
        c.class_profile.emplace_back(static_cast<int>(part.A[i].size()),
                                     static_cast<int>(part.N[i].size()));
    std::sort(c.class_profile.begin(), c.class_profile.end());
    c.b_size = static_cast<int>(part.B.size());
    return c;
}

std::vector<int> special_classes(const K5Partition& part) {
    std::vector<int> out;
    for (int i = 0; i < part.p(); ++i)
        if (!part.N[i].empty()) out.push_back(i);
    return out;
}

void check_nonspecial_singletons(const K5Partition& part) {
    for (int i = 0; i < part.p(); ++i)
        if (part.N[i].empty() && part.A[i].size() != 1)
            throw InternalError("class without attachments is not a singleton");
}

// Case 2: drop all but five classes; the dropped vertices have closed
// neighbourhood equal to the core and are interchangeable.
Graph case2_reduced(const Graph& g, const K5Partition& part) {
    std::vector<int> specials = special_classes(part);
    if (specials.size() > 2) throw InternalError("more than two classes carry attachments");
    check_nonspecial_singletons(part);
    std::vector<bool> keep_class(part.p(), false);
    int kept = 0;
    for (int i : specials) {
        keep_class[i] = true;
        ++kept;
    }
    for (int i = 0; i < part.p() && kept < 5; ++i)
        if (!keep_class[i]) {
            keep_class[i] = true;
            ++kept;
        }
    std::vector<int> vertices = part.D();
    for (int i = 0; i < part.p(); ++i)
        if (keep_class[i]) vertices.insert(vertices.end(), part.A[i].begin(), part.A[i].end());
    std::sort(vertices.begin(), vertices.end());
    return induced(g, vertices);
}

struct Case3Data {
    int special = -1;
    std::optional<int> isolated_core_vertex;  // the at-most-one class vertex anti-complete to D
    int a_star_size = 0;
    bool small_rest_empty = true;
    std::vector<std::pair<int, int>> big_census;  // sorted (|C|, |C cap B|)
    Graph reduced;                                // small rest + core minus the isolated vertex
};

Case3Data case3_data(const Graph& g, const K5Partition& part, const RestShape& shape) {
    Case3Data data;
    std::vector<int> specials = special_classes(part);
    if (specials.size() != 1) throw InternalError("K4-bearing rest attaches to several classes");
    check_nonspecial_singletons(part);
    data.special = specials[0];
    const std::vector<int>& a1 = part.A[data.special];

    Bits in_b = Bits::of(g.n(), part.B);
    for (int v : a1) {
        bool anti = false;
        for (const auto& comp : shape.comps) {
            int nonnbrs = 0;
            for (int u : comp)
                if (!g.adjacent(v, u)) ++nonnbrs;
            if (nonnbrs >= 2 && comp.size() >= 2) anti = true;
        }
        if (!anti) continue;
        if (data.isolated_core_vertex)
            throw InternalError("two class vertices anti-complete to the rest");
        for (const auto& comp : shape.comps)
            for (int u : comp)
                if (g.adjacent(v, u)) throw InternalError("anti-complete class vertex has a rest neighbour");
        data.isolated_core_vertex = v;
    }
    data.a_star_size = static_cast<int>(a1.size()) - (data.isolated_core_vertex ? 1 : 0);

    std::vector<int> reduced_vertices;
    for (const auto& comp : shape.comps) {
        if (comp.size() >= 4) {
            int in_b_count = 0;
            for (int u : comp)
                if (in_b.test(u)) ++in_b_count;
            data.big_census.emplace_back(static_cast<int>(comp.size()), in_b_count);
        } else {
            data.small_rest_empty = false;
            reduced_vertices.insert(reduced_vertices.end(), comp.begin(), comp.end());
        }
    }
    std::sort(data.big_census.begin(), data.big_census.end());
    for (int v : part.L())
        if (!data.isolated_core_vertex || v != *data.isolated_core_vertex)
            reduced_vertices.push_back(v);
    std::sort(reduced_vertices.begin(), reduced_vertices.end());
    data.reduced = induced(g, reduced_vertices);
    return data;
}

bool t4_connected(DriverContext& ctx, const Graph& cg, const Graph& ch, int gi, int hi) {
    if (cg.n() != ch.n() || cg.m() != ch.m()) {
        ctx.record(DriverBranch::StructureMismatch, gi, hi, "size");
        return false;
    }
    std::optional<std::array<int, 5>> kg = find_k5(cg);
    std::optional<std::array<int, 5>> kh = find_k5(ch);
    if (!kg || !kh) {
        if (kg.has_value() != kh.has_value()) {
            ctx.record(DriverBranch::K5PresenceMismatch, gi, hi);
            return false;
        }
        ctx.record(DriverBranch::OracleK5Free, gi, hi);
        return ctx.oracle(cg, ch);
    }
    // one fixed clique on the left, every core on the right
    K5Partition pg = k5_extension_partition(cg, *kg);
    RestShape sg = rest_shape(cg, pg);

    if (sg.nontrivial <= 1) {
        ctx.record(DriverBranch::Case1BoundedCw, gi, hi);
        return ctx.oracle(cg, ch);
    }

    std::vector<K5Partition> ph_all = partitions_by_core(ch);
    if (sg.max_comp <= 3) {
        ctx.record(DriverBranch::Case2K4Free, gi, hi);
        CoreCensus cg_census = core_census(pg);
        Graph g_red = case2_reduced(cg, pg);
        for (const K5Partition& ph : ph_all) {
            RestShape sh = rest_shape(ch, ph);
            if (sh.nontrivial <= 1 || sh.max_comp > 3) continue;
            if (!(core_census(ph) == cg_census)) continue;
            if (ctx.oracle(g_red, case2_reduced(ch, ph))) return true;
        }
        return false;
    }

    ctx.record(DriverBranch::Case3K4, gi, hi);
    Case3Data dg = case3_data(cg, pg, sg);
    for (const K5Partition& ph : ph_all) {
        RestShape sh = rest_shape(ch, ph);
        if (sh.nontrivial <= 1 || sh.max_comp <= 3) continue;
        Case3Data dh = case3_data(ch, ph, sh);
        if (dg.isolated_core_vertex.has_value() != dh.isolated_core_vertex.has_value()) continue;
        if (dg.big_census != dh.big_census) continue;
        if (dg.small_rest_empty != dh.small_rest_empty) continue;
        if (dg.small_rest_empty && dg.a_star_size != dh.a_star_size) continue;
        if (!ctx.oracle(dg.reduced, dh.reduced)) continue;
        return true;
    }
    return false;
}

using ConnectedSolver = std::function<bool(DriverContext&, const Graph&, const Graph&, int, int)>;

bool solve_componentwise(DriverContext& ctx, const Graph& g, const Graph& h,
                         const ConnectedSolver& solver) {
    std::vector<Component> cg = components(g), ch = components(h);
    std::vector<size_t> sizes_g, sizes_h;
    for (const auto& c : cg) sizes_g.push_back(c.vertices.size());
    for (const auto& c : ch) sizes_h.push_back(c.vertices.size());
    std::sort(sizes_g.begin(), sizes_g.end());
    std::sort(sizes_h.begin(), sizes_h.end());
    if (sizes_g != sizes_h) {
        ctx.record(DriverBranch::StructureMismatch, -1, -1, "component census");
        return false;
    }
    std::vector<bool> used(ch.size(), false);
    for (size_t i = 0; i < cg.size(); ++i) {
        Graph gc = induced(g, cg[i].vertices);
        bool matched = false;
        for (size_t j = 0; j < ch.size() && !matched; ++j) {
            if (used[j] || ch[j].vertices.size() != cg[i].vertices.size()) continue;
            Graph hc = induced(h, ch[j].vertices);
            if (solver(ctx, gc, hc, static_cast<int>(i), static_cast<int>(j))) {
                used[j] = true;
                matched = true;
            }
        }
        if (!matched) return false;
    }
    return true;
}

void check_driver_inputs(const std::string& name, const Graph& g, const Graph& h,
                         const std::vector<std::pair<std::string, Graph>>& family) {
    for (const auto* side : {&g, &h}) {
        for (const auto& [fname, fg] : family) {
            auto emb = find_induced(*side, fg);
            if (emb)
                throw PreconditionError(name + ": input " + (side == &g ? "G" : "H") +
                                            " contains an induced " + fname,
                                        emb->map);
        }
    }
}

}  // namespace

std::vector<int> K5Partition::L() const {
    std::vector<int> out;
    for (const auto& cls : A) out.insert(out.end(), cls.begin(), cls.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> K5Partition::D() const {
    Bits core = Bits::of(n, L());
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (!core.test(v)) out.push_back(v);
    return out;
}

std::optional<std::array<int, 5>> find_k5(const Graph& g) {
    std::optional<std::array<int, 5>> out;
    for_each_k5(g, [&](const std::array<int, 5>& k) {
        out = k;
        return false;
    });
    return out;
}

std::vector<std::array<int, 5>> all_k5(const Graph& g) {
    std::vector<std::array<int, 5>> out;
    for_each_k5(g, [&](const std::array<int, 5>& k) {
        out.push_back(k);
        return true;
    });
    return out;
}

K5Partition k5_extension_partition(const Graph& g, const std::array<int, 5>& k) {
    for (int i = 0; i < 5; ++i) {
        if (k[i] < 0 || k[i] >= g.n()) throw Error("k5_extension_partition: vertex out of range");
        for (int j = i + 1; j < 5; ++j)
            if (!g.adjacent(k[i], k[j]))
                throw Error("k5_extension_partition: the given set does not induce a K5");
    }
    Bits in_k = Bits::of(g.n(), {k.begin(), k.end()});
    // core = clique plus every vertex with at most one non-neighbour in it
    std::vector<int> core_vertices;
    for (int v = 0; v < g.n(); ++v) {
        if (in_k.test(v)) {
            core_vertices.push_back(v);
            continue;
        }
        if ((g.row(v) & in_k).count() >= 4) core_vertices.push_back(v);
    }
    Graph core = induced(g, core_vertices);
    auto classes_local = is_complete_multipartite(core);
    if (!classes_local) throw_cohouse_witness(g, "k5_extension_partition");

    K5Partition part;
    part.n = g.n();
    part.k5.assign(k.begin(), k.end());
    std::sort(part.k5.begin(), part.k5.end());
    for (const auto& cls : *classes_local) {
        std::vector<int> orig;
        for (int v : cls) orig.push_back(core_vertices[v]);
        part.A.push_back(std::move(orig));
    }
    std::sort(part.A.begin(), part.A.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a[0] < b[0];
    });
    if (part.p() < 5) throw InternalError("k5_extension_partition: fewer than five classes");

    std::vector<int> cls_of(g.n(), -1);
    for (int i = 0; i < part.p(); ++i)
        for (int v : part.A[i]) cls_of[v] = i;
    Bits in_core = Bits::of(g.n(), core_vertices);
    part.N.assign(part.p(), {});
    for (int v = 0; v < g.n(); ++v) {
        if (in_core.test(v)) continue;
        Bits nb = g.row(v) & in_core;
        int cls = -1;
        for (int u = nb.first(); u >= 0; u = nb.next(u)) {
            if (cls >= 0 && cls_of[u] != cls) throw_cohouse_witness(g, "k5_extension_partition");
            cls = cls_of[u];
        }
        if (cls < 0)
            part.B.push_back(v);
        else
            part.N[cls].push_back(v);
    }
    verify_partition(g, part);
    return part;
}

Graph add_false_twin(const Graph& g, int x) {
    if (x < 0 || x >= g.n()) throw Error("add_false_twin: vertex out of range");
    std::vector<std::pair<int, int>> edges = g.edges();
    int nv = g.n();
    for (int u = g.row(x).first(); u >= 0; u = g.row(x).next(u)) edges.emplace_back(nv, u);
    return Graph::build(nv + 1, edges);
}

std::string to_string(DriverBranch b) {
    switch (b) {
        case DriverBranch::OracleK5Free: return "oracle-k5-free";
        case DriverBranch::K5PresenceMismatch: return "k5-presence-mismatch";
        case DriverBranch::BoundedCliquewidth: return "bounded-cliquewidth";
        case DriverBranch::StructureMismatch: return "structure-mismatch";
        case DriverBranch::TypeCensusMismatch: return "type-census-mismatch";
        case DriverBranch::TypeReduction: return "type-reduction";
        case DriverBranch::Case1BoundedCw: return "case1-bounded-cw";
        case DriverBranch::Case2K4Free: return "case2-k4-free";
        case DriverBranch::Case3K4: return "case3-k4";
    }
    return "?";
}

std::pair<bool, GiDriverTrace> solve_gi_cohouse_p5(const Graph& g, const Graph& h) {
    DriverContext ctx{"solve_gi_cohouse_p5", {}};
    check_driver_inputs(ctx.name, g, h,
                        {{"co-(2P1+P3)", make("crossed-house")}, {"P5", make("P5")}});
    bool verdict = solve_componentwise(ctx, g, h, t3_connected);
    return {verdict, std::move(ctx.trace)};
}

std::pair<bool, GiDriverTrace> solve_gi_cohouse_p2p3(const Graph& g, const Graph& h) {
    DriverContext ctx{"solve_gi_cohouse_p2p3", {}};
    check_driver_inputs(ctx.name, g, h,
                        {{"co-(2P1+P3)", make("crossed-house")}, {"P2+P3", make("P2+P3")}});
    bool verdict = solve_componentwise(ctx, g, h, t4_connected);
    return {verdict, std::move(ctx.trace)};
}

}  // namespace hhfree
