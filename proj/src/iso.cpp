#include "hhfree/iso.hpp"

#include <algorithm>
#include <map>

namespace hhfree {

namespace {

using Coloring = std::vector<int>;

int color_count(const Coloring& c) {
    int mx = -1;
    for (int x : c) mx = std::max(mx, x);
    return mx + 1;
}

// One refinement round over a set of colorings that share a colour space.
// New ids are assigned in sorted signature order, so they are independent of
// vertex labels. Returns the new number of colours.
int refine_round(const std::vector<const Graph*>& gs, std::vector<Coloring*>& cols) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<std::vector<int>>> sigs(gs.size());
    for (size_t k = 0; k < gs.size(); ++k) {
        const Graph& g = *gs[k];
        const Coloring& c = *cols[k];
        sigs[k].resize(g.n());
        for (int v = 0; v < g.n(); ++v) {
            std::vector<int>& sig = sigs[k][v];
            sig.push_back(c[v]);
            for (int u = g.row(v).first(); u >= 0; u = g.row(v).next(u)) sig.push_back(c[u]);
            std::sort(sig.begin() + 1, sig.end());
            ids.emplace(sig, 0);
        }
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (size_t k = 0; k < gs.size(); ++k)
        for (int v = 0; v < gs[k]->n(); ++v) (*cols[k])[v] = ids[sigs[k][v]];
    return next;
}

void refine_stable(const Graph& g, Coloring& c) {
    std::vector<const Graph*> gs{&g};
    std::vector<Coloring*> cols{&c};
    int count = color_count(c);
    while (true) {
        int next = refine_round(gs, cols);
        if (next == count) return;
        count = next;
    }
}

// Joint refinement of two graphs in a shared colour space. Returns false as
// soon as the per-colour histograms diverge (the graphs cannot be isomorphic).
bool refine_stable_joint(const Graph& g, const Graph& h, Coloring& cg, Coloring& ch) {
    std::vector<const Graph*> gs{&g, &h};
    std::vector<Coloring*> cols{&cg, &ch};
    int count = std::max(color_count(cg), color_count(ch));
    while (true) {
        int next = refine_round(gs, cols);
        std::vector<int> histg(next, 0), histh(next, 0);
        for (int x : cg) ++histg[x];
        for (int x : ch) ++histh[x];
        if (histg != histh) return false;
        if (next == count) return true;
        count = next;
    }
}

std::vector<int> histogram(const Coloring& c) {
    std::vector<int> h(color_count(c), 0);
    for (int x : c) ++h[x];
    return h;
}

// Smallest non-singleton colour class; ties broken by smallest colour id.
// Returns -1 when the colouring is discrete.
int target_color(const Coloring& c) {
    std::vector<int> h = histogram(c);
    int best = -1;
    for (int col = 0; col < static_cast<int>(h.size()); ++col)
        if (h[col] >= 2 && (best < 0 || h[col] < h[best])) best = col;
    return best;
}

std::vector<uint8_t> pack_certificate(const Graph& g, const std::vector<int>& perm) {
    int n = g.n();
    std::vector<uint8_t> out;
    out.push_back(static_cast<uint8_t>((n >> 24) & 0xff));
    out.push_back(static_cast<uint8_t>((n >> 16) & 0xff));
    out.push_back(static_cast<uint8_t>((n >> 8) & 0xff));
    out.push_back(static_cast<uint8_t>(n & 0xff));
    int acc = 0, nacc = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = (acc << 1) | (g.adjacent(perm[i], perm[j]) ? 1 : 0);
            if (++nacc == 8) {
                out.push_back(static_cast<uint8_t>(acc));
                acc = 0;
                nacc = 0;
            }
        }
    if (nacc) out.push_back(static_cast<uint8_t>(acc << (8 - nacc)));
    return out;
}

struct CanonSearch {
    const Graph& g;
    bool have_best = false;
    std::vector<std::vector<int>> best_trace;
    std::vector<std::vector<int>> path_trace;
    std::vector<int> best_perm;
    std::vector<uint8_t> best_cert;

    explicit CanonSearch(const Graph& g_) : g(g_) {}

    // cmp: -1 current path already beats the best trace, 0 equal so far.
    void rec(Coloring colors, int cmp) {
        refine_stable(g, colors);
        std::vector<int> inv = histogram(colors);
        int level = static_cast<int>(path_trace.size());
        if (cmp == 0 && have_best) {
            if (inv > best_trace[level]) return;  // prune
            if (inv < best_trace[level]) cmp = -1;
        }
        path_trace.push_back(std::move(inv));
        int target = target_color(colors);
        if (target < 0) {
            std::vector<int> perm(g.n());
            for (int v = 0; v < g.n(); ++v) perm[colors[v]] = v;
            std::vector<uint8_t> cert = pack_certificate(g, perm);
            if (!have_best || cmp == -1 || cert < best_cert) {
                have_best = true;
                best_trace = path_trace;
                best_perm = std::move(perm);
                best_cert = std::move(cert);
            }
        } else {
            int fresh = color_count(colors);
            for (int v = 0; v < g.n(); ++v) {
                if (colors[v] != target) continue;
                Coloring branch = colors;
                branch[v] = fresh;
                rec(std::move(branch), cmp);
                if (cmp == -1 && have_best) cmp = 0;  // a best now exists on this path
            }
        }
        path_trace.pop_back();
    }
};

void verify_map(const Graph& g, const Graph& h, const std::vector<int>& f) {
    std::vector<bool> seen(h.n(), false);
    for (int v : f) {
        if (v < 0 || v >= h.n() || seen[v]) throw InternalError("isomorphism map is not a bijection");
        seen[v] = true;
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v) != h.adjacent(f[u], f[v]))
                throw InternalError("isomorphism map does not preserve adjacency");
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;

    bool rec(Coloring cg, Coloring ch, std::vector<int>& out) {
        if (!refine_stable_joint(g, h, cg, ch)) return false;
        int target = target_color(cg);
        if (target < 0) {
            std::vector<int> pos(color_count(ch), -1);
            for (int v = 0; v < h.n(); ++v) pos[ch[v]] = v;
            out.assign(g.n(), -1);
            for (int v = 0; v < g.n(); ++v) out[v] = pos[cg[v]];
            // Discrete matched colourings can still fail to be an
            // isomorphism; refinement only bounds the search.
            for (int u = 0; u < g.n(); ++u)
                for (int v = u + 1; v < g.n(); ++v)
                    if (g.adjacent(u, v) != h.adjacent(out[u], out[v])) return false;
            return true;
        }
        int v = -1;
        for (int x = 0; x < g.n(); ++x)
            if (cg[x] == target) {
                v = x;
                break;
            }
        int fresh = std::max(color_count(cg), color_count(ch));
        for (int w = 0; w < h.n(); ++w) {
            if (ch[w] != target) continue;
            Coloring cg2 = cg, ch2 = ch;
            cg2[v] = fresh;
            ch2[w] = fresh;
            if (rec(std::move(cg2), std::move(ch2), out)) return true;
        }
        return false;
    }
};

}  // namespace

std::string Canon::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(certificate.size() * 2);
    for (uint8_t b : certificate) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xf]);
    }
    return out;
}

Canon canonical_form(const Graph& g, int limit) {
    if (g.n() > limit)
        throw Error("canonical_form: graph has " + std::to_string(g.n()) +
                    " vertices, limit is " + std::to_string(limit));
    if (g.n() == 0) return Canon{{}, pack_certificate(g, {})};
    CanonSearch s(g);
    s.rec(Coloring(g.n(), 0), -1);
    return Canon{std::move(s.best_perm), std::move(s.best_cert)};
}

std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.m() != h.m()) return std::nullopt;
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
    if (g.n() == 0) return std::vector<int>{};
    IsoSearch s{g, h};
    std::vector<int> out;
    if (!s.rec(Coloring(g.n(), 0), Coloring(h.n(), 0), out)) return std::nullopt;
    verify_map(g, h, out);
    return out;
}

}  // namespace hhfree
