#include "hhfree/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "hhfree/subiso.hpp"

namespace hhfree {

namespace {

Graph path(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph::build(k, e);
}

Graph cycle(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph::build(k, e);
}

Graph complete(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph::build(k, e);
}

Graph star(int t) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= t; ++i) e.emplace_back(0, i);
    return Graph::build(t + 1, e);
}

// Star with one edge subdivided `subdiv` times (1 or 2). Vertex 0 is the
// centre, 1..t-1 plain leaves, then the subdivided leg.
Graph star_subdivided(int t, int subdiv) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= t - 1; ++i) e.emplace_back(0, i);
    int prev = 0;
    for (int s = 0; s <= subdiv; ++s) {
        e.emplace_back(prev, t + s);
        prev = t + s;
    }
    return Graph::build(t + 1 + subdiv, e);
}

Graph subdivided_claw(int h, int i, int j) {
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int len : {h, i, j}) {
        int prev = 0;
        for (int s = 0; s < len; ++s) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::build(1 + h + i + j, e);
}

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& str) : s(str) {}

    [[noreturn]] void fail(const std::string& why) {
        throw Error("cannot parse graph name \"" + s + "\": " + why);
    }

    bool at_end() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }

    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    bool eat_word(const std::string& w) {
        if (s.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }

    long long number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[pos++] - '0');
            if (v > 1000000) fail("parameter too large");
        }
        return v;
    }

    // "^+", "^++", "^{+}" or "^{++}": the number of subdivisions, or 0 if no
    // caret. The bare form backtracks so a trailing '+' can still act as a
    // union separator.
    int caret_suffix() {
        if (!eat('^')) return 0;
        if (eat('{')) {
            int cnt = 0;
            while (eat('+')) ++cnt;
            if (!eat('}') || cnt < 1 || cnt > 2) fail("expected ^{+} or ^{++}");
            return cnt;
        }
        if (!eat('+')) fail("expected + after ^");
        if (eat('+')) {
            if (at_end() || peek() == '+') return 2;
            --pos;  // the second '+' separates the next term
        }
        return 1;
    }

    // K-form after the leading 'K': either a complete graph or a star.
    Graph k_term() {
        long long a, b = -1;
        if (eat('_')) {
            if (!eat('{')) fail("expected { after K_");
            a = number();
            if (eat(',')) b = number();
            if (!eat('}')) fail("expected } in K_{...}");
        } else {
            a = number();
            if (eat(',')) b = number();
        }
        if (b < 0) {
            if (a < 1) fail("K_k needs k >= 1");
            return complete(static_cast<int>(a));
        }
        if (a != 1) fail("only stars K_{1,t} are supported");
        if (b < 1) fail("K_{1,t} needs t >= 1");
        int sub = caret_suffix();
        if (sub == 0) return star(static_cast<int>(b));
        return star_subdivided(static_cast<int>(b), sub);
    }

    Graph s_term() {
        long long h, i, j;
        if (eat('_')) {
            if (!eat('{')) fail("expected { after S_");
            h = number();
            if (!eat(',')) fail("expected , in S_{h,i,j}");
            i = number();
            if (!eat(',')) fail("expected , in S_{h,i,j}");
            j = number();
            if (!eat('}')) fail("expected } in S_{h,i,j}");
        } else {
            h = number();
            if (!eat(',')) fail("expected , in Sh,i,j");
            i = number();
            if (!eat(',')) fail("expected , in Sh,i,j");
            j = number();
        }
        if (!(1 <= h && h <= i && i <= j)) fail("S_{h,i,j} needs 1 <= h <= i <= j");
        return subdivided_claw(static_cast<int>(h), static_cast<int>(i), static_cast<int>(j));
    }

    Graph term_body() {
        if (eat_word("crossed-house")) return complement(make("2P1+P3"));
        if (eat_word("claw")) return star(3);
        if (eat_word("diamond")) return complement(make("2P1+P2"));
        if (eat_word("paw")) return complement(make("P1+P3"));
        if (eat_word("gem")) return complement(make("P1+P4"));
        if (eat_word("grid")) {
            eat('_');
            long long n = number();
            if (n < 1) fail("grid needs n >= 1");
            return make_grid(static_cast<int>(n));
        }
        if (eat('P')) {
            long long k = number();
            if (k < 1) fail("P_k needs k >= 1");
            return path(static_cast<int>(k));
        }
        if (eat('C')) {
            long long k = number();
            if (k < 3) fail("C_k needs k >= 3");
            return cycle(static_cast<int>(k));
        }
        if (eat('K')) return k_term();
        if (eat('S')) return s_term();
        fail("unknown term");
    }

    Graph term() {
        long long mult = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mult = number();
            if (mult < 1) fail("multiplier must be positive");
            if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a name after multiplier");
        }
        Graph one = term_body();
        Graph out = one;
        for (long long c = 1; c < mult; ++c) out = disjoint_union(out, one);
        return out;
    }

    Graph expression() {
        Graph out = term();
        while (eat('+')) out = disjoint_union(out, term());
        if (!at_end()) fail("unexpected trailing characters at position " + std::to_string(pos));
        return out;
    }
};

bool is_forest(const Graph& g) {
    return g.m() == g.n() - static_cast<long long>(components(g).size());
}

}  // namespace

Graph make(const std::string& name) {
    std::string stripped;
    for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
    if (stripped.empty()) throw Error("empty graph name");
    Parser p(stripped);
    return p.expression();
}

Graph make_grid(int n) {
    if (n < 1) throw Error("make_grid: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    auto id = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j + 1 < n) e.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < n) e.emplace_back(id(i, j), id(i + 1, j));
        }
    return Graph::build(n * n, e);
}

bool is_path_star_forest(const Graph& h) {
    if (!is_forest(h)) return false;
    for (const Component& c : components(h)) {
        int big = 0;
        for (int v : c.vertices)
            if (h.degree(v) >= 3) ++big;
        if (big > 1) return false;
    }
    return true;
}

bool is_linear_forest(const Graph& h) {
    if (!is_forest(h)) return false;
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) > 2) return false;
    return true;
}

bool in_class_S(const Graph& h) {
    if (!is_forest(h)) return false;
    for (const Component& c : components(h)) {
        int deg3 = 0;
        for (int v : c.vertices) {
            int d = h.degree(v);
            if (d > 3) return false;
            if (d == 3) ++deg3;
        }
        if (deg3 > 1) return false;
    }
    return true;
}

MonotoneFamily monotone_family_from_string(const std::string& id) {
    if (id == "K_{1,t}+P1") return MonotoneFamily::K1tPlusP1;
    if (id == "tP1+P3") return MonotoneFamily::TP1PlusP3;
    if (id == "K_t") return MonotoneFamily::Kt;
    if (id == "tP1") return MonotoneFamily::TP1;
    if (id == "2K_{1,t}") return MonotoneFamily::TwoK1t;
    if (id == "K_{1,t}^+") return MonotoneFamily::K1tSub1;
    if (id == "K_{1,t}^{++}+P1") return MonotoneFamily::K1tSub2PlusP1;
    if (id == "K_{1,t}^{++}") return MonotoneFamily::K1tSub2;
    if (id == "K_{1,t}") return MonotoneFamily::K1t;
    throw Error("unknown monotone family \"" + id + "\"");
}

Graph monotone_family_instance(MonotoneFamily family, int t) {
    std::string ts = std::to_string(t);
    switch (family) {
        // Monotone in t: deleting leaves of the instance at t yields the
        // instance at t-1, and any v-vertex induced subgraph embeds into the
        // instance at t = v.
        case MonotoneFamily::K1tPlusP1:
            return make("K_{1," + ts + "}+P1");
        case MonotoneFamily::TP1PlusP3:
            // Deleting isolated vertices steps t down.
            return make(ts + "P1+P3");
        case MonotoneFamily::Kt:
            // Induced subgraphs of complete graphs are complete.
            return make("K" + ts);
        case MonotoneFamily::TP1:
            return make(ts + "P1");
        case MonotoneFamily::TwoK1t:
            return make("2K_{1," + ts + "}");
        case MonotoneFamily::K1tSub1:
            // Deleting a plain leaf steps t down (the subdivided leg stays).
            return make("K_{1," + ts + "}^+");
        case MonotoneFamily::K1tSub2PlusP1:
            return make("K_{1," + ts + "}^{++}+P1");
        case MonotoneFamily::K1tSub2:
            return make("K_{1," + ts + "}^{++}");
        case MonotoneFamily::K1t:
            return make("K_{1," + ts + "}");
    }
    throw Error("unreachable family");
}

bool in_monotone_family(const Graph& h, MonotoneFamily family) {
    int t = std::max(1, h.n());
    Graph instance = monotone_family_instance(family, t);
    return find_induced(instance, h).has_value();
}

bool in_monotone_family(const Graph& h, const std::string& family_id) {
    return in_monotone_family(h, monotone_family_from_string(family_id));
}

}  // namespace hhfree
