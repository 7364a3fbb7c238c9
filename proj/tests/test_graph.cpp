#include "doctest.h"

#include "hhfree/catalog.hpp"
#include "hhfree/graph.hpp"
#include "hhfree/iso.hpp"
#include "test_helpers.hpp"

using namespace hhfree;
using hhtest::Rng;

TEST_CASE("build basics") {
    Graph empty = Graph::build(0, {});
    CHECK(empty.n() == 0);
    CHECK(empty.m() == 0);

    Graph p3 = Graph::build(3, {{0, 1}, {1, 2}});
    CHECK(p3.m() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(!p3.adjacent(0, 2));

    Graph k4 = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(k4.degree_sequence() == std::vector<int>{3, 3, 3, 3});

    // duplicates collapse
    CHECK(Graph::build(2, {{0, 1}, {1, 0}, {0, 1}}).m() == 1);

    CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), Error);
    CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), Error);
}

TEST_CASE("complement") {
    CHECK(are_isomorphic(complement(make("C5")), make("C5")));
    CHECK(complement(make("K4")) == make("4P1"));
    Rng rng(7);
    for (int i = 0; i < 10; ++i) {
        Graph g = hhtest::random_graph(8, 0.5, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("disjoint union") {
    Graph u = disjoint_union(make("P2"), make("P3"));
    CHECK(u.n() == 5);
    CHECK(u.m() == 3);
    CHECK(components(u).size() == 2);

    Graph g = make("paw");
    CHECK(disjoint_union(g, Graph::build(0, {})) == g);

    Graph threep2 = disjoint_union(disjoint_union(make("P2"), make("P2")), make("P2"));
    CHECK(threep2.degree_sequence() == std::vector<int>(6, 1));
}

TEST_CASE("induced subgraph") {
    CHECK(induced(make("K4"), {0, 1, 2}) == make("K3"));
    CHECK(induced(make("P5"), {0, 2, 4}) == make("3P1"));
    CHECK_THROWS_AS(induced(make("P3"), {5}), Error);

    // gem = P4 plus a dominating vertex; dominating vertex + both path ends +
    // one internal vertex induce a paw. Checked against a brute-force
    // permutation oracle.
    Graph gem = make("gem");
    int dom = -1;
    for (int v = 0; v < gem.n(); ++v)
        if (gem.degree(v) == 4) dom = v;
    REQUIRE(dom >= 0);
    std::vector<int> ends, internals;
    for (int v = 0; v < gem.n(); ++v) {
        if (v == dom) continue;
        (gem.degree(v) == 2 ? ends : internals).push_back(v);
    }
    REQUIRE(ends.size() == 2);
    Graph sub = induced(gem, {dom, ends[0], ends[1], internals[0]});
    CHECK(hhtest::brute_force_isomorphic(sub, make("paw")).has_value());
}

TEST_CASE("subgraph complementation") {
    CHECK(subgraph_complementation(make("K4"), {0, 1, 2, 3}) == make("4P1"));
    // flipping the one non-adjacent pair of P3 closes the triangle
    Graph p3 = Graph::build(3, {{0, 1}, {1, 2}});
    CHECK(subgraph_complementation(p3, {0, 2}) == make("K3"));
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        Graph g = hhtest::random_graph(7, 0.4, rng);
        std::vector<int> s;
        for (int v = 0; v < 7; ++v)
            if (rng() & 1) s.push_back(v);
        CHECK(subgraph_complementation(subgraph_complementation(g, s), s) == g);
    }
}

static Graph k33() {
    return Graph::build(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

TEST_CASE("bipartite complementation") {
    CHECK(bipartite_complementation(make("2P1"), {0}, {1}) == make("P2"));
    CHECK(bipartite_complementation(k33(), {0, 1, 2}, {3, 4, 5}) == make("6P1"));
    CHECK_THROWS_AS(bipartite_complementation(k33(), {0, 1}, {1, 2}), Error);
    Rng rng(13);
    for (int i = 0; i < 20; ++i) {
        Graph g = hhtest::random_graph(7, 0.4, rng);
        std::vector<int> s, t;
        for (int v = 0; v < 7; ++v) {
            int die = static_cast<int>(rng() % 3);
            if (die == 0) s.push_back(v);
            if (die == 1) t.push_back(v);
        }
        CHECK(bipartite_complementation(bipartite_complementation(g, s, t), s, t) == g);
    }
}

TEST_CASE("delete vertices") {
    CHECK(are_isomorphic(delete_vertices(make("C5"), {0}), make("P4")));
    Graph g = make("gem");
    CHECK(delete_vertices(g, {}) == g);
    CHECK(delete_vertices(make("K5"), {0, 1}) == make("K3"));
}

TEST_CASE("components") {
    auto comps = components(disjoint_union(make("P2"), make("P3")));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices == std::vector<int>{0, 1});
    CHECK(comps[0].nontrivial);
    CHECK(comps[1].vertices.size() == 3);

    CHECK(components(make("C6")).size() == 1);

    auto trivial = components(make("4P1"));
    CHECK(trivial.size() == 4);
    for (const auto& c : trivial) CHECK(!c.nontrivial);
}

TEST_CASE("add dominating clique") {
    Graph p3 = add_dominating_clique(make("2P1"), 1);
    CHECK(are_isomorphic(p3, make("P3")));
    CHECK(p3.degree(2) == 2);  // the new vertex is the centre

    Graph g = make("paw");
    CHECK(add_dominating_clique(g, 0) == g);

    // P2 + dominating K4: all six degrees are 5 (so the result is K6)
    Graph k6 = add_dominating_clique(make("P2"), 4);
    CHECK(k6.degree_sequence() == std::vector<int>(6, 5));
    CHECK(is_complete(k6));
}

TEST_CASE("complete multipartite recognition") {
    auto classes = is_complete_multipartite(k33());
    REQUIRE(classes.has_value());
    CHECK(*classes == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});

    CHECK(!is_complete_multipartite(make("P4")).has_value());

    auto k5 = is_complete_multipartite(make("K5"));
    REQUIRE(k5.has_value());
    CHECK(k5->size() == 5);

    // present iff the complement is a disjoint union of complete graphs
    Rng rng(17);
    for (int i = 0; i < 40; ++i) {
        Graph g = hhtest::random_graph(7, 0.5, rng);
        Graph co = complement(g);
        bool co_cliques = true;
        for (const Component& c : components(co)) {
            for (size_t a = 0; a < c.vertices.size(); ++a)
                for (size_t b = a + 1; b < c.vertices.size(); ++b)
                    if (!co.adjacent(c.vertices[a], c.vertices[b])) co_cliques = false;
        }
        CHECK(is_complete_multipartite(g).has_value() == co_cliques);
    }
}

TEST_CASE("union interacts with complement and components") {
    Rng rng(19);
    for (int i = 0; i < 10; ++i) {
        Graph g = hhtest::random_graph(5, 0.5, rng);
        Graph h = hhtest::random_graph(4, 0.5, rng);
        Graph u = disjoint_union(g, h);
        // complement of the union restricted to the g-part equals complement(g)
        std::vector<int> gpart;
        for (int v = 0; v < g.n(); ++v) gpart.push_back(v);
        CHECK(induced(complement(u), gpart) == complement(g));
        // components are the shifted components of the parts
        auto cu = components(u);
        size_t expect = components(g).size() + components(h).size();
        CHECK(cu.size() == expect);
    }
}
