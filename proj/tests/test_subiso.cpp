#include "doctest.h"

#include "hhfree/catalog.hpp"
#include "hhfree/reductions.hpp"
#include "hhfree/subiso.hpp"
#include "test_helpers.hpp"

using namespace hhfree;

TEST_CASE("find_induced basics") {
    CHECK(find_induced(make("P5"), make("P4")).has_value());
    CHECK(!find_induced(make("K4"), make("diamond")).has_value());
    CHECK(find_induced(make("gem"), make("paw")).has_value());
    // empty pattern embeds everywhere
    CHECK(find_induced(make("P1"), Graph::build(0, {})).has_value());
    CHECK(!find_induced(make("P2"), make("P3")).has_value());
}

TEST_CASE("gem contains paw, checked by subset enumeration") {
    CHECK(hhtest::naive_contains_induced(make("gem"), make("paw")));
}

TEST_CASE("agreement with the subset oracle") {
    hhtest::Rng rng(37);
    auto patterns = hhtest::all_graphs_upto(4);
    for (int i = 0; i < 25; ++i) {
        Graph g = hhtest::random_graph(8, 0.2 + 0.06 * (i % 9), rng);
        for (const Graph& h : patterns)
            CHECK(find_induced(g, h).has_value() == hhtest::naive_contains_induced(g, h));
    }
    // a few 5-vertex patterns against 9-vertex hosts
    const char* five[] = {"P5", "C5", "gem", "P1+2P2", "K5", "crossed-house"};
    for (int i = 0; i < 10; ++i) {
        Graph g = hhtest::random_graph(9, 0.35, rng);
        for (const char* name : five)
            CHECK(find_induced(g, make(name)).has_value() ==
                  hhtest::naive_contains_induced(g, make(name)));
    }
}

TEST_CASE("complement transport") {
    // H embeds into G iff complement(H) embeds into complement(G)
    auto patterns = hhtest::all_graphs_upto(4);
    auto hosts = hhtest::all_graphs_exactly(5);
    for (const Graph& g : hosts)
        for (const Graph& h : patterns)
            CHECK(find_induced(g, h).has_value() ==
                  find_induced(complement(g), complement(h)).has_value());
}

TEST_CASE("is_free") {
    CHECK(is_free(make("C5"), {make("K3"), make("C4")}));
    CHECK(!is_free(make("P6"), {make("P5")}));
    GadgetGraph q = reduce_diamond_2p3(hhtest::petersen());
    CHECK(is_free(q.graph, {make("diamond"), make("2P3")}));
}

TEST_CASE("returned embeddings satisfy the induced condition") {
    hhtest::Rng rng(41);
    for (int i = 0; i < 30; ++i) {
        Graph g = hhtest::random_graph(9, 0.4, rng);
        Graph h = hhtest::random_graph(4, 0.5, rng);
        auto emb = find_induced(g, h);
        if (!emb) continue;
        for (int u = 0; u < h.n(); ++u)
            for (int v = u + 1; v < h.n(); ++v)
                CHECK(h.adjacent(u, v) == g.adjacent(emb->map[u], emb->map[v]));
    }
}
