#include "doctest.h"

#include "hhfree/catalog.hpp"
#include "hhfree/iso.hpp"
#include "hhfree/subiso.hpp"
#include "test_helpers.hpp"

using namespace hhfree;

TEST_CASE("named graphs") {
    Graph diamond = make("diamond");
    CHECK(diamond.n() == 4);
    CHECK(diamond.m() == 5);
    CHECK(diamond == complement(make("2P1+P2")));

    CHECK(are_isomorphic(make("S_{1,1,1}"), make("K_{1,3}")));
    CHECK(are_isomorphic(make("claw"), make("K1,3")));

    Graph gem = make("gem");
    CHECK(gem.n() == 5);
    CHECK(gem.m() == 7);

    CHECK(make("crossed-house") == complement(make("2P1+P3")));
    CHECK(make("paw") == complement(make("P1+P3")));

    CHECK(make("C3") == make("K3"));
    CHECK(make("K_{1,1}") == make("P2"));
}

TEST_CASE("union expressions and parse errors") {
    Graph g = make("2P1 + P3");
    CHECK(g.n() == 5);
    CHECK(g.m() == 2);
    CHECK(make("3P2").degree_sequence() == std::vector<int>(6, 1));
    CHECK(are_isomorphic(make("K_{1,4}^{++}+P1"), make("K1,4^+++P1")));
    CHECK(are_isomorphic(make("K1,4^++P1"), disjoint_union(make("K_{1,4}^{+}"), make("P1"))));

    CHECK_THROWS_AS(make(""), Error);
    CHECK_THROWS_AS(make("Q7"), Error);
    CHECK_THROWS_AS(make("P0"), Error);
    CHECK_THROWS_AS(make("C2"), Error);
    CHECK_THROWS_AS(make("S_{2,1,1}"), Error);  // needs h <= i <= j
    CHECK_THROWS_AS(make("K_{2,3}"), Error);
    CHECK_THROWS_AS(make("P3+"), Error);
}

TEST_CASE("grid") {
    CHECK(make_grid(1) == make("P1"));
    CHECK(are_isomorphic(make_grid(2), make("C4")));
    Graph g4 = make_grid(4);
    CHECK(g4.n() == 16);
    CHECK(g4.m() == 24);
    CHECK(make("grid_3") == make_grid(3));
}

TEST_CASE("subdivided stars") {
    CHECK(are_isomorphic(make("K_{1,1}^+"), make("P3")));
    CHECK(are_isomorphic(make("K_{1,1}^{++}"), make("P4")));
    Graph s = make("K_{1,4}^{++}");
    CHECK(s.n() == 7);
    CHECK(are_isomorphic(make("S_{1,1,3}"), make("K_{1,3}^{++}")));
}

TEST_CASE("path star forest recognizer") {
    CHECK(is_path_star_forest(make("K_{1,4}^{++}")));
    CHECK(is_path_star_forest(make("P7")));
    CHECK(is_path_star_forest(make("S_{2,2,2}+S_{1,1,1}")));
    CHECK(!is_path_star_forest(make("C4")));
    // the H-shaped tree has two degree-3 vertices in one component
    Graph h = Graph::build(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
    CHECK(!is_path_star_forest(h));
    CHECK(!is_path_star_forest(disjoint_union(h, h)));
}

TEST_CASE("linear forest recognizer") {
    CHECK(is_linear_forest(make("2P1+P4")));
    CHECK(!is_linear_forest(make("claw")));
    CHECK(!is_linear_forest(make("C4")));
}

TEST_CASE("class S recognizer") {
    CHECK(in_class_S(make("S_{1,2,3}+P5")));
    CHECK(!in_class_S(make("K_{1,4}")));
    CHECK(!in_class_S(make("C5")));
    CHECK(in_class_S(make("P1")));
    // a subdivided star with 4 legs is a path star forest but not in S
    CHECK(is_path_star_forest(make("K_{1,4}^+")));
    CHECK(!in_class_S(make("K_{1,4}^+")));
}

TEST_CASE("monotone family membership") {
    CHECK(in_monotone_family(make("K_{1,5}+P1"), "K_{1,t}+P1"));
    CHECK(!in_monotone_family(make("2P2"), "K_{1,t}+P1"));
    CHECK(in_monotone_family(make("3P1+P3"), "tP1+P3"));
    CHECK(in_monotone_family(make("K4"), "K_t"));
    CHECK(!in_monotone_family(make("P3"), "K_t"));
    CHECK(in_monotone_family(make("2K_{1,3}"), "2K_{1,t}"));
    CHECK_THROWS_AS(in_monotone_family(make("P2"), "nonsense"), Error);
}

TEST_CASE("monotone family agrees with direct search over t") {
    // the one-shot test at t = |V(H)| must agree with trying every t <= |V(H)|
    const char* families[] = {"K_{1,t}+P1", "tP1+P3",       "K_t",  "tP1", "2K_{1,t}",
                              "K_{1,t}^+",  "K_{1,t}^{++}+P1", "K_{1,t}^{++}", "K_{1,t}"};
    auto graphs = hhtest::all_graphs_upto(5);
    hhtest::Rng rng(31);
    for (int i = 0; i < 60; ++i) graphs.push_back(hhtest::random_graph(6, 0.35, rng));
    for (const Graph& h : graphs) {
        for (const char* fid : families) {
            MonotoneFamily fam = monotone_family_from_string(fid);
            bool direct = false;
            for (int t = 1; t <= std::max(1, h.n()) && !direct; ++t)
                direct = find_induced(monotone_family_instance(fam, t), h).has_value();
            CHECK(in_monotone_family(h, fam) == direct);
        }
    }
}

TEST_CASE("complement pairings used by the rule tables") {
    const std::pair<const char*, const char*> pairs[] = {
        {"diamond", "2P1+P2"}, {"gem", "P1+P4"}, {"paw", "P1+P3"}, {"crossed-house", "2P1+P3"}};
    for (auto [a, b] : pairs) CHECK(are_isomorphic(complement(make(a)), make(b)));
}
