#pragma once

#include <string>

#include "hhfree/graph.hpp"

namespace hhfree {

// Builds a graph from a name expression. Terms are joined by '+' with an
// optional integer multiplier, e.g. "2P1+P3". Whitespace is ignored.
// Recognized term forms:
//   P<k>  C<k>  K<k>            path, cycle (k >= 3), complete
//   K1,<t>   K_{1,<t>}          star, t >= 1
//   ...^+  ...^++  ...^{+}  ...^{++}   star with one edge subdivided once/twice
//   S<h>,<i>,<j>  S_{h,i,j}     subdivided claw, 1 <= h <= i <= j
//   grid<n>  grid_<n>           n x n grid
//   claw diamond paw gem crossed-house
Graph make(const std::string& name);

// n x n grid, row-major vertex order.
Graph make_grid(int n);

// Every component is a subdivided star (at most one vertex of degree >= 3).
bool is_path_star_forest(const Graph& h);

// Every component is a path.
bool is_linear_forest(const Graph& h);

// Every component is a path or a subdivided claw (exactly one degree-3
// vertex, no vertex of larger degree).
bool in_class_S(const Graph& h);

enum class MonotoneFamily {
    K1tPlusP1,    // K_{1,t}+P1
    TP1PlusP3,    // tP1+P3
    Kt,           // K_t
    TP1,          // tP1
    TwoK1t,       // 2K_{1,t}
    K1tSub1,      // K_{1,t}^+
    K1tSub2PlusP1,// K_{1,t}^{++}+P1
    K1tSub2,      // K_{1,t}^{++}
    K1t,          // K_{1,t}
};

MonotoneFamily monotone_family_from_string(const std::string& id);

// Member of the family at parameter t.
Graph monotone_family_instance(MonotoneFamily family, int t);

// True iff H embeds into the family at some parameter t. Each family is
// monotone (the instance at t' < t is induced in the instance at t) and any
// |V(H)|-vertex induced subgraph of an instance embeds into the instance at
// t = |V(H)|, so a single test at t = |V(H)| decides the existential.
bool in_monotone_family(const Graph& h, MonotoneFamily family);
bool in_monotone_family(const Graph& h, const std::string& family_id);

}  // namespace hhfree
