#pragma once

#include <string>
#include <vector>

#include "hhfree/graph.hpp"

namespace hhfree {

enum class Role : uint8_t { A, B, C };

// Reduction output: the gadget graph together with the construction's part
// labels, so structural claims can be checked without re-deriving them.
struct GadgetGraph {
    Graph graph;
    std::vector<Role> parts;        // vertex -> role
    std::vector<int> part_classes;  // vertex -> class index within its role
};

// Clique on A = V(G); per edge vw a path v - v_w - w_v - w through two new
// B-vertices. Output has |V| + 2|E| vertices and is (diamond, 2P3)-free.
GadgetGraph reduce_diamond_2p3(const Graph& g);

// Independent sets A = V(G) and C = E(G), complete bipartite between them;
// per edge e = vw a path v - v_w - e - w_v - w through two new B-vertices.
// Output has |V| + 3|E| vertices and is (diamond, P6)-free.
GadgetGraph reduce_diamond_p6(const Graph& g);

// Complete multipartite A with |A_i| = d(v_i), complete multipartite B with
// |E| parts of size 2, and a perfect matching between A and B that routes
// each B-part to its edge's two endpoint classes. Output has 4|E| vertices
// and is (gem, P1+2P2)-free. Rejects graphs with isolated vertices.
GadgetGraph reduce_gem_p1_2p2(const Graph& g);

enum class ReductionKind { Diamond2P3, DiamondP6, GemP12P2 };

ReductionKind reduction_kind_from_string(const std::string& id);
std::string to_string(ReductionKind kind);

// The instance each hardness argument feeds to its reduction: the graph
// itself for Diamond2P3, and the graph extended by a dominating K4 for the
// other two.
GadgetGraph hardness_instance(const Graph& g, ReductionKind kind);

// The forbidden pair the reduction's output is guaranteed to avoid.
std::vector<Graph> forbidden_pair(ReductionKind kind);

}  // namespace hhfree
