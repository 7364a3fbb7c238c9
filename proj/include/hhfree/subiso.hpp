#pragma once

#include <optional>
#include <vector>

#include "hhfree/graph.hpp"

namespace hhfree {

// Injective map of H-vertices into G-vertices with uv in E(H) iff
// map(u)map(v) in E(G).
struct Embedding {
    std::vector<int> map;  // indexed by H-vertex
};

// First induced embedding of H into G under a fixed deterministic search
// order, or nullopt. Deterministic: candidates are tried in ascending vertex
// order at every branch.
std::optional<Embedding> find_induced(const Graph& g, const Graph& h);

// True iff no member of `family` embeds into g.
bool is_free(const Graph& g, const std::vector<Graph>& family);

}  // namespace hhfree
