#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hhfree/graph.hpp"

namespace hhfree {

// Canonical labeling output. Certificates of two graphs are equal iff the
// graphs are isomorphic (at supported sizes).
struct Canon {
    std::vector<int> canonical_order;  // position -> original vertex
    std::vector<uint8_t> certificate;  // size header + packed adjacency bits
    std::string hex() const;
};

inline constexpr int kDefaultCanonLimit = 512;

// Iterated colour refinement plus individualization on the first smallest
// non-singleton colour class, backtracking with trace/certificate pruning.
Canon canonical_form(const Graph& g, int limit = kDefaultCanonLimit);

// A verified isomorphism G -> H, or nullopt.
std::optional<std::vector<int>> are_isomorphic(const Graph& g, const Graph& h);

}  // namespace hhfree
