#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hhfree/graph.hpp"

namespace hhtest {

using Rng = std::mt19937_64;

// Factorial permutation search; independent of the solver. n <= 8.
std::optional<std::vector<int>> brute_force_isomorphic(const hhfree::Graph& g,
                                                       const hhfree::Graph& h);

// Exhaustive check over all |V(G)|-choose-|V(H)| vertex subsets, deciding
// each candidate by permutation search; independent of find_induced.
bool naive_contains_induced(const hhfree::Graph& g, const hhfree::Graph& h);

// All graphs on exactly n vertices up to isomorphism (labeled enumeration
// plus certificate dedup; class counts are cross-checked against the known
// sequence 1, 2, 4, 11, 34 by the caller where it matters).
std::vector<hhfree::Graph> all_graphs_exactly(int n);
std::vector<hhfree::Graph> all_graphs_upto(int max_n);  // n = 1..max_n

hhfree::Graph random_graph(int n, double p, Rng& rng);
hhfree::Graph random_relabel(const hhfree::Graph& g, Rng& rng);

// Petersen graph (outer C5, inner pentagram, spokes).
hhfree::Graph petersen();

// ---- constructive corpora ---------------------------------------------------

// Complete multipartite graph; class vertex lists returned through `classes`.
hhfree::Graph multipartite(const std::vector<int>& sizes,
                           std::vector<std::vector<int>>* classes = nullptr);

// Random graphs that are co-(2P1+P3)-free and contain a K5: a complete
// multipartite core with attachments and a rest part, rejection-filtered.
hhfree::Graph gen_cohouse_free_with_k5(Rng& rng);

// Admissible instances for the two drivers, shaped to hit a specific branch.
enum class T3Shape { K5Free, Bounded, TypeReduction };
enum class T4Shape { K5Free, Case1, Case2, Case3 };

hhfree::Graph gen_t3_instance(T3Shape shape, Rng& rng);
hhfree::Graph gen_t4_instance(T4Shape shape, Rng& rng);

}  // namespace hhtest
