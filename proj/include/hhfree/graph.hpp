#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hhfree/bits.hpp"

namespace hhfree {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a structural invariant that conforming inputs cannot violate
// fails anyway; indicates a bug rather than bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error("internal: " + what) {}
};

// Immutable simple undirected graph on vertices 0..n-1.
// Adjacency is stored as one bitset row per vertex; rows stay symmetric and
// irreflexive by construction.
class Graph {
public:
    Graph() = default;

    static Graph build(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }

    long long m() const {
        long long deg_sum = 0;
        for (const Bits& row : adj_) deg_sum += row.count();
        return deg_sum / 2;
    }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    const Bits& row(int v) const { return adj_[v]; }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
        return out;
    }

    std::vector<int> degree_sequence() const;  // sorted ascending

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    size_t hash() const {
        size_t h = static_cast<size_t>(n_);
        for (const Bits& row : adj_) h = h * 1000003 ^ row.hash();
        return h;
    }

private:
    int n_ = 0;
    std::vector<Bits> adj_;

    friend Graph graph_from_rows(int n, std::vector<Bits> rows);
};

// Internal constructor for operations that assemble rows directly.
Graph graph_from_rows(int n, std::vector<Bits> rows);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

// Induced subgraph on S; vertices relabeled 0..|S|-1 preserving relative order.
Graph induced(const Graph& g, const std::vector<int>& s);

// Flip adjacency on all pairs inside S.
Graph subgraph_complementation(const Graph& g, const std::vector<int>& s);

// Flip adjacency on all pairs with one end in S and the other in T. S and T
// must be disjoint.
Graph bipartite_complementation(const Graph& g, const std::vector<int>& s,
                                const std::vector<int>& t);

Graph delete_vertices(const Graph& g, const std::vector<int>& s);

struct Component {
    std::vector<int> vertices;  // sorted
    bool nontrivial = false;    // at least two vertices
};

// Connected components, each sorted, ordered by smallest element.
std::vector<Component> components(const Graph& g);

bool is_connected(const Graph& g);

// Add k pairwise-adjacent vertices, each adjacent to every existing vertex.
// New vertices take the highest indices.
Graph add_dominating_clique(const Graph& g, int k);

// The unique partition into independent classes with all cross-class pairs
// adjacent, or nullopt. Classes are ordered by smallest member.
std::optional<std::vector<std::vector<int>>> is_complete_multipartite(const Graph& g);

bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);

}  // namespace hhfree
