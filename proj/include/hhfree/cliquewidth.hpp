#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhfree/graph.hpp"

namespace hhfree {

// Expression over the four construction operations. Nodes live in an arena;
// `root` indexes the outermost operation.
struct CwExpression {
    enum class Op : uint8_t { Create, Union, Join, Rename };
    struct Node {
        Op op;
        int a = 0, b = 0;           // Create: label a; Join: labels a,b; Rename: a -> b
        int left = -1, right = -1;  // children (Union: both, Join/Rename: left)
    };
    std::vector<Node> nodes;
    int root = -1;
    int label_count = 0;
};

// The labeled graph the expression constructs, with labels discarded.
// Vertices are numbered by create order (unions place the left operand
// first). Throws on join with equal labels or labels outside 1..label_count.
Graph evaluate(const CwExpression& expr);

struct CwResult {
    int width = 0;
    CwExpression witness;
};

inline constexpr int kCliquewidthCap = 10;

// Minimum k <= limit admitting an expression for g, with a witness, or
// nullopt when every k <= limit fails. Exact search; |V(g)| is capped at 10.
std::optional<CwResult> exact_cliquewidth(const Graph& g, int limit);

// Lemma-style grid partition: cell(v) = (i, j) with 1-based coordinates.
struct GridPartitionCertificate {
    int n = 0;  // side length
    int m = 1;  // locality parameter
    std::vector<std::pair<int, int>> cell;  // vertex -> (i, j)
};

class CertificateError : public Error {
public:
    CertificateError(int premise, const std::string& what)
        : Error("premise " + std::to_string(premise) + " violated: " + what), premise_(premise) {}
    int premise() const { return premise_; }

private:
    int premise_;
};

// Checks the four premises (1: cells non-empty, 2: row unions connected,
// 3: column unions connected, 4: adjacency only between cells within
// distance m per axis) and returns the certified lower bound
// floor((n-1)/(m+1)) + 1. Throws CertificateError naming the first violated
// premise and the offending cell or edge.
int verify_grid_certificate(const Graph& g, const GridPartitionCertificate& cert);

// The unbounded-clique-width witness family: the gem-reduction image of the
// n x n grid with both construction sides complemented, together with the
// grid partition that certifies the lower bound at m = 1.
std::pair<Graph, GridPartitionCertificate> build_hn_prime(int n);

}  // namespace hhfree
