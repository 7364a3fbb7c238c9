#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hhfree/graph.hpp"

namespace hhfree {

// An operation was called on an input outside its stated class; carries an
// induced witness of the violation when one is available.
class PreconditionError : public Error {
public:
    PreconditionError(const std::string& what, std::vector<int> witness_vertices)
        : Error(what), witness(std::move(witness_vertices)) {}
    std::vector<int> witness;
};

// The five-clique extension decomposition: K inside a complete multipartite
// core with classes A_1..A_p (p >= 5), attachment sets N_i whose vertices
// have neighbours in A_i only, and a rest B anti-complete to the core.
// Classes are ordered by descending size, then smallest vertex, which pins
// down the partition's only degree of freedom.
struct K5Partition {
    int n = 0;
    std::vector<int> k5;
    std::vector<std::vector<int>> A;
    std::vector<std::vector<int>> N;
    std::vector<int> B;

    int p() const { return static_cast<int>(A.size()); }
    std::vector<int> L() const;  // sorted union of the A classes
    std::vector<int> D() const;  // V minus L, sorted
};

// Lexicographically first induced K5, or nullopt.
std::optional<std::array<int, 5>> find_k5(const Graph& g);

// All induced K5s, in lexicographic order.
std::vector<std::array<int, 5>> all_k5(const Graph& g);

// The unique partition for the given K5. Throws PreconditionError (with an
// induced co-(2P1+P3) witness) when the input is outside the stated class,
// and InternalError when a structural invariant fails on a conforming input.
K5Partition k5_extension_partition(const Graph& g, const std::array<int, 5>& k);

// New vertex with exactly the open neighbourhood of x.
Graph add_false_twin(const Graph& g, int x);

enum class DriverBranch {
    OracleK5Free,        // no K5 on either side; cited subroutine stands in as the oracle
    K5PresenceMismatch,  // exactly one side contains a K5
    BoundedCliquewidth,  // >= 3 non-empty attachment sets force bounded clique-width
    StructureMismatch,   // isomorphism-invariant structure differs between the sides
    TypeCensusMismatch,  // core-type censuses disagree
    TypeReduction,       // core replacement by type-indexed bicliques, then oracle
    Case1BoundedCw,      // rest graph has at most one non-trivial component
    Case2K4Free,         // >= 2 non-trivial components, all of size <= 3
    Case3K4,             // a rest component of size >= 4 exists
};

std::string to_string(DriverBranch b);

struct TraceEntry {
    DriverBranch branch;
    int g_component = -1;
    int h_component = -1;
    std::string note;
};

struct GiDriverTrace {
    std::vector<TraceEntry> entries;
    int oracle_calls = 0;

    bool took(DriverBranch b) const {
        for (const TraceEntry& e : entries)
            if (e.branch == b) return true;
        return false;
    }
};

// Isomorphism driver for co-(2P1+P3)- and P5-free inputs. Splits into
// components, handles K5-free components through the oracle, detects the
// bounded-clique-width shape, and otherwise applies the core-replacement
// reduction to K5-free graphs. Verdicts always agree with are_isomorphic.
std::pair<bool, GiDriverTrace> solve_gi_cohouse_p5(const Graph& g, const Graph& h);

// Isomorphism driver for co-(2P1+P3)- and (P2+P3)-free inputs, following the
// three-case analysis over the components of the rest graph.
std::pair<bool, GiDriverTrace> solve_gi_cohouse_p2p3(const Graph& g, const Graph& h);

}  // namespace hhfree
