#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hhfree/graph.hpp"

namespace hhfree {

inline constexpr int kMaxClassifierVertices = 12;

struct GraphPair {
    Graph first, second;
};

// The unordered pairs reachable from (H1, H2) by complementing both graphs
// and by swapping a coordinate between the triangle and the paw. Both
// operations preserve the classification status, so rules may be matched
// against any member.
struct PairClass {
    std::vector<GraphPair> members;
};

PairClass equivalence_closure(const Graph& h1, const Graph& h2);

enum class Status { Polynomial, GIComplete, Bounded, Unbounded, Open };

std::string to_string(Status s);

struct Verdict {
    Status status;
    std::string rule;         // e.g. "T10.1.iv" or "OP-GI.i"
    std::string description;  // the rule's stored guard text, printed by --explain
    GraphPair witness;        // the closure member that matched, in matched order
};

struct Rule {
    std::string id;
    int part;  // 1 = tractable/bounded, 2 = hard/unbounded
    std::string description;
    std::function<bool(const Graph&, const Graph&)> guard;  // ordered; callers try both orders
};

struct OpenEntry {
    std::string id;
    std::string description;
    GraphPair pair;
};

const std::vector<Rule>& gi_rules();
const std::vector<Rule>& cw_rules();
const std::vector<OpenEntry>& gi_open_list();
const std::vector<OpenEntry>& cw_open_list();

// A rule from part 1 and part 2 matched the same pair; the tables are
// mutually exclusive, so this signals an implementation bug.
class ContradictionError : public InternalError {
public:
    explicit ContradictionError(const std::string& what) : InternalError(what) {}
};

// Evaluates every rule against every closure member in both coordinate
// orders (no short-circuiting; the contradiction gate needs all matches).
Verdict classify_gi(const Graph& h1, const Graph& h2);
Verdict classify_cw(const Graph& h1, const Graph& h2);

}  // namespace hhfree
