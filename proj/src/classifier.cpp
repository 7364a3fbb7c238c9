#include "hhfree/classifier.hpp"

#include <map>

#include "hhfree/catalog.hpp"
#include "hhfree/iso.hpp"
#include "hhfree/subiso.hpp"

namespace hhfree {

namespace {

const Graph& named(const std::string& name) {
    static std::map<std::string, Graph>* cache = new std::map<std::string, Graph>();
    auto it = cache->find(name);
    if (it == cache->end()) it = cache->emplace(name, make(name)).first;
    return it->second;
}

// h embeds into the named graph
bool emb(const Graph& h, const std::string& name) {
    return find_induced(named(name), h).has_value();
}

// h contains the named graph
bool sup(const Graph& h, const std::string& name) {
    return find_induced(h, named(name)).has_value();
}

bool mono(const Graph& h, MonotoneFamily fam) { return in_monotone_family(h, fam); }

std::vector<Rule> build_gi_rules() {
    using G = const Graph&;
    return {
        {"T10.1.i", 1, "H1 or H2 embeds into P4",
         [](G a, G b) { return emb(a, "P4") || emb(b, "P4"); }},
        {"T10.1.ii", 1, "complement(H1) and H2 embed into K_{1,t}+P1 for a shared t",
         [](G a, G b) {
             return mono(complement(a), MonotoneFamily::K1tPlusP1) &&
                    mono(b, MonotoneFamily::K1tPlusP1);
         }},
        {"T10.1.iii", 1, "complement(H1) and H2 embed into tP1+P3 for a shared t",
         [](G a, G b) {
             return mono(complement(a), MonotoneFamily::TP1PlusP3) &&
                    mono(b, MonotoneFamily::TP1PlusP3);
         }},
        {"T10.1.iv", 1, "H1 is complete and H2 embeds into 2K_{1,t}, K_{1,t}^+ or P5",
         [](G a, G b) {
             return is_complete(a) && (mono(b, MonotoneFamily::TwoK1t) ||
                                       mono(b, MonotoneFamily::K1tSub1) || emb(b, "P5"));
         }},
        {"T10.1.v", 1, "H1 embeds into the paw and H2 into P2+P4, P6, S_{1,2,2} or K_{1,t}^{++}+P1",
         [](G a, G b) {
             return emb(a, "paw") && (emb(b, "P2+P4") || emb(b, "P6") || emb(b, "S_{1,2,2}") ||
                                      mono(b, MonotoneFamily::K1tSub2PlusP1));
         }},
        {"T10.1.vi", 1, "H1 embeds into the diamond and H2 into P1+2P2",
         [](G a, G b) { return emb(a, "diamond") && emb(b, "P1+2P2"); }},
        {"T10.1.vii", 1, "H1 embeds into the gem and H2 into P1+P4 or P5",
         [](G a, G b) { return emb(a, "gem") && (emb(b, "P1+P4") || emb(b, "P5")); }},
        {"T10.1.viii", 1, "H1 embeds into co-(2P1+P3) and H2 into P2+P3 or P5",
         [](G a, G b) { return emb(a, "crossed-house") && (emb(b, "P2+P3") || emb(b, "P5")); }},
        {"T10.2.i", 2, "neither H1 nor H2 is a path star forest",
         [](G a, G b) { return !is_path_star_forest(a) && !is_path_star_forest(b); }},
        {"T10.2.ii", 2, "neither complement(H1) nor complement(H2) is a path star forest",
         [](G a, G b) {
             return !is_path_star_forest(complement(a)) && !is_path_star_forest(complement(b));
         }},
        {"T10.2.iii", 2, "H1 contains K3 and H2 contains 2P1+2P2, P1+2P3, 2P1+P4 or 3P2",
         [](G a, G b) {
             return sup(a, "K3") && (sup(b, "2P1+2P2") || sup(b, "P1+2P3") || sup(b, "2P1+P4") ||
                                     sup(b, "3P2"));
         }},
        {"T10.2.iv", 2, "H1 contains K4 and H2 contains K_{1,4}^{++}, P1+2P2 or P1+P4",
         [](G a, G b) {
             return sup(a, "K4") &&
                    (sup(b, "K_{1,4}^{++}") || sup(b, "P1+2P2") || sup(b, "P1+P4"));
         }},
        {"T10.2.v", 2, "H1 contains K5 and H2 contains K_{1,3}^{++}",
         [](G a, G b) { return sup(a, "K5") && sup(b, "K_{1,3}^{++}"); }},
        {"T10.2.vi", 2, "H1 contains C4 and H2 contains K_{1,3}, 3P1+P2 or 2P2",
         [](G a, G b) {
             return sup(a, "C4") && (sup(b, "K_{1,3}") || sup(b, "3P1+P2") || sup(b, "2P2"));
         }},
        {"T10.2.vii", 2, "H1 contains the diamond and H2 contains K_{1,3}, P2+P4, 2P3 or P6",
         [](G a, G b) {
             return sup(a, "diamond") &&
                    (sup(b, "K_{1,3}") || sup(b, "P2+P4") || sup(b, "2P3") || sup(b, "P6"));
         }},
        {"T10.2.viii", 2, "H1 contains the gem and H2 contains P1+2P2",
         [](G a, G b) { return sup(a, "gem") && sup(b, "P1+2P2"); }},
    };
}

std::vector<Rule> build_cw_rules() {
    using G = const Graph&;
    return {
        {"T9.1.i", 1, "H1 or H2 embeds into P4",
         [](G a, G b) { return emb(a, "P4") || emb(b, "P4"); }},
        {"T9.1.ii", 1, "H1 is complete and H2 is edgeless",
         [](G a, G b) { return is_complete(a) && is_edgeless(b); }},
        {"T9.1.iii", 1,
         "H1 embeds into the paw and H2 into K_{1,3}+3P1, K_{1,3}+P2, P1+P2+P3, P1+P5, "
         "P1+S_{1,1,2}, P2+P4, P6, S_{1,1,3} or S_{1,2,2}",
         [](G a, G b) {
             return emb(a, "paw") &&
                    (emb(b, "K_{1,3}+3P1") || emb(b, "K_{1,3}+P2") || emb(b, "P1+P2+P3") ||
                     emb(b, "P1+P5") || emb(b, "P1+S_{1,1,2}") || emb(b, "P2+P4") ||
                     emb(b, "P6") || emb(b, "S_{1,1,3}") || emb(b, "S_{1,2,2}"));
         }},
        {"T9.1.iv", 1, "H1 embeds into the diamond and H2 into P1+2P2, 3P1+P2 or P2+P3",
         [](G a, G b) {
             return emb(a, "diamond") && (emb(b, "P1+2P2") || emb(b, "3P1+P2") || emb(b, "P2+P3"));
         }},
        {"T9.1.v", 1, "H1 embeds into the gem and H2 into P1+P4 or P5",
         [](G a, G b) { return emb(a, "gem") && (emb(b, "P1+P4") || emb(b, "P5")); }},
        {"T9.1.vi", 1, "H1 embeds into K3+P1 and H2 into K_{1,3}",
         [](G a, G b) { return emb(a, "K3+P1") && emb(b, "K_{1,3}"); }},
        {"T9.1.vii", 1, "H1 embeds into co-(2P1+P3) and H2 into 2P1+P3",
         [](G a, G b) { return emb(a, "crossed-house") && emb(b, "2P1+P3"); }},
        {"T9.2.i", 2, "neither H1 nor H2 lies in the class of subdivided-claw-or-path forests",
         [](G a, G b) { return !in_class_S(a) && !in_class_S(b); }},
        {"T9.2.ii", 2, "neither complement lies in the class of subdivided-claw-or-path forests",
         [](G a, G b) { return !in_class_S(complement(a)) && !in_class_S(complement(b)); }},
        {"T9.2.iii", 2, "H1 contains K3+P1 or C4 and H2 contains 4P1 or 2P2",
         [](G a, G b) {
             return (sup(a, "K3+P1") || sup(a, "C4")) && (sup(b, "4P1") || sup(b, "2P2"));
         }},
        {"T9.2.iv", 2, "H1 contains the diamond and H2 contains K_{1,3}, 5P1, P2+P4 or P6",
         [](G a, G b) {
             return sup(a, "diamond") &&
                    (sup(b, "K_{1,3}") || sup(b, "5P1") || sup(b, "P2+P4") || sup(b, "P6"));
         }},
        {"T9.2.v", 2, "H1 contains K3 and H2 contains 2P1+2P2, 2P1+P4, 4P1+P2, 3P2 or 2P3",
         [](G a, G b) {
             return sup(a, "K3") && (sup(b, "2P1+2P2") || sup(b, "2P1+P4") || sup(b, "4P1+P2") ||
                                     sup(b, "3P2") || sup(b, "2P3"));
         }},
        {"T9.2.vi", 2, "H1 contains K4 and H2 contains P1+P4 or 3P1+P2",
         [](G a, G b) { return sup(a, "K4") && (sup(b, "P1+P4") || sup(b, "3P1+P2")); }},
        {"T9.2.vii", 2, "H1 contains the gem and H2 contains P1+2P2",
         [](G a, G b) { return sup(a, "gem") && sup(b, "P1+2P2"); }},
    };
}

std::vector<OpenEntry> build_gi_open() {
    return {
        {"OP-GI.i", "H1 = K3 and H2 is P7 or S_{1,2,3}", {named("K3"), named("P7")}},
        {"OP-GI.i", "H1 = K3 and H2 is P7 or S_{1,2,3}", {named("K3"), named("S_{1,2,3}")}},
        {"OP-GI.ii", "H1 = K4 and H2 = S_{1,1,3}", {named("K4"), named("S_{1,1,3}")}},
        {"OP-GI.iii", "H1 = diamond and H2 is P1+P2+P3 or P1+P5",
         {named("diamond"), named("P1+P2+P3")}},
        {"OP-GI.iii", "H1 = diamond and H2 is P1+P2+P3 or P1+P5",
         {named("diamond"), named("P1+P5")}},
        {"OP-GI.iv", "H1 = gem and H2 = P2+P3", {named("gem"), named("P2+P3")}},
    };
}

std::vector<OpenEntry> build_cw_open() {
    return {
        {"OP-CW.i", "H1 = K3 and H2 is P1+S_{1,1,3} or S_{1,2,3}",
         {named("K3"), named("P1+S_{1,1,3}")}},
        {"OP-CW.i", "H1 = K3 and H2 is P1+S_{1,1,3} or S_{1,2,3}",
         {named("K3"), named("S_{1,2,3}")}},
        {"OP-CW.ii", "H1 = diamond and H2 is P1+P2+P3 or P1+P5",
         {named("diamond"), named("P1+P2+P3")}},
        {"OP-CW.ii", "H1 = diamond and H2 is P1+P2+P3 or P1+P5",
         {named("diamond"), named("P1+P5")}},
        {"OP-CW.iii", "H1 = gem and H2 = P2+P3", {named("gem"), named("P2+P3")}},
    };
}

std::string pair_key(const Graph& a, const Graph& b) {
    std::string ka = canonical_form(a).hex();
    std::string kb = canonical_form(b).hex();
    return ka <= kb ? ka + "|" + kb : kb + "|" + ka;
}

Verdict classify(const Graph& h1, const Graph& h2, const std::vector<Rule>& rules,
                 const std::vector<OpenEntry>& open_list, Status part1_status,
                 Status part2_status) {
    if (h1.n() > kMaxClassifierVertices || h2.n() > kMaxClassifierVertices)
        throw Error("classify: forbidden graphs are capped at " +
                    std::to_string(kMaxClassifierVertices) + " vertices");
    PairClass closure = equivalence_closure(h1, h2);

    struct Match {
        const Rule* rule;
        GraphPair witness;
    };
    std::vector<Match> part1, part2;
    for (const Rule& rule : rules)
        for (const GraphPair& member : closure.members)
            for (int ord = 0; ord < 2; ++ord) {
                const Graph& a = ord ? member.second : member.first;
                const Graph& b = ord ? member.first : member.second;
                if (rule.guard(a, b)) {
                    (rule.part == 1 ? part1 : part2).push_back(Match{&rule, {a, b}});
                    break;  // one witness per rule/member is enough
                }
            }

    const OpenEntry* open_hit = nullptr;
    GraphPair open_witness;
    for (const OpenEntry& entry : open_list) {
        for (const GraphPair& member : closure.members) {
            bool same = (are_isomorphic(member.first, entry.pair.first) &&
                         are_isomorphic(member.second, entry.pair.second)) ||
                        (are_isomorphic(member.first, entry.pair.second) &&
                         are_isomorphic(member.second, entry.pair.first));
            if (same) {
                open_hit = &entry;
                open_witness = member;
                break;
            }
        }
        if (open_hit) break;
    }

    if (!part1.empty() && !part2.empty())
        throw ContradictionError("rules " + part1.front().rule->id + " and " +
                                 part2.front().rule->id + " both match the same pair");
    if (!part1.empty())
        return Verdict{part1_status, part1.front().rule->id, part1.front().rule->description,
                       part1.front().witness};
    if (!part2.empty())
        return Verdict{part2_status, part2.front().rule->id, part2.front().rule->description,
                       part2.front().witness};
    if (open_hit) return Verdict{Status::Open, open_hit->id, open_hit->description, open_witness};
    throw InternalError("pair matched by no rule and absent from the open list");
}

}  // namespace

PairClass equivalence_closure(const Graph& h1, const Graph& h2) {
    PairClass out;
    std::map<std::string, bool> seen;
    std::vector<GraphPair> frontier{{h1, h2}};
    const Graph& k3 = named("K3");
    const Graph& paw = named("paw");
    while (!frontier.empty()) {
        GraphPair cur = frontier.back();
        frontier.pop_back();
        if (!seen.emplace(pair_key(cur.first, cur.second), true).second) continue;
        out.members.push_back(cur);
        frontier.push_back({complement(cur.first), complement(cur.second)});
        for (int side = 0; side < 2; ++side) {
            const Graph& s = side ? cur.second : cur.first;
            const Graph& o = side ? cur.first : cur.second;
            if (are_isomorphic(s, k3)) frontier.push_back({paw, o});
            if (are_isomorphic(s, paw)) frontier.push_back({k3, o});
        }
    }
    return out;
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Polynomial: return "POLYNOMIAL";
        case Status::GIComplete: return "GI-COMPLETE";
        case Status::Bounded: return "BOUNDED";
        case Status::Unbounded: return "UNBOUNDED";
        case Status::Open: return "OPEN";
    }
    return "?";
}

const std::vector<Rule>& gi_rules() {
    static const std::vector<Rule>* rules = new std::vector<Rule>(build_gi_rules());
    return *rules;
}

const std::vector<Rule>& cw_rules() {
    static const std::vector<Rule>* rules = new std::vector<Rule>(build_cw_rules());
    return *rules;
}

const std::vector<OpenEntry>& gi_open_list() {
    static const std::vector<OpenEntry>* list = new std::vector<OpenEntry>(build_gi_open());
    return *list;
}

const std::vector<OpenEntry>& cw_open_list() {
    static const std::vector<OpenEntry>* list = new std::vector<OpenEntry>(build_cw_open());
    return *list;
}

Verdict classify_gi(const Graph& h1, const Graph& h2) {
    return classify(h1, h2, gi_rules(), gi_open_list(), Status::Polynomial, Status::GIComplete);
}

Verdict classify_cw(const Graph& h1, const Graph& h2) {
    return classify(h1, h2, cw_rules(), cw_open_list(), Status::Bounded, Status::Unbounded);
}

}  // namespace hhfree
