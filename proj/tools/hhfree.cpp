#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hhfree/catalog.hpp"
#include "hhfree/classifier.hpp"
#include "hhfree/cliquewidth.hpp"
#include "hhfree/graph_io.hpp"
#include "hhfree/iso.hpp"
#include "hhfree/reductions.hpp"
#include "hhfree/structure.hpp"
#include "hhfree/subiso.hpp"

namespace {

using hhfree::Graph;
using json = nlohmann::json;

enum class Format { Plain, Tsv, JsonLines };

Format parse_format(const std::string& s) {
    if (s == "plain") return Format::Plain;
    if (s == "tsv") return Format::Tsv;
    if (s == "json-lines") return Format::JsonLines;
    throw CLI::ValidationError("--format must be plain, tsv or json-lines");
}

// Emit one result record in the selected format. Fields keep stable names so
// shell pipelines can rely on them.
void emit(Format fmt, const std::vector<std::pair<std::string, std::string>>& fields) {
    switch (fmt) {
        case Format::Plain: {
            bool first = true;
            for (const auto& [k, v] : fields) {
                (void)k;
                if (!first) std::cout << ' ';
                std::cout << v;
                first = false;
            }
            std::cout << '\n';
            break;
        }
        case Format::Tsv: {
            bool first = true;
            for (const auto& [k, v] : fields) {
                (void)k;
                if (!first) std::cout << '\t';
                std::cout << v;
                first = false;
            }
            std::cout << '\n';
            break;
        }
        case Format::JsonLines: {
            json obj;
            for (const auto& [k, v] : fields) obj[k] = v;
            std::cout << obj.dump() << '\n';
            break;
        }
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hhfree::Error("cannot open file \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Graph arguments accept catalog names, edge-list file paths and graph6
// strings interchangeably; g6: and file: prefixes force an interpretation.
Graph parse_graph_arg(const std::string& arg) {
    if (arg.rfind("g6:", 0) == 0) return hhfree::from_graph6(arg.substr(3));
    if (arg.rfind("file:", 0) == 0) return hhfree::from_edge_list(slurp(arg.substr(5)));
    std::string name_err;
    try {
        return hhfree::make(arg);
    } catch (const hhfree::Error& e) {
        name_err = e.what();
    }
    if (std::ifstream probe(arg); probe.good()) return hhfree::from_edge_list(slurp(arg));
    try {
        return hhfree::from_graph6(arg);
    } catch (const hhfree::Error& e) {
        throw hhfree::Error("argument \"" + arg + "\" is neither a catalog name (" + name_err +
                            "), an existing file, nor graph6 (" + e.what() + ")");
    }
}

std::string join_ints(const std::vector<int>& v, char sep = ' ') {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<std::pair<int, int>> parse_partition_lines(const std::string& text) {
    std::istringstream in(text);
    std::map<int, std::pair<int, int>> cells;
    int v, i, j;
    int max_v = -1;
    while (in >> v >> i >> j) {
        cells[v] = {i, j};
        max_v = std::max(max_v, v);
    }
    std::vector<std::pair<int, int>> out(max_v + 1, {0, 0});
    for (auto& [vertex, cell] : cells) out[vertex] = cell;
    if (static_cast<int>(cells.size()) != max_v + 1)
        throw hhfree::Error("partition file: vertices 0.." + std::to_string(max_v) +
                            " must each appear exactly once");
    return out;
}

int run_classify_all(int max_n, const std::string& out_path) {
    if (max_n < 1 || max_n > 5)
        throw hhfree::Error("classify-all supports --max-n between 1 and 5");
    // all graphs up to isomorphism, by brute enumeration of labeled graphs
    std::vector<Graph> reps;
    std::map<std::string, bool> seen;
    for (int n = 1; n <= max_n; ++n) {
        int pairs = n * (n - 1) / 2;
        for (long long mask = 0; mask < (1LL << pairs); ++mask) {
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if ((mask >> bit) & 1) edges.emplace_back(u, v);
            Graph g = Graph::build(n, edges);
            std::string key = hhfree::canonical_form(g).hex();
            if (seen.emplace(key, true).second) reps.push_back(std::move(g));
        }
    }
    std::ofstream out(out_path);
    if (!out) throw hhfree::Error("cannot write \"" + out_path + "\"");
    out << "h1\th2\tgi_status\tgi_rule\tcw_status\tcw_rule\n";
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i; j < reps.size(); ++j) {
            auto gi = hhfree::classify_gi(reps[i], reps[j]);
            auto cw = hhfree::classify_cw(reps[i], reps[j]);
            out << hhfree::to_graph6(reps[i]) << '\t' << hhfree::to_graph6(reps[j]) << '\t'
                << to_string(gi.status) << '\t' << gi.rule << '\t' << to_string(cw.status) << '\t'
                << cw.rule << '\n';
        }
    std::cerr << "wrote " << out_path << " (" << reps.size() << " graphs)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification toolkit for graph classes defined by two forbidden induced subgraphs"};
    app.require_subcommand(1);
    std::string format_str = "plain";
    app.add_option("--format", format_str, "output format: plain, tsv or json-lines")
        ->capture_default_str();

    std::string arg_g, arg_h, arg_which, arg_class, arg_file, arg_out = "report.tsv";
    std::vector<std::string> arg_forbid;
    bool flag_explain = false, flag_trace = false;
    int arg_limit = 4, arg_m = 1, arg_n = 4, arg_maxn = 5;
    std::string arg_k5;

    auto* c_iso = app.add_subcommand("iso", "decide isomorphism of two graphs");
    c_iso->add_option("G", arg_g)->required();
    c_iso->add_option("H", arg_h)->required();

    auto* c_canon = app.add_subcommand("canon", "print a canonical certificate");
    c_canon->add_option("G", arg_g)->required();

    auto* c_free = app.add_subcommand("free-check", "test induced-subgraph freeness");
    c_free->add_option("G", arg_g)->required();
    c_free->add_option("--forbid", arg_forbid, "forbidden graph (repeatable)")->required();

    auto* c_reduce = app.add_subcommand("reduce", "build a hardness gadget");
    c_reduce->add_option("which", arg_which, "diamond-2p3, diamond-p6 or gem-p1-2p2")->required();
    c_reduce->add_option("G", arg_g)->required();

    auto* c_classify = app.add_subcommand("classify", "classify a forbidden pair");
    c_classify->add_option("problem", arg_which, "gi or cw")->required();
    c_classify->add_option("H1", arg_g)->required();
    c_classify->add_option("H2", arg_h)->required();
    c_classify->add_flag("--explain", flag_explain, "print the matched rule's guard and witness");

    auto* c_call = app.add_subcommand("classify-all", "classify all pairs up to a size");
    c_call->add_option("--max-n", arg_maxn, "largest vertex count")->capture_default_str();
    c_call->add_option("--out", arg_out, "output TSV path")->capture_default_str();

    auto* c_cw = app.add_subcommand("cw", "exact clique-width of a small graph");
    c_cw->add_option("G", arg_g)->required();
    c_cw->add_option("--limit", arg_limit, "largest width to try")->capture_default_str();

    auto* c_cwc = app.add_subcommand("cw-cert", "verify a grid-partition lower bound");
    c_cwc->add_option("G", arg_g)->required();
    c_cwc->add_option("partition", arg_file, "file with lines \"vertex i j\"")->required();
    c_cwc->add_option("--m", arg_m, "locality parameter")->capture_default_str();

    auto* c_hn = app.add_subcommand("hn-prime", "emit the unbounded-clique-width witness");
    c_hn->add_option("n", arg_n, "grid side, n >= 3")->required();

    auto* c_solve = app.add_subcommand("solve-gi", "run a structural isomorphism driver");
    c_solve->add_option("--class", arg_class, "cohouse-p5 or cohouse-p2p3")->required();
    c_solve->add_option("G", arg_g)->required();
    c_solve->add_option("H", arg_h)->required();
    c_solve->add_flag("--trace", flag_trace, "print the branches taken");

    auto* c_part = app.add_subcommand("partition", "print the K5-extension partition");
    c_part->add_option("G", arg_g)->required();
    c_part->add_option("--k5", arg_k5, "comma-separated clique, default: first induced K5");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Format fmt = parse_format(format_str);

        if (c_iso->parsed()) {
            Graph g = parse_graph_arg(arg_g), h = parse_graph_arg(arg_h);
            auto map = hhfree::are_isomorphic(g, h);
            if (map) {
                emit(fmt, {{"result", "ISOMORPHIC"}, {"map", join_ints(*map)}});
                return 0;
            }
            emit(fmt, {{"result", "NON-ISOMORPHIC"}});
            return 1;
        }
        if (c_canon->parsed()) {
            Graph g = parse_graph_arg(arg_g);
            emit(fmt, {{"certificate", hhfree::canonical_form(g).hex()}});
            return 0;
        }
        if (c_free->parsed()) {
            Graph g = parse_graph_arg(arg_g);
            for (const std::string& name : arg_forbid) {
                Graph h = parse_graph_arg(name);
                if (auto embedding = hhfree::find_induced(g, h)) {
                    emit(fmt, {{"result", "CONTAINS"},
                               {"forbidden", name},
                               {"witness", join_ints(embedding->map)}});
                    return 1;
                }
            }
            emit(fmt, {{"result", "FREE"}});
            return 0;
        }
        if (c_reduce->parsed()) {
            Graph g = parse_graph_arg(arg_g);
            hhfree::GadgetGraph out = hardness_instance(g, hhfree::reduction_kind_from_string(arg_which));
            std::cout << hhfree::to_graph6(out.graph) << '\n';
            for (int v = 0; v < out.graph.n(); ++v)
                std::cout << v << ' ' << "ABC"[static_cast<int>(out.parts[v])] << ' '
                          << out.part_classes[v] << '\n';
            return 0;
        }
        if (c_classify->parsed()) {
            Graph h1 = parse_graph_arg(arg_g), h2 = parse_graph_arg(arg_h);
            hhfree::Verdict v;
            if (arg_which == "gi")
                v = hhfree::classify_gi(h1, h2);
            else if (arg_which == "cw")
                v = hhfree::classify_cw(h1, h2);
            else
                throw hhfree::Error("classify: problem must be gi or cw");
            emit(fmt, {{"status", to_string(v.status)}, {"rule", v.rule}});
            if (flag_explain) {
                std::cout << "rule " << v.rule << ": " << v.description << '\n';
                std::cout << "witness pair: " << hhfree::to_graph6(v.witness.first) << ' '
                          << hhfree::to_graph6(v.witness.second) << '\n';
            }
            return 0;
        }
        if (c_call->parsed()) return run_classify_all(arg_maxn, arg_out);
        if (c_cw->parsed()) {
            Graph g = parse_graph_arg(arg_g);
            auto res = hhfree::exact_cliquewidth(g, arg_limit);
            if (!res) {
                emit(fmt, {{"result", "EXCEEDS-LIMIT"}, {"limit", std::to_string(arg_limit)}});
                return 1;
            }
            emit(fmt, {{"cliquewidth", std::to_string(res->width)}});
            return 0;
        }
        if (c_cwc->parsed()) {
            Graph g = parse_graph_arg(arg_g);
            hhfree::GridPartitionCertificate cert;
            cert.cell = parse_partition_lines(slurp(arg_file));
            cert.m = arg_m;
            for (auto& [i, j] : cert.cell) cert.n = std::max({cert.n, i, j});
            try {
                int bound = verify_grid_certificate(g, cert);
                emit(fmt, {{"result", "VERIFIED"}, {"lower_bound", std::to_string(bound)}});
                return 0;
            } catch (const hhfree::CertificateError& e) {
                emit(fmt, {{"result", "REJECTED"},
                           {"premise", std::to_string(e.premise())},
                           {"detail", e.what()}});
                return 1;
            }
        }
        if (c_hn->parsed()) {
            auto [g, cert] = hhfree::build_hn_prime(arg_n);
            std::cout << hhfree::to_graph6(g) << '\n';
            for (int v = 0; v < g.n(); ++v)
                std::cout << v << ' ' << cert.cell[v].first << ' ' << cert.cell[v].second << '\n';
            return 0;
        }
        if (c_solve->parsed()) {
            Graph g = parse_graph_arg(arg_g), h = parse_graph_arg(arg_h);
            std::pair<bool, hhfree::GiDriverTrace> res;
            if (arg_class == "cohouse-p5")
                res = hhfree::solve_gi_cohouse_p5(g, h);
            else if (arg_class == "cohouse-p2p3")
                res = hhfree::solve_gi_cohouse_p2p3(g, h);
            else
                throw hhfree::Error("--class must be cohouse-p5 or cohouse-p2p3");
            emit(fmt, {{"result", res.first ? "ISOMORPHIC" : "NON-ISOMORPHIC"},
                       {"oracle_calls", std::to_string(res.second.oracle_calls)}});
            if (flag_trace)
                for (const auto& e : res.second.entries)
                    std::cout << "trace " << to_string(e.branch) << " components " << e.g_component
                              << "/" << e.h_component << (e.note.empty() ? "" : " " + e.note) << '\n';
            return res.first ? 0 : 1;
        }
        if (c_part->parsed()) {
            Graph g = parse_graph_arg(arg_g);
            std::array<int, 5> k{};
            if (arg_k5.empty()) {
                auto found = hhfree::find_k5(g);
                if (!found) {
                    emit(fmt, {{"result", "NO-K5"}});
                    return 1;
                }
                k = *found;
            } else {
                std::istringstream in(arg_k5);
                std::string tok;
                for (int i = 0; i < 5; ++i) {
                    if (!std::getline(in, tok, ',')) throw hhfree::Error("--k5 needs five vertices");
                    k[i] = std::stoi(tok);
                }
            }
            hhfree::K5Partition part = hhfree::k5_extension_partition(g, k);
            std::cout << "K " << join_ints(part.k5) << '\n';
            for (int i = 0; i < part.p(); ++i) {
                std::cout << "A" << i + 1 << ' ' << join_ints(part.A[i]) << '\n';
                if (!part.N[i].empty()) std::cout << "N" << i + 1 << ' ' << join_ints(part.N[i]) << '\n';
            }
            if (!part.B.empty()) std::cout << "B " << join_ints(part.B) << '\n';
            return 0;
        }
        throw hhfree::Error("no subcommand");
    } catch (const hhfree::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
