#include "mdim/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "mdim/generators.hpp"
#include "mdim/graph_io.hpp"
#include "mdim/solvers.hpp"
#include "mdim/witnesses.hpp"

namespace mdim::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Where the graph comes from: a generated family or an edge-list file.
struct GraphSource {
    std::string family;
    int n = 0;
    int k = 0;
    std::string graph_file;
    std::string graph_format = "edge-list";
    std::string labels_file;

    void add_options(CLI::App* cmd, bool positional_family) {
        cmd->add_option(positional_family ? "family,--family" : "--family", family,
                        "ccc, lcg, or a descriptor such as lcg:n=3,k=2");
        cmd->add_option("--n", n, "family parameter n");
        cmd->add_option("--k", k, "LCG layer count k");
        cmd->add_option("--graph", graph_file, "read an arbitrary graph instead of generating one");
        cmd->add_option("--graph-format", graph_format, "edge-list or dimacs")
            ->check(CLI::IsMember({"edge-list", "dimacs"}));
        cmd->add_option("--labels", labels_file, "label sidecar TSV for --graph");
    }

    std::optional<FamilyTag> tag() const {
        if (family.empty()) return std::nullopt;
        if (family.find(':') != std::string::npos) return parse_family_descriptor(family);
        if (family == "ccc") {
            if (n < 1) throw UsageError("ccc needs --n >= 1");
            return FamilyTag{Family::ccc, n, 0};
        }
        if (family == "lcg") {
            if (n < 3 || k < 2) throw UsageError("lcg needs --n >= 3 and --k >= 2");
            return FamilyTag{Family::lcg, n, k};
        }
        throw UsageError("unknown family '" + family + "'");
    }

    Graph load() const {
        if (!graph_file.empty()) {
            if (!family.empty()) throw UsageError("give either a family or --graph, not both");
            std::ifstream in(graph_file);
            if (!in) throw UsageError("cannot open " + graph_file);
            Graph g = read_graph(in, parse_graph_format(graph_format));
            if (!labels_file.empty()) {
                std::ifstream lin(labels_file);
                if (!lin) throw UsageError("cannot open " + labels_file);
                g = std::move(g).with_labels(read_labels(lin, g.order()), FamilyTag{});
            }
            return g;
        }
        auto t = tag();
        if (!t) throw UsageError("no graph given: name a family or pass --graph");
        return build_family(*t);
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(cur);
    return parts;
}

VertexId parse_vertex(const std::string& tok, const Graph& g) {
    if (tok.find(':') == std::string::npos) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("bad vertex '" + tok + "'");
        }
        unsigned long v = std::stoul(tok);
        if (v >= g.order()) throw UsageError("vertex " + tok + " out of range");
        return static_cast<VertexId>(v);
    }
    auto parts = split(tok, ':');
    if (parts.size() != 4) throw UsageError("labels look like layer:branch:unit:position, got '" + tok + "'");
    VertexLabel l;
    try {
        l = {std::stoi(parts[0]), std::stoi(parts[1]), std::stoi(parts[2]), std::stoi(parts[3])};
    } catch (const std::exception&) {
        throw UsageError("bad label '" + tok + "'");
    }
    if (g.family_tag() && g.family_tag()->family != Family::custom) {
        return LayeredLayout::for_tag(*g.family_tag()).id_of(l);
    }
    if (g.has_labels()) {
        const auto& labels = g.labels();
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it != labels.end()) return static_cast<VertexId>(it - labels.begin());
    }
    throw UsageError("label '" + tok + "' does not name a vertex of this graph");
}

OrderedVertexSet witness_for(const FamilyTag& tag, Parameter kind) {
    if (tag.family == Family::ccc) return ccc_witness(kind, tag.n);
    return lcg_witness(kind, tag.n, tag.k);
}

OrderedVertexSet parse_set(const std::string& text, const Graph& g, Parameter kind) {
    if (text == "@witness") {
        if (!g.family_tag() || g.family_tag()->family == Family::custom) {
            throw UsageError("@witness needs a ccc or lcg family");
        }
        return witness_for(*g.family_tag(), kind);
    }
    std::vector<VertexId> ids;
    for (const auto& tok : split(text, ',')) ids.push_back(parse_vertex(tok, g));
    try {
        return OrderedVertexSet(std::move(ids));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string vertex_text(const Graph& g, VertexId v) {
    return g.has_labels() ? std::to_string(v) + "\t" + g.label(v).to_string() : std::to_string(v);
}

SearchBudget budget_from(std::uint64_t max_subsets, double timeout_seconds) {
    SearchBudget b;
    b.max_subsets = max_subsets;
    b.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_seconds * 1000.0));
    return b;
}

void print_claim(std::ostream& out, const TheoremClaim& c) {
    out << audit_tsv_row(c) << '\n';
    for (const auto& note : c.notes) out << "# " << note << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Resolving-set toolkit for layered cube and cycle graphs", "mdim"};
    app.require_subcommand(1);

    // gen
    GraphSource gen_src;
    std::string gen_format = "edge-list";
    std::string gen_labels_out;
    auto* gen = app.add_subcommand("gen", "generate a family graph");
    gen_src.add_options(gen, true);
    gen->add_option("--format", gen_format, "edge-list, dimacs, tsv (labels) or pretty")
        ->check(CLI::IsMember({"edge-list", "dimacs", "tsv", "pretty"}));
    gen->add_option("--labels-out", gen_labels_out, "also write the label sidecar TSV to this file");

    // dist
    GraphSource dist_src;
    std::string dist_format = "tsv";
    std::optional<VertexId> dist_from;
    auto* dist = app.add_subcommand("dist", "distance matrix or single-source distances");
    dist_src.add_options(dist, true);
    dist->add_option("--from", dist_from, "print BFS distances from one vertex");
    dist->add_option("--format", dist_format, "tsv or pretty")->check(CLI::IsMember({"tsv", "pretty"}));

    // verify
    GraphSource ver_src;
    std::string ver_kind;
    std::string ver_set;
    auto* verify = app.add_subcommand("verify", "check a vertex set");
    ver_src.add_options(verify, true);
    verify->add_option("--kind", ver_kind, "resolving, doubly or strong")->required();
    verify->add_option("--set", ver_set, "ids (1,2,3), labels (p:r:s:i,...) or @witness")->required();

    // solve
    GraphSource sol_src;
    std::string sol_kind;
    std::string sol_method = "pruned";
    std::string sol_format = "pretty";
    bool sol_family = false;
    bool sol_cross = false;
    std::uint64_t sol_max = SearchBudget{}.max_subsets;
    double sol_timeout = 0;
    auto* solve_cmd = app.add_subcommand("solve", "exact minimum for one parameter");
    sol_src.add_options(solve_cmd, true);
    solve_cmd->add_option("--kind", sol_kind, "resolving, doubly or strong")->required();
    solve_cmd->add_option("--method", sol_method, "naive, pruned or vc")
        ->check(CLI::IsMember({"naive", "pruned", "vc"}));
    solve_cmd->add_flag("--family-pruned", sol_family, "require a member in every last-layer unit");
    solve_cmd->add_flag("--cross-check", sol_cross, "strong only: run direct search and vc-reduction");
    solve_cmd->add_option("--max-subsets", sol_max, "subset budget");
    solve_cmd->add_option("--timeout-seconds", sol_timeout, "wall-clock budget, 0 for none");
    solve_cmd->add_option("--format", sol_format, "tsv or pretty")->check(CLI::IsMember({"tsv", "pretty"}));

    // witness
    GraphSource wit_src;
    std::string wit_kind;
    std::string wit_format = "ids";
    auto* witness = app.add_subcommand("witness", "print the constructed witness set");
    wit_src.add_options(witness, true);
    witness->add_option("--kind", wit_kind, "resolving, doubly or strong")->required();
    witness->add_option("--format", wit_format, "ids or tsv")->check(CLI::IsMember({"ids", "tsv"}));

    // audit
    GraphSource aud_src;
    std::string aud_kind;
    std::uint64_t aud_max = AuditOptions{}.budget.max_subsets;
    double aud_timeout = 30;
    auto* audit = app.add_subcommand("audit", "audit one closed-form claim");
    aud_src.add_options(audit, true);
    audit->add_option("--kind", aud_kind, "resolving, doubly or strong (default: all three)");
    audit->add_option("--max-subsets", aud_max, "subset budget per search");
    audit->add_option("--timeout-seconds", aud_timeout, "wall-clock budget per search, 0 for none");

    // reproduce
    std::uint64_t rep_max = AuditOptions{}.budget.max_subsets;
    double rep_timeout = 30;
    auto* repro = app.add_subcommand("reproduce", "audit every claim at its smallest parameters");
    repro->add_option("--max-subsets", rep_max, "subset budget per search");
    repro->add_option("--timeout-seconds", rep_timeout, "wall-clock budget per search, 0 for none");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }

    try {
        if (gen->parsed()) {
            Graph g = gen_src.load();
            if (gen_format == "edge-list") write_graph(out, g, GraphFormat::edge_list);
            if (gen_format == "dimacs") write_graph(out, g, GraphFormat::dimacs);
            if (gen_format == "tsv") write_labels(out, g);
            if (gen_format == "pretty") {
                out << "graph " << (g.family_tag() ? g.family_tag()->describe() : "custom") << '\n'
                    << "order " << g.order() << '\n'
                    << "edges " << g.edge_count() << '\n';
                if (g.family_tag()) {
                    auto layout = LayeredLayout::for_tag(*g.family_tag());
                    for (int p = 1; p <= layout.layers(); ++p) {
                        out << "layer " << p << ' ' << layout.layer_size(p) << " vertices";
                        if (p >= 2) out << ' ' << layout.units_in_layer(p) << " units";
                        out << '\n';
                    }
                }
            }
            if (!gen_labels_out.empty()) {
                std::ofstream lout(gen_labels_out);
                if (!lout) throw UsageError("cannot write " + gen_labels_out);
                write_labels(lout, g);
            }
            return ok;
        }

        if (dist->parsed()) {
            Graph g = dist_src.load();
            if (dist_from) {
                auto row = bfs_distances(g, *dist_from);
                for (VertexId v = 0; v < g.order(); ++v) {
                    out << v << '\t' << (row[v] == unreachable ? std::string("inf") : std::to_string(row[v])) << '\n';
                }
                return ok;
            }
            DistanceMatrix d = apsp(g);
            if (dist_format == "pretty") {
                out << "order " << d.order() << '\n' << "diameter " << d.diameter() << '\n';
                return ok;
            }
            for (VertexId u = 0; u < d.order(); ++u) {
                auto row = d.row(u);
                for (std::size_t v = 0; v < row.size(); ++v) out << (v ? "\t" : "") << row[v];
                out << '\n';
            }
            return ok;
        }

        if (verify->parsed()) {
            Graph g = ver_src.load();
            Parameter kind = parse_parameter(ver_kind);
            OrderedVertexSet set = parse_set(ver_set, g, kind);
            bool result = verify_set(apsp(g), kind, set);
            out << (result ? "true " : "false ") << set.size() << '\n';
            return result ? ok : refuted;
        }

        if (solve_cmd->parsed()) {
            Graph g = sol_src.load();
            Parameter kind = parse_parameter(sol_kind);
            SolveOptions so;
            so.method = parse_method(sol_method);
            so.budget = budget_from(sol_max, sol_timeout);
            so.family_pruned = sol_family;
            std::vector<SolveResult> results;
            if (sol_cross) {
                if (kind != Parameter::strong) throw UsageError("--cross-check applies to --kind strong");
                if (so.method == Method::vc_reduction) so.method = Method::pruned;
                auto both = solve_min_strong_checked(g, so);
                results = {both.direct, both.reduction};
            } else {
                results.push_back(solve(g, kind, so));
            }
            DistanceMatrix d = apsp(g);
            for (const auto& r : results) {
                if (!verify_set(d, r.kind, r.witness)) throw std::logic_error("solver witness failed re-verification");
            }
            if (sol_format == "tsv") {
                out << "kind\toptimum\tmethod\tfamily_pruned\tsubsets_examined\twitness\n";
                for (const auto& r : results) {
                    out << to_string(r.kind) << '\t' << r.optimum << '\t' << to_string(r.method) << '\t'
                        << (r.stats.family_pruned ? "true" : "false") << '\t' << r.stats.subsets_examined << '\t'
                        << r.witness.to_string() << '\n';
                }
            } else {
                for (const auto& r : results) {
                    out << "kind " << to_string(r.kind) << '\n'
                        << "optimum " << r.optimum << '\n'
                        << "method " << to_string(r.method) << (r.stats.family_pruned ? " (family-pruned)" : "")
                        << '\n'
                        << "subsets_examined " << r.stats.subsets_examined << '\n'
                        << "witness " << r.witness.to_string() << '\n'
                        << "verified true\n";
                }
            }
            return ok;
        }

        if (witness->parsed()) {
            Graph g = wit_src.load();
            if (!g.family_tag()) throw UsageError("witnesses exist only for ccc and lcg families");
            OrderedVertexSet w = witness_for(*g.family_tag(), parse_parameter(wit_kind));
            if (wit_format == "ids") {
                out << w.to_string() << '\n';
            } else {
                for (VertexId v : w) out << vertex_text(g, v) << '\n';
            }
            return ok;
        }

        if (audit->parsed()) {
            auto tag = aud_src.tag();
            if (!tag) throw UsageError("audit needs a ccc or lcg family");
            AuditOptions ao;
            ao.budget = budget_from(aud_max, aud_timeout);
            std::vector<Parameter> kinds;
            if (aud_kind.empty()) {
                kinds = {Parameter::resolving, Parameter::doubly, Parameter::strong};
            } else {
                kinds = {parse_parameter(aud_kind)};
            }
            out << audit_tsv_header() << '\n';
            bool any_refuted = false;
            for (Parameter kind : kinds) {
                auto c = audit_claim(*tag, kind, ao);
                print_claim(out, c);
                any_refuted = any_refuted || c.verified == Verdict::refuted;
            }
            return any_refuted ? refuted : ok;
        }

        if (repro->parsed()) {
            AuditOptions ao;
            ao.budget = budget_from(rep_max, rep_timeout);
            out << audit_tsv_header() << '\n';
            bool any_refuted = false;
            for (const auto& c : reproduce(ao)) {
                print_claim(out, c);
                any_refuted = any_refuted || c.verified == Verdict::refuted;
            }
            return any_refuted ? refuted : ok;
        }
    } catch (const ResourceExhausted& e) {
        err << "error: " << e.what() << '\n';
        return budget;
    } catch (const OracleDisagreement& e) {
        err << "error: " << e.what() << '\n';
        return refuted;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const DisconnectedGraphError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace mdim::cli
