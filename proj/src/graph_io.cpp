#include "mdim/graph_io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <algorithm>
#include <sstream>

namespace mdim {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

// Reads one unsigned integer token; rejects signs and garbage.
std::size_t read_count(std::istringstream& is, std::size_t line, const char* what) {
    std::string tok;
    if (!(is >> tok)) throw ParseError(line, std::string("missing ") + what);
    if (tok.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(line, std::string("invalid ") + what + " '" + tok + "'");
    }
    try {
        return std::stoull(tok);
    } catch (const std::out_of_range&) {
        throw ParseError(line, std::string(what) + " out of range");
    }
}

void expect_end(std::istringstream& is, std::size_t line) {
    std::string rest;
    if (is >> rest) throw ParseError(line, "unexpected trailing token '" + rest + "'");
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "edge-list") return GraphFormat::edge_list;
    if (name == "dimacs") return GraphFormat::dimacs;
    throw std::invalid_argument("unknown graph format '" + name + "'");
}

Graph read_graph(std::istream& in, GraphFormat format) {
    const bool dimacs = format == GraphFormat::dimacs;
    std::string text;
    std::size_t line = 0;
    bool have_header = false;
    std::size_t order = 0;
    std::size_t declared_edges = 0;
    std::size_t header_line = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    while (std::getline(in, text)) {
        ++line;
        if (blank(text)) continue;
        std::istringstream is(text);
        std::string first;
        is >> first;
        if (dimacs && first == "c") continue;

        if (!have_header) {
            if (first != "p") throw ParseError(line, "expected header line starting with 'p'");
            if (dimacs) {
                std::string kind;
                if (!(is >> kind) || kind != "edge") throw ParseError(line, "expected 'p edge <order> <edges>'");
            }
            order = read_count(is, line, "vertex count");
            declared_edges = read_count(is, line, "edge count");
            expect_end(is, line);
            if (order > std::numeric_limits<VertexId>::max()) throw ParseError(line, "vertex count too large");
            have_header = true;
            header_line = line;
            continue;
        }

        std::istringstream es(text);
        if (dimacs) {
            std::string tag;
            es >> tag;
            if (tag != "e") throw ParseError(line, "expected edge line 'e u v'");
        }
        std::size_t u = read_count(es, line, "endpoint");
        std::size_t v = read_count(es, line, "endpoint");
        expect_end(es, line);
        if (dimacs) {
            if (u == 0 || v == 0) throw ParseError(line, "DIMACS vertex ids are 1-based");
            --u;
            --v;
        } else if (u >= v) {
            throw ParseError(line, "edge-list lines must satisfy u < v");
        }
        if (u >= order || v >= order) throw ParseError(line, "endpoint outside declared vertex range");
        if (u == v) throw ParseError(line, "self-loop");
        Edge e{static_cast<VertexId>(std::min(u, v)), static_cast<VertexId>(std::max(u, v))};
        if (!seen.insert(e).second) {
            throw ParseError(line, "duplicate edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")");
        }
        edges.push_back(e);
    }
    if (!have_header) throw ParseError(line, "missing header line");
    if (edges.size() != declared_edges) {
        throw ParseError(header_line, "header declares " + std::to_string(declared_edges) + " edges but " +
                                          std::to_string(edges.size()) + " were read");
    }
    return Graph::from_edges(order, edges);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
    auto edges = g.edges();
    if (format == GraphFormat::edge_list) {
        out << "p " << g.order() << ' ' << edges.size() << '\n';
        for (auto [u, v] : edges) out << u << ' ' << v << '\n';
    } else {
        out << "p edge " << g.order() << ' ' << edges.size() << '\n';
        for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
}

void write_labels(std::ostream& out, const Graph& g) {
    if (!g.has_labels()) throw std::invalid_argument("graph carries no vertex labels");
    for (VertexId v = 0; v < g.order(); ++v) {
        const auto& l = g.label(v);
        out << v << '\t' << l.layer << '\t' << l.branch << '\t' << l.unit << '\t' << l.position << '\n';
    }
}

std::vector<VertexLabel> read_labels(std::istream& in, std::size_t order) {
    std::vector<VertexLabel> labels(order);
    std::vector<bool> seen(order, false);
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (blank(text)) continue;
        std::istringstream is(text);
        long long id = 0;
        VertexLabel l;
        if (!(is >> id >> l.layer >> l.branch >> l.unit >> l.position)) {
            throw ParseError(line, "expected 'id layer branch unit position'");
        }
        expect_end(is, line);
        if (id < 0 || static_cast<std::size_t>(id) >= order) throw ParseError(line, "label id out of range");
        if (seen[static_cast<std::size_t>(id)]) throw ParseError(line, "duplicate label id");
        seen[static_cast<std::size_t>(id)] = true;
        labels[static_cast<std::size_t>(id)] = l;
    }
    for (std::size_t v = 0; v < order; ++v) {
        if (!seen[v]) throw ParseError(line, "missing label for vertex " + std::to_string(v));
    }
    return labels;
}

}  // namespace mdim
