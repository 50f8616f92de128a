#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

// edge_list: "p <order> <edges>" then "u v" per line, 0-based, u < v.
// dimacs:    "p edge <order> <edges>" then "e u v", 1-based; "c" lines are comments.
enum class GraphFormat { edge_list, dimacs };

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

Graph read_graph(std::istream& in, GraphFormat format);
void write_graph(std::ostream& out, const Graph& g, GraphFormat format);

/// "id<TAB>layer<TAB>branch<TAB>unit<TAB>position", one row per vertex, no header.
void write_labels(std::ostream& out, const Graph& g);
std::vector<VertexLabel> read_labels(std::istream& in, std::size_t order);

GraphFormat parse_graph_format(const std::string& name);

}  // namespace mdim
