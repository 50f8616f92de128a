#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// distance, verifier or search code; they exist to check it.

#include <cstdint>
#include <random>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/subset_search.hpp"

namespace oracle {

using mdim::VertexId;
using Matrix = std::vector<std::vector<int>>;

Matrix floyd_warshall(const mdim::Graph& g);

/// Length of the shortest simple u-v path found by exhaustive DFS.
int shortest_by_path_enumeration(const mdim::Graph& g, VertexId u, VertexId v);

/// Vertices on at least one shortest u-v path, by enumerating the paths.
std::vector<bool> interval_by_paths(const mdim::Graph& g, VertexId u, VertexId v);

bool resolving(const Matrix& d, const std::vector<VertexId>& set);
/// "every pair is doubly resolved by some two members of the set".
bool doubly_by_pairs(const Matrix& d, const std::vector<VertexId>& set);
bool strong_by_intervals(const mdim::Graph& g, const std::vector<VertexId>& set);

std::vector<mdim::Edge> mmd_by_definition(const mdim::Graph& g, const Matrix& d);

/// Minimum over every subset (sizes ascending, lexicographic within a size).
std::vector<VertexId> brute_force_minimum(const mdim::Graph& g, mdim::Parameter kind);

std::size_t brute_force_vertex_cover(std::size_t order, const std::vector<mdim::Edge>& edges);

/// Random spanning tree plus each remaining pair with probability p.
mdim::Graph random_connected_graph(std::mt19937& rng, std::size_t order, double p);

}  // namespace oracle
