#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdim/graph.hpp"
#include "mdim/resolving.hpp"
#include "mdim/subset_search.hpp"

namespace mdim {

enum class Method { naive, pruned, vc_reduction };

std::string to_string(Method m);
Method parse_method(const std::string& text);

struct SearchStats {
    std::uint64_t subsets_examined = 0;
    double elapsed_seconds = 0.0;
    std::size_t forced_members = 0;
    /// The search only considered sets meeting every last-layer unit.
    bool family_pruned = false;
};

struct SolveResult {
    Parameter kind = Parameter::resolving;
    std::size_t optimum = 0;
    OrderedVertexSet witness;
    Method method = Method::pruned;
    SearchStats stats;
};

struct SolveOptions {
    Method method = Method::pruned;
    SearchBudget budget{};
    /// Restrict to sets with at least one member in every unit of the last
    /// layer. Requires a family-tagged graph.
    bool family_pruned = false;
};

/// The VC-reduction and direct strong solvers disagreed; both values are kept.
class OracleDisagreement : public std::runtime_error {
public:
    OracleDisagreement(std::size_t direct, std::size_t reduction);
    std::size_t direct() const noexcept { return direct_; }
    std::size_t reduction() const noexcept { return reduction_; }

private:
    std::size_t direct_;
    std::size_t reduction_;
};

/// Vertex groups of the last layer's units, or empty for untagged graphs
/// and single-layer families.
std::vector<std::vector<VertexId>> last_layer_units(const Graph& g);

SolveResult solve_min_resolving(const Graph& g, const SolveOptions& options = {});
SolveResult solve_min_doubly(const Graph& g, const SolveOptions& options = {});
/// method must be naive or pruned.
SolveResult solve_min_strong_direct(const Graph& g, const SolveOptions& options = {});
SolveResult solve_min_strong_vc(const Graph& g, const SearchBudget& budget = {});

/// Dispatch on kind; Method::vc_reduction is only valid for strong.
SolveResult solve(const Graph& g, Parameter kind, const SolveOptions& options = {});

struct StrongCrossCheck {
    SolveResult direct;
    SolveResult reduction;
};

/// Runs both strong solvers; throws OracleDisagreement if their optima differ.
StrongCrossCheck solve_min_strong_checked(const Graph& g, const SolveOptions& direct_options = {});

bool verify_set(const DistanceMatrix& d, Parameter kind, const OrderedVertexSet& set);

}  // namespace mdim
