#pragma once

#include "mdim/resolving.hpp"
#include "mdim/subset_search.hpp"

namespace mdim {

/// Exact minimum vertex cover by branch and bound (degree-0/1 reductions,
/// matching lower bound, max-degree branching). Among optimal covers the
/// lexicographically least sorted one is returned. Each search node is
/// charged to `meter`.
OrderedVertexSet min_vertex_cover(const MmdGraph& h, BudgetMeter& meter);

/// Convenience overload with its own meter.
OrderedVertexSet min_vertex_cover(const MmdGraph& h, const SearchBudget& budget = {});

bool is_vertex_cover(const MmdGraph& h, const OrderedVertexSet& cover);

}  // namespace mdim
