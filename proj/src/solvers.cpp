#include "mdim/solvers.hpp"

#include "mdim/generators.hpp"
#include "mdim/vertex_cover.hpp"

namespace mdim {

std::string to_string(Method m) {
    switch (m) {
        case Method::naive: return "naive";
        case Method::pruned: return "pruned";
        case Method::vc_reduction: return "vc-reduction";
    }
    return "?";
}

Method parse_method(const std::string& text) {
    if (text == "naive") return Method::naive;
    if (text == "pruned") return Method::pruned;
    if (text == "vc" || text == "vc-reduction") return Method::vc_reduction;
    throw std::invalid_argument("unknown method '" + text + "' (expected naive, pruned or vc)");
}

OracleDisagreement::OracleDisagreement(std::size_t direct, std::size_t reduction)
    : std::runtime_error("strong solvers disagree: direct search gives " + std::to_string(direct) +
                         ", vertex-cover reduction gives " + std::to_string(reduction)),
      direct_(direct),
      reduction_(reduction) {}

bool verify_set(const DistanceMatrix& d, Parameter kind, const OrderedVertexSet& set) {
    switch (kind) {
        case Parameter::resolving: return is_resolving(d, set);
        case Parameter::doubly: return is_doubly_resolving(d, set);
        case Parameter::strong: return is_strong_resolving(d, set);
    }
    return false;
}

std::vector<std::vector<VertexId>> last_layer_units(const Graph& g) {
    const auto& tag = g.family_tag();
    if (!tag || tag->family == Family::custom) return {};
    auto layout = LayeredLayout::for_tag(*tag);
    if (layout.layers() < 2) return {};
    return layout.units(layout.layers());
}

namespace {

void require_searchable(const Graph& g, Parameter kind) {
    if (g.order() == 0) throw std::domain_error("empty graph");
    if (kind == Parameter::doubly && g.order() < 2) {
        throw std::domain_error("doubly resolving sets need a graph with at least two vertices");
    }
}

// Post-conditions every solver result must satisfy before it leaves this module.
void check_result(const DistanceMatrix& d, const Graph& g, const SolveResult& r) {
    if (r.witness.size() != r.optimum || !verify_set(d, r.kind, r.witness)) {
        throw std::logic_error("solver produced a witness that fails the " + to_string(r.kind) + " verifier");
    }
    if (r.optimum < twin_lower_bound(twin_classes(g))) {
        throw std::logic_error("solver optimum below the twin-class lower bound");
    }
}

SolveResult solve_direct(const Graph& g, Parameter kind, const SolveOptions& options) {
    require_searchable(g, kind);
    if (options.method == Method::vc_reduction) {
        throw std::invalid_argument("vc-reduction applies only to the strong parameter via solve_min_strong_vc");
    }
    auto d = apsp(g);
    SearchConstraints constraints;
    if (options.family_pruned) {
        constraints.required_groups = last_layer_units(g);
        if (constraints.required_groups.empty()) {
            throw std::invalid_argument("family pruning needs a CCC/LCG graph with at least two layers");
        }
    }
    auto twins = twin_classes(g);
    if (options.method == Method::pruned) {
        constraints.min_size = twin_lower_bound(twins);
        // Any valid set holds all but one member of each twin class, and the
        // swap symmetry lets the search keep the smallest ones.
        for (const auto& cls : twins) constraints.forced.insert(constraints.forced.end(), cls.begin(), cls.end() - 1);
    }

    BudgetMeter meter(options.budget);
    auto found = options.method == Method::naive ? naive_min_search(kind, d, constraints, meter)
                                                 : pruned_min_search(kind, d, constraints, meter);
    if (!found) throw std::logic_error("no " + to_string(kind) + " set exists; the full vertex set always qualifies");

    SolveResult r;
    r.kind = kind;
    r.optimum = found->size();
    r.witness = OrderedVertexSet(std::move(*found));
    r.method = options.method;
    r.stats.subsets_examined = meter.count();
    r.stats.elapsed_seconds = meter.elapsed_seconds();
    r.stats.forced_members = constraints.forced.size();
    r.stats.family_pruned = options.family_pruned;
    check_result(d, g, r);
    return r;
}

}  // namespace

SolveResult solve_min_resolving(const Graph& g, const SolveOptions& options) {
    return solve_direct(g, Parameter::resolving, options);
}

SolveResult solve_min_doubly(const Graph& g, const SolveOptions& options) {
    return solve_direct(g, Parameter::doubly, options);
}

SolveResult solve_min_strong_direct(const Graph& g, const SolveOptions& options) {
    return solve_direct(g, Parameter::strong, options);
}

SolveResult solve_min_strong_vc(const Graph& g, const SearchBudget& budget) {
    require_searchable(g, Parameter::strong);
    auto d = apsp(g);
    BudgetMeter meter(budget);
    auto cover = min_vertex_cover(mmd_pairs(g, d), meter);

    SolveResult r;
    r.kind = Parameter::strong;
    r.method = Method::vc_reduction;
    // A graph without MMD pairs (a single vertex) still needs one landmark.
    r.witness = cover.empty() ? OrderedVertexSet{0} : cover;
    r.optimum = r.witness.size();
    r.stats.subsets_examined = meter.count();
    r.stats.elapsed_seconds = meter.elapsed_seconds();
    check_result(d, g, r);
    return r;
}

SolveResult solve(const Graph& g, Parameter kind, const SolveOptions& options) {
    if (options.method == Method::vc_reduction) {
        if (kind != Parameter::strong) throw std::invalid_argument("vc-reduction only solves the strong parameter");
        return solve_min_strong_vc(g, options.budget);
    }
    return solve_direct(g, kind, options);
}

StrongCrossCheck solve_min_strong_checked(const Graph& g, const SolveOptions& direct_options) {
    StrongCrossCheck out{solve_min_strong_direct(g, direct_options), solve_min_strong_vc(g, direct_options.budget)};
    if (out.direct.optimum != out.reduction.optimum) {
        throw OracleDisagreement(out.direct.optimum, out.reduction.optimum);
    }
    return out;
}

}  // namespace mdim
