#include "mdim/vertex_cover.hpp"

#include <algorithm>

#include "mdim/bitset.hpp"

namespace mdim {

namespace {

class CoverOracle {
public:
    CoverOracle(const MmdGraph& h, BudgetMeter& meter) : n_(h.order), meter_(meter), adj_(h.order, Bitset(h.order)) {
        for (auto [u, v] : h.edges) {
            adj_[u].set(v);
            adj_[v].set(u);
        }
    }

    std::size_t order() const noexcept { return n_; }
    const Bitset& neighbors(VertexId v) const { return adj_[v]; }

    std::size_t degree_in(VertexId v, const Bitset& active) const { return adj_[v].count_and(active); }

    /// Can the edges induced by `active` be covered with at most `budget` vertices?
    bool feasible(Bitset active, long budget) {
        meter_.tick();
        if (budget < 0) return false;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = active.first(); v < n_; v = active.next(v)) {
                auto deg = static_cast<long>(degree_in(static_cast<VertexId>(v), active));
                if (deg == 0) {
                    active.reset(v);
                    changed = true;
                } else if (deg == 1) {
                    // Some optimal cover takes the neighbour of a leaf.
                    Bitset nb = adj_[v];
                    nb &= active;
                    active.reset(nb.first());
                    active.reset(v);
                    if (--budget < 0) return false;
                    changed = true;
                } else if (deg > budget) {
                    // Excluding v would need all deg neighbours.
                    active.reset(v);
                    if (--budget < 0) return false;
                    changed = true;
                }
            }
        }
        if (active.none()) return true;
        if (static_cast<long>(matching_bound(active)) > budget) return false;

        VertexId pivot = 0;
        std::size_t best = 0;
        for (std::size_t v = active.first(); v < n_; v = active.next(v)) {
            std::size_t deg = degree_in(static_cast<VertexId>(v), active);
            if (deg > best) {
                best = deg;
                pivot = static_cast<VertexId>(v);
            }
        }
        Bitset take_pivot = active;
        take_pivot.reset(pivot);
        if (feasible(take_pivot, budget - 1)) return true;

        Bitset take_neighbours = active;
        take_neighbours.subtract(adj_[pivot]);
        take_neighbours.reset(pivot);
        return feasible(take_neighbours, budget - static_cast<long>(best));
    }

    std::size_t matching_bound(const Bitset& active) const {
        Bitset free = active;
        std::size_t matched = 0;
        for (std::size_t v = free.first(); v < n_; v = free.next(v)) {
            Bitset nb = adj_[v];
            nb &= free;
            std::size_t u = nb.first();
            if (u < n_) {
                free.reset(u);
                free.reset(v);
                ++matched;
            }
        }
        return matched;
    }

private:
    std::size_t n_;
    BudgetMeter& meter_;
    std::vector<Bitset> adj_;
};

}  // namespace

bool is_vertex_cover(const MmdGraph& h, const OrderedVertexSet& cover) {
    return std::all_of(h.edges.begin(), h.edges.end(),
                       [&](const Edge& e) { return cover.contains(e.first) || cover.contains(e.second); });
}

OrderedVertexSet min_vertex_cover(const MmdGraph& h, BudgetMeter& meter) {
    CoverOracle oracle(h, meter);
    const std::size_t n = h.order;
    Bitset active(n);
    active.set_all();

    long budget = static_cast<long>(oracle.matching_bound(active));
    while (!oracle.feasible(active, budget)) ++budget;

    // Fix vertices in id order, taking each one whenever an optimum survives.
    std::vector<VertexId> cover;
    for (VertexId v = 0; v < n; ++v) {
        if (!active.test(v)) continue;
        if (oracle.degree_in(v, active) == 0) {
            active.reset(v);
            continue;
        }
        Bitset with_v = active;
        with_v.reset(v);
        if (oracle.feasible(with_v, budget - 1)) {
            cover.push_back(v);
            active = with_v;
            --budget;
            continue;
        }
        Bitset nb = oracle.neighbors(v);
        nb &= active;
        for (std::size_t u = nb.first(); u < n; u = nb.next(u)) {
            cover.push_back(static_cast<VertexId>(u));
            active.reset(u);
            --budget;
        }
        active.reset(v);
    }
    std::sort(cover.begin(), cover.end());
    return OrderedVertexSet(std::move(cover));
}

OrderedVertexSet min_vertex_cover(const MmdGraph& h, const SearchBudget& budget) {
    BudgetMeter meter(budget);
    return min_vertex_cover(h, meter);
}

}  // namespace mdim
