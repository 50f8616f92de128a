#include "mdim/resolving.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mdim {

OrderedVertexSet::OrderedVertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
    auto copy = members_;
    std::sort(copy.begin(), copy.end());
    auto dup = std::adjacent_find(copy.begin(), copy.end());
    if (dup != copy.end()) throw std::invalid_argument("vertex " + std::to_string(*dup) + " repeated in set");
}

bool OrderedVertexSet::contains(VertexId v) const {
    return std::find(members_.begin(), members_.end(), v) != members_.end();
}

void OrderedVertexSet::check_within(std::size_t order) const {
    for (VertexId v : members_) {
        if (v >= order) {
            throw std::domain_error("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order));
        }
    }
}

OrderedVertexSet OrderedVertexSet::sorted() const {
    auto copy = members_;
    std::sort(copy.begin(), copy.end());
    return OrderedVertexSet(std::move(copy));
}

std::string OrderedVertexSet::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << members_[i];
    return os.str();
}

std::vector<int> representation(const DistanceMatrix& d, VertexId u, const OrderedVertexSet& r) {
    if (r.empty()) throw std::domain_error("representation with respect to an empty set");
    r.check_within(d.order());
    if (u >= d.order()) throw std::domain_error("vertex " + std::to_string(u) + " out of range");
    std::vector<int> out;
    out.reserve(r.size());
    for (VertexId w : r) out.push_back(d(u, w));
    return out;
}

namespace {

// True iff the rows keyed by `key(u, j)` are pairwise distinct across all vertices.
template <class Key>
bool all_rows_distinct(std::size_t order, std::size_t width, Key key) {
    std::vector<int> rows(order * width);
    for (VertexId u = 0; u < order; ++u) {
        for (std::size_t j = 0; j < width; ++j) rows[u * width + j] = key(u, j);
    }
    std::vector<VertexId> idx(order);
    std::iota(idx.begin(), idx.end(), 0);
    auto row = [&](VertexId u) { return rows.begin() + static_cast<std::ptrdiff_t>(u * width); };
    std::sort(idx.begin(), idx.end(), [&](VertexId a, VertexId b) {
        return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(width), row(b),
                                            row(b) + static_cast<std::ptrdiff_t>(width));
    });
    for (std::size_t i = 1; i < order; ++i) {
        if (std::equal(row(idx[i - 1]), row(idx[i - 1]) + static_cast<std::ptrdiff_t>(width), row(idx[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_resolving(const DistanceMatrix& d, const OrderedVertexSet& r) {
    if (r.empty()) throw std::domain_error("resolving check requires a nonempty set");
    r.check_within(d.order());
    return all_rows_distinct(d.order(), r.size(), [&](VertexId u, std::size_t j) { return d(u, r[j]); });
}

bool doubly_resolves(const DistanceMatrix& d, VertexId x, VertexId y, VertexId u, VertexId v) {
    if (x == y || u == v) throw std::domain_error("doubly_resolves requires x != y and u != v");
    return d(u, x) - d(u, y) != d(v, x) - d(v, y);
}

bool is_doubly_resolving(const DistanceMatrix& d, const OrderedVertexSet& z) {
    if (z.size() < 2) throw std::domain_error("a doubly resolving set needs at least two vertices");
    z.check_within(d.order());
    // r(u)-r(v) is constant iff r(u)-d(u,z0) == r(v)-d(v,z0) coordinate-wise.
    const VertexId anchor = z[0];
    return all_rows_distinct(d.order(), z.size() - 1,
                             [&](VertexId u, std::size_t j) { return d(u, z[j + 1]) - d(u, anchor); });
}

bool strongly_resolves(const DistanceMatrix& d, VertexId w, VertexId u, VertexId v) {
    if (u == v) throw std::domain_error("strongly_resolves requires u != v");
    return d(u, w) == d(u, v) + d(v, w) || d(v, w) == d(v, u) + d(u, w);
}

bool is_strong_resolving(const DistanceMatrix& d, const OrderedVertexSet& r) {
    if (r.empty()) throw std::domain_error("strong resolving check requires a nonempty set");
    r.check_within(d.order());
    const auto n = static_cast<VertexId>(d.order());
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            bool ok = std::any_of(r.begin(), r.end(), [&](VertexId w) { return strongly_resolves(d, w, u, v); });
            if (!ok) return false;
        }
    }
    return true;
}

std::vector<std::vector<VertexId>> MmdGraph::adjacency() const {
    std::vector<std::vector<VertexId>> adj(order);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

bool maximally_distant(const Graph& g, const DistanceMatrix& d, VertexId u, VertexId from) {
    for (VertexId w : g.neighbors(u)) {
        if (d(from, w) > d(from, u)) return false;
    }
    return true;
}

MmdGraph mmd_pairs(const Graph& g, const DistanceMatrix& d) {
    MmdGraph h;
    h.order = g.order();
    const auto n = static_cast<VertexId>(g.order());
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (maximally_distant(g, d, u, v) && maximally_distant(g, d, v, u)) h.edges.emplace_back(u, v);
        }
    }
    return h;
}

std::vector<std::vector<VertexId>> twin_classes(const Graph& g) {
    const auto n = static_cast<VertexId>(g.order());
    auto open_without = [&](VertexId a, VertexId b) {
        std::vector<VertexId> out;
        for (VertexId x : g.neighbors(a)) {
            if (x != b) out.push_back(x);
        }
        return out;
    };
    std::vector<VertexId> cls(n, n);
    std::vector<std::vector<VertexId>> classes;
    for (VertexId u = 0; u < n; ++u) {
        if (cls[u] != n) continue;
        cls[u] = static_cast<VertexId>(classes.size());
        classes.push_back({u});
        for (VertexId v = u + 1; v < n; ++v) {
            if (cls[v] != n) continue;
            if (g.degree(u) != g.degree(v)) continue;
            if (open_without(u, v) == open_without(v, u)) {
                cls[v] = cls[u];
                classes.back().push_back(v);
            }
        }
    }
    return classes;
}

std::size_t twin_lower_bound(const std::vector<std::vector<VertexId>>& classes) {
    std::size_t total = 0;
    for (const auto& c : classes) total += c.size() - 1;
    return total;
}

}  // namespace mdim
