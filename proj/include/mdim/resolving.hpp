#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// Distinct vertex ids in a fixed order. Order matters: representations are
/// coordinate tuples indexed by position in the set.
class OrderedVertexSet {
public:
    OrderedVertexSet() = default;
    /// Throws std::invalid_argument on duplicates.
    explicit OrderedVertexSet(std::vector<VertexId> members);
    OrderedVertexSet(std::initializer_list<VertexId> members)
        : OrderedVertexSet(std::vector<VertexId>(members)) {}

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    VertexId operator[](std::size_t i) const { return members_[i]; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    const std::vector<VertexId>& members() const noexcept { return members_; }
    bool contains(VertexId v) const;

    /// Throws std::domain_error if any member is >= order.
    void check_within(std::size_t order) const;

    OrderedVertexSet sorted() const;
    /// "a,b,c"
    std::string to_string() const;

    friend bool operator==(const OrderedVertexSet&, const OrderedVertexSet&) = default;

private:
    std::vector<VertexId> members_;
};

std::vector<int> representation(const DistanceMatrix& d, VertexId u, const OrderedVertexSet& r);

bool is_resolving(const DistanceMatrix& d, const OrderedVertexSet& r);

/// Whether the pair (u, v) separates x and y: d(u,x)-d(u,y) != d(v,x)-d(v,y).
bool doubly_resolves(const DistanceMatrix& d, VertexId x, VertexId y, VertexId u, VertexId v);

/// Every pair of vertices has a non-constant representation difference.
/// Throws std::domain_error when |z| < 2.
bool is_doubly_resolving(const DistanceMatrix& d, const OrderedVertexSet& z);

/// w strongly resolves u, v when u lies on a shortest v-w path or v on a shortest u-w path.
bool strongly_resolves(const DistanceMatrix& d, VertexId w, VertexId u, VertexId v);

bool is_strong_resolving(const DistanceMatrix& d, const OrderedVertexSet& r);

/// Strong resolving graph: same vertex set, edges are the mutually maximally distant pairs.
struct MmdGraph {
    std::size_t order = 0;
    std::vector<Edge> edges;  // u < v, sorted

    std::vector<std::vector<VertexId>> adjacency() const;
};

bool maximally_distant(const Graph& g, const DistanceMatrix& d, VertexId u, VertexId from);
MmdGraph mmd_pairs(const Graph& g, const DistanceMatrix& d);

/// Partition into twin classes (N(u)\{v} == N(v)\{u}); each class sorted,
/// classes ordered by smallest member. Singletons included.
std::vector<std::vector<VertexId>> twin_classes(const Graph& g);

/// Sum over classes of (|class| - 1): a lower bound for all three parameters.
std::size_t twin_lower_bound(const std::vector<std::vector<VertexId>>& classes);

}  // namespace mdim
