#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Coordinate of a vertex inside a layered family graph.
///
/// Layer-1 vertices carry branch = unit = 0 and their raw name (1-based) in
/// `position`. For layers >= 2, `position == 1` is the head of the unit.
struct VertexLabel {
    int layer = 0;
    int branch = 0;
    int unit = 0;
    int position = 0;

    friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;

    std::string to_string() const;
};

enum class Family { ccc, lcg, custom };

struct FamilyTag {
    Family family = Family::custom;
    int n = 0;
    int k = 0;  // only meaningful for lcg

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;

    /// "ccc:n=2", "lcg:n=3,k=2" or "custom".
    std::string describe() const;
};

class DisconnectedGraphError : public std::runtime_error {
public:
    DisconnectedGraphError(VertexId from, VertexId to);
    VertexId from() const noexcept { return from_; }
    VertexId to() const noexcept { return to_; }

private:
    VertexId from_;
    VertexId to_;
};

/// Immutable simple undirected graph on vertices 0..order-1.
class Graph {
public:
    Graph() = default;

    /// Throws std::invalid_argument on self-loops, duplicate edges, or
    /// endpoints outside [0, order).
    static Graph from_edges(std::size_t order, std::span<const Edge> edges);

    Graph with_labels(std::vector<VertexLabel> labels, FamilyTag tag) &&;

    std::size_t order() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
    bool adjacent(VertexId u, VertexId v) const;

    /// All edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<VertexLabel>& labels() const noexcept { return labels_; }
    const VertexLabel& label(VertexId v) const { return labels_.at(v); }
    const std::optional<FamilyTag>& family_tag() const noexcept { return tag_; }

    bool is_connected() const;

private:
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
    std::vector<VertexLabel> labels_;
    std::optional<FamilyTag> tag_;
};

inline constexpr int unreachable = std::numeric_limits<int>::max();

/// Hop counts from `src`; vertices not reached hold `unreachable`.
/// Throws std::domain_error when src is out of range.
std::vector<int> bfs_distances(const Graph& g, VertexId src);

/// Dense all-pairs hop-count matrix of a connected graph.
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    std::size_t order() const noexcept { return order_; }
    int operator()(VertexId u, VertexId v) const noexcept { return d_[std::size_t{u} * order_ + v]; }
    std::span<const int> row(VertexId u) const {
        return {d_.data() + std::size_t{u} * order_, order_};
    }
    int diameter() const noexcept;

    friend DistanceMatrix apsp(const Graph& g);

private:
    std::size_t order_ = 0;
    std::vector<int> d_;
};

/// Throws DisconnectedGraphError naming an unreachable pair.
DistanceMatrix apsp(const Graph& g);

}  // namespace mdim
