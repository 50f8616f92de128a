#include "mdim/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace mdim {

std::string VertexLabel::to_string() const {
    std::ostringstream os;
    os << layer << ':' << branch << ':' << unit << ':' << position;
    return os.str();
}

std::string FamilyTag::describe() const {
    std::ostringstream os;
    switch (family) {
        case Family::ccc: os << "ccc:n=" << n; break;
        case Family::lcg: os << "lcg:n=" << n << ",k=" << k; break;
        case Family::custom: os << "custom"; break;
    }
    return os.str();
}

DisconnectedGraphError::DisconnectedGraphError(VertexId from, VertexId to)
    : std::runtime_error("graph is disconnected: vertex " + std::to_string(to) +
                         " is unreachable from vertex " + std::to_string(from)),
      from_(from),
      to_(to) {}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
    Graph g;
    g.adjacency_.resize(order);
    for (auto [u, v] : edges) {
        if (u >= order || v >= order) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") has an endpoint outside [0, " + std::to_string(order) + ")");
        }
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (std::size_t v = 0; v < order; ++v) {
        auto& nbrs = g.adjacency_[v];
        std::sort(nbrs.begin(), nbrs.end());
        auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
        if (dup != nbrs.end()) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(std::min<std::size_t>(v, *dup)) +
                                        ", " + std::to_string(std::max<std::size_t>(v, *dup)) + ")");
        }
    }
    g.edge_count_ = edges.size();
    return g;
}

Graph Graph::with_labels(std::vector<VertexLabel> labels, FamilyTag tag) && {
    if (labels.size() != order()) throw std::invalid_argument("label count does not match graph order");
    labels_ = std::move(labels);
    tag_ = tag;
    return std::move(*this);
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < order(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Graph::is_connected() const {
    if (order() == 0) return true;
    auto d = bfs_distances(*this, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x == unreachable; });
}

std::vector<int> bfs_distances(const Graph& g, VertexId src) {
    if (src >= g.order()) {
        throw std::domain_error("source vertex " + std::to_string(src) + " out of range for order " +
                                std::to_string(g.order()));
    }
    std::vector<int> dist(g.order(), unreachable);
    std::vector<VertexId> queue;
    queue.reserve(g.order());
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (VertexId w : g.neighbors(u)) {
            if (dist[w] == unreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int DistanceMatrix::diameter() const noexcept {
    return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix apsp(const Graph& g) {
    DistanceMatrix m;
    m.order_ = g.order();
    m.d_.resize(m.order_ * m.order_);
    for (VertexId u = 0; u < g.order(); ++u) {
        auto row = bfs_distances(g, u);
        for (VertexId v = 0; v < g.order(); ++v) {
            if (row[v] == unreachable) throw DisconnectedGraphError(u, v);
        }
        std::copy(row.begin(), row.end(), m.d_.begin() + static_cast<std::ptrdiff_t>(u * m.order_));
    }
    return m;
}

}  // namespace mdim
