#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace oracle {

Matrix floyd_warshall(const mdim::Graph& g) {
    const std::size_t n = g.order();
    const int inf = std::numeric_limits<int>::max() / 4;
    Matrix d(n, std::vector<int>(n, inf));
    for (std::size_t u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (VertexId v : g.neighbors(static_cast<VertexId>(u))) d[u][v] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

int shortest_by_path_enumeration(const mdim::Graph& g, VertexId u, VertexId v) {
    int best = std::numeric_limits<int>::max();
    std::vector<bool> on_path(g.order(), false);
    std::function<void(VertexId, int)> walk = [&](VertexId x, int len) {
        if (x == v) {
            best = std::min(best, len);
            return;
        }
        on_path[x] = true;
        for (VertexId y : g.neighbors(x)) {
            if (!on_path[y]) walk(y, len + 1);
        }
        on_path[x] = false;
    };
    walk(u, 0);
    return best;
}

std::vector<bool> interval_by_paths(const mdim::Graph& g, VertexId u, VertexId v) {
    const int target = shortest_by_path_enumeration(g, u, v);
    std::vector<bool> in(g.order(), false);
    std::vector<VertexId> path;
    std::vector<bool> on_path(g.order(), false);
    std::function<void(VertexId)> walk = [&](VertexId x) {
        path.push_back(x);
        on_path[x] = true;
        if (x == v) {
            if (static_cast<int>(path.size()) - 1 == target) {
                for (VertexId p : path) in[p] = true;
            }
        } else if (static_cast<int>(path.size()) - 1 < target) {
            for (VertexId y : g.neighbors(x)) {
                if (!on_path[y]) walk(y);
            }
        }
        on_path[x] = false;
        path.pop_back();
    };
    walk(u);
    return in;
}

bool resolving(const Matrix& d, const std::vector<VertexId>& set) {
    for (std::size_t u = 0; u < d.size(); ++u) {
        for (std::size_t v = u + 1; v < d.size(); ++v) {
            bool same = true;
            for (VertexId w : set) same = same && d[u][w] == d[v][w];
            if (same) return false;
        }
    }
    return true;
}

bool doubly_by_pairs(const Matrix& d, const std::vector<VertexId>& set) {
    for (std::size_t u = 0; u < d.size(); ++u) {
        for (std::size_t v = u + 1; v < d.size(); ++v) {
            bool found = false;
            for (std::size_t a = 0; a < set.size() && !found; ++a) {
                for (std::size_t b = a + 1; b < set.size() && !found; ++b) {
                    VertexId x = set[a];
                    VertexId y = set[b];
                    found = d[u][x] - d[u][y] != d[v][x] - d[v][y];
                }
            }
            if (!found) return false;
        }
    }
    return true;
}

namespace {

using IntervalTable = std::vector<std::vector<std::vector<bool>>>;  // [w][u][x]: x on a shortest u-w path

IntervalTable interval_table(const mdim::Graph& g, const std::vector<VertexId>& landmarks) {
    const auto n = static_cast<VertexId>(g.order());
    IntervalTable t(n);
    for (VertexId w : landmarks) {
        t[w].resize(n);
        for (VertexId u = 0; u < n; ++u) t[w][u] = interval_by_paths(g, u, w);
    }
    return t;
}

bool strong_with(const IntervalTable& t, std::size_t n, const std::vector<VertexId>& set) {
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            bool found = false;
            for (VertexId w : set) found = found || t[w][u][v] || t[w][v][u];
            if (!found) return false;
        }
    }
    return true;
}

}  // namespace

bool strong_by_intervals(const mdim::Graph& g, const std::vector<VertexId>& set) {
    return strong_with(interval_table(g, set), g.order(), set);
}

std::vector<mdim::Edge> mmd_by_definition(const mdim::Graph& g, const Matrix& d) {
    auto max_from = [&](VertexId u, VertexId v) {
        for (VertexId w : g.neighbors(u)) {
            if (d[v][w] > d[v][u]) return false;
        }
        return true;
    };
    std::vector<mdim::Edge> out;
    for (VertexId u = 0; u < g.order(); ++u) {
        for (VertexId v = u + 1; v < g.order(); ++v) {
            if (max_from(u, v) && max_from(v, u)) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<VertexId> brute_force_minimum(const mdim::Graph& g, mdim::Parameter kind) {
    const std::size_t n = g.order();
    const Matrix d = floyd_warshall(g);
    std::vector<VertexId> all(n);
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    const IntervalTable table = kind == mdim::Parameter::strong ? interval_table(g, all) : IntervalTable{};
    std::size_t start = kind == mdim::Parameter::doubly ? 2 : 1;
    for (std::size_t k = start; k <= n; ++k) {
        // Collect all k-subsets as sorted vectors and take the lexicographically least valid one.
        std::vector<std::vector<VertexId>> valid;
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
            std::vector<VertexId> set;
            for (VertexId v = 0; v < n; ++v) {
                if (mask >> v & 1U) set.push_back(v);
            }
            bool ok = false;
            switch (kind) {
                case mdim::Parameter::resolving: ok = resolving(d, set); break;
                case mdim::Parameter::doubly: ok = doubly_by_pairs(d, set); break;
                case mdim::Parameter::strong: ok = strong_with(table, n, set); break;
            }
            if (ok) valid.push_back(set);
        }
        if (!valid.empty()) return *std::min_element(valid.begin(), valid.end());
    }
    return {};
}

std::size_t brute_force_vertex_cover(std::size_t order, const std::vector<mdim::Edge>& edges) {
    std::size_t best = order;
    for (std::uint32_t mask = 0; mask < (1U << order); ++mask) {
        bool ok = std::all_of(edges.begin(), edges.end(),
                              [&](const mdim::Edge& e) { return (mask >> e.first & 1U) || (mask >> e.second & 1U); });
        if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return best;
}

mdim::Graph random_connected_graph(std::mt19937& rng, std::size_t order, double p) {
    std::set<mdim::Edge> edges;
    for (VertexId v = 1; v < order; ++v) {
        std::uniform_int_distribution<VertexId> parent(0, v - 1);
        edges.emplace(parent(rng), v);
    }
    std::bernoulli_distribution coin(p);
    for (VertexId u = 0; u < order; ++u) {
        for (VertexId v = u + 1; v < order; ++v) {
            if (!edges.count({u, v}) && coin(rng)) edges.emplace(u, v);
        }
    }
    std::vector<mdim::Edge> list(edges.begin(), edges.end());
    return mdim::Graph::from_edges(order, list);
}

}  // namespace oracle
