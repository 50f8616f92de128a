#include "mdim/generators.hpp"

#include <regex>
#include <stdexcept>

namespace mdim {

namespace {

std::size_t ipow(std::size_t base, int exp) {
    std::size_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Intra-unit edges on 1-based positions.
std::vector<std::pair<int, int>> cube_edges() {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= 8; ++i) {
        for (int j = i + 1; j <= 8; ++j) {
            bool same_half = (i <= 4) == (j <= 4);
            if (same_half && (j - i == 1 || j - i == 3)) out.emplace_back(i, j);
            if (!same_half && j - i == 4) out.emplace_back(i, j);
        }
    }
    return out;
}

std::vector<std::pair<int, int>> cycle_edges(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (j - i == 1 || j - i == n - 1) out.emplace_back(i, j);
        }
    }
    return out;
}

Graph build_layered(const LayeredLayout& layout, const std::vector<std::pair<int, int>>& unit_edges) {
    std::vector<Edge> edges;
    auto add_unit = [&](VertexId base) {
        for (auto [i, j] : unit_edges) edges.emplace_back(base + i - 1, base + j - 1);
    };

    add_unit(0);
    for (int p = 2; p <= layout.layers(); ++p) {
        for (const auto& unit : layout.units(p)) add_unit(unit.front());
    }
    for (int r = 1; r <= layout.unit_size(); ++r) {
        if (layout.layers() < 2) break;
        edges.emplace_back(layout.id_of({1, 0, 0, r}), layout.id_of({2, r, 1, 1}));
    }
    for (int p = 2; p < layout.layers(); ++p) {
        for (const auto& unit : layout.units(p)) {
            for (std::size_t i = 1; i < unit.size(); ++i) {
                edges.emplace_back(unit[i], layout.id_of(layout.child_head(layout.label_of(unit[i]))));
            }
        }
    }

    std::vector<VertexLabel> labels(layout.order());
    for (VertexId v = 0; v < layout.order(); ++v) labels[v] = layout.label_of(v);
    return Graph::from_edges(layout.order(), edges).with_labels(std::move(labels), layout.tag());
}

}  // namespace

Graph build_cube_unit() {
    std::vector<Edge> edges;
    for (auto [i, j] : cube_edges()) edges.emplace_back(i - 1, j - 1);
    return Graph::from_edges(8, edges);
}

Graph build_cycle(int n) {
    if (n < 3) throw std::domain_error("cycle length must be >= 3, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (auto [i, j] : cycle_edges(n)) edges.emplace_back(i - 1, j - 1);
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph build_ccc(int n) {
    return build_layered(LayeredLayout::ccc(n), cube_edges());
}

Graph build_lcg(int n, int k) {
    auto layout = LayeredLayout::lcg(n, k);
    return build_layered(layout, cycle_edges(n));
}

Graph build_family(const FamilyTag& tag) {
    switch (tag.family) {
        case Family::ccc: return build_ccc(tag.n);
        case Family::lcg: return build_lcg(tag.n, tag.k);
        case Family::custom: break;
    }
    throw std::domain_error("custom graphs have no generator");
}

std::size_t ccc_order(int n) {
    if (n < 1) throw std::domain_error("CCC(n) requires n >= 1");
    std::size_t sum = 0;
    for (int k = 2; k <= n; ++k) sum += ipow(7, k - 2);
    return 8 + 64 * sum;
}

std::size_t lcg_order(int n, int k) {
    if (n < 3 || k < 2) throw std::domain_error("LCG(n,k) requires n >= 3 and k >= 2");
    std::size_t nn = static_cast<std::size_t>(n);
    std::size_t sum = 0;
    for (int p = 2; p <= k; ++p) sum += nn * nn * ipow(nn - 1, p - 2);
    return nn + sum;
}

LayeredLayout::LayeredLayout(FamilyTag tag, int unit_size, int layers)
    : tag_(tag), unit_size_(unit_size), layers_(layers), layer_offset_(static_cast<std::size_t>(layers) + 2, 0) {
    std::size_t offset = 0;
    for (int p = 1; p <= layers_; ++p) {
        layer_offset_[static_cast<std::size_t>(p)] = offset;
        offset += layer_size(p);
    }
    layer_offset_[static_cast<std::size_t>(layers_) + 1] = offset;
    order_ = offset;
}

LayeredLayout LayeredLayout::ccc(int n) {
    if (n < 1) throw std::domain_error("CCC(n) requires n >= 1, got " + std::to_string(n));
    return {FamilyTag{Family::ccc, n, 0}, 8, n};
}

LayeredLayout LayeredLayout::lcg(int n, int k) {
    if (n < 3 || k < 2) {
        throw std::domain_error("LCG(n,k) requires n >= 3 and k >= 2, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
    }
    return {FamilyTag{Family::lcg, n, k}, n, k};
}

LayeredLayout LayeredLayout::for_tag(const FamilyTag& tag) {
    switch (tag.family) {
        case Family::ccc: return ccc(tag.n);
        case Family::lcg: return lcg(tag.n, tag.k);
        case Family::custom: break;
    }
    throw std::domain_error("custom graphs have no layered layout");
}

std::size_t LayeredLayout::units_per_branch(int layer) const {
    if (layer < 2 || layer > layers_) throw std::domain_error("layer " + std::to_string(layer) + " has no units");
    return ipow(static_cast<std::size_t>(fanout()), layer - 2);
}

std::size_t LayeredLayout::units_in_layer(int layer) const {
    return static_cast<std::size_t>(unit_size_) * units_per_branch(layer);
}

std::size_t LayeredLayout::layer_size(int layer) const {
    if (layer == 1) return static_cast<std::size_t>(unit_size_);
    return units_in_layer(layer) * static_cast<std::size_t>(unit_size_);
}

VertexId LayeredLayout::id_of(const VertexLabel& l) const {
    auto bad = [&] { return std::domain_error("label " + l.to_string() + " is not a vertex of " + tag_.describe()); };
    if (l.layer < 1 || l.layer > layers_) throw bad();
    if (l.position < 1 || l.position > unit_size_) throw bad();
    if (l.layer == 1) {
        if (l.branch != 0 || l.unit != 0) throw bad();
        return static_cast<VertexId>(l.position - 1);
    }
    auto per_branch = units_per_branch(l.layer);
    if (l.branch < 1 || l.branch > unit_size_) throw bad();
    if (l.unit < 1 || static_cast<std::size_t>(l.unit) > per_branch) throw bad();
    std::size_t unit_index = static_cast<std::size_t>(l.branch - 1) * per_branch + static_cast<std::size_t>(l.unit - 1);
    return static_cast<VertexId>(layer_offset_[static_cast<std::size_t>(l.layer)] +
                                 unit_index * static_cast<std::size_t>(unit_size_) +
                                 static_cast<std::size_t>(l.position - 1));
}

VertexLabel LayeredLayout::label_of(VertexId id) const {
    if (id >= order_) {
        throw std::domain_error("vertex id " + std::to_string(id) + " out of range for " + tag_.describe());
    }
    int p = 1;
    while (layer_offset_[static_cast<std::size_t>(p) + 1] <= id) ++p;
    std::size_t local = id - layer_offset_[static_cast<std::size_t>(p)];
    auto size = static_cast<std::size_t>(unit_size_);
    if (p == 1) return {1, 0, 0, static_cast<int>(local) + 1};
    std::size_t unit_index = local / size;
    auto per_branch = units_per_branch(p);
    return {p, static_cast<int>(unit_index / per_branch) + 1, static_cast<int>(unit_index % per_branch) + 1,
            static_cast<int>(local % size) + 1};
}

VertexLabel LayeredLayout::child_head(const VertexLabel& parent) const {
    if (parent.layer < 2 || parent.layer >= layers_ || parent.position < 2) {
        throw std::domain_error("vertex " + parent.to_string() + " spawns no unit");
    }
    return {parent.layer + 1, parent.branch, (parent.unit - 1) * fanout() + (parent.position - 1), 1};
}

std::vector<std::vector<VertexId>> LayeredLayout::units(int layer) const {
    std::vector<std::vector<VertexId>> out(units_in_layer(layer));
    auto base = static_cast<VertexId>(layer_offset_[static_cast<std::size_t>(layer)]);
    for (std::size_t u = 0; u < out.size(); ++u) {
        for (int i = 0; i < unit_size_; ++i) {
            out[u].push_back(base + static_cast<VertexId>(u * static_cast<std::size_t>(unit_size_)) +
                             static_cast<VertexId>(i));
        }
    }
    return out;
}

FamilyTag parse_family_descriptor(const std::string& text) {
    static const std::regex ccc_re(R"(ccc:n=(\d+))");
    static const std::regex lcg_re(R"(lcg:n=(\d+),k=(\d+))");
    std::smatch m;
    if (std::regex_match(text, m, ccc_re)) return {Family::ccc, std::stoi(m[1]), 0};
    if (std::regex_match(text, m, lcg_re)) return {Family::lcg, std::stoi(m[1]), std::stoi(m[2])};
    throw std::invalid_argument("bad family descriptor '" + text + "' (expected ccc:n=<n> or lcg:n=<n>,k=<k>)");
}

}  // namespace mdim
