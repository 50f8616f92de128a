#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

/// The cube unit C4 x P2 on vertices "1".."8" (ids 0..7).
Graph build_cube_unit();

/// Cycle on n >= 3 vertices, ids in cycle order.
Graph build_cycle(int n);

/// Crystal cubic carbon with n >= 1 layers of cube units.
Graph build_ccc(int n);

/// Layer cycle graph: k >= 2 layers of n-cycles, n >= 3.
Graph build_lcg(int n, int k);

/// Arithmetic id <-> label mapping shared by CCC and LCG.
///
/// Ids are layer-major, then branch, then unit, then position. A non-head
/// vertex at position i of unit (r, s) in layer p parents the head of unit
/// (r, (s-1)*fanout + (i-1)) in layer p+1.
class LayeredLayout {
public:
    static LayeredLayout ccc(int n);
    static LayeredLayout lcg(int n, int k);
    static LayeredLayout for_tag(const FamilyTag& tag);

    const FamilyTag& tag() const noexcept { return tag_; }
    int unit_size() const noexcept { return unit_size_; }
    int fanout() const noexcept { return unit_size_ - 1; }
    int layers() const noexcept { return layers_; }

    /// Units per branch in layer p >= 2.
    std::size_t units_per_branch(int layer) const;
    /// Total units in layer p >= 2.
    std::size_t units_in_layer(int layer) const;
    std::size_t layer_size(int layer) const;
    std::size_t order() const noexcept { return order_; }

    /// Throws std::domain_error for coordinates outside the family.
    VertexId id_of(const VertexLabel& label) const;
    VertexLabel label_of(VertexId id) const;

    /// Head of the unit spawned by a non-head vertex of layer < layers().
    VertexLabel child_head(const VertexLabel& parent) const;

    /// Vertex ids of each unit of the given layer (>= 2), in id order.
    std::vector<std::vector<VertexId>> units(int layer) const;

private:
    LayeredLayout(FamilyTag tag, int unit_size, int layers);

    FamilyTag tag_;
    int unit_size_;
    int layers_;
    std::vector<std::size_t> layer_offset_;  // indexed by layer, [0] unused
    std::size_t order_ = 0;
};

/// Closed-form orders: 8 + 64 * sum 7^(k-2) and n + sum n^2 (n-1)^(p-2).
std::size_t ccc_order(int n);
std::size_t lcg_order(int n, int k);

/// Parses "ccc:n=<n>" or "lcg:n=<n>,k=<k>".
FamilyTag parse_family_descriptor(const std::string& text);

Graph build_family(const FamilyTag& tag);

}  // namespace mdim
