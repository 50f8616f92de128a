#include <doctest.h>

#include <map>

#include "mdim/generators.hpp"
#include "oracles.hpp"

using namespace mdim;

namespace {

// Degree of every vertex of a layer, keyed by (is_head).
std::map<bool, std::vector<std::size_t>> degree_census(const Graph& g, int layer) {
    std::map<bool, std::vector<std::size_t>> out;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (g.label(v).layer == layer) out[g.label(v).position == 1].push_back(g.degree(v));
    }
    return out;
}

bool all_equal(const std::vector<std::size_t>& xs, std::size_t value) {
    return !xs.empty() && std::all_of(xs.begin(), xs.end(), [&](std::size_t x) { return x == value; });
}

}  // namespace

TEST_CASE("cube unit") {
    auto g = build_cube_unit();
    CHECK(g.order() == 8);
    CHECK(g.edge_count() == 12);
    for (VertexId v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
    auto n1 = g.neighbors(0);
    CHECK(std::vector<VertexId>(n1.begin(), n1.end()) == std::vector<VertexId>{1, 3, 4});
    auto d = apsp(g);
    CHECK(d(0, 6) == 3);
    CHECK(d.diameter() == 3);
}

TEST_CASE("cycles") {
    CHECK_THROWS_AS(build_cycle(2), std::domain_error);
    CHECK(apsp(build_cycle(3)).diameter() == 1);
    CHECK(apsp(build_cycle(4)).diameter() == 2);
    CHECK(apsp(build_cycle(5)).diameter() == 2);
    auto d6 = apsp(build_cycle(6));
    for (VertexId u = 0; u < 6; ++u) {
        int far = 0;
        for (VertexId v = 0; v < 6; ++v) far += d6(u, v) == 3;
        CHECK(far == 1);
    }
}

TEST_CASE("CCC orders and edge counts") {
    CHECK(ccc_order(1) == 8);
    CHECK(ccc_order(2) == 72);
    CHECK(ccc_order(3) == 520);
    auto g2 = build_ccc(2);
    CHECK(g2.order() == 72);
    CHECK(g2.edge_count() == 116);
    CHECK(g2.is_connected());
    auto g3 = build_ccc(3);
    CHECK(g3.order() == 520);
    CHECK(g3.edge_count() == 116 + 56 * 12 + 56);
    CHECK(g3.is_connected());
    CHECK_THROWS_AS(build_ccc(0), std::domain_error);
}

TEST_CASE("LCG orders and edge counts") {
    CHECK(lcg_order(3, 2) == 12);
    CHECK(lcg_order(4, 2) == 20);
    CHECK(lcg_order(3, 3) == 30);
    CHECK(lcg_order(5, 3) == 130);
    for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 2}, std::pair{3, 3}, std::pair{5, 3}, std::pair{4, 4}}) {
        auto g = build_lcg(n, k);
        CHECK(g.order() == lcg_order(n, k));
        // each cycle contributes n edges and one attaching edge; the layer-1 cycle has no attaching edge
        std::size_t cycles = (g.order() - static_cast<std::size_t>(n)) / static_cast<std::size_t>(n);
        CHECK(g.edge_count() == static_cast<std::size_t>(n) + cycles * static_cast<std::size_t>(n + 1));
        CHECK(g.is_connected());
    }
    CHECK(build_lcg(3, 2).edge_count() == 15);
    CHECK_THROWS_AS(build_lcg(2, 2), std::domain_error);
    CHECK_THROWS_AS(build_lcg(3, 1), std::domain_error);
}

TEST_CASE("degree census") {
    SUBCASE("CCC(2) last layer") {
        auto c = degree_census(build_ccc(2), 2);
        CHECK(c[true].size() == 8);
        CHECK(all_equal(c[true], 4));
        CHECK(c[false].size() == 56);
        CHECK(all_equal(c[false], 3));
    }
    SUBCASE("CCC(2) layer 1") { CHECK(all_equal(degree_census(build_ccc(2), 1)[false], 4)); }
    SUBCASE("LCG(4,2) last layer") {
        auto c = degree_census(build_lcg(4, 2), 2);
        CHECK(all_equal(c[true], 3));
        CHECK(all_equal(c[false], 2));
    }
    SUBCASE("LCG(4,3) inner layer") {
        auto c = degree_census(build_lcg(4, 3), 2);
        CHECK(all_equal(c[true], 3));
        CHECK(all_equal(c[false], 3));
    }
}

TEST_CASE("layout ids and labels") {
    auto layout = LayeredLayout::ccc(2);
    CHECK(layout.units_in_layer(2) == 8);
    CHECK(layout.layer_size(1) == 8);
    CHECK(layout.layer_size(2) == 64);
    for (VertexId v = 0; v < layout.order(); ++v) CHECK(layout.id_of(layout.label_of(v)) == v);
    CHECK(layout.label_of(0) == VertexLabel{1, 0, 0, 1});
    CHECK(layout.label_of(8) == VertexLabel{2, 1, 1, 1});
    CHECK(layout.label_of(71) == VertexLabel{2, 8, 1, 8});
    CHECK_THROWS_AS(layout.id_of({2, 9, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(layout.id_of({3, 1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(layout.label_of(72), std::domain_error);

    auto lcg = LayeredLayout::lcg(3, 3);
    CHECK(lcg.units(3).size() == 6);
    CHECK(lcg.units_per_branch(3) == 2);
    CHECK(lcg.child_head({2, 1, 1, 3}) == VertexLabel{3, 1, 2, 1});
    CHECK_THROWS_AS(lcg.child_head({2, 1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(lcg.child_head({3, 1, 1, 2}), std::domain_error);
}

TEST_CASE("generated adjacency follows the attachment rule") {
    auto g = build_lcg(4, 3);
    auto layout = LayeredLayout::lcg(4, 3);
    for (VertexId v = 0; v < g.order(); ++v) {
        auto l = g.label(v);
        if (l.layer == 1) {
            CHECK(g.adjacent(v, layout.id_of({2, l.position, 1, 1})));
        } else if (l.layer < layout.layers() && l.position >= 2) {
            CHECK(g.adjacent(v, layout.id_of(layout.child_head(l))));
        }
    }
}

TEST_CASE("family descriptors") {
    auto t = parse_family_descriptor("lcg:n=4,k=3");
    CHECK(t.family == Family::lcg);
    CHECK(t.n == 4);
    CHECK(t.k == 3);
    CHECK(t.describe() == "lcg:n=4,k=3");
    CHECK(parse_family_descriptor("ccc:n=2").describe() == "ccc:n=2");
    CHECK_THROWS_AS(parse_family_descriptor("ccc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_descriptor("lcg:n=4"), std::invalid_argument);
    CHECK(build_family(t).order() == lcg_order(4, 3));
    CHECK(build_ccc(2).family_tag()->describe() == "ccc:n=2");
}
