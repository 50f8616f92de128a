#include <doctest.h>

#include <random>

#include "mdim/generators.hpp"
#include "mdim/solvers.hpp"
#include "mdim/witnesses.hpp"
#include "oracles.hpp"

using namespace mdim;

namespace {

std::vector<Graph> sample_graphs(std::uint32_t seed, int count, std::size_t max_order) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> size(2, max_order);
    std::uniform_real_distribution<double> density(0.1, 0.6);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) out.push_back(oracle::random_connected_graph(rng, size(rng), density(rng)));
    return out;
}

OrderedVertexSet random_subset(std::mt19937& rng, std::size_t n, std::size_t k) {
    std::vector<VertexId> all(n);
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    return OrderedVertexSet(all);
}

}  // namespace

TEST_CASE("distance axioms") {
    for (const auto& g : sample_graphs(1, 40, 14)) {
        auto d = apsp(g);
        const auto n = static_cast<VertexId>(g.order());
        for (VertexId u = 0; u < n; ++u) {
            REQUIRE(d(u, u) == 0);
            for (VertexId v = 0; v < n; ++v) {
                REQUIRE(d(u, v) == d(v, u));
                if (u != v) REQUIRE(d(u, v) > 0);
                for (VertexId w = 0; w < n; ++w) REQUIRE(d(u, w) <= d(u, v) + d(v, w));
            }
        }
    }
}

TEST_CASE("doubly resolving implies resolving; strong resolving implies resolving") {
    std::mt19937 rng(5);
    for (const auto& g : sample_graphs(2, 60, 10)) {
        auto d = apsp(g);
        for (int trial = 0; trial < 30; ++trial) {
            std::uniform_int_distribution<std::size_t> k(2, g.order());
            auto s = random_subset(rng, g.order(), k(rng));
            if (is_doubly_resolving(d, s)) REQUIRE(is_resolving(d, s));
            if (is_strong_resolving(d, s)) REQUIRE(is_resolving(d, s));
        }
    }
}

TEST_CASE("verifiers do not depend on member order") {
    std::mt19937 rng(6);
    for (const auto& g : sample_graphs(3, 30, 10)) {
        auto d = apsp(g);
        for (int trial = 0; trial < 10; ++trial) {
            std::uniform_int_distribution<std::size_t> k(2, g.order());
            auto s = random_subset(rng, g.order(), k(rng));
            auto t = s.sorted();
            for (Parameter kind : {Parameter::resolving, Parameter::doubly, Parameter::strong})
                REQUIRE(verify_set(d, kind, s) == verify_set(d, kind, t));
        }
    }
}

TEST_CASE("supersets of valid sets stay valid") {
    std::mt19937 rng(8);
    for (const auto& g : sample_graphs(4, 30, 10)) {
        auto d = apsp(g);
        for (Parameter kind : {Parameter::resolving, Parameter::doubly, Parameter::strong}) {
            auto w = solve(g, kind).witness.members();
            for (VertexId v = 0; v < g.order(); ++v) {
                if (std::find(w.begin(), w.end(), v) != w.end()) continue;
                auto bigger = w;
                bigger.push_back(v);
                REQUIRE(verify_set(d, kind, OrderedVertexSet(bigger)));
            }
        }
    }
}

TEST_CASE("optima respect the twin lower bound and the parameter order") {
    for (const auto& g : sample_graphs(5, 40, 10)) {
        auto bound = twin_lower_bound(twin_classes(g));
        auto beta = solve_min_resolving(g).optimum;
        auto sdim = solve_min_strong_direct(g).optimum;
        REQUIRE(beta >= bound);
        REQUIRE(sdim >= bound);
        REQUIRE(sdim >= beta);
        if (g.order() >= 2) {
            auto psi = solve_min_doubly(g).optimum;
            REQUIRE(psi >= bound);
            REQUIRE(psi >= beta);
        }
    }
}

TEST_CASE("strong witnesses pass the path-enumeration oracle") {
    for (const auto& g : sample_graphs(6, 30, 9)) {
        auto direct = solve_min_strong_direct(g);
        auto vc = solve_min_strong_vc(g);
        REQUIRE(oracle::strong_by_intervals(g, direct.witness.members()));
        REQUIRE(oracle::strong_by_intervals(g, vc.witness.members()));
        REQUIRE(direct.optimum == vc.optimum);
    }
    for (auto [n, k] : {std::pair{3, 2}, std::pair{4, 2}}) {
        auto g = build_lcg(n, k);
        REQUIRE(oracle::strong_by_intervals(g, lcg_witness(Parameter::strong, n, k).members()));
    }
}

TEST_CASE("MMD relation is symmetric and irreflexive") {
    for (const auto& g : sample_graphs(7, 40, 14)) {
        auto d = apsp(g);
        const auto n = static_cast<VertexId>(g.order());
        auto h = mmd_pairs(g, d);
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId v = 0; v < n; ++v) {
                bool mutual = u != v && maximally_distant(g, d, u, v) && maximally_distant(g, d, v, u);
                bool listed = std::binary_search(h.edges.begin(), h.edges.end(), Edge{std::min(u, v), std::max(u, v)});
                REQUIRE(mutual == listed);
            }
        }
        for (auto [u, v] : h.edges) REQUIRE(u < v);
    }
}
