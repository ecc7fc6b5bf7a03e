#include <doctest.h>

#include "qchroma/gfuncs.hpp"
#include "qchroma/graphx.hpp"

using namespace qchroma;

namespace {

SymFunc p_elem(std::vector<int> parts) {
    return SymFunc::basis_element(Basis::p, Partition(std::move(parts)));
}
SymFunc e_elem(std::vector<int> parts) {
    return SymFunc::basis_element(Basis::e, Partition(std::move(parts)));
}

} // namespace

TEST_CASE("construction and parsing") {
    RootedGraph g(3, {{1, 2}, {2, 1}, {2, 3}}, 1);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
    CHECK_THROWS_AS(RootedGraph(3, {{1, 1}}, 1), Error);
    CHECK_THROWS_AS(RootedGraph(3, {}, 4), Error);

    RootedGraph parsed = RootedGraph::parse("4; 1-2,2-3,3-4; root=2");
    CHECK(parsed.n() == 4);
    CHECK(parsed.root() == 2);
    CHECK(parsed.edges().size() == 3);
    CHECK(RootedGraph::parse("2; ; root=1").edges().empty());
    CHECK_THROWS_AS(RootedGraph::parse("nonsense"), ParseError);
    CHECK_THROWS_AS(RootedGraph::parse("3; 1-2; root=9"), ParseError);
}

TEST_CASE("lambda_split") {
    RootedGraph p3(3, {{1, 2}, {2, 3}}, 1);
    auto empty = lambda_split(p3, {});
    CHECK(empty.first == 1);
    CHECK(empty.second == Partition({1, 1}));
    auto full = lambda_split(p3, p3.edges());
    CHECK(full.first == 3);
    CHECK(full.second == Partition());
    // vertex count conservation on every subset of a 4-cycle
    RootedGraph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, 2);
    auto edges = c4.edges();
    for (uint32_t mask = 0; mask < 16; ++mask) {
        std::vector<std::pair<int, int>> subset;
        for (size_t e = 0; e < edges.size(); ++e)
            if (mask >> e & 1) subset.push_back(edges[e]);
        auto [lam0, lam] = lambda_split(c4, subset);
        CHECK(lam0 + lam.size() == 4);
    }
}

TEST_CASE("g_general basics") {
    RootedGraph dot(1, {}, 1);
    CHECK(g_general(dot, 0) == SymFunc::one());
    RootedGraph p2(2, {{1, 2}}, 1);
    CHECK(g_general(p2, 0) == SymFunc::one());
    CHECK(g_general(p2, 1).is_zero()); // p_1 - h_1
    CHECK_THROWS_AS(g_general(p2, 2), KOutOfRange);
}

TEST_CASE("pseudo identity at k = n") {
    CHECK(gn_pseudo_check(RootedGraph(1, {}, 1)));
    CHECK(gn_pseudo_check(RootedGraph(2, {{1, 2}}, 1)));
    CHECK(gn_pseudo_check(RootedGraph(3, {{1, 2}, {2, 3}}, 1)));
    CHECK(gn_pseudo_check(RootedGraph(3, {{1, 2}, {2, 3}, {1, 3}}, 2)));
}

TEST_CASE("csf by edge subsets") {
    RootedGraph edgeless(3, {}, 1);
    CHECK(csf_stanley(edgeless) == p_elem({1, 1, 1}));
    CHECK(csf_stanley(edgeless) == e_elem({1}) * e_elem({1}) * e_elem({1}));
    RootedGraph p2(2, {{1, 2}}, 1);
    CHECK(csf_stanley(p2) == p_elem({1, 1}) - p_elem({2}));
    CHECK(csf_stanley(p2) == e_elem({2}).scaled(Int(2)));
    RootedGraph k3(3, {{1, 2}, {2, 3}, {1, 3}}, 1);
    CHECK(csf_stanley(k3) == e_elem({3}).scaled(Int(6)));
}

TEST_CASE("csf recovery and root independence up to n = 4") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) all_edges.emplace_back(u, v);
        for (uint32_t mask = 0; mask < (1u << all_edges.size()); ++mask) {
            std::vector<std::pair<int, int>> edges;
            for (size_t e = 0; e < all_edges.size(); ++e)
                if (mask >> e & 1) edges.push_back(all_edges[e]);
            RootedGraph g1(n, edges, 1);
            if (!g1.connected()) continue;
            SymFunc stanley = csf_stanley(g1);
            CHECK(csf_coloring_classic(g1) == stanley);
            for (int root = 1; root <= n; ++root)
                CHECK(csf_general_from_g(RootedGraph(n, edges, root)) == stanley);
        }
    }
}

TEST_CASE("deletion-contraction") {
    RootedGraph p2(2, {{1, 2}}, 1);
    CHECK(deletion_contraction_check(p2, {1, 2}));
    RootedGraph triangle(3, {{1, 2}, {2, 3}, {1, 3}}, 1);
    CHECK(deletion_contraction_check(triangle, {1, 2}));
    CHECK(deletion_contraction_check(triangle, {1, 3}));
    CHECK_THROWS_AS(deletion_contraction_check(triangle, {2, 3}), EdgeNotIncident);
    RootedGraph rooted3(3, {{1, 2}, {2, 3}, {1, 3}}, 3);
    CHECK(deletion_contraction_check(rooted3, {1, 3}));
    CHECK(deletion_contraction_check(rooted3, {2, 3}));
}

TEST_CASE("contraction relabels onto the root") {
    RootedGraph square(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, 2);
    RootedGraph contracted = square.contract_edge({2, 3});
    CHECK(contracted.n() == 3);
    CHECK(contracted.root() == 2);
    CHECK(contracted.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("Stanley subsets match the q-census at q = 1 on indifference graphs") {
    for (int n = 1; n <= 4; ++n) {
        for (const HessFunc& m : HessFunc::all(n)) {
            RootedGraph g(n, m.edges(), 1);
            CHECK(csf_stanley(g) == csf_coloring(m).specialize_q(1));
        }
    }
}

TEST_CASE("g_general on indifference graphs meets g_def at q = 1") {
    for (int n = 1; n <= 4; ++n) {
        for (const HessFunc& m : HessFunc::all(n)) {
            RootedGraph g(n, m.edges(), 1);
            auto all = g_general_all(g);
            for (int k = 0; k < n; ++k) CHECK(all[k] == g_def(m, k).specialize_q(1));
        }
    }
}
