#include "named_graphs.hpp"
#include "oracles.hpp"
#include "structure.hpp"

#include <doctest.h>

using namespace hcolor;

TEST_CASE("petersen")
{
    auto p = petersen();
    CHECK(p.graph.vertex_count() == 10);
    CHECK(p.graph.edge_count() == 15);
    CHECK(is_regular(p.graph, 3));
    CHECK(p.graph.is_simple());
    CHECK(p.graph.multiplicity(p.vertex("u1"), p.vertex("u2")) == 1);
    CHECK(p.graph.multiplicity(p.vertex("v1"), p.vertex("v3")) == 1);
    CHECK(p.graph.multiplicity(p.vertex("v1"), p.vertex("v2")) == 0);
    auto e = p.graph.edge(p.edge("u1v1"));
    CHECK(e.touches(p.vertex("u1")));
    CHECK(e.touches(p.vertex("v1")));
    CHECK_THROWS(p.vertex("x9"));
}

TEST_CASE("S4 family")
{
    auto s = s4();
    CHECK(s.graph.vertex_count() == 4);
    CHECK(s.graph.edge_count() == 5);
    CHECK(degree_sequence(s.graph) == std::vector<std::size_t>{1, 3, 3, 3});
    CHECK(s.graph.degree(s.vertex("z")) == 1);
    CHECK(s.graph.multiplicity(s.vertex("v"), s.vertex("w")) == 2);
    CHECK(s.bold_matching.size() == 2);
    CHECK(is_matching(s.graph, s.bold_matching));

    for (int k = 0; k <= 3; ++k) {
        auto g = s4_plus_kM(k);
        CHECK(g.graph.edge_count() == std::size_t(5 + 2 * k));
        CHECK(g.graph.degree(g.vertex("z")) == std::size_t(1 + k));
        CHECK(g.graph.degree(g.vertex("u")) == std::size_t(3 + k));
        CHECK(g.graph.multiplicity(g.vertex("v"), g.vertex("w")) == std::size_t(2 + k));
    }
    CHECK(is_isomorphic(s4_plus_kM(0).graph, s4().graph));
    CHECK_THROWS(s4_plus_kM(-1));
}

TEST_CASE("S6, S10, S12")
{
    auto s6g = s6().graph;
    CHECK(s6g.vertex_count() == 6);
    CHECK(is_regular(s6g, 3));
    CHECK(bridges(s6g).size() == 1);

    auto s10g = s10().graph;
    CHECK(s10g.vertex_count() == 10);
    CHECK(s10g.edge_count() == 15);
    CHECK(is_regular(s10g, 3));
    CHECK(bridges(s10g).size() == 3);
    CHECK(chromatic_index(s10g) == 4);

    auto s12g = s12().graph;
    CHECK(s12g.vertex_count() == 12);
    CHECK(s12g.edge_count() == 18);
    CHECK(is_regular(s12g, 3));
    CHECK(bridges(s12g).size() == 3);
    CHECK(s12().bold_matching.size() == 6);
    CHECK(is_perfect_matching(s12g, s12().bold_matching));

    auto km = s12_plus_kM(1).graph;
    CHECK(km.vertex_count() == 12);
    CHECK(km.edge_count() == 24);
    CHECK(is_regular(km, 4));
    CHECK(is_isomorphic(s12_plus_kM(0).graph, s12g));
    CHECK(is_regular(s6_plus_kM(2).graph, 5));
}

TEST_CASE("complete graphs and relatives")
{
    CHECK(complete(5).graph.edge_count() == 10);
    auto km = complete_minus_edge(5);
    CHECK(km.graph.edge_count() == 9);
    CHECK(km.graph.degree(km.vertex("deficient1")) == 3);
    CHECK(km.graph.degree(km.vertex("deficient2")) == 3);
    CHECK(star(3).graph.degree(0) == 3);
    CHECK(t_k2(4).graph.multiplicity(0, 1) == 4);
}

TEST_CASE("J graphs")
{
    for (int r = 2; r <= 3; ++r) {
        auto j = j_graph(r);
        CHECK(j.graph.vertex_count() == std::size_t(r * (2 * r + 1) + 1));
        CHECK(is_regular(j.graph, std::size_t(2 * r)));
        CHECK(j.graph.is_simple());
        CHECK(is_connected(j.graph));
    }
    CHECK_THROWS(j_graph(1));
}

TEST_CASE("K family members against brute force")
{
    // Brute force: every symmetric multiplicity assignment, each pair >= 1.
    auto brute = [](int t, int r) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < t; ++a)
            for (int b = a + 1; b < t; ++b)
                pairs.emplace_back(a, b);
        std::vector<Multigraph> found;
        std::vector<int> mult(pairs.size(), 1);
        while (true) {
            std::vector<int> deg(t, 0);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                deg[pairs[i].first] += mult[i];
                deg[pairs[i].second] += mult[i];
            }
            if (std::all_of(deg.begin(), deg.end(), [&](int d) { return d == r; })) {
                std::vector<Edge> edges;
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    for (int k = 0; k < mult[i]; ++k)
                        edges.push_back({VertexId(pairs[i].first), VertexId(pairs[i].second)});
                found.emplace_back(t, edges);
            }
            std::size_t i = 0;
            while (i < mult.size() && ++mult[i] > r)
                mult[i++] = 1;
            if (i == mult.size())
                break;
        }
        return oracle::distinct(found);
    };
    for (auto [t, r] : std::vector<std::pair<int, int>>{{3, 4}, {5, 4}, {4, 3}, {4, 5}, {4, 6}, {3, 6}, {2, 3}}) {
        auto ours = k_family_members(t, r);
        auto ref = brute(t, r);
        CAPTURE(t);
        CAPTURE(r);
        CHECK(ours.size() == ref.size());
        for (const auto& g : ours) {
            CHECK(is_k_family_member(g, r));
            bool found = false;
            for (const auto& h : ref)
                found = found || oracle::isomorphic(g, h);
            CHECK(found);
        }
    }
    CHECK(k_family_members(3, 4).size() == 1);
    CHECK(k_family_members(5, 4).size() == 1);
    CHECK(k_family_members(3, 3).empty()); // odd degree sum
    CHECK_FALSE(is_k_family_member(petersen().graph, 3));
}

TEST_CASE("orderly generation matches published counts")
{
    auto count = [](std::size_t n, std::size_t r, std::size_t mult) {
        std::size_t c = 0;
        enumerate_connected_regular_multigraphs(n, r, mult, [&](const Multigraph& g) {
            CHECK(is_regular(g, r));
            CHECK(is_connected(g));
            ++c;
            return true;
        });
        return c;
    };
    // Connected cubic loopless multigraphs.
    const std::size_t cubic_multi[] = {1, 2, 6, 20, 91};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(count(2 * (i + 1), 3, 3) == cubic_multi[i]);
    // Connected cubic simple graphs.
    const std::size_t cubic_simple[] = {1, 2, 5, 19, 85};
    for (std::size_t i = 0; i < 5; ++i)
        CHECK(count(2 * (i + 2), 3, 1) == cubic_simple[i]);
    // Connected 4-regular simple graphs on 5..10 vertices.
    const std::size_t quartic[] = {1, 1, 2, 6, 16, 59};
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(count(5 + i, 4, 1) == quartic[i]);
}

TEST_CASE("orderly generation produces pairwise non-isomorphic graphs")
{
    std::vector<Multigraph> seen;
    enumerate_connected_regular_multigraphs(6, 4, 4, [&](const Multigraph& g) {
        seen.push_back(g);
        return true;
    });
    CHECK(oracle::distinct(seen).size() == seen.size());
}

TEST_CASE("poorly matchable witnesses")
{
    CHECK_FALSE(poorly_matchable_witness(4, 8).has_value());
    auto w = poorly_matchable_witness(4, 10);
    REQUIRE(w);
    CHECK(w->vertex_count() == 10);
    CHECK(is_regular(*w, 4));
    CHECK(find_perfect_matching(*w).has_value());
    CHECK_FALSE(has_two_disjoint_perfect_matchings(*w));
    CHECK_THROWS(poorly_matchable_witness(3, 10));
}

TEST_CASE("generator lookup")
{
    CHECK(is_isomorphic(generate_named("s12+kM", {1}).graph, s12_plus_kM(1).graph));
    CHECK(generate_named("complete", {6}).graph.edge_count() == 15);
    CHECK_THROWS(generate_named("complete", {}));
    CHECK_THROWS(generate_named("nonsense", {}));
    for (const auto& name : named_generators())
        CHECK_FALSE(name.empty());
}
