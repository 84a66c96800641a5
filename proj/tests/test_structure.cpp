#include "named_graphs.hpp"
#include "oracles.hpp"
#include "structure.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace hcolor;
using oracle::graph;

namespace {

std::set<EdgeSet> as_set(const std::vector<Matching>& ms)
{
    std::set<EdgeSet> out;
    for (const auto& m : ms)
        out.insert(m.edges);
    return out;
}

std::set<EdgeSet> as_set(const std::vector<std::vector<EdgeId>>& ms)
{
    return {ms.begin(), ms.end()};
}

} // namespace

TEST_CASE("matching enumeration agrees with a power-set scan")
{
    std::vector<Multigraph> cases{petersen().graph, complete(4).graph, s4().graph, s6().graph,
                                  graph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}}), graph(1, {})};
    std::mt19937 rng(2);
    for (int i = 0; i < 40; ++i) {
        std::uniform_int_distribution<VertexId> pick(0, 5);
        std::vector<Edge> edges;
        while (edges.size() < 9) {
            auto a = pick(rng), b = pick(rng);
            if (a != b)
                edges.push_back({a, b});
        }
        cases.emplace_back(6, edges);
    }
    for (const auto& g : cases) {
        auto ours = all_matchings(g);
        auto ref = oracle::matchings(g);
        CHECK(ours.size() == ref.size());
        CHECK(as_set(ours) == as_set(ref));
        std::size_t perfect = 0;
        for (const auto& m : ref)
            perfect += m.size() * 2 == g.vertex_count();
        CHECK(count_perfect_matchings(g) == perfect);
        for (const auto& m : ours)
            CHECK(m.is_perfect == (m.edges.size() * 2 == g.vertex_count()));
    }
}

TEST_CASE("matchings above a minimum size")
{
    auto p = petersen().graph;
    for (const auto& m : all_matchings(p, 4))
        CHECK(m.edges.size() >= 4);
    std::size_t stop_after = 0;
    enumerate_matchings(p, 0, [&](const Matching&) { return ++stop_after < 3; });
    CHECK(stop_after == 3);
}

TEST_CASE("perfect matching counts")
{
    CHECK(count_perfect_matchings(petersen().graph) == 6);
    CHECK(count_perfect_matchings(complete(4).graph) == 3);
    CHECK(count_perfect_matchings(complete(6).graph) == 15);
    CHECK(count_perfect_matchings(complete(5).graph) == 0);
    // Parallel edges give distinct matchings.
    CHECK(count_perfect_matchings(graph(2, {{0, 1}, {0, 1}, {0, 1}})) == 3);
    auto pm = find_perfect_matching(s12().graph);
    REQUIRE(pm);
    CHECK(is_perfect_matching(s12().graph, *pm));
    CHECK_FALSE(find_perfect_matching(s10().graph).has_value());
}

TEST_CASE("two disjoint perfect matchings")
{
    CHECK_FALSE(has_two_disjoint_perfect_matchings(petersen().graph)); // any two of its six meet
    CHECK(has_two_disjoint_perfect_matchings(complete(4).graph));
    auto s12km = s12_plus_kM(1).graph;
    auto pair = two_disjoint_perfect_matchings(s12km);
    REQUIRE(pair);
    CHECK(is_perfect_matching(s12km, pair->first));
    CHECK(is_perfect_matching(s12km, pair->second));
    std::vector<EdgeId> common;
    std::set_intersection(pair->first.begin(), pair->first.end(), pair->second.begin(), pair->second.end(),
                          std::back_inserter(common));
    CHECK(common.empty());
}

TEST_CASE("is_matching and is_perfect_matching")
{
    auto k4 = complete(4).graph;
    CHECK(is_matching(k4, std::vector<EdgeId>{}));
    CHECK_FALSE(is_perfect_matching(k4, std::vector<EdgeId>{}));
    // Digon: the two parallel edges share both ends.
    auto d = graph(2, {{0, 1}, {0, 1}});
    CHECK_FALSE(is_matching(d, std::vector<EdgeId>{0, 1}));
    CHECK(is_perfect_matching(d, std::vector<EdgeId>{1}));
}

TEST_CASE("edge colourability against exhaustive search")
{
    std::vector<Multigraph> cases{complete(4).graph, s4().graph, graph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}}),
                                  graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}), complete(5).graph};
    std::mt19937 rng(9);
    for (int i = 0; i < 25; ++i) {
        std::uniform_int_distribution<VertexId> pick(0, 4);
        std::vector<Edge> edges;
        while (edges.size() < 7) {
            auto a = pick(rng), b = pick(rng);
            if (a != b)
                edges.push_back({a, b});
        }
        cases.emplace_back(5, edges);
    }
    for (const auto& g : cases) {
        const auto d = g.max_degree();
        for (std::size_t k = d; k <= d + 2 && g.edge_count() <= 10; ++k)
            CHECK(is_k_edge_colourable(g, k) == oracle::k_edge_colourable(g, k));
    }
}

TEST_CASE("chromatic index")
{
    CHECK(chromatic_index(petersen().graph) == 4);
    CHECK(chromatic_index(complete(4).graph) == 3);
    CHECK(chromatic_index(complete(5).graph) == 5);
    CHECK(chromatic_index(s12().graph) == 4);
    // Shannon triangle: doubled triangle needs 6 colours.
    CHECK(chromatic_index(graph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}})) == 6);
    CHECK(chromatic_index(graph(0, {})) == 0);
}

TEST_CASE("spanning regular check")
{
    auto k4 = complete(4).graph;
    std::vector<EdgeId> all(k4.edge_count());
    std::iota(all.begin(), all.end(), 0);
    CHECK(spanning_regular_check(k4, all, 3));
    CHECK_FALSE(spanning_regular_check(k4, all, 2));
}

TEST_CASE("exposed copies of S4+kM")
{
    for (int k = 0; k <= 2; ++k) {
        CHECK(exposed_copies(s4_plus_kM(k).graph, static_cast<std::size_t>(k)).size() == 1);
        CHECK(exposed_copies(s12_plus_kM(k).graph, static_cast<std::size_t>(k)).size() == 3);
    }
    CHECK(exposed_copies(s10().graph, 0).size() == 3);
    CHECK(exposed_copies(petersen().graph, 0).empty());
}
