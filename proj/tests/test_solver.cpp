#include "fixtures.hpp"
#include "named_graphs.hpp"
#include "oracles.hpp"
#include "solver.hpp"

#include <doctest.h>

#include <set>

using namespace hcolor;

TEST_CASE("solver agrees with exhaustive enumeration on small pairs")
{
    std::size_t sat_pairs = 0, unsat_pairs = 0;
    for (const auto& h : fixtures::small_hosts()) {
        for (const auto& g : fixtures::small_guests()) {
            CAPTURE(h.name);
            CAPTURE(g.name);
            const auto ref = oracle::colourings(h.graph, g.graph);
            const std::set<std::vector<EdgeId>> want(ref.begin(), ref.end());

            auto all = solve(h.graph, g.graph, SolveMode::All);
            std::set<std::vector<EdgeId>> got;
            for (const auto& c : all.colourings)
                got.insert(c.edge_map);
            CHECK(got.size() == all.colourings.size()); // no duplicates
            CHECK(got == want);
            CHECK(all.count == want.size());
            CHECK_FALSE(all.aborted);

            auto count = solve(h.graph, g.graph, SolveMode::Count);
            CHECK(count.count == want.size());
            CHECK(count.colourings.empty());

            auto first = solve(h.graph, g.graph, SolveMode::First);
            if (want.empty()) {
                CHECK(first.status == SolveStatus::Unsat);
                ++unsat_pairs;
            } else {
                CHECK(first.status == SolveStatus::Sat);
                REQUIRE(first.colourings.size() == 1);
                CHECK(want.count(first.colourings.front().edge_map) == 1);
                ++sat_pairs;
            }
        }
    }
    // Both outcomes must be exercised for the comparison to mean anything.
    CHECK(sat_pairs >= 10);
    CHECK(unsat_pairs >= 10);
}

TEST_CASE("S4 colours P, K4 does not")
{
    auto sat = solve(s4().graph, petersen().graph, SolveMode::First);
    CHECK(sat.status == SolveStatus::Sat);
    CHECK(check_colouring(sat.colourings.front()).valid);

    auto unsat = solve(complete(4).graph, petersen().graph, SolveMode::First);
    CHECK(unsat.status == SolveStatus::Unsat);
    CHECK_FALSE(unsat.aborted);

    // P colours itself through its 120 automorphisms only.
    CHECK(solve(petersen().graph, petersen().graph, SolveMode::Count).count == 120);
}

TEST_CASE("node limit gives Unknown")
{
    auto res = solve(complete(4).graph, petersen().graph, SolveMode::First, {.node_limit = 3});
    CHECK(res.status == SolveStatus::Unknown);
    CHECK(res.aborted);
    CHECK(res.stats.nodes <= 4);
}

TEST_CASE("size guard")
{
    CHECK_THROWS_AS(solve(complete(13).graph, complete(4).graph, SolveMode::First), Error);
    try {
        solve(complete(13).graph, complete(4).graph, SolveMode::First);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SizeGuard);
    }
}

TEST_CASE("solve_each stops when asked")
{
    std::size_t seen = 0;
    auto res = solve_each(petersen().graph, petersen().graph, {}, [&](const std::vector<EdgeId>&) {
        return ++seen < 5;
    });
    CHECK(seen == 5);
    CHECK(res.status == SolveStatus::Sat);
}

TEST_CASE("tK2 colourability")
{
    CHECK(tk2_colourable(complete(4).graph, 3));
    CHECK_FALSE(tk2_colourable(petersen().graph, 3));
    CHECK_FALSE(tk2_colourable(complete(4).graph, 4)); // not 4-regular
    CHECK(tk2_colourable(t_k2(5).graph, 5));
    // tK2 colourability agrees with the solver on regular fixtures.
    for (const auto& g : fixtures::small_guests()) {
        const auto t = g.graph.max_degree();
        if (t > 6)
            continue;
        const bool solver = solve(t_k2(static_cast<int>(t)).graph, g.graph, SolveMode::First).status == SolveStatus::Sat;
        CAPTURE(g.name);
        CHECK(tk2_colourable(g.graph, t) == solver);
    }
}
