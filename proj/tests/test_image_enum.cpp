#include "fixtures.hpp"
#include "image_enum.hpp"
#include "named_graphs.hpp"
#include "oracles.hpp"
#include "solver.hpp"

#include <doctest.h>

#include <set>

using namespace hcolor;

namespace {

const ImageClass* find_class(const ImageAtlas& atlas, const Multigraph& g)
{
    const auto form = canonical_form(g);
    for (const auto& c : atlas.classes)
        if (c.form == form)
            return &c;
    return nullptr;
}

} // namespace

TEST_CASE("atlas images colour the guest and match their own splitting")
{
    for (const auto& g : fixtures::small_guests()) {
        CAPTURE(g.name);
        auto atlas = enumerate_splitted_images(g.graph);
        CHECK(atlas.complete);
        REQUIRE_FALSE(atlas.classes.empty());
        std::uint64_t total = 0;
        for (const auto& cls : atlas.classes) {
            total += cls.multiplicity;
            CHECK(cls.multiplicity > 0);
            CHECK_FALSE(type_partition_violation(g.graph, cls.partition).has_value());
            REQUIRE(cls.image.witness);
            const auto& w = *cls.image.witness;
            CHECK(oracle::is_colouring(cls.image.graph, g.graph, w.edge_map));
            auto ref = oracle::splitted_image(cls.image.graph, g.graph, w.edge_map);
            if (ref)
                CHECK(oracle::isomorphic(*ref, cls.image.graph));
            CHECK(canonical_form(cls.image.graph) == cls.form);
        }
        CHECK(total == atlas.partitions);
        // Classes are pairwise non-isomorphic.
        std::vector<Multigraph> graphs;
        for (const auto& cls : atlas.classes)
            graphs.push_back(cls.image.graph);
        CHECK(oracle::distinct(graphs).size() == graphs.size());
        // The guest always colours itself.
        CHECK(find_class(atlas, g.graph) != nullptr);
    }
}

TEST_CASE("every colouring by a small host lands in the atlas")
{
    for (const auto& g : fixtures::small_guests()) {
        auto atlas = enumerate_splitted_images(g.graph);
        std::set<CanonicalForm> hit;
        for (const auto& h : fixtures::small_hosts()) {
            CAPTURE(g.name);
            CAPTURE(h.name);
            for (const auto& f : oracle::colourings(h.graph, g.graph)) {
                auto img = oracle::splitted_image(h.graph, g.graph, f);
                if (!img) {
                    // Only tK2-type hosts leave the vertex map ambiguous.
                    CHECK(atlas.tk2_realizable);
                    continue;
                }
                const auto* cls = find_class(atlas, *img);
                CHECK(cls != nullptr);
                if (cls)
                    hit.insert(cls->form);
            }
        }
        // Hosts drawn from the atlas itself reach every class.
        for (const auto& cls : atlas.classes) {
            if (cls.image.graph.edge_count() > 64 || cls.image.graph.vertex_count() > 64)
                continue;
            bool reached = false;
            solve_each(cls.image.graph, g.graph, {}, [&](const std::vector<EdgeId>& f) {
                auto img = oracle::splitted_image(cls.image.graph, g.graph, f);
                reached = img && canonical_form(*img) == cls.form;
                return !reached;
            });
            CAPTURE(g.name);
            CHECK(reached);
        }
        CHECK(hit.size() <= atlas.classes.size());
    }
}

TEST_CASE("tK2 realisability flag")
{
    CHECK(enumerate_splitted_images(complete(4).graph).tk2_realizable);
    CHECK_FALSE(enumerate_splitted_images(petersen().graph).tk2_realizable);
    CHECK_FALSE(enumerate_splitted_images(complete(5).graph).tk2_realizable);
}

TEST_CASE("the atlas of P")
{
    auto atlas = enumerate_splitted_images(petersen().graph);
    CHECK(atlas.complete);
    REQUIRE(atlas.classes.size() == 2);
    const auto* s = find_class(atlas, s4().graph);
    const auto* p = find_class(atlas, petersen().graph);
    REQUIRE(s);
    REQUIRE(p);
    CHECK(s->multiplicity == 120);
    CHECK(p->multiplicity == 1);
    CHECK(s->image.split_vertices.empty());
    CHECK(s->image.unused_leaves.size() == 1);
    CHECK_FALSE(image_admits_extension(s->image));
    CHECK(p->image.unused_leaves.empty());
}

TEST_CASE("node limit marks the atlas incomplete")
{
    auto atlas = enumerate_splitted_images(petersen().graph, {.node_limit = 10});
    CHECK_FALSE(atlas.complete);
    CHECK(atlas.nodes <= 11);
}

TEST_CASE("type partition checks")
{
    auto k4 = complete(4).graph;
    // Adjacent edges in one class.
    TypePartition same{{0, 0, 1, 2, 3, 4}, 5};
    CHECK(type_partition_violation(k4, same).has_value());
    // Wrong length.
    CHECK(type_partition_violation(k4, TypePartition{{0, 1}, 2}).has_value());
    // Skipping a label breaks restricted growth.
    TypePartition gap{{0, 2, 3, 4, 5, 6}, 7};
    CHECK(type_partition_violation(k4, gap).has_value());

    // Realising a stored partition reproduces its class.
    auto atlas = enumerate_splitted_images(k4);
    for (const auto& cls : atlas.classes) {
        auto img = realize_image(k4, cls.partition);
        CHECK(canonical_form(img.graph) == cls.form);
        CHECK(img.graph.edge_count() == cls.partition.class_count);
        REQUIRE(img.witness);
        CHECK(check_colouring(*img.witness).valid);
    }
}

TEST_CASE("guests the enumerator refuses")
{
    CHECK_THROWS_AS(enumerate_splitted_images(Multigraph(4, {{0, 1}, {2, 3}})), Error);
}
