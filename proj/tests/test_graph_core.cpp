#include "corpus.hpp"

#include "longhole/errors.hpp"
#include "longhole/families.hpp"
#include "longhole/lightest_path.hpp"
#include "longhole/path_weight.hpp"

#include <doctest.h>

#include <map>

using namespace longhole;

TEST_SUITE("graph-core")
{
    TEST_CASE("graph construction rejects loops, repeats and bad ids")
    {
        CHECK_THROWS_AS(Graph(3, {{0, 0}}), InputError);
        CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
        CHECK_THROWS_AS(Graph(3, {{0, 3}}), InputError);
        CHECK_THROWS_AS(Graph(kMaxVertices + 1), InputError);
        Graph g(3, {{0, 1}, {1, 2}});
        CHECK(g.adjacent(1, 0));
        CHECK_FALSE(g.adjacent(0, 2));
        CHECK(g.size() == 2);
    }

    TEST_CASE("anticomplete")
    {
        Graph two(4, {{0, 1}, {2, 3}});
        CHECK(is_anticomplete(two, {0, 1}, {2, 3}));
        CHECK_FALSE(is_anticomplete(two, {0}, {0}));
        Graph p3 = path_graph(3);
        CHECK(is_anticomplete(p3, {0}, {2}));
        CHECK_FALSE(is_anticomplete(p3, {0}, {1}));
    }

    TEST_CASE("distance")
    {
        Graph c6 = cycle_graph(6);
        CHECK(distance(c6, 0, 3) == 3);
        CHECK(distance(c6, 2, 2) == 0);
        Graph two = disjoint_union(path_graph(2), path_graph(2));
        CHECK_FALSE(distance(two, 0, 3).has_value());
        CHECK(distance(c6, 0, 2, VertexSet{0, 3, 4, 5, 2}) == 4);
    }

    TEST_CASE("lightest path on a triangle takes the edge")
    {
        Graph t = complete_graph(3);
        std::vector<Edge> seq{{0, 1}, {0, 2}, {1, 2}};
        auto order = EdgeOrder::from_sequence(t, seq);
        auto p = lightest_path(t, order, 0, 2);
        REQUIRE(p);
        CHECK(p->vertices == std::vector<int>{0, 2});
    }

    TEST_CASE("lightest path on a four-cycle avoids the first edge")
    {
        // a=0, b=1, c=2, d=3 with ab=1, bc=2, cd=3, da=4.
        Graph c4 = cycle_graph(4);
        std::vector<Edge> seq{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
        auto order = EdgeOrder::from_sequence(c4, seq);
        auto p = lightest_path(c4, order, 0, 2);
        REQUIRE(p);
        CHECK(p->vertices == std::vector<int>{0, 3, 2});
    }

    TEST_CASE("lightest path between components is absent")
    {
        Graph two = disjoint_union(path_graph(2), path_graph(2));
        CHECK_FALSE(lightest_path(two, EdgeOrder::canonical(two), 0, 2));
    }

    TEST_CASE("path weight comparator")
    {
        CHECK(PathWeight({5}) < PathWeight({1, 2}));
        CHECK(PathWeight({2, 3}) < PathWeight({1, 4}));
        CHECK(PathWeight({1, 9}) > PathWeight({2, 3}));
        CHECK(PathWeight({3, 1}) == PathWeight({1, 3}));
    }

    TEST_CASE("lightest paths are induced and are prefixes of each other")
    {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 100; ++i) {
            Graph g = testing::random_graph(rng, 9, 0.35);
            auto order = testing::random_order(g, rng);
            auto tree = lightest_path_tree(g, order, 0, g.vertices());
            for (int v = 1; v < g.order(); ++v) {
                if (!tree.reaches(v))
                    continue;
                auto p = tree.path_to(v);
                CHECK(is_induced_path(g, p));
                CHECK(static_cast<int>(p.size()) - 1 == distance(g, 0, v));
                auto direct = lightest_path(g, order, 0, v);
                REQUIRE(direct);
                CHECK(direct->vertices == p);
            }
        }
    }

    TEST_CASE("induced path enumeration counts")
    {
        auto count = [](const Graph & g, int max) {
            std::map<int, int> by_length;
            enumerate_induced_paths(g, max, [&](const std::vector<int> & p) {
                ++by_length[static_cast<int>(p.size()) - 1];
                return true;
            });
            return by_length;
        };
        auto c5 = count(cycle_graph(5), 2);
        CHECK(c5[1] == 5);
        CHECK(c5[2] == 5);
        auto k3 = count(complete_graph(3), 2);
        CHECK(k3[1] == 3);
        CHECK(k3[2] == 0);
        auto e = count(empty_graph(4), 3);
        CHECK(e[0] == 4);
        CHECK(e.size() == 1);
    }

    TEST_CASE("holes")
    {
        Graph c4 = cycle_graph(4);
        CHECK(is_hole(c4, std::vector<int>{0, 1, 2, 3}));
        CHECK_FALSE(is_hole(complete_graph(3), std::vector<int>{0, 1, 2}));
        Graph chord(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
        CHECK_FALSE(is_hole(chord, std::vector<int>{0, 1, 2, 3}));
        CHECK(is_long_even_hole(cycle_graph(8), std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}, 6));
        CHECK_FALSE(is_long_even_hole(cycle_graph(8), std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}, 10));
    }

    TEST_CASE("canonical cycle")
    {
        CHECK(canonical_cycle({3, 2, 1, 0}) == std::vector<int>{0, 1, 2, 3});
        CHECK(canonical_cycle({2, 0, 5, 4}) == std::vector<int>{0, 2, 4, 5});
    }
}
