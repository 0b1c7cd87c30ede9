#include "longhole/configs.hpp"
#include "longhole/errors.hpp"
#include "longhole/families.hpp"
#include "longhole/oracle.hpp"

#include <doctest.h>

#include <random>

using namespace longhole;

namespace {

// Adds a path of `length` edges from u to v and returns its vertices u..v.
auto add_path(std::vector<Edge> & edges, int & n, int u, int v, int length) -> std::vector<int>
{
    std::vector<int> p{u};
    for (int i = 1; i < length; ++i)
        p.push_back(n++);
    p.push_back(v);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        edges.emplace_back(p[i], p[i + 1]);
    return p;
}

auto theta_graph(int l1, int l2, int l3) -> Graph
{
    std::vector<Edge> edges;
    int n = 2;
    for (int l : {l1, l2, l3})
        add_path(edges, n, 0, 1, l);
    return Graph(n, edges);
}

// Four-cycle u-v1-w-v2 (0,1,2,3), x = 4 seeing u, paths of the given length from x to v1, v2.
auto ban_the_bomb_graph(int length) -> Graph
{
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}};
    int n = 5;
    add_path(edges, n, 4, 1, length);
    add_path(edges, n, 4, 3, length);
    return Graph(n, edges);
}

} // namespace

TEST_SUITE("configs")
{
    TEST_CASE("bounded long even holes")
    {
        auto h = detect_bounded_long_even_hole(cycle_graph(8), 6, 12);
        REQUIRE(h);
        CHECK(h->length() == 8);
        CHECK_FALSE(detect_bounded_long_even_hole(cycle_graph(14), 6, 12));
        Graph chorded(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {0, 4}});
        CHECK_FALSE(detect_bounded_long_even_hole(chorded, 6, 12));
        CHECK_THROWS_AS(detect_bounded_long_even_hole(cycle_graph(8), 7, 12), InputError);
    }

    TEST_CASE("long jewel")
    {
        // u=0, v=1, Q1 = u-a-v, Q2 = u-b-c-v, P of length 6.
        std::vector<Edge> edges;
        int n = 2;
        auto q1 = add_path(edges, n, 0, 1, 2);
        auto q2 = add_path(edges, n, 0, 1, 3);
        auto p = add_path(edges, n, 0, 1, 6);
        Graph g(n, edges);
        Jewel built{{q1}, {q2}, {p}};
        CHECK(is_long_jewel(g, built, 6));
        auto j = detect_long_jewel(g, 6, 7);
        REQUIRE(j);
        CHECK(is_long_jewel(g, *j, 6));
        auto h = derive_even_hole(g, built, 6);
        CHECK(h.length() == 8);
        CHECK(is_long_even_hole(g, h.cycle, 6));

        CHECK_FALSE(detect_long_jewel(cycle_graph(10), 6, 7));
        CHECK_FALSE(detect_long_jewel(empty_graph(6), 6, 7));
    }

    TEST_CASE("three in a tree")
    {
        Graph p3 = path_graph(3);
        auto t = three_in_a_tree(p3, 0, 1, 2);
        REQUIRE(t);
        CHECK(t->vertices == VertexSet{0, 1, 2});
        CHECK_FALSE(three_in_a_tree(complete_graph(5), 0, 1, 2));
        Graph c5 = cycle_graph(5);
        auto c = three_in_a_tree(c5, 0, 1, 3);
        REQUIRE(c);
        CHECK(is_induced_tree(c5, *c));
        CHECK(c->vertices == VertexSet{0, 1, 2, 3});
    }

    TEST_CASE("long theta")
    {
        Graph g = theta_graph(3, 3, 3);
        auto t = detect_long_theta(g, 6);
        REQUIRE(t);
        CHECK(is_long_theta(g, *t, 6));
        Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
        CHECK_FALSE(detect_long_theta(k23, 6));
        CHECK_FALSE(detect_long_theta(cycle_graph(20), 6));
    }

    TEST_CASE("theta with paths 3,3,5 gives the 6-hole")
    {
        Graph g = theta_graph(3, 3, 5);
        auto t = detect_long_theta(g, 6);
        REQUIRE(t);
        auto h = derive_even_hole(g, *t, 6);
        CHECK(h.length() == 6);
        CHECK(is_long_even_hole(g, h.cycle, 6));
    }

    TEST_CASE("long ban-the-bomb")
    {
        Graph g = ban_the_bomb_graph(4);
        auto b = detect_long_ban_the_bomb(g, 6);
        REQUIRE(b);
        CHECK(is_long_ban_the_bomb(g, *b, 6));
        auto h = derive_even_hole(g, *b, 6);
        CHECK(is_long_even_hole(g, h.cycle, 6));
        CHECK_FALSE(detect_long_ban_the_bomb(cycle_graph(20), 6));
        CHECK_FALSE(detect_long_ban_the_bomb(ban_the_bomb_graph(2), 6));
    }

    TEST_CASE("derive rejects an invalid configuration")
    {
        Graph g = cycle_graph(10);
        Theta bogus{0, 5, {InducedPath{{0, 1, 2, 3, 4, 5}}, InducedPath{{0, 9, 8, 7, 6, 5}}, InducedPath{{0, 5}}}};
        CHECK_THROWS_AS(derive_even_hole(g, bogus, 6), InvariantViolation);
    }

    TEST_CASE("detectors agree with the oracle on small random graphs")
    {
        std::mt19937_64 rng(99);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (int i = 0; i < 60; ++i) {
            std::vector<Edge> edges;
            const int n = 6 + i % 6;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (unit(rng) < 0.3)
                        edges.emplace_back(u, v);
            Graph g(n, edges);
            CHECK(detect_long_jewel(g, 6, 7).has_value() ==
                  oracle::configuration(g, 6, oracle::Kind::jewel, {7}).verdict);
            CHECK(detect_long_theta(g, 6).has_value() == oracle::configuration(g, 6, oracle::Kind::theta).verdict);
        }
    }
}
