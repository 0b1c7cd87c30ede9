#include "corpus.hpp"

#include "longhole/audit.hpp"
#include "longhole/errors.hpp"
#include "longhole/families.hpp"
#include "longhole/oracle.hpp"

#include <doctest.h>

using namespace longhole;

TEST_SUITE("oracle")
{
    TEST_CASE("long even hole")
    {
        auto r = oracle::long_even_hole(cycle_graph(10), 6);
        CHECK(r.verdict);
        CHECK(r.witness == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
        CHECK_FALSE(oracle::long_even_hole(cycle_graph(10), 12).verdict);
        auto p = oracle::long_even_hole(petersen_graph(), 6);
        CHECK(p.verdict);
        CHECK(is_long_even_hole(petersen_graph(), p.witness, 6));
        CHECK(oracle::long_even_hole(complete_graph(6), 6).witness.empty());
    }

    TEST_CASE("induced cycle counts")
    {
        CHECK(oracle::count_induced_cycles(cycle_graph(9)) == 1);
        CHECK(oracle::count_induced_cycles(complete_graph(6)) == 0);
        // K_{3,3}: nine 4-cycles and no longer holes.
        Graph k33(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
        CHECK(oracle::count_induced_cycles(k33) == 9);
    }

    TEST_CASE("lightest long even hole")
    {
        Graph c14 = cycle_graph(14);
        auto one = oracle::lightest_long_even_hole(c14, EdgeOrder::canonical(c14), 6);
        CHECK(one.verdict);
        CHECK(canonical_cycle(one.witness).size() == 14);
        // Edge e_1 is the heaviest, so of two disjoint copies the one avoiding it is lighter.
        Graph two = disjoint_union(c14, c14);
        auto r = oracle::lightest_long_even_hole(two, EdgeOrder::canonical(two), 6);
        REQUIRE(r.verdict);
        CHECK(VertexSet::of(r.witness) == (VertexSet::prefix(28) - VertexSet::prefix(14)));
        CHECK_FALSE(oracle::lightest_long_even_hole(cycle_graph(7), EdgeOrder::canonical(cycle_graph(7)), 6).verdict);
    }

    TEST_CASE("lighter")
    {
        CHECK(oracle::lighter({7}, {1, 2}));
        CHECK(oracle::lighter({2, 3}, {1, 4}));
        CHECK_FALSE(oracle::lighter({1, 4}, {2, 3}));
        CHECK_FALSE(oracle::lighter({2, 3}, {3, 2}));
    }

    TEST_CASE("configurations on a long cycle")
    {
        Graph c30 = cycle_graph(30);
        using oracle::Kind;
        for (auto kind : {Kind::jewel, Kind::theta, Kind::ban_the_bomb, Kind::near_prism, Kind::frame})
            CHECK_FALSE(oracle::configuration(c30, 6, kind, {7}).verdict);
    }

    TEST_CASE("explicit long theta")
    {
        std::vector<Edge> edges;
        int n = 2;
        for (int l : {3, 4, 5}) {
            int prev = 0;
            for (int j = 1; j < l; ++j) {
                edges.emplace_back(prev, n);
                prev = n++;
            }
            edges.emplace_back(prev, 1);
        }
        Graph g(n, edges);
        CHECK(oracle::configuration(g, 6, oracle::Kind::theta).verdict);
        CHECK_FALSE(oracle::configuration(g, 10, oracle::Kind::theta).verdict);
    }

    TEST_CASE("three in a tree by subset search")
    {
        CHECK(oracle::three_in_a_tree(cycle_graph(5), 0, 1, 3).verdict);
        CHECK_FALSE(oracle::three_in_a_tree(complete_graph(5), 0, 1, 2).verdict);
    }

    TEST_CASE("gating")
    {
        CHECK(oracle::is_candidate(cycle_graph(14), 6));
        CHECK_FALSE(oracle::is_prospect(cycle_graph(8), 6));
    }

    TEST_CASE("audits on a clean hole")
    {
        Graph c14 = cycle_graph(14);
        auto r = audit_lemmas(c14, EdgeOrder::canonical(c14), 6);
        CHECK(r.candidate);
        CHECK(r.holes_audited >= 1);
        CHECK(r.ok());
    }

    TEST_CASE("audits on candidates with major vertices")
    {
        int audited = 0;
        for (const auto & inst : testing::certified("major-hole", 10, 6, 5)) {
            auto r = audit_lemmas(inst.graph, EdgeOrder::canonical(inst.graph), 6);
            CHECK(r.candidate);
            CHECK(r.ok());
            audited += r.holes_audited;
        }
        CHECK(audited > 0);
    }

    TEST_CASE("audits on prospects with a near-prism")
    {
        Graph g = testing::prism_with_local_vertex(7, 7, 2);
        auto r = audit_lemmas(g, EdgeOrder::canonical(g), 6);
        CHECK(r.prospect);
        CHECK(r.prisms_audited >= 1);
        CHECK(r.ok());
    }
}
