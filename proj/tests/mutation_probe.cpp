// Runs the audit and differential checks that the seeded mutations are meant to trip. Prints
// one line per check and exits 0 when at least one check failed, 1 when everything passed.

#include "corpus.hpp"

#include "longhole/audit.hpp"
#include "longhole/configs.hpp"
#include "longhole/even_hole.hpp"
#include "longhole/harness.hpp"
#include "longhole/lightest_path.hpp"
#include "longhole/mutation.hpp"
#include "longhole/oracle.hpp"

#include <algorithm>
#include <iostream>
#include <span>

using namespace longhole;
using testing::random_graph;

namespace {

constexpr int kEll = 6;

auto audit_failures() -> int
{
    std::vector<Graph> corpus{testing::hole_with_local_vertex(14), testing::hole_with_local_vertex(16),
                              testing::prism_with_local_vertex(7, 7, 2), testing::prism_with_local_vertex(8, 8, 8)};
    for (const auto * kind : {"major-hole", "planted-prism"})
        for (auto & c : testing::certified(kind, 20, kEll, 11))
            corpus.push_back(std::move(c.graph));
    int bad = 0;
    for (const auto & g : corpus)
        if (!audit_lemmas(g, EdgeOrder::canonical(g), kEll).ok())
            ++bad;
    return bad;
}

auto lightest_path_failures() -> int
{
    std::mt19937_64 rng(21);
    int bad = 0;
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 5), 0.5);
        EdgeOrder order = testing::random_order(g, rng);
        for (int s = 0; s < g.order(); ++s)
            for (int t = s + 1; t < g.order(); ++t) {
                auto got = lightest_path(g, order, s, t);
                std::vector<int> best;
                std::vector<int> best_ranks;
                for (const auto & p : oracle::induced_paths_between(g, s, t, g.order())) {
                    std::vector<int> ranks;
                    for (std::size_t j = 0; j + 1 < p.size(); ++j)
                        ranks.push_back(order.rank(p[j], p[j + 1]));
                    if (best.empty() || oracle::lighter(ranks, best_ranks)) {
                        best = p;
                        best_ranks = ranks;
                    }
                }
                if (got.has_value() == best.empty() || (got && got->vertices != best))
                    ++bad;
            }
    }
    return bad;
}

auto bounded_hole_failures() -> int
{
    std::mt19937_64 rng(22);
    int bad = 0;
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, 6 + static_cast<int>(rng() % 7), 0.3);
        for (int k : {6, 8, 12})
            if (detect_bounded_long_even_hole(g, kEll, k).has_value() !=
                oracle::bounded_long_even_hole(g, kEll, k).verdict)
                ++bad;
    }
    return bad;
}

auto three_in_a_tree_failures() -> int
{
    std::mt19937_64 rng(23);
    int bad = 0;
    for (int i = 0; i < 300; ++i) {
        Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 6), 0.35);
        const int n = g.order();
        const int a = static_cast<int>(rng() % n);
        const int b = static_cast<int>(rng() % n);
        const int c = static_cast<int>(rng() % n);
        if (a == b || b == c || a == c)
            continue;
        if (three_in_a_tree(g, a, b, c).has_value() != oracle::three_in_a_tree(g, a, b, c).verdict)
            ++bad;
    }
    return bad;
}

auto pipeline_failures() -> int
{
    FuzzConfig fc;
    fc.count = 500;
    fc.n_min = 8;
    fc.n_max = 14;
    fc.seed = 24;
    fc.threads = 1;
    auto r = fuzz(fc);
    const std::size_t shown = std::min<std::size_t>(r.counterexamples.size(), 5);
    for (const auto & c : std::span(r.counterexamples).first(shown))
        std::cout << "  counterexample " << c.graph6 << " (from " << c.original_graph6 << "): " << c.note << '\n';
    return static_cast<int>(r.counterexamples.size());
}

} // namespace

auto main() -> int
{
    struct Check {
        const char * name;
        int (*run)();
    };
    const Check checks[] = {{"audit", audit_failures},
                            {"lightest-path", lightest_path_failures},
                            {"bounded-hole", bounded_hole_failures},
                            {"three-in-a-tree", three_in_a_tree_failures},
                            {"pipeline", pipeline_failures}};
    int failed = 0;
    std::cout << "mutant " << kMutant << '\n';
    for (const auto & c : checks) {
        int bad = 0;
        try {
            bad = c.run();
        } catch (const std::exception & e) {
            std::cout << c.name << ": exception " << e.what() << '\n';
            bad = 1;
        }
        std::cout << c.name << ": " << bad << " failures\n";
        failed += bad > 0;
    }
    std::cout << (failed ? "detected" : "clean") << '\n';
    return failed ? 0 : 1;
}
