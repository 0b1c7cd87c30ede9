#include "corpus.hpp"

#include "longhole/families.hpp"
#include "longhole/harness.hpp"
#include "longhole/oracle.hpp"

#include <algorithm>
#include <set>

namespace longhole::testing {

namespace {

    auto draw(std::mt19937_64 & rng, int lo, int hi) -> int
    {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    auto planted(const std::string & kind, std::uint64_t seed) -> Graph
    {
        std::mt19937_64 rng(seed);
        GenParams p;
        p.n = draw(rng, 2, 6);
        p.p = 0.02;
        if (kind == "planted-hole") {
            p.lengths = {2 * draw(rng, 7, 10)};
        } else if (kind == "planted-prism") {
            p.lengths = {draw(rng, 7, 9), draw(rng, 7, 9), draw(rng, 1, 9)};
            std::shuffle(p.lengths.begin(), p.lengths.end(), rng);
        } else if (kind == "planted-theta") {
            p.lengths = {draw(rng, 5, 9), draw(rng, 5, 9), draw(rng, 5, 9)};
        } else {
            return major_hole_instance(seed);
        }
        return generate(kind, p, seed).graph;
    }

    auto passes(const std::string & kind, const Graph & g, int ell) -> bool
    {
        using namespace oracle;
        if (kind == "planted-prism")
            return is_prospect(g, ell) && configuration(g, ell, Kind::near_prism).verdict;
        if (kind == "planted-theta")
            return !bounded_long_even_hole(g, ell, 2 * ell).verdict &&
                   !configuration(g, ell, Kind::jewel, Params{ell + 1}).verdict &&
                   configuration(g, ell, Kind::theta).verdict;
        return is_candidate(g, ell) && long_even_hole(g, ell).verdict;
    }

} // namespace

auto certified(const std::string & kind, int count, int ell, std::uint64_t seed, int max_attempts)
    -> std::vector<Certified>
{
    std::vector<Certified> out;
    for (int i = 0; i < max_attempts && static_cast<int>(out.size()) < count; ++i) {
        const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
        Graph g = planted(kind, s);
        if (passes(kind, g, ell))
            out.push_back({std::move(g), kind, s});
    }
    return out;
}

auto major_hole_instance(std::uint64_t seed) -> Graph
{
    std::mt19937_64 rng(seed);
    const int len = 2 * draw(rng, 7, 9);
    std::vector<Edge> edges;
    for (int i = 0; i < len; ++i)
        edges.emplace_back(i, (i + 1) % len);
    int n = len;
    const int majors = draw(rng, 1, 3);
    for (int k = 0; k < majors; ++k) {
        const int x = n++;
        std::set<int> nb;
        const int start = draw(rng, 0, len - 1);
        const int span = draw(rng, 2, 6);
        nb.insert(start);
        nb.insert((start + span) % len);
        if (rng() % 2)
            nb.insert((start + 1) % len);
        if (rng() % 3 == 0)
            nb.insert((start + span + draw(rng, 2, 5)) % len);
        for (int v : nb)
            edges.emplace_back(v, x);
    }
    const int noise = draw(rng, 0, 3);
    for (int k = 0; k < noise; ++k) {
        const int v = n++;
        edges.emplace_back(draw(rng, 0, v - 1), v);
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto & [u, v] : edges) {
        u = perm[static_cast<std::size_t>(u)];
        v = perm[static_cast<std::size_t>(v)];
    }
    return Graph(n, edges);
}

auto hole_with_local_vertex(int len) -> Graph
{
    const std::vector<int> nb{0, 1, 2};
    return add_vertex(cycle_graph(len), nb);
}

auto prism_with_local_vertex(int l0, int l1, int l2) -> Graph
{
    GenParams p;
    p.lengths = {l0, l1, l2};
    Graph k = generate("planted-prism", p, 0).graph;
    // Relabelling is random, so find the longest path again: walk from a degree-3 vertex.
    const int longest = std::max({l0, l1, l2});
    std::vector<int> tips;
    for (int v = 0; v < k.order(); ++v)
        if (k.degree(v) == 3)
            tips.push_back(v);
    for (int a : tips) {
        for (int w : k.neighbours(a)) {
            if (k.degree(w) != 2)
                continue;
            std::vector<int> path{a, w};
            while (k.degree(path.back()) == 2) {
                for (int z : k.neighbours(path.back()))
                    if (z != path[path.size() - 2]) {
                        path.push_back(z);
                        break;
                    }
            }
            if (static_cast<int>(path.size()) - 1 == longest) {
                const std::size_t mid = path.size() / 2;
                const std::vector<int> nb{path[mid - 1], path[mid], path[mid + 1]};
                return add_vertex(k, nb);
            }
        }
    }
    return k;
}

auto random_graph(std::mt19937_64 & rng, int n, double p) -> Graph
{
    std::vector<Edge> edges;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p)
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

auto random_order(const Graph & g, std::mt19937_64 & rng) -> EdgeOrder
{
    auto edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    return EdgeOrder::from_sequence(g, edges);
}

} // namespace longhole::testing
