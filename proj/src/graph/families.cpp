#include "longhole/families.hpp"

namespace longhole {

auto cycle_graph(int n) -> Graph
{
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

auto path_graph(int n) -> Graph
{
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i)
        es.emplace_back(i, i + 1);
    return Graph(n, es);
}

auto complete_graph(int n) -> Graph
{
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            es.emplace_back(i, j);
    return Graph(n, es);
}

auto empty_graph(int n) -> Graph { return Graph(n); }

auto petersen_graph() -> Graph
{
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, es);
}

auto disjoint_union(const Graph & a, const Graph & b) -> Graph
{
    auto es = a.edges();
    for (auto [u, v] : b.edges())
        es.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), es);
}

auto add_vertex(const Graph & g, std::span<const int> neighbours) -> Graph
{
    auto es = g.edges();
    for (int v : neighbours)
        es.emplace_back(v, g.order());
    return Graph(g.order() + 1, es);
}

} // namespace longhole
