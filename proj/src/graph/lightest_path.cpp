#include "longhole/lightest_path.hpp"

#include "longhole/cancellation.hpp"
#include "longhole/errors.hpp"
#include "longhole/path_weight.hpp"

#include <algorithm>
#include <cstdint>
#include <span>

namespace longhole {

namespace {

    // out = sorted(label ∪ {r}); label has len entries.
    void extend_label(const std::uint16_t * label, int len, std::uint16_t r, std::uint16_t * out)
    {
        int i = 0;
        while (i < len && label[i] < r) {
            out[i] = label[i];
            ++i;
        }
        out[i] = r;
        for (; i < len; ++i)
            out[i + 1] = label[i];
    }

} // namespace

auto LightestPathTree::path_to(int v) const -> std::vector<int>
{
    std::vector<int> p;
    if (dist_[v] < 0)
        return p;
    for (int x = v; x != -1; x = parent_[x])
        p.push_back(x);
    std::reverse(p.begin(), p.end());
    return p;
}

auto lightest_path_tree(const Graph & g, const EdgeOrder & order, int source, const VertexSet & alive, int stop_at)
    -> LightestPathTree
{
    const int n = g.order();
    LightestPathTree t;
    t.source_ = source;
    t.parent_.assign(static_cast<std::size_t>(n), -1);
    t.dist_.assign(static_cast<std::size_t>(n), -1);
    if (source < 0 || source >= n)
        throw InputError("lightest path source out of range");
    if (!alive.contains(source))
        return t;

    const auto stride = static_cast<std::size_t>(std::max(n, 1));
    std::vector<std::uint16_t> labels(stride * stride);
    std::vector<std::uint16_t> best(stride), cand(stride);

    t.dist_[source] = 0;
    VertexSet seen{source};
    VertexSet frontier{source};
    for (int d = 1; !frontier.empty(); ++d) {
        if (stop_at >= 0 && seen.contains(stop_at))
            break;
        checkpoint();
        VertexSet layer;
        for (int u : frontier)
            layer |= g.neighbours(u);
        layer &= alive;
        layer -= seen;
        for (int v : layer) {
            int best_u = -1;
            for (int u : g.neighbours(v) & frontier) {
                auto r = static_cast<std::uint16_t>(order.rank(u, v));
                const std::uint16_t * lu = &labels[static_cast<std::size_t>(u) * stride];
                if (best_u == -1) {
                    extend_label(lu, d - 1, r, best.data());
                    best_u = u;
                    continue;
                }
                extend_label(lu, d - 1, r, cand.data());
                auto len = static_cast<std::size_t>(d);
                if (compare_equal_length_ranks<std::uint16_t>(std::span(cand.data(), len),
                                                              std::span(best.data(), len)) < 0) {
                    std::swap(best, cand);
                    best_u = u;
                }
            }
            std::copy_n(best.data(), d, &labels[static_cast<std::size_t>(v) * stride]);
            t.parent_[v] = best_u;
            t.dist_[v] = d;
        }
        seen |= layer;
        frontier = layer;
    }
    return t;
}

auto lightest_path(const Graph & g, const EdgeOrder & order, int s, int t, const VertexSet & alive)
    -> std::optional<InducedPath>
{
    if (t < 0 || t >= g.order())
        throw InputError("lightest path target out of range");
    auto tree = lightest_path_tree(g, order, s, alive, t);
    if (!alive.contains(t) || !tree.reaches(t))
        return std::nullopt;
    return InducedPath{tree.path_to(t)};
}

auto lightest_path(const Graph & g, const EdgeOrder & order, int s, int t) -> std::optional<InducedPath>
{
    return lightest_path(g, order, s, t, g.vertices());
}

} // namespace longhole
