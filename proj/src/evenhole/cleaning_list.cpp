#include "longhole/cancellation.hpp"
#include "longhole/errors.hpp"
#include "longhole/even_hole.hpp"
#include "longhole/lightest_path.hpp"

#include <unordered_set>

namespace longhole {

namespace {

    auto has_three_independent(const Graph & g, const VertexSet & nb) -> bool
    {
        for (int u : nb)
            for (int v : nb - g.closed_neighbours(u)) {
                if (v <= u)
                    continue;
                if (!(nb - g.closed_neighbours(u) - g.closed_neighbours(v)).empty())
                    return true;
            }
        return false;
    }

    auto neighbour_union(const Graph & g, const VertexSet & s) -> VertexSet
    {
        VertexSet out;
        for (int v : s)
            out |= g.neighbours(v);
        return out;
    }

    // G minus Z1 and the neighbours of x and y outside Q.
    auto guess_graph(const Graph & g, const VertexSet & q, const VertexSet & qstar, int x, int y) -> VertexSet
    {
        const VertexSet z1 = g.neighbours_of(qstar) - q;
        const VertexSet z2 = (g.neighbours(x) | g.neighbours(y)) - q;
        return g.vertices() - z1 - z2;
    }

    // The p1..m..p2 path, or empty when R and S do not form an induced path.
    auto join_at(const Graph & g, const std::vector<int> & r, const std::vector<int> & s) -> std::vector<int>
    {
        std::vector<int> p = r;
        p.insert(p.end(), s.rbegin() + 1, s.rend());
        if (!is_induced_path(g, p))
            return {};
        return p;
    }

    auto z3(const Graph & g, const VertexSet & qstar, int x, int y, const std::vector<int> & rs) -> VertexSet
    {
        VertexSet inner = VertexSet::of(rs);
        inner.erase(rs.front());
        inner.erase(rs.back());
        return ((g.neighbours(x) | g.neighbours(y)) & neighbour_union(g, inner)) - qstar;
    }

    // Whether the ends of the induced path p can be joined outside the neighbourhood of its interior.
    auto closable(const Graph & g, const std::vector<int> & p, const VertexSet & inner) -> bool
    {
        const VertexSet room = (g.vertices() - g.closed_neighbours_of(inner)) | VertexSet{p.front(), p.back()};
        return reachable(g, p.front(), room).contains(p.back());
    }

    struct Component {
        VertexSet vertices, inner, shadow;
        int size = 0;
    };

} // namespace

auto cleaning_set_for_hole(const Graph & g, const EdgeOrder & order, const HoleContrivance & c)
    -> std::optional<VertexSet>
{
    const int n = g.order();
    for (int v : {c.x, c.y, c.p1, c.p2, c.m})
        if (v < 0 || v >= n)
            throw InputError("cleaning_set_for_hole: vertex out of range");
    if (!c.q.is_subset_of(g.vertices()))
        throw InputError("cleaning_set_for_hole: Q out of range");
    const VertexSet qstar = family_interior(g, c.q);
    const VertexSet nx = g.neighbours(c.x) & qstar;
    if (!is_linear_forest(g, c.q) || !nx.contains(c.p1) || !nx.contains(c.p2) || c.p1 == c.p2)
        return std::nullopt;
    if (!c.q.contains(c.m) && (g.neighbours(c.x) | g.neighbours(c.y)).contains(c.m))
        return std::nullopt;
    const VertexSet gp = guess_graph(g, c.q, qstar, c.x, c.y);
    if (!gp.contains(c.m))
        return std::nullopt;
    auto r = lightest_path(g, order, c.p1, c.m, gp);
    auto s = lightest_path(g, order, c.p2, c.m, gp);
    if (!r || !s)
        return std::nullopt;
    auto rs = join_at(g, r->vertices, s->vertices);
    if (rs.empty())
        return std::nullopt;
    return (g.neighbours_of(qstar) - c.q) | z3(g, qstar, c.x, c.y, rs);
}

void for_each_cleaning_set(const Graph & g, const EdgeOrder & order, int ell,
                           const std::function<bool(const VertexSet &)> & visit)
{
    require_even_ell(ell);
    std::unordered_set<VertexSet, VertexSetHash> seen;
    bool stopped = false;
    auto offer = [&](const VertexSet & x) {
        if (!stopped && seen.insert(x).second && !visit(x))
            stopped = true;
    };

    for (int y : g.vertices())
        for (int x : g.neighbours(y))
            for (int z : g.neighbours(y) - g.closed_neighbours(x)) {
                if (z <= x)
                    continue;
                checkpoint();
                offer(g.neighbours(y) - VertexSet{x, z});
                if (stopped)
                    return;
            }

    const int budget = 4 * ell - 4;
    VertexSet majorable;
    for (int v : g.vertices())
        if (has_three_independent(g, g.neighbours(v)))
            majorable.insert(v);
    if (majorable.empty())
        return;
    const VertexSet anchors = neighbour_union(g, majorable);

    std::vector<Component> comps;
    for (int u : g.vertices())
        enumerate_induced_paths_from(g, u, budget - 1, g.vertices(), [&](const std::vector<int> & p) {
            checkpoint();
            if (p.size() < 3 || p.back() < p.front())
                return true;
            Component c;
            c.vertices = VertexSet::of(p);
            c.inner = c.vertices - VertexSet{p.front(), p.back()};
            if (!c.inner.intersects(anchors) || !closable(g, p, c.inner))
                return true;
            c.shadow = g.closed_neighbours_of(c.vertices);
            c.size = static_cast<int>(p.size());
            comps.push_back(c);
            return true;
        });

    std::vector<std::size_t> chosen;

    auto guesses = [&](const VertexSet & q, const VertexSet & qstar) {
        const VertexSet z1 = g.neighbours_of(qstar) - q;
        for (int x : majorable - q) {
            const VertexSet nx = g.neighbours(x) & qstar;
            if (nx.count() < 2)
                continue;
            const VertexSet ys = (majorable - q - g.closed_neighbours(x)) | VertexSet{x};
            for (int y : ys) {
                if (!g.neighbours(y).intersects(qstar))
                    continue;
                const VertexSet seen_xy = g.neighbours(x) | g.neighbours(y);
                bool anchored = true;
                for (auto i : chosen)
                    if (!comps[i].inner.intersects(seen_xy)) {
                        anchored = false;
                        break;
                    }
                if (!anchored)
                    continue;
                const VertexSet gp = guess_graph(g, q, qstar, x, y);
                const VertexSet ms = gp - (seen_xy - q) - VertexSet{x, y};
                for (int p1 : nx)
                    for (int p2 : nx - g.closed_neighbours(p1)) {
                        if (p2 <= p1)
                            continue;
                        checkpoint();
                        const auto t1 = lightest_path_tree(g, order, p1, gp);
                        const auto t2 = lightest_path_tree(g, order, p2, gp);
                        for (int m : ms - VertexSet{p1, p2}) {
                            if (!t1.reaches(m) || !t2.reaches(m))
                                continue;
                            auto rs = join_at(g, t1.path_to(m), t2.path_to(m));
                            if (rs.empty())
                                continue;
                            offer(z1 | z3(g, qstar, x, y, rs));
                            if (stopped)
                                return;
                        }
                    }
            }
        }
    };

    std::function<void(std::size_t, VertexSet, VertexSet, VertexSet, int)> grow =
        [&](std::size_t from, VertexSet q, VertexSet qstar, VertexSet blocked, int used) {
            if (!chosen.empty()) {
                guesses(q, qstar);
                if (stopped)
                    return;
            }
            if (chosen.size() == 4)
                return;
            for (std::size_t i = from; i < comps.size(); ++i) {
                const auto & c = comps[i];
                if (used + c.size > budget || c.vertices.intersects(blocked))
                    continue;
                chosen.push_back(i);
                grow(i + 1, q | c.vertices, qstar | c.inner, blocked | c.shadow, used + c.size);
                chosen.pop_back();
                if (stopped)
                    return;
            }
        };
    grow(0, VertexSet{}, VertexSet{}, VertexSet{}, 0);
}

auto cleaning_list(const Graph & g, const EdgeOrder & order, int ell) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    for_each_cleaning_set(g, order, ell, [&](const VertexSet & x) {
        out.push_back(x);
        return true;
    });
    return out;
}

} // namespace longhole
