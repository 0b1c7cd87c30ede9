#include "longhole/cancellation.hpp"
#include "longhole/configs.hpp"
#include "longhole/errors.hpp"
#include "longhole/near_prism.hpp"

#include <algorithm>
#include <unordered_set>

namespace longhole {

auto family_interior(const Graph & g, const VertexSet & q) -> VertexSet
{
    VertexSet out;
    for (int v : q)
        if ((g.neighbours(v) & q).count() >= 2)
            out.insert(v);
    return out;
}

auto is_linear_forest(const Graph & g, const VertexSet & q) -> bool
{
    int edges = 0;
    for (int v : q) {
        const int d = (g.neighbours(v) & q).count();
        if (d > 2)
            return false;
        edges += d;
    }
    edges /= 2;
    int components = 0;
    VertexSet left = q;
    while (!left.empty()) {
        left -= reachable(g, left.first(), q);
        ++components;
    }
    return edges == q.count() - components;
}

namespace {

    auto reversed(std::vector<int> v) -> std::vector<int>
    {
        std::reverse(v.begin(), v.end());
        return v;
    }

    // Everything a guess determines before alpha and h are fixed.
    struct GuessBase {
        VertexSet q, qstar, h_alive;
    };

    auto guess_base(const Graph & g, const Frame & f, const PrismContrivance & c, const VertexSet & alive) -> GuessBase
    {
        GuessBase b;
        b.q = c.q;
        b.qstar = family_interior(g, c.q);
        VertexSet z1 = g.neighbours_of(b.qstar) - c.q;
        VertexSet z2 = (g.neighbours(c.x) | g.neighbours(c.y)) - f.vertex_set() - c.q;
        b.h_alive = alive - z1 - z2;
        return b;
    }

    // L from the lightest paths of the h-branch; the source of the last path is s1 (h = 1) or s2.
    struct LBuilder {
        const Graph & g;
        const EdgeOrder & order;
        const Frame & f;
        VertexSet h_alive;
        std::optional<LightestPathTree> tree;
        std::vector<int> prefix; // L up to the source of the last lightest path
        bool ok = false;

        LBuilder(const Graph & g_, const EdgeOrder & o, const Frame & f_, const VertexSet & h, int branch)
            : g(g_), order(o), f(f_), h_alive(h)
        {
            if (branch == 1) {
                if (f.s(0) < 0 || !h_alive.contains(f.s(0)))
                    return;
                prefix = f.a_side[0];
                tree = lightest_path_tree(g, order, f.s(0), h_alive);
                ok = true;
                return;
            }
            if (f.s(1) < 0)
                return;
            std::vector<int> p1;
            VertexSet second = h_alive;
            if (f.is_path(0)) {
                p1 = f.a_side[0];
            } else {
                if (!h_alive.contains(f.s(0)))
                    return;
                auto m = lightest_path(g, order, f.s(0), f.t(0), h_alive);
                if (!m)
                    return;
                p1 = f.a_side[0];
                p1.insert(p1.end(), m->vertices.begin() + 1, m->vertices.end());
                p1.insert(p1.end(), f.b_side[0].rbegin() + 1, f.b_side[0].rend());
                second -= g.closed_neighbours_of(m->vertex_set());
            }
            if (!second.contains(f.s(1)))
                return;
            prefix = reversed(p1);
            prefix.insert(prefix.end(), f.a_side[1].begin(), f.a_side[1].end());
            tree = lightest_path_tree(g, order, f.s(1), second);
            ok = true;
        }

        [[nodiscard]] auto build(int alpha) const -> std::optional<std::vector<int>>
        {
            if (!ok || !tree->reaches(alpha))
                return std::nullopt;
            auto tail = tree->path_to(alpha);
            std::vector<int> l = prefix;
            l.insert(l.end(), tail.begin() + 1, tail.end());
            return l;
        }
    };

    auto valid_guess(const Graph & g, const PrismContrivance & c) -> bool
    {
        const int n = g.order();
        for (int v : {c.x, c.y, c.alpha})
            if (v < 0 || v >= n)
                return false;
        return (c.h == 1 || c.h == 2) && c.q.is_subset_of(g.vertices()) && is_linear_forest(g, c.q) &&
               family_interior(g, c.q).contains(c.alpha);
    }

    auto z4(const Graph & g, const Frame & f, const VertexSet & q, const VertexSet & qstar,
            const std::vector<int> & l, const VertexSet & alive) -> VertexSet
    {
        VertexSet lset = VertexSet::of(l);
        VertexSet l_inner = lset;
        l_inner.erase(l.front());
        l_inner.erase(l.back());
        return (g.neighbours_of(qstar | l_inner) & alive) - f.vertex_set() - q - lset;
    }

} // namespace

auto reconstruct_L(const Graph & g, const EdgeOrder & order, const Frame & f, const PrismContrivance & c,
                   const VertexSet & alive) -> std::optional<std::vector<int>>
{
    if (!valid_guess(g, c))
        return std::nullopt;
    auto base = guess_base(g, f, c, alive);
    LBuilder lb(g, order, f, base.h_alive, c.h);
    return lb.build(c.alpha);
}

auto cleaning_set_for_prism(const Graph & g, const EdgeOrder & order, const Frame & f,
                            const PrismContrivance & c, const VertexSet & alive) -> std::optional<VertexSet>
{
    auto l = reconstruct_L(g, order, f, c, alive);
    if (!l)
        return std::nullopt;
    return z4(g, f, c.q, family_interior(g, c.q), *l, alive);
}

namespace {

    auto has_three_independent(const Graph & g, const VertexSet & nb) -> bool
    {
        for (int u : nb)
            for (int v : nb - g.closed_neighbours(u)) {
                if (v <= u)
                    continue;
                VertexSet rest = nb - g.closed_neighbours(u) - g.closed_neighbours(v);
                if (!rest.empty())
                    return true;
            }
        return false;
    }

    struct Component {
        VertexSet vertices, inner, shadow;
        int size = 0;
    };

    // Vertices that can lie on a near-prism with frame f inside alive: the frame and, for each
    // stub pair, what its first end reaches once the shadow and the other ends are removed.
    auto prism_region(const Graph & g, const Frame & f, const VertexSet & alive) -> VertexSet
    {
        VertexSet region = f.vertex_set();
        const VertexSet g0 = alive - frame_shadow(g, f);
        for (int i = 0; i < 3; ++i) {
            if (f.is_path(i))
                continue;
            VertexSet others;
            for (int j = 0; j < 3; ++j)
                if (j != i && !f.is_path(j))
                    others |= VertexSet{f.s(j), f.t(j)};
            VertexSet r = g0 - g.closed_neighbours_of(others);
            if (r.contains(f.s(i)))
                region |= reachable(g, f.s(i), r);
        }
        return region & alive;
    }

} // namespace

void for_each_prism_contrivance(const Graph & g, const Frame & f, int ell, const VertexSet & alive,
                                const std::function<bool(const PrismContrivance &)> & visit)
{
    const int budget = 6 * ell - 2;
    const VertexSet region = prism_region(g, f, alive);
    const VertexSet fv = f.vertex_set();
    VertexSet majorable;
    for (int v : alive - fv)
        if (has_three_independent(g, g.neighbours(v) & region))
            majorable.insert(v);
    if (majorable.empty())
        return;
    VertexSet anchors;
    for (int v : majorable)
        anchors |= g.neighbours(v) & region;

    std::vector<Component> comps;
    for (int u : region)
        enumerate_induced_paths_from(g, u, budget - 1, region, [&](const std::vector<int> & p) {
            checkpoint();
            if (p.size() < 3 || p.back() < p.front())
                return true;
            Component c;
            c.vertices = VertexSet::of(p);
            c.inner = c.vertices;
            c.inner.erase(p.front());
            c.inner.erase(p.back());
            if (!c.inner.intersects(anchors))
                return true;
            c.shadow = g.closed_neighbours_of(c.vertices);
            c.size = static_cast<int>(p.size());
            comps.push_back(c);
            return true;
        });

    const bool h1 = f.s(0) >= 0;
    const bool h2 = f.s(1) >= 0;
    bool stopped = false;
    std::vector<std::size_t> chosen;

    auto emit = [&](const VertexSet & q, const VertexSet & qstar) {
        for (int x : majorable - q) {
            const VertexSet ax = g.neighbours(x) & qstar;
            if (ax.empty())
                continue;
            VertexSet ys = (majorable - q - g.closed_neighbours(x)) | VertexSet{x};
            for (int y : ys) {
                checkpoint();
                if (!g.neighbours(y).intersects(qstar))
                    continue;
                const VertexSet seen = g.neighbours(x) | g.neighbours(y);
                bool anchored = true;
                for (auto i : chosen)
                    if (!comps[i].inner.intersects(seen)) {
                        anchored = false;
                        break;
                    }
                if (!anchored)
                    continue;
                for (int alpha : ax)
                    for (int h = 1; h <= 2; ++h) {
                        if ((h == 1 && !h1) || (h == 2 && !h2))
                            continue;
                        if (!visit(PrismContrivance{x, y, alpha, h, q})) {
                            stopped = true;
                            return;
                        }
                    }
            }
        }
    };

    std::function<void(std::size_t, VertexSet, VertexSet, VertexSet, int)> grow =
        [&](std::size_t from, VertexSet q, VertexSet qstar, VertexSet blocked, int used) {
            if (!chosen.empty()) {
                emit(q, qstar);
                if (stopped)
                    return;
            }
            if (chosen.size() == 5)
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

auto detect_long_near_prism(const Graph & g, const EdgeOrder & order, int ell) -> std::optional<NearPrism>
{
    require_even_ell(ell);
    const VertexSet all = g.vertices();
    auto g1_of = [&](const Frame & f) { return all - (frame_shadow(g, f) - f.interior()); };

    std::optional<NearPrism> found;
    enumerate_ordered_frames(g, ell, [&](const Frame & f) {
        found = detect_clean_lightest_near_prism(g, order, f, ell, g1_of(f));
        return !found;
    });
    if (found)
        return found;

    enumerate_ordered_frames(g, ell, [&](const Frame & f) {
        const VertexSet g1 = g1_of(f);
        std::unordered_set<VertexSet, VertexSetHash> tried{VertexSet{}};
        VertexSet last_q;
        int last_x = -1, last_y = -1;
        GuessBase base;
        std::array<std::optional<LBuilder>, 2> builders;
        for_each_prism_contrivance(g, f, ell, g1, [&](const PrismContrivance & c) {
            if (c.x != last_x || c.y != last_y || c.q != last_q) {
                base = guess_base(g, f, c, g1);
                builders[0].reset();
                builders[1].reset();
                last_x = c.x;
                last_y = c.y;
                last_q = c.q;
            }
            auto & lb = builders[static_cast<std::size_t>(c.h - 1)];
            if (!lb)
                lb.emplace(g, order, f, base.h_alive, c.h);
            auto l = lb->build(c.alpha);
            if (!l)
                return true;
            VertexSet x = z4(g, f, base.q, base.qstar, *l, g1);
            if (!tried.insert(x).second)
                return true;
            found = detect_clean_lightest_near_prism(g, order, f, ell, g1 - x);
            return !found;
        });
        return !found;
    });
    return found;
}

auto detect_long_near_prism(const Graph & g, int ell) -> std::optional<NearPrism>
{
    return detect_long_near_prism(g, EdgeOrder::canonical(g), ell);
}

} // namespace longhole
