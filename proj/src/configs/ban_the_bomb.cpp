#include "longhole/cancellation.hpp"
#include "longhole/configs.hpp"
#include "longhole/errors.hpp"

#include <algorithm>

namespace longhole {

void for_each_bomb(const Graph & g, int ell, const std::function<bool(const Bomb &)> & visit)
{
    require_even_ell(ell);
    const int arm = ell - 4;
    const VertexSet all = g.vertices();
    for (int w = 0; w < g.order(); ++w)
        for (int v1 : g.neighbours(w))
            for (int v2 : g.neighbours(w)) {
                if (v2 <= v1 || g.adjacent(v1, v2))
                    continue;
                for (int u : (g.neighbours(v1) & g.neighbours(v2)) - VertexSet{w}) {
                    VertexSet room1 = (all - g.closed_neighbours_of(VertexSet{w, v2, u})) | VertexSet{v1};
                    std::vector<std::vector<int>> arms1;
                    enumerate_induced_paths_from(g, v1, arm, room1, [&](const std::vector<int> & p) {
                        if (static_cast<int>(p.size()) == arm + 1)
                            arms1.push_back(p);
                        return true;
                    });
                    for (const auto & a1 : arms1) {
                        VertexSet s1 = VertexSet::of(a1) - VertexSet{v1};
                        VertexSet room2 =
                            (all - g.closed_neighbours_of(s1 | VertexSet{w, v1, u})) | VertexSet{v2};
                        bool go = true;
                        enumerate_induced_paths_from(g, v2, arm, room2, [&](const std::vector<int> & a2) {
                            checkpoint();
                            if (static_cast<int>(a2.size()) != arm + 1)
                                return true;
                            Bomb b;
                            b.r.vertices.assign(a1.rbegin(), a1.rend());
                            b.r.vertices.push_back(w);
                            b.r.vertices.insert(b.r.vertices.end(), a2.begin(), a2.end());
                            b.u = u;
                            VertexSet rset = b.r.vertex_set();
                            for (int x : g.neighbours(u) - g.closed_neighbours_of(rset)) {
                                b.x = x;
                                if (!visit(b)) {
                                    go = false;
                                    return false;
                                }
                            }
                            return true;
                        });
                        if (!go)
                            return;
                    }
                }
            }
}

auto detect_long_ban_the_bomb(const Graph & g, int ell) -> std::optional<BanTheBomb>
{
    require_even_ell(ell);
    const VertexSet all = g.vertices();
    const auto mid = static_cast<std::size_t>(ell - 3);
    std::optional<BanTheBomb> found;
    for_each_bomb(g, ell, [&](const Bomb & b) {
        const auto & r = b.r.vertices;
        const int q1 = r.front(), q2 = r.back();
        VertexSet leaves{q1, q2, b.x};
        VertexSet body = b.r.vertex_set() | VertexSet{b.u, b.x};
        VertexSet alive = all - (g.closed_neighbours_of(body - leaves) - leaves);
        auto tree = three_in_a_tree(g, q1, q2, b.x, alive);
        if (!tree)
            return true;
        auto t1 = shortest_path(g, b.x, q1, tree->vertices);
        auto t2 = shortest_path(g, b.x, q2, tree->vertices);
        if (!t1 || !t2)
            throw InvariantViolation("bomb tree is disconnected");
        VertexSet on1 = VertexSet::of(*t1);
        for (std::size_t i = 1; i < t2->size(); ++i)
            if (on1.contains((*t2)[i]))
                return true; // the tree branches away from x, impossible without a long theta
        BanTheBomb bb;
        bb.u = b.u;
        bb.v1 = r[mid - 1];
        bb.w = r[mid];
        bb.v2 = r[mid + 1];
        bb.x = b.x;
        bb.p1.vertices = *t1;
        for (std::size_t i = 1; i < mid; ++i)
            bb.p1.vertices.push_back(r[i]);
        bb.p2.vertices = *t2;
        for (std::size_t i = r.size() - 1; i > mid + 1; --i)
            bb.p2.vertices.push_back(r[i - 1]);
        if (!is_long_ban_the_bomb(g, bb, ell))
            throw InvariantViolation("ban-the-bomb assembled from bomb and tree is invalid");
        found = bb;
        return false;
    });
    return found;
}

auto is_bomb(const Graph & g, const Bomb & b, int ell) -> bool
{
    const auto & r = b.r.vertices;
    if (static_cast<int>(r.size()) != 2 * ell - 5 || !is_induced_path(g, r))
        return false;
    const auto mid = static_cast<std::size_t>(ell - 3);
    VertexSet rset = b.r.vertex_set();
    if (b.u < 0 || b.x < 0 || b.u >= g.order() || b.x >= g.order() || rset.contains(b.u) || rset.contains(b.x) ||
        b.u == b.x)
        return false;
    VertexSet allowed{r[mid - 1], r[mid], r[mid + 1]};
    VertexSet nu = g.neighbours(b.u) & rset;
    if (!nu.contains(r[mid - 1]) || !nu.contains(r[mid + 1]) || !nu.is_subset_of(allowed))
        return false;
    return g.adjacent(b.u, b.x) && !g.neighbours(b.x).intersects(rset);
}

auto is_long_ban_the_bomb(const Graph & g, const BanTheBomb & b, int ell) -> bool
{
    const int n = g.order();
    for (int v : {b.u, b.v1, b.w, b.v2, b.x})
        if (v < 0 || v >= n)
            return false;
    if (VertexSet{b.u, b.v1, b.w, b.v2, b.x}.count() != 5)
        return false;
    if (!g.adjacent(b.u, b.v1) || !g.adjacent(b.u, b.v2) || !g.adjacent(b.w, b.v1) || !g.adjacent(b.w, b.v2) ||
        g.adjacent(b.v1, b.v2))
        return false;
    if (!g.adjacent(b.x, b.u) || g.adjacent(b.x, b.v1) || g.adjacent(b.x, b.v2) || g.adjacent(b.x, b.w))
        return false;
    const InducedPath * ps[2] = {&b.p1, &b.p2};
    const int ends[2] = {b.v1, b.v2};
    for (int i = 0; i < 2; ++i) {
        const auto & p = *ps[i];
        if (p.vertices.empty() || p.front() != b.x || p.back() != ends[i] || p.length() < 2 ||
            !is_induced_path(g, p.vertices))
            return false;
        if (!is_anticomplete(g, p.interior(), VertexSet{b.u, b.w, ends[1 - i]}))
            return false;
    }
    if (!is_anticomplete(g, b.p1.vertex_set() - VertexSet{b.x}, b.p2.vertex_set() - VertexSet{b.x}))
        return false;
    return b.p1.length() + 2 >= ell && b.p2.length() + 2 >= ell && b.p1.length() + b.p2.length() + 2 >= ell;
}

auto derive_even_hole(const Graph & g, const BanTheBomb & b, int ell) -> Hole
{
    if (!is_long_ban_the_bomb(g, b, ell))
        throw InvariantViolation("derive_even_hole: not a long ban-the-bomb");
    std::vector<std::vector<int>> holes;
    for (const auto * p : {&b.p1, &b.p2}) {
        auto c = p->vertices;
        c.push_back(b.u);
        holes.push_back(c);
    }
    auto c = b.p1.vertices;
    c.push_back(b.w);
    for (auto it = b.p2.vertices.rbegin(); it + 1 != b.p2.vertices.rend(); ++it)
        c.push_back(*it);
    holes.push_back(c);
    for (auto & h : holes)
        if (h.size() % 2 == 0) {
            if (!is_long_even_hole(g, h, ell))
                throw InvariantViolation("derive_even_hole: ban-the-bomb hole invalid");
            return Hole{h};
        }
    throw InvariantViolation("derive_even_hole: ban-the-bomb without an even hole");
}

} // namespace longhole
