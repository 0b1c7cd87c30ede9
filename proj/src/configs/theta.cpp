#include "longhole/cancellation.hpp"
#include "longhole/configs.hpp"
#include "longhole/errors.hpp"

#include <algorithm>

namespace longhole {

namespace {

    // Path inside the tree t between a and b.
    auto tree_path(const Graph & g, const VertexSet & t, int a, int b) -> InducedPath
    {
        auto p = shortest_path(g, a, b, t);
        if (!p)
            throw InvariantViolation("tree is not connected");
        return InducedPath{*p};
    }

    // Vertex where the paths from the three terminals meet.
    auto tree_centre(const Graph & g, const InducedTree & t) -> int
    {
        auto p12 = tree_path(g, t.vertices, t.terminals[0], t.terminals[1]);
        auto p3 = shortest_path(g, t.terminals[2], t.terminals[0], t.vertices);
        VertexSet on12 = p12.vertex_set();
        for (int v : *p3)
            if (on12.contains(v))
                return v;
        throw InvariantViolation("tree paths do not meet");
    }

    auto concat(const InducedPath & a, const InducedPath & b) -> InducedPath
    {
        InducedPath p = a;
        p.vertices.insert(p.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
        return p;
    }

    auto claw_length_triples(int ell) -> std::vector<std::array<int, 3>>
    {
        std::vector<std::array<int, 3>> out;
        for (int a = 2; a <= 2 * ell; ++a)
            for (int b = a; b <= 2 * ell; ++b)
                for (int c = b; c <= 2 * ell; ++c) {
                    bool pairwise = a + b >= ell - 2 && b + c >= ell - 2 && a + c >= ell - 2;
                    if (pairwise && a + b + c <= 2 * ell - 6)
                        out.push_back({a, b, c});
                }
        return out;
    }

} // namespace

void for_each_claw(const Graph & g, int ell, const std::function<bool(const Claw &)> & visit)
{
    require_even_ell(ell);
    const VertexSet all = g.vertices();
    const auto triples = claw_length_triples(ell);
    int longest = 0;
    for (const auto & t : triples)
        longest = std::max(longest, t[2]);
    for (int a = 0; a < g.order(); ++a) {
        std::vector<std::vector<InducedPath>> by_length(static_cast<std::size_t>(longest + 1));
        enumerate_induced_paths_from(g, a, longest, all, [&](const std::vector<int> & p) {
            if (p.size() >= 3)
                by_length[p.size() - 1].push_back(InducedPath{p});
            return true;
        });
        for (const auto & lens : triples) {
            const auto & l1 = by_length[static_cast<std::size_t>(lens[0])];
            const auto & l2 = by_length[static_cast<std::size_t>(lens[1])];
            const auto & l3 = by_length[static_cast<std::size_t>(lens[2])];
            for (const auto & q1 : l1) {
                VertexSet s1 = q1.vertex_set() - VertexSet{a};
                VertexSet n1 = g.closed_neighbours_of(s1);
                for (const auto & q2 : l2) {
                    if (lens[1] == lens[0] && q2.vertices[1] <= q1.vertices[1])
                        continue;
                    VertexSet s2 = q2.vertex_set() - VertexSet{a};
                    if (s2.intersects(n1))
                        continue;
                    VertexSet n12 = n1 | g.closed_neighbours_of(s2);
                    for (const auto & q3 : l3) {
                        checkpoint();
                        if (lens[2] == lens[1] && q3.vertices[1] <= q2.vertices[1])
                            continue;
                        VertexSet s3 = q3.vertex_set() - VertexSet{a};
                        if (s3.intersects(n12))
                            continue;
                        if (!visit(Claw{a, {q1, q2, q3}}))
                            return;
                    }
                }
            }
        }
    }
}

auto detect_long_theta(const Graph & g, int ell) -> std::optional<Theta>
{
    require_even_ell(ell);
    const VertexSet all = g.vertices();
    std::optional<Theta> found;
    for_each_claw(g, ell, [&](const Claw & c) {
        VertexSet b, tips;
        for (const auto & arm : c.arms) {
            b |= arm.vertex_set();
            tips.insert(arm.back());
        }
        VertexSet alive = all - (g.closed_neighbours_of(b - tips) - tips);
        const int q1 = c.arms[0].back(), q2 = c.arms[1].back(), q3 = c.arms[2].back();
        auto tree = three_in_a_tree(g, q1, q2, q3, alive);
        if (!tree)
            return true;
        const int t = tree_centre(g, *tree);
        Theta th;
        th.u = c.centre;
        th.v = t;
        for (std::size_t i = 0; i < 3; ++i)
            th.paths[i] = concat(c.arms[i], tree_path(g, tree->vertices, c.arms[i].back(), t));
        if (!is_long_theta(g, th, ell))
            throw InvariantViolation("theta assembled from claw and tree is invalid");
        found = th;
        return false;
    });
    return found;
}

auto is_claw(const Graph & g, const Claw & c, int ell) -> bool
{
    std::array<int, 3> k{};
    VertexSet all_v{c.centre};
    int total = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto & arm = c.arms[i];
        if (arm.vertices.empty() || arm.front() != c.centre || !is_induced_path(g, arm.vertices))
            return false;
        k[i] = arm.length();
        all_v |= arm.vertex_set();
        total += arm.length();
    }
    if (all_v.count() != total)
        return false;
    int edges = 0;
    for (int v : all_v)
        edges += (g.neighbours(v) & all_v).count();
    if (edges / 2 != total - 1)
        return false;
    for (std::size_t i = 0; i < 3; ++i)
        if (k[i] < 2 || k[i] + k[(i + 1) % 3] < ell - 2)
            return false;
    return k[0] + k[1] + k[2] <= 2 * ell - 6;
}

auto is_long_theta(const Graph & g, const Theta & t, int ell) -> bool
{
    if (t.u < 0 || t.v < 0 || t.u >= g.order() || t.v >= g.order() || t.u == t.v || g.adjacent(t.u, t.v))
        return false;
    for (const auto & p : t.paths)
        if (p.vertices.empty() || p.front() != t.u || p.back() != t.v || !is_induced_path(g, p.vertices))
            return false;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const auto & a = t.paths[i];
            const auto & b = t.paths[j];
            if (!is_anticomplete(g, a.interior(), b.interior()))
                return false;
            if (a.length() + b.length() < ell)
                return false;
        }
    return true;
}

auto derive_even_hole(const Graph & g, const Theta & t, int ell) -> Hole
{
    if (!is_long_theta(g, t, ell))
        throw InvariantViolation("derive_even_hole: not a long theta");
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const auto & a = t.paths[i];
            const auto & b = t.paths[j];
            if ((a.length() + b.length()) % 2 == 0) {
                Hole h{join_paths(a, b)};
                if (!is_long_even_hole(g, h.cycle, ell))
                    throw InvariantViolation("derive_even_hole: theta hole invalid");
                return h;
            }
        }
    throw InvariantViolation("derive_even_hole: theta without equal parities");
}

} // namespace longhole
