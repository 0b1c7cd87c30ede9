#include "longhole/cancellation.hpp"
#include "longhole/configs.hpp"
#include "longhole/errors.hpp"
#include "longhole/mutation.hpp"

namespace longhole {

namespace {

    auto attaches(int neighbours_on_path) -> bool
    {
        if constexpr (kMutant == 4)
            return neighbours_on_path >= 1;
        return neighbours_on_path == 1;
    }

    // A minimal induced tree through three terminals is an induced v1-v2 path plus a path from
    // v3 whose last vertex is the only one seeing the first path. We enumerate the former and
    // search for the latter by BFS.
    struct TreeSearch {
        const Graph & g;
        const VertexSet & alive;
        int v1, v2, v3;
        std::vector<int> path;
        std::optional<InducedTree> found;

        auto attach(const VertexSet & p) -> bool
        {
            if (p.contains(v3)) {
                found = InducedTree{p, {v1, v2, v3}};
                return true;
            }
            const int direct = (g.neighbours(v3) & p).count();
            if (attaches(direct)) {
                found = InducedTree{p | VertexSet{v3}, {v1, v2, v3}};
                return true;
            }
            if (direct > 0)
                return false;
            VertexSet blocked = g.closed_neighbours_of(p);
            VertexSet open = alive - blocked;
            std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
            VertexSet seen{v3};
            VertexSet frontier{v3};
            while (!frontier.empty()) {
                VertexSet next;
                for (int y : frontier) {
                    for (int z : (g.neighbours(y) & alive) - seen - next) {
                        parent[z] = y;
                        if (!open.contains(z)) {
                            if (p.contains(z) || !attaches((g.neighbours(z) & p).count()))
                                continue;
                            VertexSet t = p;
                            for (int a = z; a != -1; a = parent[a])
                                t.insert(a);
                            found = InducedTree{t, {v1, v2, v3}};
                            return true;
                        }
                        next.insert(z);
                    }
                }
                seen |= next;
                frontier = next;
            }
            return false;
        }

        auto run(const VertexSet & excl) -> bool
        {
            checkpoint();
            const int c = path.back();
            if (c == v2)
                return attach(VertexSet::of(path));
            if (excl.contains(v2))
                return false;
            VertexSet p = VertexSet::of(path);
            if (!p.contains(v3) && (g.neighbours(v3) & p).count() >= 2)
                return false;
            if (!reachable(g, c, (alive - excl) | VertexSet{c}).contains(v2))
                return false;
            VertexSet next_excl = excl | g.closed_neighbours(c);
            for (int w : (g.neighbours(c) & alive) - excl) {
                path.push_back(w);
                if (run(next_excl))
                    return true;
                path.pop_back();
            }
            return false;
        }
    };

} // namespace

auto three_in_a_tree(const Graph & g, int v1, int v2, int v3, const VertexSet & alive) -> std::optional<InducedTree>
{
    for (int v : {v1, v2, v3})
        if (v < 0 || v >= g.order())
            throw InputError("three-in-a-tree terminal out of range");
    if (v1 == v2 || v2 == v3 || v1 == v3)
        throw InputError("three-in-a-tree terminals must be distinct");
    if (!alive.contains(v1) || !alive.contains(v2) || !alive.contains(v3))
        return std::nullopt;
    VertexSet comp = reachable(g, v1, alive);
    if (!comp.contains(v2) || !comp.contains(v3))
        return std::nullopt;
    TreeSearch s{g, comp, v1, v2, v3, {v1}, std::nullopt};
    s.run(VertexSet{v1});
    return s.found;
}

auto three_in_a_tree(const Graph & g, int v1, int v2, int v3) -> std::optional<InducedTree>
{
    return three_in_a_tree(g, v1, v2, v3, g.vertices());
}

auto is_induced_tree(const Graph & g, const InducedTree & t) -> bool
{
    for (int v : t.terminals)
        if (v < 0 || v >= g.order() || !t.vertices.contains(v))
            return false;
    if (t.vertices.empty() || !t.vertices.is_subset_of(g.vertices()))
        return false;
    int edges = 0;
    for (int v : t.vertices)
        edges += (g.neighbours(v) & t.vertices).count();
    edges /= 2;
    return edges == t.vertices.count() - 1 && reachable(g, t.vertices.first(), t.vertices) == t.vertices;
}

} // namespace longhole
