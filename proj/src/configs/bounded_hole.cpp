#include "longhole/cancellation.hpp"
#include "longhole/configs.hpp"
#include "longhole/errors.hpp"
#include "longhole/mutation.hpp"

#include <string>

namespace longhole {

void require_even_ell(int ell)
{
    if (ell < 6 || ell % 2 != 0)
        throw InputError("ell must be even and at least 6, got " + std::to_string(ell));
}

namespace {

    // Chordless cycles rooted at their smallest vertex r, second vertex smaller than the last.
    struct RootedCycleSearch {
        const Graph & g;
        int ell;
        int k;
        int r;
        VertexSet higher;
        std::vector<int> path;
        std::optional<Hole> found;

        // excl: closed neighbourhoods of path vertices other than r and the last vertex, plus r
        // and the last vertex.
        auto extend(const VertexSet & excl) -> bool
        {
            checkpoint();
            const int c = path.back();
            const auto len = static_cast<int>(path.size());
            VertexSet next_excl = excl;
            if (len >= 2)
                next_excl |= g.closed_neighbours(c);
            else
                next_excl.insert(c);
            for (int w : (g.neighbours(c) & higher) - excl) {
                bool closes = len >= 2 && g.adjacent(w, r);
                if (closes && len >= 3 && w > path[1] && (len + 1) % 2 == 0 && len + 1 >= ell) {
                    path.push_back(w);
                    found = Hole{path};
                    return true;
                }
                if (closes && kMutant != 3)
                    continue;
                if (len + 1 >= k)
                    continue;
                path.push_back(w);
                if (extend(next_excl | VertexSet{w}))
                    return true;
                path.pop_back();
            }
            return false;
        }
    };

} // namespace

auto detect_bounded_long_even_hole(const Graph & g, int ell, int k) -> std::optional<Hole>
{
    require_even_ell(ell);
    if (k < ell)
        throw InputError("bounded hole search needs k >= ell");
    for (int r = 0; r < g.order(); ++r) {
        VertexSet higher = g.vertices() - VertexSet::prefix(r + 1);
        RootedCycleSearch s{g, ell, k, r, higher, {r}, std::nullopt};
        if (s.extend(VertexSet{r}))
            return s.found;
    }
    return std::nullopt;
}

auto has_hole_of_length_at_least(const Graph & g, int k) -> bool
{
    if (k < 4)
        k = 4;
    // A hole of length >= k contains an induced path P with k-2 edges whose ends are joined
    // through vertices outside N[P*]; conversely a shortest such connection closes a hole.
    bool found = false;
    const VertexSet all = g.vertices();
    enumerate_induced_paths(g, k - 2, [&](const std::vector<int> & p) {
        if (static_cast<int>(p.size()) != k - 1)
            return true;
        InducedPath ip{p};
        VertexSet allowed = all - g.closed_neighbours_of(ip.interior());
        allowed.insert(p.front());
        allowed.insert(p.back());
        if (distance(g, p.front(), p.back(), allowed)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace longhole
