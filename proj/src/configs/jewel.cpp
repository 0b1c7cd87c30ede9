#include "longhole/cancellation.hpp"
#include "longhole/configs.hpp"
#include "longhole/errors.hpp"

#include <algorithm>

namespace longhole {

auto Jewel::order() const -> int { return static_cast<int>(std::max(q1.vertices.size(), q2.vertices.size())); }

auto detect_long_jewel(const Graph & g, int ell, int k) -> std::optional<Jewel>
{
    require_even_ell(ell);
    if (k < 0)
        throw InputError("jewel order bound must be nonnegative");
    const VertexSet all = g.vertices();
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.adjacent(u, v))
                continue;
            std::vector<InducedPath> even, odd;
            enumerate_induced_paths(g, u, v, k - 1, [&](const std::vector<int> & p) {
                (p.size() % 2 == 1 ? even : odd).push_back(InducedPath{p});
                return true;
            });
            for (const auto & qe : even)
                for (const auto & qo : odd) {
                    checkpoint();
                    const int shorter = std::min(qe.length(), qo.length());
                    const int r_len = std::max(0, ell - shorter - 2);
                    VertexSet q_minus_u = (qe.vertex_set() | qo.vertex_set()) - VertexSet{u};
                    VertexSet r_room = (all - g.closed_neighbours_of(q_minus_u)) | VertexSet{u};
                    std::optional<Jewel> hit;
                    enumerate_induced_paths_from(g, u, r_len, r_room, [&](const std::vector<int> & r) {
                        if (static_cast<int>(r.size()) != r_len + 1)
                            return true;
                        const int w = r.back();
                        VertexSet base = q_minus_u | VertexSet::of(r) | VertexSet{u};
                        base.erase(v);
                        base.erase(w);
                        VertexSet room = all - g.closed_neighbours_of(base);
                        room.insert(w);
                        room.insert(v);
                        auto s = shortest_path(g, w, v, room);
                        if (!s)
                            return true;
                        InducedPath p{r};
                        p.vertices.insert(p.vertices.end(), s->begin() + 1, s->end());
                        hit = Jewel{qe, qo, p};
                        return false;
                    });
                    if (hit) {
                        if (!is_long_jewel(g, *hit, ell))
                            throw InvariantViolation("assembled jewel fails its definition");
                        return hit;
                    }
                }
        }
    return std::nullopt;
}

auto is_long_jewel(const Graph & g, const Jewel & j, int ell) -> bool
{
    const auto & [q1, q2, p] = j;
    if (q1.vertices.empty() || q2.vertices.empty() || p.vertices.empty())
        return false;
    const int u = p.front(), v = p.back();
    for (const auto * q : {&q1, &q2})
        if (q->front() != u || q->back() != v || !is_induced_path(g, q->vertices))
            return false;
    if (!is_induced_path(g, p.vertices) || u == v)
        return false;
    if ((q1.length() - q2.length()) % 2 == 0)
        return false;
    if (p.length() < ell - std::min(q1.length(), q2.length()))
        return false;
    return is_anticomplete(g, p.interior(), q1.interior() | q2.interior());
}

auto join_paths(const InducedPath & a, const InducedPath & b) -> std::vector<int>
{
    std::vector<int> c = a.vertices;
    for (auto it = b.vertices.rbegin() + 1; it + 1 < b.vertices.rend(); ++it)
        c.push_back(*it);
    return c;
}

auto derive_even_hole(const Graph & g, const Jewel & j, int ell) -> Hole
{
    if (!is_long_jewel(g, j, ell))
        throw InvariantViolation("derive_even_hole: not a long jewel");
    const auto & q = (j.p.length() + j.q1.length()) % 2 == 0 ? j.q1 : j.q2;
    Hole h{join_paths(j.p, q)};
    if (!is_long_even_hole(g, h.cycle, ell))
        throw InvariantViolation("derive_even_hole: jewel hole invalid");
    return h;
}

} // namespace longhole
