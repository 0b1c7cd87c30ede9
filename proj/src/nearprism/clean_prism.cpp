#include "longhole/cancellation.hpp"
#include "longhole/near_prism.hpp"

namespace longhole {

auto detect_clean_lightest_near_prism(const Graph & g, const EdgeOrder & order, const Frame & f, int ell,
                                      const VertexSet & alive) -> std::optional<NearPrism>
{
    checkpoint();
    VertexSet left = alive - frame_shadow(g, f);
    NearPrism k;
    k.a = f.a;
    k.b = f.b;
    for (int i = 0; i < 3; ++i) {
        const auto si = static_cast<std::size_t>(i);
        if (f.is_path(i)) {
            k.paths[si].vertices = f.a_side[si];
            continue;
        }
        auto m = lightest_path(g, order, f.s(i), f.t(i), left);
        if (!m)
            return std::nullopt;
        left -= g.closed_neighbours_of(m->vertex_set());
        auto & p = k.paths[si].vertices;
        p = f.a_side[si];
        p.insert(p.end(), m->vertices.begin() + 1, m->vertices.end());
        const auto & bs = f.b_side[si];
        p.insert(p.end(), bs.rbegin() + 1, bs.rend());
    }
    if (!is_long_near_prism(g, k, ell))
        return std::nullopt;
    return k;
}

auto detect_clean_lightest_near_prism(const Graph & g, const EdgeOrder & order, const Frame & f, int ell)
    -> std::optional<NearPrism>
{
    return detect_clean_lightest_near_prism(g, order, f, ell, g.vertices());
}

} // namespace longhole
