#include "longhole/cancellation.hpp"
#include "longhole/errors.hpp"
#include "longhole/even_hole.hpp"

namespace longhole {

auto stage_name(Stage s) -> std::string_view
{
    switch (s) {
    case Stage::short_hole:
        return "short-hole";
    case Stage::jewel:
        return "jewel";
    case Stage::theta:
        return "theta";
    case Stage::ban_the_bomb:
        return "ban-the-bomb";
    case Stage::near_prism:
        return "near-prism";
    case Stage::clean_hole:
        return "clean-hole";
    case Stage::none:
        return "none";
    }
    return "none";
}

namespace {

    auto checked(const Graph & g, Hole h, int ell) -> Hole
    {
        if (!is_long_even_hole(g, h.cycle, ell))
            throw InvariantViolation("pipeline produced an invalid witness");
        return h;
    }

} // namespace

auto detect_long_even_hole(const Graph & g, const EdgeOrder & order, int ell, const PipelineOptions & options)
    -> PipelineResult
{
    require_even_ell(ell);
    PipelineResult r;
    auto fire = [&](Stage s, Hole h) {
        r.stage = s;
        r.hole = checked(g, std::move(h), ell);
        return r;
    };

    if (auto h = detect_bounded_long_even_hole(g, ell, 2 * ell))
        return fire(Stage::short_hole, *h);
    if (auto j = detect_long_jewel(g, ell, ell + 1)) {
        r.configuration = *j;
        return fire(Stage::jewel, derive_even_hole(g, *j, ell));
    }
    if (auto t = detect_long_theta(g, ell)) {
        r.configuration = *t;
        return fire(Stage::theta, derive_even_hole(g, *t, ell));
    }
    if (auto b = detect_long_ban_the_bomb(g, ell)) {
        r.configuration = *b;
        return fire(Stage::ban_the_bomb, derive_even_hole(g, *b, ell));
    }
    if (options.long_hole_gate && !has_hole_of_length_at_least(g, 2 * ell + 1))
        return r;
    if (auto k = detect_long_near_prism(g, order, ell)) {
        r.configuration = *k;
        return fire(Stage::near_prism, derive_even_hole(g, *k, ell));
    }

    const VertexSet all = g.vertices();
    std::optional<Hole> found = detect_clean_lightest_long_even_hole(g, order, ell, all);
    if (!found)
        for_each_cleaning_set(g, order, ell, [&](const VertexSet & x) {
            found = detect_clean_lightest_long_even_hole(g, order, ell, all - x);
            return !found;
        });
    if (found)
        return fire(Stage::clean_hole, *found);
    return r;
}

auto detect_long_even_hole(const Graph & g, int ell, const PipelineOptions & options) -> PipelineResult
{
    return detect_long_even_hole(g, EdgeOrder::canonical(g), ell, options);
}

} // namespace longhole
