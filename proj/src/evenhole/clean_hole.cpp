#include "longhole/cancellation.hpp"
#include "longhole/errors.hpp"
#include "longhole/even_hole.hpp"
#include "longhole/lightest_path.hpp"
#include "longhole/mutation.hpp"

namespace longhole {

auto is_C_major(const Graph & g, const Hole & c, int v) -> bool
{
    if (v < 0 || v >= g.order())
        throw InputError("is_C_major: vertex out of range");
    const VertexSet cv = c.vertex_set();
    if (cv.contains(v))
        throw InputError("is_C_major: vertex lies on the hole");
    const VertexSet nb = g.neighbours(v) & cv;
    const auto k = c.cycle.size();
    const std::size_t window = kMutant == 1 ? 2 : 3;
    for (std::size_t i = 0; i < k; ++i) {
        VertexSet w;
        for (std::size_t j = 0; j < window; ++j)
            w.insert(c.cycle[(i + j) % k]);
        if (nb.is_subset_of(w))
            return false;
    }
    return true;
}

auto detect_clean_lightest_long_even_hole(const Graph & g, const EdgeOrder & order, int ell, const VertexSet & alive)
    -> std::optional<Hole>
{
    require_even_ell(ell);
    const auto vs = alive.to_vector();
    const std::size_t n = vs.size();
    std::vector<LightestPathTree> trees;
    trees.reserve(n);
    for (int v : vs) {
        checkpoint();
        trees.push_back(lightest_path_tree(g, order, v, alive));
    }
    // paths[i][j]: lightest path from vs[i] to vs[j], j > i.
    std::vector<std::vector<std::vector<int>>> paths(n, std::vector<std::vector<int>>(n));
    std::vector<std::vector<VertexSet>> sets(n, std::vector<VertexSet>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            paths[i][j] = trees[i].path_to(vs[j]);
            sets[i][j] = VertexSet::of(paths[i][j]);
        }
    auto len = [&](std::size_t i, std::size_t j) { return static_cast<int>(paths[i][j].size()) - 1; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (paths[i][j].empty() || len(i, j) < 2)
                continue;
            checkpoint();
            for (std::size_t k = j + 1; k < n; ++k) {
                if (paths[j][k].empty() || paths[i][k].empty() || len(j, k) < 2 || len(i, k) < 2)
                    continue;
                const int total = len(i, j) + len(j, k) + len(i, k);
                if (total < ell || total % 2 != 0)
                    continue;
                VertexSet u = sets[i][j] | sets[j][k] | sets[i][k];
                if (u.count() != total)
                    continue;
                bool hole = true;
                for (int v : u)
                    if ((g.neighbours(v) & u).count() != 2) {
                        hole = false;
                        break;
                    }
                if (!hole)
                    continue;
                std::vector<int> c = paths[i][j];
                c.insert(c.end(), paths[j][k].begin() + 1, paths[j][k].end());
                c.insert(c.end(), paths[i][k].rbegin() + 1, paths[i][k].rend() - 1);
                if (!is_long_even_hole(g, c, ell))
                    throw InvariantViolation("clean hole detector assembled an invalid hole");
                return Hole{c};
            }
        }
    return std::nullopt;
}

auto detect_clean_lightest_long_even_hole(const Graph & g, const EdgeOrder & order, int ell) -> std::optional<Hole>
{
    return detect_clean_lightest_long_even_hole(g, order, ell, g.vertices());
}

} // namespace longhole
