#include "longhole/errors.hpp"
#include "longhole/mutation.hpp"
#include "longhole/near_prism.hpp"

#include <algorithm>

namespace longhole {

auto NearPrism::vertex_set() const -> VertexSet
{
    VertexSet s;
    for (const auto & p : paths)
        s |= p.vertex_set();
    return s;
}

auto NearPrism::path_of(int v) const -> int
{
    for (int i = 0; i < 3; ++i)
        if (std::ranges::find(paths[static_cast<std::size_t>(i)].vertices, v) !=
            paths[static_cast<std::size_t>(i)].vertices.end())
            return i;
    return -1;
}

namespace {

    auto is_triangle(const Graph & g, const std::array<int, 3> & t) -> bool
    {
        for (int v : t)
            if (v < 0 || v >= g.order())
                return false;
        return t[0] != t[1] && t[1] != t[2] && t[0] != t[2] && g.adjacent(t[0], t[1]) && g.adjacent(t[1], t[2]) &&
               g.adjacent(t[0], t[2]);
    }

    auto edges_inside(const Graph & g, const VertexSet & s) -> int
    {
        int e = 0;
        for (int v : s)
            e += (g.neighbours(v) & s).count();
        return e / 2;
    }

} // namespace

auto is_near_prism(const Graph & g, const NearPrism & k) -> bool
{
    if (!is_triangle(g, k.a) || !is_triangle(g, k.b))
        return false;
    int shared = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (k.a[static_cast<std::size_t>(i)] == k.b[static_cast<std::size_t>(j)]) {
                if (i != j)
                    return false;
                ++shared;
            }
    if (shared > 1)
        return false;
    int total = 0;
    int path_edges = 0;
    VertexSet all;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto & p = k.paths[i];
        if (p.vertices.empty() || p.front() != k.a[i] || p.back() != k.b[i] || !is_induced_path(g, p.vertices))
            return false;
        total += static_cast<int>(p.vertices.size());
        path_edges += p.length();
        all |= p.vertex_set();
    }
    if (all.count() != total)
        return false;
    return edges_inside(g, all) == path_edges + 6;
}

auto near_prism_hole(const NearPrism & k, int i, int j) -> std::vector<int>
{
    std::vector<int> c = k.paths[static_cast<std::size_t>(i)].vertices;
    const auto & pj = k.paths[static_cast<std::size_t>(j)].vertices;
    c.insert(c.end(), pj.rbegin(), pj.rend());
    return c;
}

auto is_long_near_prism(const Graph & g, const NearPrism & k, int ell) -> bool
{
    if (!is_near_prism(g, k))
        return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (static_cast<int>(near_prism_hole(k, i, j).size()) < ell)
                return false;
    return true;
}

auto derive_even_hole(const Graph & g, const NearPrism & k, int ell) -> Hole
{
    if (!is_long_near_prism(g, k, ell))
        throw InvariantViolation("derive_even_hole: not a long near-prism");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            auto c = near_prism_hole(k, i, j);
            if (c.size() % 2 == 0) {
                if (!is_long_even_hole(g, c, ell))
                    throw InvariantViolation("derive_even_hole: near-prism hole invalid");
                return Hole{c};
            }
        }
    throw InvariantViolation("derive_even_hole: near-prism without an even hole");
}

auto is_K_major(const Graph & g, const NearPrism & k, int v) -> bool
{
    const VertexSet kv = k.vertex_set();
    if (v < 0 || v >= g.order())
        throw InputError("is_K_major: vertex out of range");
    if (kv.contains(v))
        throw InputError("is_K_major: vertex lies on the near-prism");
    const VertexSet nb = g.neighbours(v) & kv;
    // A three-vertex path u-w-z of K covers nb iff nb lies in N_K[w] with at most two vertices
    // besides w; every vertex of K has at least two K-neighbours.
    const int spare = kMutant == 5 ? 1 : 2;
    for (int w : kv) {
        VertexSet cover = g.closed_neighbours(w) & kv;
        if (nb.is_subset_of(cover) && (nb - VertexSet{w}).count() <= spare)
            return false;
    }
    return true;
}

auto MajorAttachments::A_union(std::initializer_list<int> idx) const -> VertexSet
{
    VertexSet s;
    for (int i : idx)
        s |= A[static_cast<std::size_t>(i)];
    return s;
}

auto major_attachments(const Graph & g, const NearPrism & k, int x) -> MajorAttachments
{
    if (!is_K_major(g, k, x))
        throw InvariantViolation("major_attachments: vertex is not K-major");
    MajorAttachments m;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto & p = k.paths[i].vertices;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (g.adjacent(x, p[j])) {
                if (m.alpha[i] < 0) {
                    m.alpha[i] = p[j];
                    m.A[i] = VertexSet::of(std::vector<int>(p.begin(), p.begin() + static_cast<long>(j) + 1));
                }
                m.beta[i] = p[j];
            }
        if (m.alpha[i] < 0)
            m.A[i] = VertexSet::of(p);
    }
    m.L = m.alpha[0] >= 0 ? m.A[0] : (k.paths[0].vertex_set() | m.A[1]);
    return m;
}

auto truncated_subpath(const NearPrism & k, const Frame & f, int v, int m, int n) -> InducedPath
{
    const int i = k.path_of(v);
    if (i < 0)
        throw InputError("truncated_subpath: vertex not on the near-prism");
    const VertexSet fstar = f.interior();
    if (fstar.contains(v))
        throw InputError("truncated_subpath: vertex lies in the frame interior");
    const auto & p = k.paths[static_cast<std::size_t>(i)].vertices;
    const auto pos = static_cast<int>(std::ranges::find(p, v) - p.begin());
    int lo = pos;
    while (pos - lo < m && lo > 0) {
        --lo;
        if (fstar.contains(p[static_cast<std::size_t>(lo)]))
            break;
    }
    int hi = pos;
    const int last = static_cast<int>(p.size()) - 1;
    while (hi - pos < n && hi < last) {
        ++hi;
        if (fstar.contains(p[static_cast<std::size_t>(hi)]))
            break;
    }
    return InducedPath{std::vector<int>(p.begin() + lo, p.begin() + hi + 1)};
}

auto frame_of(const NearPrism & k, int ell) -> std::optional<Frame>
{
    const int half = ell / 2 - 1;
    Frame f;
    f.a = k.a;
    f.b = k.b;
    int path_parts = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto & p = k.paths[i].vertices;
        if (k.paths[i].length() <= ell - 1) {
            f.a_side[i] = p;
            ++path_parts;
        } else {
            f.a_side[i].assign(p.begin(), p.begin() + half + 1);
            f.b_side[i].assign(p.rbegin(), p.rbegin() + half + 1);
        }
    }
    if (path_parts > 1)
        return std::nullopt;
    return f;
}

} // namespace longhole
