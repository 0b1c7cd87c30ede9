#include "longhole/errors.hpp"
#include "longhole/oracle.hpp"

#include <algorithm>
#include <map>

namespace longhole::oracle {

auto Prism::vertex_set() const -> VertexSet
{
    VertexSet s;
    for (const auto & p : paths)
        s |= VertexSet::of(p);
    return s;
}

auto Prism::size() const -> int { return vertex_set().count(); }

namespace {

    auto interior(const std::vector<int> & p) -> VertexSet
    {
        VertexSet s;
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            s.insert(p[i]);
        return s;
    }

    auto len(const std::vector<int> & p) -> int { return static_cast<int>(p.size()) - 1; }

    // Anticomplete in the literal sense: disjoint and no edge between them.
    auto apart(const Graph & g, const VertexSet & a, const VertexSet & b) -> bool
    {
        if (a.intersects(b))
            return false;
        for (int v : a)
            if (g.neighbours(v).intersects(b))
                return false;
        return true;
    }

    auto sorted_union(std::initializer_list<const std::vector<int> *> parts) -> std::vector<int>
    {
        VertexSet s;
        for (const auto * p : parts)
            s |= VertexSet::of(*p);
        return s.to_vector();
    }

    class PathCache {
      public:
        explicit PathCache(const Graph & g) : g_(g) {}

        auto between(int u, int v) -> const std::vector<std::vector<int>> &
        {
            auto key = std::make_pair(u, v);
            auto it = cache_.find(key);
            if (it == cache_.end())
                it = cache_.emplace(key, induced_paths_between(g_, u, v, g_.order())).first;
            return it->second;
        }

      private:
        const Graph & g_;
        std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache_;
    };

    auto jewel(const Graph & g, int ell, int k, Report & r) -> void
    {
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                const auto paths = induced_paths_between(g, u, v, g.order());
                std::vector<const std::vector<int> *> short_paths;
                for (const auto & p : paths)
                    if (static_cast<int>(p.size()) <= k)
                        short_paths.push_back(&p);
                for (std::size_t i = 0; i < short_paths.size(); ++i)
                    for (std::size_t j = i + 1; j < short_paths.size(); ++j) {
                        const auto & q1 = *short_paths[i];
                        const auto & q2 = *short_paths[j];
                        if ((len(q1) + len(q2)) % 2 == 0)
                            continue;
                        const VertexSet qi = interior(q1) | interior(q2);
                        const int need = ell - std::min(len(q1), len(q2));
                        for (const auto & p : paths) {
                            ++r.enumeration_count;
                            if (len(p) >= need && apart(g, interior(p), qi)) {
                                r.verdict = true;
                                r.witness = sorted_union({&q1, &q2, &p});
                                return;
                            }
                        }
                    }
            }
    }

    auto theta(const Graph & g, int ell, Report & r) -> void
    {
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v) {
                if (g.adjacent(u, v))
                    continue;
                const auto paths = induced_paths_between(g, u, v, g.order());
                const std::size_t m = paths.size();
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = i + 1; j < m; ++j) {
                        if (len(paths[i]) + len(paths[j]) < ell ||
                            !apart(g, interior(paths[i]), interior(paths[j])))
                            continue;
                        for (std::size_t k = j + 1; k < m; ++k) {
                            ++r.enumeration_count;
                            if (len(paths[i]) + len(paths[k]) < ell || len(paths[j]) + len(paths[k]) < ell)
                                continue;
                            if (apart(g, interior(paths[i]), interior(paths[k])) &&
                                apart(g, interior(paths[j]), interior(paths[k]))) {
                                r.verdict = true;
                                r.witness = sorted_union({&paths[i], &paths[j], &paths[k]});
                                return;
                            }
                        }
                    }
            }
    }

    auto ban_the_bomb(const Graph & g, int ell, Report & r) -> void
    {
        PathCache cache(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v1 : g.neighbours(u))
                for (int v2 : g.neighbours(u)) {
                    if (v2 <= v1 || g.adjacent(v1, v2))
                        continue;
                    for (int w : (g.neighbours(v1) & g.neighbours(v2)) - VertexSet{u})
                        for (int x : g.neighbours(u)) {
                            if (x == v1 || x == v2 || x == w || g.adjacent(x, v1) || g.adjacent(x, v2) ||
                                g.adjacent(x, w))
                                continue;
                            for (const auto & p1 : cache.between(x, v1)) {
                                if (len(p1) < 2 || !apart(g, interior(p1), VertexSet{u, w, v2}))
                                    continue;
                                for (const auto & p2 : cache.between(x, v2)) {
                                    ++r.enumeration_count;
                                    if (len(p2) < 2 || !apart(g, interior(p2), VertexSet{u, w, v1}))
                                        continue;
                                    if (!apart(g, VertexSet::of(p1) - VertexSet{x}, VertexSet::of(p2) - VertexSet{x}))
                                        continue;
                                    if (len(p1) + 2 < ell || len(p2) + 2 < ell || len(p1) + len(p2) + 2 < ell)
                                        continue;
                                    r.verdict = true;
                                    std::vector<int> core{u, v1, w, v2};
                                    r.witness = sorted_union({&core, &p1, &p2});
                                    return;
                                }
                            }
                        }
                }
    }

    auto triangles(const Graph & g) -> std::vector<std::array<int, 3>>
    {
        std::vector<std::array<int, 3>> out;
        for (int a = 0; a < g.order(); ++a)
            for (int b = a + 1; b < g.order(); ++b)
                for (int c = b + 1; c < g.order(); ++c)
                    if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c))
                        out.push_back({a, b, c});
        return out;
    }

    auto hole_through(const std::vector<int> & p, const std::vector<int> & q) -> std::vector<int>
    {
        std::vector<int> c = p;
        c.insert(c.end(), q.rbegin(), q.rend());
        return c;
    }

    // Induced paths from v with exactly n edges.
    auto paths_from(const Graph & g, int v, int n) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out;
        std::vector<int> path{v};
        VertexSet blocked{v};
        std::function<void()> walk = [&] {
            if (len(path) == n) {
                out.push_back(path);
                return;
            }
            const int last = path.back();
            for (int w : g.neighbours(last) - blocked) {
                const VertexSet saved = blocked;
                blocked |= g.neighbours(last);
                blocked.insert(w);
                path.push_back(w);
                walk();
                path.pop_back();
                blocked = saved;
            }
        };
        walk();
        return out;
    }

    // Matchings of the bases: b index for each a index. A shared vertex must be matched to itself.
    auto matchings(const std::array<int, 3> & a, const std::array<int, 3> & b) -> std::vector<std::array<int, 3>>
    {
        std::vector<std::array<int, 3>> out;
        std::array<int, 3> perm{0, 1, 2};
        do {
            bool ok = true;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    if (a[i] == b[j] && static_cast<std::size_t>(perm[i]) != j)
                        ok = false;
            if (ok)
                out.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return out;
    }

    auto frame(const Graph & g, int ell, Report & r) -> void
    {
        const int half = ell / 2 - 1;
        const auto tris = triangles(g);
        for (std::size_t ti = 0; ti < tris.size(); ++ti)
            for (std::size_t tj = ti + 1; tj < tris.size(); ++tj) {
                const auto & a = tris[ti];
                const auto & b = tris[tj];
                if ((VertexSet::of(a) & VertexSet::of(b)).count() > 1)
                    continue;
                for (const auto & perm : matchings(a, b)) {
                    // parts[i]: list of (vertex list, edge count) options.
                    std::array<std::vector<std::pair<std::vector<int>, int>>, 3> options;
                    std::array<std::vector<bool>, 3> is_path;
                    for (std::size_t i = 0; i < 3; ++i) {
                        const int ai = a[i], bi = b[static_cast<std::size_t>(perm[i])];
                        if (ai == bi) {
                            options[i].push_back({{ai}, 0});
                            is_path[i].push_back(true);
                            continue;
                        }
                        for (const auto & p : induced_paths_between(g, ai, bi, ell - 1)) {
                            options[i].push_back({p, len(p)});
                            is_path[i].push_back(true);
                        }
                        const auto sa = paths_from(g, ai, half);
                        const auto sb = paths_from(g, bi, half);
                        for (const auto & x : sa)
                            for (const auto & y : sb) {
                                std::vector<int> both = x;
                                both.insert(both.end(), y.begin(), y.end());
                                options[i].push_back({both, 2 * half});
                                is_path[i].push_back(false);
                            }
                    }
                    const VertexSet bases = VertexSet::of(a) | VertexSet::of(b);
                    for (std::size_t o0 = 0; o0 < options[0].size(); ++o0)
                        for (std::size_t o1 = 0; o1 < options[1].size(); ++o1)
                            for (std::size_t o2 = 0; o2 < options[2].size(); ++o2) {
                                ++r.enumeration_count;
                                const std::array<std::size_t, 3> pick{o0, o1, o2};
                                int paths = 0, total = 0, edges = 0;
                                VertexSet all;
                                for (std::size_t i = 0; i < 3; ++i) {
                                    const auto & [vs, e] = options[i][pick[i]];
                                    paths += is_path[i][pick[i]] ? 1 : 0;
                                    total += static_cast<int>(vs.size());
                                    edges += e;
                                    all |= VertexSet::of(vs);
                                }
                                if (paths > 1 || all.count() != total || !bases.is_subset_of(all))
                                    continue;
                                int induced = 0;
                                for (int v : all)
                                    induced += (g.neighbours(v) & all).count();
                                if (induced / 2 != edges + 6)
                                    continue;
                                r.verdict = true;
                                r.witness = all.to_vector();
                                return;
                            }
                }
            }
    }

} // namespace

void for_each_long_near_prism(const Graph & g, int ell, const std::function<bool(const Prism &)> & visit)
{
    PathCache cache(g);
    const auto tris = triangles(g);
    for (std::size_t ti = 0; ti < tris.size(); ++ti)
        for (std::size_t tj = ti + 1; tj < tris.size(); ++tj) {
            const auto & a = tris[ti];
            const auto & b = tris[tj];
            if ((VertexSet::of(a) & VertexSet::of(b)).count() > 1)
                continue;
            for (const auto & perm : matchings(a, b)) {
                std::array<int, 3> bb{};
                for (std::size_t i = 0; i < 3; ++i)
                    bb[i] = b[static_cast<std::size_t>(perm[i])];
                const auto & p0s = cache.between(a[0], bb[0]);
                const auto & p1s = cache.between(a[1], bb[1]);
                const auto & p2s = cache.between(a[2], bb[2]);
                auto long_hole = [&](const std::vector<int> & p, const std::vector<int> & q) {
                    auto c = hole_through(p, q);
                    return static_cast<int>(c.size()) >= ell && is_hole(g, c);
                };
                for (const auto & p0 : p0s)
                    for (const auto & p1 : p1s) {
                        if (!long_hole(p0, p1))
                            continue;
                        for (const auto & p2 : p2s) {
                            if (!long_hole(p0, p2) || !long_hole(p1, p2))
                                continue;
                            Prism k;
                            k.a = a;
                            k.b = bb;
                            k.paths = {p0, p1, p2};
                            if (!visit(k))
                                return;
                        }
                    }
            }
        }
}

auto configuration(const Graph & g, int ell, Kind kind, const Params & params) -> Report
{
    Report r;
    switch (kind) {
    case Kind::jewel:
        jewel(g, ell, params.k, r);
        break;
    case Kind::theta:
        theta(g, ell, r);
        break;
    case Kind::ban_the_bomb:
        ban_the_bomb(g, ell, r);
        break;
    case Kind::near_prism:
        for_each_long_near_prism(g, ell, [&](const Prism & k) {
            r.verdict = true;
            r.witness = k.vertex_set().to_vector();
            return false;
        });
        break;
    case Kind::frame:
        frame(g, ell, r);
        break;
    }
    return r;
}

auto three_in_a_tree(const Graph & g, int v1, int v2, int v3) -> Report
{
    const int n = g.order();
    for (int v : {v1, v2, v3})
        if (v < 0 || v >= n)
            throw InputError("oracle three_in_a_tree: terminal out of range");
    if (v1 == v2 || v2 == v3 || v1 == v3)
        throw InputError("oracle three_in_a_tree: terminals must be distinct");
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != v1 && v != v2 && v != v3)
            rest.push_back(v);
    if (rest.size() > 24)
        throw InputError("oracle three_in_a_tree: graph too large for subset search");
    Report r;
    const std::uint32_t limit = 1U << rest.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        ++r.enumeration_count;
        VertexSet s{v1, v2, v3};
        for (std::size_t i = 0; i < rest.size(); ++i)
            if ((mask >> i) & 1U)
                s.insert(rest[i]);
        int edges = 0;
        for (int v : s)
            edges += (g.neighbours(v) & s).count();
        if (edges / 2 != s.count() - 1)
            continue;
        // A forest with |S|-1 edges is connected exactly when it is acyclic; check reachability.
        VertexSet seen{v1};
        VertexSet frontier{v1};
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier)
                next |= g.neighbours(v) & s;
            frontier = next - seen;
            seen |= next;
        }
        if (seen == s) {
            r.verdict = true;
            r.witness = s.to_vector();
            return r;
        }
    }
    return r;
}

auto is_prospect(const Graph & g, int ell) -> bool
{
    return !bounded_long_even_hole(g, ell, 2 * ell).verdict &&
           !configuration(g, ell, Kind::jewel, Params{ell + 1}).verdict &&
           !configuration(g, ell, Kind::theta).verdict && !configuration(g, ell, Kind::ban_the_bomb).verdict;
}

auto is_candidate(const Graph & g, int ell) -> bool
{
    return is_prospect(g, ell) && !configuration(g, ell, Kind::near_prism).verdict;
}

} // namespace longhole::oracle
