#include "longhole/audit.hpp"
#include "longhole/even_hole.hpp"
#include "longhole/near_prism.hpp"
#include "longhole/oracle.hpp"

#include <algorithm>
#include <set>

namespace longhole {

namespace {

    auto three_independent(const Graph & g, const VertexSet & nb) -> bool
    {
        for (int u : nb)
            for (int v : nb - g.closed_neighbours(u))
                if (v > u && !(nb - g.closed_neighbours(u) - g.closed_neighbours(v)).empty())
                    return true;
        return false;
    }

    auto to_near_prism(const oracle::Prism & p) -> NearPrism
    {
        NearPrism k;
        k.a = p.a;
        k.b = p.b;
        for (std::size_t i = 0; i < 3; ++i)
            k.paths[i].vertices = p.paths[i];
        return k;
    }

    auto is_tidy(const Graph & g, const NearPrism & k, int ell) -> bool
    {
        auto f = frame_of(k, ell);
        if (!f)
            return false;
        const VertexSet outside = g.vertices() - k.vertex_set();
        return !g.neighbours_of(f->interior()).intersects(outside);
    }

    void audit_prism(const Graph & g, const NearPrism & k, AuditReport & r)
    {
        const VertexSet kv = k.vertex_set();
        VertexSet majors;
        for (int x : g.vertices() - kv)
            if (is_K_major(g, k, x))
                majors.insert(x);

        for (int x : majors) {
            ++r.checks;
            const VertexSet nb = g.neighbours(x) & kv;
            int touched = 0;
            for (const auto & p : k.paths)
                touched += nb.intersects(p.vertex_set()) ? 1 : 0;
            if (touched < 2)
                r.violations.push_back({"2paths", {x}, "major vertex sees one constituent path"});
            if (!three_independent(g, nb))
                r.violations.push_back({"3pairwisenonadjacent", {x}, "no three pairwise nonadjacent neighbours"});
        }

        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j)
                    continue;
                const int other = 3 - i - j;
                const auto & pi = k.paths[static_cast<std::size_t>(i)];
                const auto & pj = k.paths[static_cast<std::size_t>(j)];
                const int max_edges = (1 + std::min(pi.length(), pj.length())) / 2;
                if (max_edges < 1)
                    continue;
                const VertexSet alive = g.vertices() -
                                        g.closed_neighbours_of(k.paths[static_cast<std::size_t>(other)].vertex_set()) -
                                        majors;
                const VertexSet targets = pj.vertex_set();
                for (int s : pi.vertex_set() & alive)
                    enumerate_induced_paths_from(g, s, max_edges, alive, [&](const std::vector<int> & q) {
                        ++r.checks;
                        if (q.size() >= 2 && targets.contains(q.back()))
                            r.violations.push_back({"prismjump", q, "short jump between constituent paths"});
                        return true;
                    });
            }
    }

    auto cycle_distance(int i, int j, int n) -> int
    {
        const int d = std::abs(i - j);
        return std::min(d, n - d);
    }

    void audit_hole(const Graph & g, const Hole & c, AuditReport & r)
    {
        const VertexSet cv = c.vertex_set();
        const int n = c.length();
        VertexSet majors;
        for (int x : g.vertices() - cv)
            if (is_C_major(g, c, x))
                majors.insert(x);

        for (int x : majors) {
            ++r.checks;
            const VertexSet nb = g.neighbours(x) & cv;
            if (!three_independent(g, nb))
                r.violations.push_back({"triad", {x}, "no three pairwise nonadjacent neighbours on the hole"});
            for (int i = 0; i < n; ++i) {
                VertexSet window{c.cycle[static_cast<std::size_t>(i)], c.cycle[static_cast<std::size_t>((i + 1) % n)],
                                 c.cycle[static_cast<std::size_t>((i + 2) % n)]};
                if ((nb - window).count() < 2) {
                    r.violations.push_back({"triad", {x}, "fewer than two neighbours off a three-vertex path"});
                    break;
                }
            }
        }

        const VertexSet alive = g.vertices() - majors;
        for (int i = 0; i < n; ++i)
            for (int j = i + 2; j < n; ++j) {
                const int dc = cycle_distance(i, j, n);
                if (dc < 2)
                    continue;
                ++r.checks;
                const int u = c.cycle[static_cast<std::size_t>(i)];
                const int v = c.cycle[static_cast<std::size_t>(j)];
                auto d = distance(g, u, v, alive);
                if (d && *d < dc) {
                    auto p = shortest_path(g, u, v, alive);
                    r.violations.push_back({"shortcuts", p ? *p : std::vector<int>{u, v}, "path shorter than the hole"});
                }
            }
    }

} // namespace

auto audit_lemmas(const Graph & g, const EdgeOrder & order, int ell, int max_objects) -> AuditReport
{
    require_even_ell(ell);
    AuditReport r;
    r.prospect = oracle::is_prospect(g, ell);
    if (!r.prospect)
        return r;

    std::vector<oracle::Prism> prisms;
    oracle::for_each_long_near_prism(g, ell, [&](const oracle::Prism & p) {
        prisms.push_back(p);
        return true;
    });
    r.candidate = prisms.empty();

    if (!prisms.empty()) {
        int best = g.order() + 1;
        for (const auto & p : prisms)
            best = std::min(best, p.size());
        std::set<std::vector<int>> seen;
        for (const auto & p : prisms) {
            if (r.prisms_audited >= max_objects)
                break;
            if (p.size() != best)
                continue;
            auto k = to_near_prism(p);
            if (!is_tidy(g, k, ell) || !seen.insert(p.vertex_set().to_vector()).second)
                continue;
            ++r.prisms_audited;
            audit_prism(g, k, r);
        }
        return r;
    }

    std::vector<std::vector<int>> shortest;
    int best = g.order() + 1;
    oracle::for_each_induced_cycle(g, [&](const std::vector<int> & c) {
        const int len = static_cast<int>(c.size());
        if (len % 2 != 0 || len < ell || len > best)
            return true;
        if (len < best) {
            best = len;
            shortest.clear();
        }
        shortest.push_back(c);
        return true;
    });
    auto ranks = [&](const std::vector<int> & c) {
        std::vector<int> out;
        for (std::size_t i = 0; i < c.size(); ++i)
            out.push_back(order.rank(c[i], c[(i + 1) % c.size()]));
        return out;
    };
    std::stable_sort(shortest.begin(), shortest.end(),
                     [&](const auto & a, const auto & b) { return oracle::lighter(ranks(a), ranks(b)); });
    for (const auto & c : shortest) {
        if (r.holes_audited >= max_objects)
            break;
        ++r.holes_audited;
        audit_hole(g, Hole{c}, r);
    }
    return r;
}

} // namespace longhole
