#include "longhole/oracle.hpp"

#include <algorithm>

namespace longhole::oracle {

namespace {

    struct CycleSearch {
        const Graph & g;
        const std::function<bool(const std::vector<int> &)> & visit;
        std::vector<int> path;
        VertexSet on_path;
        bool stopped = false;

        void extend()
        {
            const int root = path.front();
            const int last = path.back();
            // Vertices adjacent to something strictly inside the path would add a chord.
            VertexSet inner_nb;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                inner_nb |= g.neighbours(path[i]);
            for (int v : g.neighbours(last)) {
                if (stopped)
                    return;
                if (v <= root || on_path.contains(v) || inner_nb.contains(v))
                    continue;
                const bool closes = path.size() >= 2 && g.adjacent(v, root);
                if (closes) {
                    if (path.size() >= 3 && path[1] < v) {
                        path.push_back(v);
                        if (!visit(path))
                            stopped = true;
                        path.pop_back();
                    }
                    continue;
                }
                path.push_back(v);
                on_path.insert(v);
                extend();
                on_path.erase(v);
                path.pop_back();
            }
        }
    };

    struct PathSearch {
        const Graph & g;
        int max_edges;
        const std::function<bool(const std::vector<int> &)> & visit;
        std::vector<int> path;
        VertexSet blocked; // the path and the neighbours of all but its last vertex
        bool stopped = false;

        void extend()
        {
            if (static_cast<int>(path.size()) - 1 >= max_edges)
                return;
            const int last = path.back();
            for (int v : g.neighbours(last) - blocked) {
                if (stopped)
                    return;
                const VertexSet saved = blocked;
                blocked |= g.neighbours(last);
                blocked.insert(v);
                path.push_back(v);
                if (path.front() < v && !visit(path))
                    stopped = true;
                if (!stopped)
                    extend();
                path.pop_back();
                blocked = saved;
            }
        }
    };

} // namespace

void for_each_induced_cycle(const Graph & g, const std::function<bool(const std::vector<int> &)> & visit)
{
    CycleSearch s{g, visit, {}, {}};
    for (int r = 0; r < g.order() && !s.stopped; ++r) {
        s.path = {r};
        s.on_path = VertexSet{r};
        s.extend();
    }
}

auto count_induced_cycles(const Graph & g) -> std::int64_t
{
    std::int64_t n = 0;
    for_each_induced_cycle(g, [&](const std::vector<int> &) {
        ++n;
        return true;
    });
    return n;
}

void for_each_induced_path(const Graph & g, int max_edges,
                           const std::function<bool(const std::vector<int> &)> & visit)
{
    PathSearch s{g, max_edges, visit, {}, {}};
    for (int u = 0; u < g.order() && !s.stopped; ++u) {
        s.path = {u};
        s.blocked = VertexSet{u};
        s.extend();
    }
}

auto induced_paths_between(const Graph & g, int u, int v, int max_edges) -> std::vector<std::vector<int>>
{
    if (u == v)
        return {{u}};
    std::vector<std::vector<int>> out;
    std::vector<int> path{u};
    VertexSet blocked{u};
    std::function<void()> walk = [&] {
        if (static_cast<int>(path.size()) - 1 >= max_edges)
            return;
        const int last = path.back();
        for (int w : g.neighbours(last) - blocked) {
            const VertexSet saved = blocked;
            blocked |= g.neighbours(last);
            blocked.insert(w);
            path.push_back(w);
            if (w == v)
                out.push_back(path);
            else
                walk();
            path.pop_back();
            blocked = saved;
        }
    };
    walk();
    return out;
}

auto lighter(std::vector<int> a, std::vector<int> b) -> bool
{
    if (a.size() != b.size())
        return a.size() < b.size();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] > b[i]; // the set holding the smaller rank carries the larger weight
    return false;
}

auto long_even_hole(const Graph & g, int ell) -> Report
{
    return bounded_long_even_hole(g, ell, g.order());
}

auto bounded_long_even_hole(const Graph & g, int ell, int k) -> Report
{
    Report r;
    for_each_induced_cycle(g, [&](const std::vector<int> & c) {
        ++r.enumeration_count;
        const int len = static_cast<int>(c.size());
        if (len % 2 == 0 && len >= ell && len <= k && (!r.verdict || c < r.witness)) {
            r.verdict = true;
            r.witness = c;
        }
        return true;
    });
    return r;
}

auto lightest_long_even_hole(const Graph & g, const EdgeOrder & order, int ell) -> Report
{
    Report r;
    std::vector<int> best;
    for_each_induced_cycle(g, [&](const std::vector<int> & c) {
        ++r.enumeration_count;
        const int len = static_cast<int>(c.size());
        if (len % 2 != 0 || len < ell)
            return true;
        std::vector<int> ranks;
        for (std::size_t i = 0; i < c.size(); ++i)
            ranks.push_back(order.rank(c[i], c[(i + 1) % c.size()]));
        if (!r.verdict || lighter(ranks, best)) {
            r.verdict = true;
            r.witness = c;
            best = ranks;
        }
        return true;
    });
    return r;
}

auto has_hole_of_length_at_least(const Graph & g, int k) -> bool
{
    bool found = false;
    for_each_induced_cycle(g, [&](const std::vector<int> & c) {
        found = static_cast<int>(c.size()) >= k;
        return !found;
    });
    return found;
}

} // namespace longhole::oracle
