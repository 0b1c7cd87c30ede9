#include "longhole/graph.hpp"

#include "longhole/cancellation.hpp"
#include "longhole/errors.hpp"

#include <algorithm>
#include <string>

namespace longhole {

Graph::Graph(int n) : n_(n)
{
    if (n < 0 || n > kMaxVertices)
        throw InputError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (u == v)
            throw InputError("loop at vertex " + std::to_string(u));
        if (adj_[u].contains(v))
            throw InputError("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++m_;
    }
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
            out.emplace_back(u, v);
    return out;
}

auto Graph::neighbours_of(const VertexSet & s) const -> VertexSet
{
    VertexSet out;
    for (int v : s)
        out |= adj_[v];
    return out - s;
}

auto Graph::closed_neighbours_of(const VertexSet & s) const -> VertexSet
{
    VertexSet out = s;
    for (int v : s)
        out |= adj_[v];
    return out;
}

auto Graph::induced_subgraph(std::span<const int> keep) const -> Graph
{
    std::vector<Edge> es;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adjacent(keep[i], keep[j]))
                es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(keep.size()), es);
}

auto Graph::without_edge(int u, int v) const -> Graph
{
    Graph h = *this;
    if (h.adj_[u].contains(v)) {
        h.adj_[u].erase(v);
        h.adj_[v].erase(u);
        --h.m_;
    }
    return h;
}

auto EdgeOrder::canonical(const Graph & g) -> EdgeOrder
{
    auto es = g.edges();
    return from_sequence(g, es);
}

auto EdgeOrder::from_sequence(const Graph & g, std::span<const Edge> ordered) -> EdgeOrder
{
    EdgeOrder o;
    o.n_ = g.order();
    o.rank_.assign(static_cast<std::size_t>(o.n_ * o.n_), 0);
    if (static_cast<int>(ordered.size()) != g.size())
        throw InputError("edge order lists " + std::to_string(ordered.size()) + " edges, graph has " +
                         std::to_string(g.size()));
    int r = 0;
    for (auto [u, v] : ordered) {
        if (u < 0 || v < 0 || u >= o.n_ || v >= o.n_ || !g.adjacent(u, v))
            throw InputError("edge order names a non-edge");
        auto & slot = o.rank_[static_cast<std::size_t>(u * o.n_ + v)];
        if (slot != 0)
            throw InputError("edge order repeats an edge");
        ++r;
        slot = static_cast<std::uint16_t>(r);
        o.rank_[static_cast<std::size_t>(v * o.n_ + u)] = static_cast<std::uint16_t>(r);
        o.by_rank_.emplace_back(std::min(u, v), std::max(u, v));
    }
    return o;
}

auto InducedPath::interior() const -> VertexSet
{
    VertexSet s;
    for (std::size_t i = 1; i + 1 < vertices.size(); ++i)
        s.insert(vertices[i]);
    return s;
}

auto is_induced_path(const Graph & g, std::span<const int> p) -> bool
{
    if (p.empty())
        return false;
    VertexSet seen;
    for (int v : p) {
        if (v < 0 || v >= g.order() || seen.contains(v))
            return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (g.adjacent(p[i], p[j]) != (j == i + 1))
                return false;
    return true;
}

auto is_hole(const Graph & g, std::span<const int> c) -> bool
{
    const std::size_t k = c.size();
    if (k < 4)
        return false;
    VertexSet seen;
    for (int v : c) {
        if (v < 0 || v >= g.order() || seen.contains(v))
            return false;
        seen.insert(v);
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(c[i], c[j]) != consecutive)
                return false;
        }
    return true;
}

auto is_long_even_hole(const Graph & g, std::span<const int> c, int ell) -> bool
{
    return c.size() % 2 == 0 && static_cast<int>(c.size()) >= ell && is_hole(g, c);
}

void require_induced_path(const Graph & g, const InducedPath & p, const char * what)
{
    if (!is_induced_path(g, p.vertices))
        throw InvariantViolation(std::string(what) + " is not an induced path: " + to_string(p.vertices));
}

auto is_anticomplete(const Graph & g, const VertexSet & a, const VertexSet & b) -> bool
{
    if (a.intersects(b))
        return false;
    for (int v : a)
        if (g.neighbours(v).intersects(b))
            return false;
    return true;
}

auto distance(const Graph & g, int u, int v, const VertexSet & alive) -> std::optional<int>
{
    if (!alive.contains(u) || !alive.contains(v))
        return std::nullopt;
    VertexSet seen{u};
    VertexSet frontier{u};
    for (int d = 0; !frontier.empty(); ++d) {
        if (frontier.contains(v))
            return d;
        VertexSet next;
        for (int w : frontier)
            next |= g.neighbours(w);
        next &= alive;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return std::nullopt;
}

auto distance(const Graph & g, int u, int v) -> std::optional<int> { return distance(g, u, v, g.vertices()); }

auto reachable(const Graph & g, int source, const VertexSet & alive) -> VertexSet
{
    if (!alive.contains(source))
        return {};
    VertexSet seen{source};
    VertexSet frontier{source};
    while (!frontier.empty()) {
        VertexSet next;
        for (int w : frontier)
            next |= g.neighbours(w);
        next &= alive;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

auto shortest_path(const Graph & g, int u, int v, const VertexSet & alive) -> std::optional<std::vector<int>>
{
    if (!alive.contains(u) || !alive.contains(v))
        return std::nullopt;
    std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
    VertexSet seen{u};
    VertexSet frontier{u};
    while (!frontier.empty() && !seen.contains(v)) {
        VertexSet next;
        for (int w : frontier) {
            VertexSet fresh = (g.neighbours(w) & alive) - seen - next;
            for (int x : fresh)
                parent[x] = w;
            next |= fresh;
        }
        seen |= next;
        frontier = next;
    }
    if (!seen.contains(v))
        return std::nullopt;
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[x])
        path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

    struct PathSearch {
        const Graph & g;
        const VertexSet & alive;
        int target;
        int max_length;
        const std::function<bool(const std::vector<int> &)> & visit;
        std::vector<int> path;

        // excl: closed neighbourhood of every path vertex except the last, plus the last.
        auto run(const VertexSet & excl) -> bool
        {
            checkpoint();
            const int c = path.back();
            const int len = static_cast<int>(path.size()) - 1;
            if (target == -1) {
                if (!visit(path))
                    return false;
            }
            else if (c == target) {
                return visit(path);
            }
            if (len >= max_length)
                return true;
            if (target != -1) {
                if (excl.contains(target) && c != target)
                    return true;
                if (!reachable(g, c, (alive - excl) | VertexSet{c}).contains(target))
                    return true;
            }
            VertexSet next_excl = excl | g.closed_neighbours(c);
            VertexSet cands = (g.neighbours(c) & alive) - excl;
            for (int w : cands) {
                path.push_back(w);
                bool go = run(next_excl);
                path.pop_back();
                if (!go)
                    return false;
            }
            return true;
        }
    };

} // namespace

void enumerate_induced_paths(const Graph & g, int u, int v, int max_length, const VertexSet & alive,
                             const std::function<bool(const std::vector<int> &)> & visit)
{
    if (!alive.contains(u) || !alive.contains(v) || max_length < 0)
        return;
    PathSearch s{g, alive, v, max_length, visit, {u}};
    s.run(VertexSet{u});
}

void enumerate_induced_paths(const Graph & g, int u, int v, int max_length,
                             const std::function<bool(const std::vector<int> &)> & visit)
{
    enumerate_induced_paths(g, u, v, max_length, g.vertices(), visit);
}

void enumerate_induced_paths_from(const Graph & g, int u, int max_length, const VertexSet & alive,
                                  const std::function<bool(const std::vector<int> &)> & visit)
{
    if (!alive.contains(u) || max_length < 0)
        return;
    PathSearch s{g, alive, -1, max_length, visit, {u}};
    s.run(VertexSet{u});
}

void enumerate_induced_paths(const Graph & g, int max_length,
                             const std::function<bool(const std::vector<int> &)> & visit)
{
    bool go = true;
    for (int u = 0; u < g.order() && go; ++u)
        enumerate_induced_paths_from(g, u, max_length, g.vertices(), [&](const std::vector<int> & p) {
            if (p.size() == 1 || p.front() < p.back())
                go = visit(p);
            return go;
        });
}

auto canonical_cycle(std::vector<int> c) -> std::vector<int>
{
    if (c.size() < 3)
        return c;
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    if (c[1] > c.back())
        std::reverse(c.begin() + 1, c.end());
    return c;
}

auto to_string(std::span<const int> vs) -> std::string
{
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(vs[i]);
    }
    return s + "]";
}

} // namespace longhole
