#pragma once

#include "longhole/vertex_set.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace longhole {

using Edge = std::pair<int, int>;

// Finite simple graph on vertices 0..n-1, immutable once built.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    // Throws InputError on loops, repeated edges or out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    [[nodiscard]] auto order() const -> int { return n_; }
    [[nodiscard]] auto size() const -> int { return m_; }
    [[nodiscard]] auto adjacent(int u, int v) const -> bool { return adj_[u].contains(v); }
    [[nodiscard]] auto neighbours(int v) const -> const VertexSet & { return adj_[v]; }
    [[nodiscard]] auto closed_neighbours(int v) const -> VertexSet
    {
        auto s = adj_[v];
        s.insert(v);
        return s;
    }
    [[nodiscard]] auto degree(int v) const -> int { return adj_[v].count(); }
    [[nodiscard]] auto vertices() const -> VertexSet { return VertexSet::prefix(n_); }

    // Edges (u,v) with u < v, sorted lexicographically.
    [[nodiscard]] auto edges() const -> std::vector<Edge>;

    // Vertices outside s with a neighbour in s.
    [[nodiscard]] auto neighbours_of(const VertexSet & s) const -> VertexSet;
    // s together with neighbours_of(s).
    [[nodiscard]] auto closed_neighbours_of(const VertexSet & s) const -> VertexSet;

    // Induced subgraph on keep, relabelled 0..|keep|-1 in the given order.
    [[nodiscard]] auto induced_subgraph(std::span<const int> keep) const -> Graph;
    [[nodiscard]] auto without_edge(int u, int v) const -> Graph;

    friend auto operator==(const Graph & a, const Graph & b) -> bool { return a.n_ == b.n_ && a.adj_ == b.adj_; }

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// A fixed linear order on E(G); rank 1 is the first edge.
class EdgeOrder {
  public:
    EdgeOrder() = default;
    // Edges ranked by (min endpoint, max endpoint).
    static auto canonical(const Graph & g) -> EdgeOrder;
    // ordered must list every edge of g exactly once (either orientation).
    static auto from_sequence(const Graph & g, std::span<const Edge> ordered) -> EdgeOrder;

    // 0 when uv is not an edge.
    [[nodiscard]] auto rank(int u, int v) const -> int { return rank_[static_cast<std::size_t>(u * n_ + v)]; }
    [[nodiscard]] auto edge_count() const -> int { return static_cast<int>(by_rank_.size()); }
    [[nodiscard]] auto edge(int rank) const -> Edge { return by_rank_[static_cast<std::size_t>(rank - 1)]; }

  private:
    int n_ = 0;
    std::vector<std::uint16_t> rank_;
    std::vector<Edge> by_rank_;
};

struct InducedPath {
    std::vector<int> vertices;

    [[nodiscard]] auto length() const -> int { return static_cast<int>(vertices.size()) - 1; }
    [[nodiscard]] auto front() const -> int { return vertices.front(); }
    [[nodiscard]] auto back() const -> int { return vertices.back(); }
    [[nodiscard]] auto vertex_set() const -> VertexSet { return VertexSet::of(vertices); }
    [[nodiscard]] auto interior() const -> VertexSet;

    friend auto operator==(const InducedPath &, const InducedPath &) -> bool = default;
};

struct Hole {
    std::vector<int> cycle;

    [[nodiscard]] auto length() const -> int { return static_cast<int>(cycle.size()); }
    [[nodiscard]] auto vertex_set() const -> VertexSet { return VertexSet::of(cycle); }

    friend auto operator==(const Hole &, const Hole &) -> bool = default;
};

// Distinct vertices, consecutive ones adjacent, no other adjacencies.
auto is_induced_path(const Graph & g, std::span<const int> p) -> bool;
// Chordless cycle of length >= 4 in the given cyclic order.
auto is_hole(const Graph & g, std::span<const int> c) -> bool;
auto is_long_even_hole(const Graph & g, std::span<const int> c, int ell) -> bool;
// Throws InvariantViolation unless p is an induced path of g.
void require_induced_path(const Graph & g, const InducedPath & p, const char * what);

auto is_anticomplete(const Graph & g, const VertexSet & a, const VertexSet & b) -> bool;
// Number of edges on a shortest u-v path inside alive, or nullopt if disconnected.
auto distance(const Graph & g, int u, int v, const VertexSet & alive) -> std::optional<int>;
auto distance(const Graph & g, int u, int v) -> std::optional<int>;
// Vertices of alive reachable from source inside alive.
auto reachable(const Graph & g, int source, const VertexSet & alive) -> VertexSet;
// Shortest u-v path inside alive; among shortest, each vertex takes the smallest-numbered predecessor.
auto shortest_path(const Graph & g, int u, int v, const VertexSet & alive) -> std::optional<std::vector<int>>;

// Calls visit on every induced u-v path with at most max_length edges inside alive, in
// lexicographic order of vertex sequences. Enumeration stops when visit returns false.
void enumerate_induced_paths(const Graph & g, int u, int v, int max_length, const VertexSet & alive,
                             const std::function<bool(const std::vector<int> &)> & visit);
void enumerate_induced_paths(const Graph & g, int u, int v, int max_length,
                             const std::function<bool(const std::vector<int> &)> & visit);

// Calls visit on every induced path starting at u (including the trivial path) with at most
// max_length edges inside alive. Enumeration stops when visit returns false.
void enumerate_induced_paths_from(const Graph & g, int u, int max_length, const VertexSet & alive,
                                  const std::function<bool(const std::vector<int> &)> & visit);

// Calls visit on every induced path with at most max_length edges, once per vertex set: the
// first vertex is smaller than the last unless the path is a single vertex.
void enumerate_induced_paths(const Graph & g, int max_length,
                             const std::function<bool(const std::vector<int> &)> & visit);

// Rotates and reflects a cycle so it starts at its smallest vertex and the second vertex is
// smaller than the last.
auto canonical_cycle(std::vector<int> c) -> std::vector<int>;

auto to_string(std::span<const int> vs) -> std::string;

} // namespace longhole
