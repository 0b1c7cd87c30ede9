#pragma once

#include "longhole/graph.hpp"

#include <optional>
#include <vector>

namespace longhole {

// Lightest paths from one source to every vertex, inside an alive mask. Lightest paths are
// shortest paths, and every prefix of a lightest path is lightest, so each vertex only keeps
// its best predecessor from the previous BFS layer.
class LightestPathTree {
  public:
    [[nodiscard]] auto source() const -> int { return source_; }
    [[nodiscard]] auto reaches(int v) const -> bool { return dist_[v] >= 0; }
    // -1 when unreachable.
    [[nodiscard]] auto distance(int v) const -> int { return dist_[v]; }
    [[nodiscard]] auto parent(int v) const -> int { return parent_[v]; }
    // source..v, empty when unreachable.
    [[nodiscard]] auto path_to(int v) const -> std::vector<int>;

  private:
    friend auto lightest_path_tree(const Graph &, const EdgeOrder &, int, const VertexSet &, int)
        -> LightestPathTree;
    int source_ = -1;
    std::vector<int> parent_;
    std::vector<int> dist_;
};

// stop_at >= 0 ends the search once that vertex is settled.
auto lightest_path_tree(const Graph & g, const EdgeOrder & order, int source, const VertexSet & alive,
                        int stop_at = -1) -> LightestPathTree;

auto lightest_path(const Graph & g, const EdgeOrder & order, int s, int t, const VertexSet & alive)
    -> std::optional<InducedPath>;
auto lightest_path(const Graph & g, const EdgeOrder & order, int s, int t) -> std::optional<InducedPath>;

} // namespace longhole
