#pragma once

#include "longhole/graph.hpp"

#include <compare>
#include <span>
#include <vector>

namespace longhole {

// Weight of an edge set under an EdgeOrder, where edge e_i weighs 1 + 2^-i. Kept symbolic:
// (edge count, ascending rank list). a < b means a is lighter.
class PathWeight {
  public:
    PathWeight() = default;
    explicit PathWeight(std::vector<int> ranks);

    static auto of_path(const EdgeOrder & order, std::span<const int> path) -> PathWeight;
    static auto of_cycle(const EdgeOrder & order, std::span<const int> cycle) -> PathWeight;

    [[nodiscard]] auto edge_count() const -> int { return static_cast<int>(ranks_.size()); }
    [[nodiscard]] auto ranks() const -> const std::vector<int> & { return ranks_; }

    friend auto operator<=>(const PathWeight & a, const PathWeight & b) -> std::strong_ordering;
    friend auto operator==(const PathWeight & a, const PathWeight & b) -> bool { return a.ranks_ == b.ranks_; }

  private:
    std::vector<int> ranks_;
};

// Compares two ascending rank lists of equal length: less means the first is lighter, i.e. the
// smallest rank in the symmetric difference belongs to the second.
template <typename T>
auto compare_equal_length_ranks(std::span<const T> a, std::span<const T> b) -> std::strong_ordering;

} // namespace longhole
