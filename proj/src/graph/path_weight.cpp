#include "longhole/path_weight.hpp"

#include "longhole/mutation.hpp"

#include <algorithm>
#include <cstdint>

namespace longhole {

template <typename T>
auto compare_equal_length_ranks(std::span<const T> a, std::span<const T> b) -> std::strong_ordering
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i])
            continue;
        if constexpr (kMutant == 2)
            return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        return a[i] > b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

template auto compare_equal_length_ranks<int>(std::span<const int>, std::span<const int>) -> std::strong_ordering;
template auto compare_equal_length_ranks<std::uint16_t>(std::span<const std::uint16_t>,
                                                        std::span<const std::uint16_t>) -> std::strong_ordering;

PathWeight::PathWeight(std::vector<int> ranks) : ranks_(std::move(ranks)) { std::sort(ranks_.begin(), ranks_.end()); }

auto PathWeight::of_path(const EdgeOrder & order, std::span<const int> path) -> PathWeight
{
    std::vector<int> rs;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        rs.push_back(order.rank(path[i], path[i + 1]));
    return PathWeight(std::move(rs));
}

auto PathWeight::of_cycle(const EdgeOrder & order, std::span<const int> cycle) -> PathWeight
{
    std::vector<int> rs;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        rs.push_back(order.rank(cycle[i], cycle[(i + 1) % cycle.size()]));
    return PathWeight(std::move(rs));
}

auto operator<=>(const PathWeight & a, const PathWeight & b) -> std::strong_ordering
{
    if (a.ranks_.size() != b.ranks_.size())
        return a.ranks_.size() <=> b.ranks_.size();
    return compare_equal_length_ranks<int>(a.ranks_, b.ranks_);
}

} // namespace longhole
