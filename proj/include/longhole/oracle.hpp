#pragma once

#include "longhole/graph.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

// Brute-force ground truth. Everything here is written against the definitions only and
// depends on nothing but the graph core.
namespace longhole::oracle {

struct Report {
    bool verdict = false;
    std::vector<int> witness;
    std::int64_t enumeration_count = 0;
};

// Every induced cycle (length >= 4) once: rooted at its smallest vertex, second vertex below the last.
// Stops when visit returns false.
void for_each_induced_cycle(const Graph & g, const std::function<bool(const std::vector<int> &)> & visit);
auto count_induced_cycles(const Graph & g) -> std::int64_t;

// Every induced path with at least one edge and at most max_edges edges once, from its smaller end.
void for_each_induced_path(const Graph & g, int max_edges,
                           const std::function<bool(const std::vector<int> &)> & visit);
// Induced u-v paths with at most max_edges edges.
auto induced_paths_between(const Graph & g, int u, int v, int max_edges) -> std::vector<std::vector<int>>;

// Witness: the lexicographically first long even hole as a canonical cycle.
auto long_even_hole(const Graph & g, int ell) -> Report;
// Long even holes of length at most k.
auto bounded_long_even_hole(const Graph & g, int ell, int k) -> Report;
auto lightest_long_even_hole(const Graph & g, const EdgeOrder & order, int ell) -> Report;
auto has_hole_of_length_at_least(const Graph & g, int k) -> bool;

// Compares edge-rank sets under weights 1 + 2^-rank: true when a is strictly lighter.
auto lighter(std::vector<int> a, std::vector<int> b) -> bool;

enum class Kind { jewel, theta, ban_the_bomb, near_prism, frame };

struct Params {
    int k = 0; // jewel order bound
};

// Witness is the sorted vertex set of the configuration found.
auto configuration(const Graph & g, int ell, Kind kind, const Params & params = {}) -> Report;

auto three_in_a_tree(const Graph & g, int v1, int v2, int v3) -> Report;

auto is_prospect(const Graph & g, int ell) -> bool;
auto is_candidate(const Graph & g, int ell) -> bool;

struct Prism {
    std::array<int, 3> a{}, b{};
    std::array<std::vector<int>, 3> paths; // paths[i] runs a[i] .. b[i]

    [[nodiscard]] auto vertex_set() const -> VertexSet;
    [[nodiscard]] auto size() const -> int;
};

// Each long near-prism once per labelling of its bases. Stops when visit returns false.
void for_each_long_near_prism(const Graph & g, int ell, const std::function<bool(const Prism &)> & visit);

} // namespace longhole::oracle
