#pragma once

#include "longhole/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace longhole::testing {

// A generated graph that passed an oracle gate.
struct Certified {
    Graph graph;
    std::string kind; // planted-hole, planted-prism, planted-theta, major-hole
    std::uint64_t seed = 0;
};

// Draws seeds from a fixed stream until `count` instances pass the gate, or gives up after
// max_attempts. Gates: planted-prism needs a prospect with a long near-prism, planted-theta a
// long theta with no long even hole of length at most 2l and no long jewel, planted-hole and
// major-hole a candidate with a long even hole.
auto certified(const std::string & kind, int count, int ell, std::uint64_t seed, int max_attempts = 4000)
    -> std::vector<Certified>;

// A long even cycle with a few extra vertices each seeing several cycle vertices, hung in
// sparse noise. Ungated.
auto major_hole_instance(std::uint64_t seed) -> Graph;

// C_len plus one vertex adjacent to three consecutive cycle vertices.
auto hole_with_local_vertex(int len) -> Graph;
// Prism with paths of the given lengths plus one vertex adjacent to three consecutive
// vertices in the middle of the longest path.
auto prism_with_local_vertex(int l0, int l1, int l2) -> Graph;

auto random_graph(std::mt19937_64 & rng, int n, double p) -> Graph;
auto random_order(const Graph & g, std::mt19937_64 & rng) -> EdgeOrder;

} // namespace longhole::testing
