#pragma once

#include "longhole/graph.hpp"

namespace longhole {

auto cycle_graph(int n) -> Graph;
auto path_graph(int n) -> Graph;
auto complete_graph(int n) -> Graph;
auto empty_graph(int n) -> Graph;
auto petersen_graph() -> Graph;
// Disjoint union, second graph relabelled after the first.
auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
// Adds one vertex adjacent to the listed vertices.
auto add_vertex(const Graph & g, std::span<const int> neighbours) -> Graph;

} // namespace longhole
