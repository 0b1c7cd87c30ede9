#pragma once

#include "longhole/graph.hpp"

#include <array>
#include <optional>

namespace longhole {

// Throws InputError unless ell is even and at least 6.
void require_even_ell(int ell);

// Two u-v paths of opposite parity plus a third u-v path P whose interior is anticomplete to
// theirs.
struct Jewel {
    InducedPath q1, q2, p;

    [[nodiscard]] auto order() const -> int;
};

struct Theta {
    int u = -1, v = -1;
    std::array<InducedPath, 3> paths;
};

struct Claw {
    int centre = -1;
    std::array<InducedPath, 3> arms; // each starts at centre
};

// Four-cycle u-v1-w-v2, optional edge uw, x adjacent to u, paths p1 (x..v1) and p2 (x..v2).
struct BanTheBomb {
    int u = -1, v1 = -1, w = -1, v2 = -1, x = -1;
    InducedPath p1, p2;
};

// Path r of length 2*ell-6 whose middle vertices are v1-w-v2; u sees v1, v2 and possibly w on r;
// x sees only u.
struct Bomb {
    InducedPath r;
    int u = -1, x = -1;
};

struct InducedTree {
    VertexSet vertices;
    std::array<int, 3> terminals{};
};

// Long even hole with at most k vertices, first in canonical cycle order.
auto detect_bounded_long_even_hole(const Graph & g, int ell, int k) -> std::optional<Hole>;
// Whether g has a hole (any parity) of length at least k >= 4.
auto has_hole_of_length_at_least(const Graph & g, int k) -> bool;

auto detect_long_jewel(const Graph & g, int ell, int k) -> std::optional<Jewel>;

auto three_in_a_tree(const Graph & g, int v1, int v2, int v3) -> std::optional<InducedTree>;
auto three_in_a_tree(const Graph & g, int v1, int v2, int v3, const VertexSet & alive)
    -> std::optional<InducedTree>;

auto detect_long_theta(const Graph & g, int ell) -> std::optional<Theta>;
// Meaningful on graphs without a long theta.
auto detect_long_ban_the_bomb(const Graph & g, int ell) -> std::optional<BanTheBomb>;

// Calls visit on each claw with arm lengths allowed for ell; stops when visit returns false.
void for_each_claw(const Graph & g, int ell, const std::function<bool(const Claw &)> & visit);
void for_each_bomb(const Graph & g, int ell, const std::function<bool(const Bomb &)> & visit);

auto is_long_jewel(const Graph & g, const Jewel & j, int ell) -> bool;
auto is_long_theta(const Graph & g, const Theta & t, int ell) -> bool;
auto is_long_ban_the_bomb(const Graph & g, const BanTheBomb & b, int ell) -> bool;
auto is_claw(const Graph & g, const Claw & c, int ell) -> bool;
auto is_bomb(const Graph & g, const Bomb & b, int ell) -> bool;
auto is_induced_tree(const Graph & g, const InducedTree & t) -> bool;

// Long even holes inside each configuration. Throw InvariantViolation on an invalid input.
auto derive_even_hole(const Graph & g, const Jewel & j, int ell) -> Hole;
auto derive_even_hole(const Graph & g, const Theta & t, int ell) -> Hole;
auto derive_even_hole(const Graph & g, const BanTheBomb & b, int ell) -> Hole;

// Cycle through two internally disjoint paths with common ends.
auto join_paths(const InducedPath & a, const InducedPath & b) -> std::vector<int>;

} // namespace longhole
