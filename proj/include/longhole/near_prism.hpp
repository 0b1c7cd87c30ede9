#pragma once

#include "longhole/graph.hpp"
#include "longhole/lightest_path.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace longhole {

// Two triangles a[0..2], b[0..2] sharing at most one vertex, joined by constituent paths
// paths[i] from a[i] to b[i]. A shared vertex c appears as a[i] == b[i] with a trivial path.
struct NearPrism {
    std::array<int, 3> a{-1, -1, -1};
    std::array<int, 3> b{-1, -1, -1};
    std::array<InducedPath, 3> paths;

    [[nodiscard]] auto vertex_set() const -> VertexSet;
    // Index of the constituent path containing v, or -1.
    [[nodiscard]] auto path_of(int v) const -> int;
};

// Induced near-prism of g (no edges besides triangle and path edges).
auto is_near_prism(const Graph & g, const NearPrism & k) -> bool;
// Near-prism whose three pairwise path unions are holes of length >= ell.
auto is_long_near_prism(const Graph & g, const NearPrism & k, int ell) -> bool;
auto derive_even_hole(const Graph & g, const NearPrism & k, int ell) -> Hole;

// Cyclic vertex order of the hole on paths[i] and paths[j].
auto near_prism_hole(const NearPrism & k, int i, int j) -> std::vector<int>;

// Throws InputError when v lies on k.
auto is_K_major(const Graph & g, const NearPrism & k, int v) -> bool;

// Skeleton of a long near-prism. Part i joins a[i] to b[i]: either a path (a_side[i] holds it,
// b_side[i] is empty) or two stubs a_side[i] = a[i]..s_i and b_side[i] = b[i]..t_i, each with
// ell/2 - 1 edges. At most one part is a path. The order of the arrays is the base ordering,
// so a Frame is also an ordered frame.
struct Frame {
    std::array<int, 3> a{-1, -1, -1};
    std::array<int, 3> b{-1, -1, -1};
    std::array<std::vector<int>, 3> a_side;
    std::array<std::vector<int>, 3> b_side;

    [[nodiscard]] auto is_path(int i) const -> bool { return b_side[static_cast<std::size_t>(i)].empty(); }
    // a_i-end and b_i-end, -1 when part i is a path.
    [[nodiscard]] auto s(int i) const -> int;
    [[nodiscard]] auto t(int i) const -> int;
    [[nodiscard]] auto vertex_set() const -> VertexSet;
    [[nodiscard]] auto ends() const -> VertexSet;
    // F*: vertices that are not ends.
    [[nodiscard]] auto interior() const -> VertexSet;
};

using OrderedFrame = Frame;

auto is_frame(const Graph & g, const Frame & f, int ell) -> bool;

// Ordered frames of g, each once. Only orderings that can number a long near-prism of a prospect
// by nondecreasing path length are produced: a path part always comes first. Frames whose stub
// ends cannot be joined avoiding the other ends are skipped. Stops when visit returns false.
void enumerate_ordered_frames(const Graph & g, int ell, const std::function<bool(const Frame &)> & visit);
// Same, restricted to the vertices of alive.
void enumerate_ordered_frames(const Graph & g, int ell, const VertexSet & alive,
                              const std::function<bool(const Frame &)> & visit);

// The frame of a long near-prism in a prospect, ordered like k.
auto frame_of(const NearPrism & k, int ell) -> std::optional<Frame>;

// Vertices deleted around a frame: not ends, and in or adjacent to F*.
auto frame_shadow(const Graph & g, const Frame & f) -> VertexSet;

// Lightest paths between the ends of f inside alive, glued to the frame, kept when the result is
// a long near-prism of g.
auto detect_clean_lightest_near_prism(const Graph & g, const EdgeOrder & order, const Frame & f, int ell,
                                      const VertexSet & alive) -> std::optional<NearPrism>;
auto detect_clean_lightest_near_prism(const Graph & g, const EdgeOrder & order, const Frame & f, int ell)
    -> std::optional<NearPrism>;

// The (x, y, alpha, h, Q) guess; Q is stored through its vertex set, whose induced components
// are the paths.
struct PrismContrivance {
    int x = -1, y = -1, alpha = -1, h = 1;
    VertexSet q;
};

// Interior vertices of the paths of Q (the components of g[q]).
auto family_interior(const Graph & g, const VertexSet & q) -> VertexSet;
// Whether g[q] is a disjoint union of paths.
auto is_linear_forest(const Graph & g, const VertexSet & q) -> bool;

// L rebuilt from a guess, as a path with ends front() and back(); nullopt when a required
// lightest path is missing or the guess is malformed.
auto reconstruct_L(const Graph & g, const EdgeOrder & order, const Frame & f, const PrismContrivance & c,
                   const VertexSet & alive) -> std::optional<std::vector<int>>;
auto cleaning_set_for_prism(const Graph & g, const EdgeOrder & order, const Frame & f,
                            const PrismContrivance & c, const VertexSet & alive) -> std::optional<VertexSet>;

// Guesses for one ordered frame inside alive, in canonical order; see the README for the
// restrictions applied to the guess space. Stops when visit returns false.
void for_each_prism_contrivance(const Graph & g, const Frame & f, int ell, const VertexSet & alive,
                                const std::function<bool(const PrismContrivance &)> & visit);

// Meaningful on prospects.
auto detect_long_near_prism(const Graph & g, int ell) -> std::optional<NearPrism>;
auto detect_long_near_prism(const Graph & g, const EdgeOrder & order, int ell) -> std::optional<NearPrism>;

// Neighbours of a major vertex along the constituent paths.
struct MajorAttachments {
    std::array<int, 3> alpha{-1, -1, -1}; // neighbour closest to a_i along P_i
    std::array<int, 3> beta{-1, -1, -1};  // neighbour closest to b_i
    std::array<VertexSet, 3> A;           // alpha_i..a_i, or all of P_i without a neighbour
    VertexSet L;

    [[nodiscard]] auto A_union(std::initializer_list<int> idx) const -> VertexSet;
};

// Throws InvariantViolation unless x is K-major.
auto major_attachments(const Graph & g, const NearPrism & k, int x) -> MajorAttachments;

// K^m_n(v): v extended at most m edges toward a_i and n toward b_i along its path, never passing
// through a vertex of F* (ending on one is allowed). Throws InputError for v in F* or off K.
auto truncated_subpath(const NearPrism & k, const Frame & f, int v, int m, int n) -> InducedPath;

} // namespace longhole
