#pragma once

#include "longhole/configs.hpp"
#include "longhole/graph.hpp"
#include "longhole/near_prism.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace longhole {

// Throws InputError when v lies on c.
auto is_C_major(const Graph & g, const Hole & c, int v) -> bool;

// Tries every triple of vertices of alive: the lightest paths between them (inside alive)
// sometimes close into a long even hole. A miss only rules out a clean lightest long even hole.
auto detect_clean_lightest_long_even_hole(const Graph & g, const EdgeOrder & order, int ell, const VertexSet & alive)
    -> std::optional<Hole>;
auto detect_clean_lightest_long_even_hole(const Graph & g, const EdgeOrder & order, int ell) -> std::optional<Hole>;

// The (x, y, p1, p2, m, Q) guess; Q is stored through its vertex set.
struct HoleContrivance {
    int x = -1, y = -1, p1 = -1, p2 = -1, m = -1;
    VertexSet q;
};

// Z1 plus Z3 for one guess, or nullopt when the guess is skipped.
auto cleaning_set_for_hole(const Graph & g, const EdgeOrder & order, const HoleContrivance & c)
    -> std::optional<VertexSet>;

// Streams the distinct sets of the cleaning list in order of first appearance: first the
// neighbour sets of three-vertex paths, then one set per guess. Stops when visit returns false.
void for_each_cleaning_set(const Graph & g, const EdgeOrder & order, int ell,
                           const std::function<bool(const VertexSet &)> & visit);
auto cleaning_list(const Graph & g, const EdgeOrder & order, int ell) -> std::vector<VertexSet>;

enum class Stage { short_hole, jewel, theta, ban_the_bomb, near_prism, clean_hole, none };

auto stage_name(Stage s) -> std::string_view;

struct PipelineOptions {
    // After the four easy configurations are excluded, a long even hole needs a hole of length
    // above 2*ell; skip the expensive stages when there is none.
    bool long_hole_gate = true;
};

struct PipelineResult {
    Stage stage = Stage::none;
    std::optional<Hole> hole;
    // The configuration that fired, when the stage has one.
    std::variant<std::monostate, Jewel, Theta, BanTheBomb, NearPrism> configuration;

    [[nodiscard]] auto found() const -> bool { return hole.has_value(); }
};

// Requires ell even and at least 6; throws InputError otherwise.
auto detect_long_even_hole(const Graph & g, int ell, const PipelineOptions & options = {}) -> PipelineResult;
auto detect_long_even_hole(const Graph & g, const EdgeOrder & order, int ell, const PipelineOptions & options = {})
    -> PipelineResult;

} // namespace longhole
