#include "longhole/cancellation.hpp"
#include "longhole/configs.hpp"
#include "longhole/errors.hpp"
#include "longhole/near_prism.hpp"

#include <algorithm>

namespace longhole {

auto Frame::s(int i) const -> int
{
    return is_path(i) ? -1 : a_side[static_cast<std::size_t>(i)].back();
}

auto Frame::t(int i) const -> int
{
    return is_path(i) ? -1 : b_side[static_cast<std::size_t>(i)].back();
}

auto Frame::vertex_set() const -> VertexSet
{
    VertexSet s;
    for (std::size_t i = 0; i < 3; ++i) {
        s |= VertexSet::of(a_side[i]);
        s |= VertexSet::of(b_side[i]);
    }
    return s;
}

auto Frame::ends() const -> VertexSet
{
    VertexSet e;
    for (int i = 0; i < 3; ++i)
        if (!is_path(i)) {
            e.insert(s(i));
            e.insert(t(i));
        }
    return e;
}

auto Frame::interior() const -> VertexSet { return vertex_set() - ends(); }

auto frame_shadow(const Graph & g, const Frame & f) -> VertexSet
{
    return g.closed_neighbours_of(f.interior()) - f.ends();
}

auto is_frame(const Graph & g, const Frame & f, int ell) -> bool
{
    const int half = ell / 2 - 1;
    for (const auto * t : {&f.a, &f.b})
        for (int v : *t)
            if (v < 0 || v >= g.order())
                return false;
    for (const auto * t : {&f.a, &f.b}) {
        const auto & x = *t;
        if (x[0] == x[1] || x[1] == x[2] || x[0] == x[2] || !g.adjacent(x[0], x[1]) || !g.adjacent(x[1], x[2]) ||
            !g.adjacent(x[0], x[2]))
            return false;
    }
    int paths = 0;
    int total = 0;
    int part_edges = 0;
    VertexSet all;
    for (int i = 0; i < 3; ++i) {
        const auto si = static_cast<std::size_t>(i);
        for (int j = 0; j < 3; ++j)
            if (i != j && f.a[si] == f.b[static_cast<std::size_t>(j)])
                return false;
        const auto & as = f.a_side[si];
        const auto & bs = f.b_side[si];
        if (as.empty() || as.front() != f.a[si] || !is_induced_path(g, as))
            return false;
        if (f.is_path(i)) {
            ++paths;
            if (as.back() != f.b[si] || static_cast<int>(as.size()) - 1 > ell - 1)
                return false;
        } else {
            if (f.a[si] == f.b[si] || bs.front() != f.b[si] || !is_induced_path(g, bs))
                return false;
            if (static_cast<int>(as.size()) - 1 != half || static_cast<int>(bs.size()) - 1 != half)
                return false;
        }
        total += static_cast<int>(as.size() + bs.size());
        part_edges += static_cast<int>(as.size()) - 1 + std::max(0, static_cast<int>(bs.size()) - 1);
        all |= VertexSet::of(as) | VertexSet::of(bs);
    }
    if (paths > 1 || all.count() != total)
        return false;
    int edges = 0;
    for (int v : all)
        edges += (g.neighbours(v) & all).count();
    return edges / 2 == part_edges + 6;
}

namespace {

    using Piece = std::vector<int>;

    auto triangles(const Graph & g, const VertexSet & alive) -> std::vector<std::array<int, 3>>
    {
        std::vector<std::array<int, 3>> out;
        for (int u : alive)
            for (int v : g.neighbours(u) & alive) {
                if (v <= u)
                    continue;
                for (int w : g.neighbours(u) & g.neighbours(v) & alive)
                    if (w > v)
                        out.push_back({u, v, w});
            }
        return out;
    }

    auto stubs_at(const Graph & g, int v, const VertexSet & bases, const VertexSet & alive, int half)
        -> std::vector<Piece>
    {
        VertexSet region = (alive - g.closed_neighbours_of(bases - VertexSet{v})) | VertexSet{v};
        std::vector<Piece> out;
        enumerate_induced_paths_from(g, v, half, region, [&](const std::vector<int> & p) {
            if (static_cast<int>(p.size()) == half + 1)
                out.push_back(p);
            return true;
        });
        return out;
    }

    auto paths_between(const Graph & g, int a, int b, const VertexSet & bases, const VertexSet & alive, int ell)
        -> std::vector<Piece>
    {
        VertexSet region = (alive - g.closed_neighbours_of(bases - VertexSet{a, b})) | VertexSet{a, b};
        std::vector<Piece> out;
        enumerate_induced_paths(g, a, b, ell - 1, region, [&](const std::vector<int> & p) {
            out.push_back(p);
            return true;
        });
        return out;
    }

    // Whether each stub pair can still be joined in the graph left after the frame's shadow,
    // avoiding the other ends.
    auto ends_connectable(const Graph & g, const Frame & f, const VertexSet & alive) -> bool
    {
        const VertexSet g0 = alive - frame_shadow(g, f);
        for (int i = 0; i < 3; ++i) {
            if (f.is_path(i))
                continue;
            VertexSet others;
            for (int j = 0; j < 3; ++j)
                if (j != i && !f.is_path(j))
                    others |= VertexSet{f.s(j), f.t(j)};
            VertexSet region = g0 - g.closed_neighbours_of(others);
            if (!region.contains(f.s(i)) || !reachable(g, f.s(i), region).contains(f.t(i)))
                return false;
        }
        return true;
    }

    struct FrameSearch {
        const Graph & g;
        const VertexSet & alive;
        const std::function<bool(const Frame &)> & visit;
        bool stopped = false;

        // Picks one stub per slot; stubs minus their base vertex must be pairwise anticomplete.
        void combine(const std::vector<const std::vector<Piece> *> & slots, std::size_t at, VertexSet blocked,
                     std::vector<const Piece *> & chosen, const std::function<void()> & emit)
        {
            if (stopped)
                return;
            if (at == slots.size()) {
                emit();
                return;
            }
            for (const auto & p : *slots[at]) {
                checkpoint();
                VertexSet body = VertexSet::of(p);
                body.erase(p.front());
                if (body.intersects(blocked))
                    continue;
                chosen.push_back(&p);
                combine(slots, at + 1, blocked | g.closed_neighbours_of(body), chosen, emit);
                chosen.pop_back();
                if (stopped)
                    return;
            }
        }

        void offer(const Frame & f)
        {
            if (stopped || !ends_connectable(g, f, alive))
                return;
            if (!visit(f))
                stopped = true;
        }
    };

} // namespace

void enumerate_ordered_frames(const Graph & g, int ell, const VertexSet & alive,
                              const std::function<bool(const Frame &)> & visit)
{
    require_even_ell(ell);
    const int half = ell / 2 - 1;
    const auto tris = triangles(g, alive);
    FrameSearch search{g, alive, visit};
    for (std::size_t ti = 0; ti < tris.size() && !search.stopped; ++ti)
        for (std::size_t tj = ti + 1; tj < tris.size() && !search.stopped; ++tj) {
            const auto & A = tris[ti];
            const auto & B = tris[tj];
            const VertexSet sa = VertexSet::of(A), sb = VertexSet::of(B);
            const VertexSet shared = sa & sb;
            if (shared.count() > 1)
                continue;
            const VertexSet bases = sa | sb;
            std::vector<Edge> cross;
            for (int u : sa - shared)
                for (int v : g.neighbours(u) & (sb - shared))
                    cross.emplace_back(u, v);
            if (cross.size() > 1 || (!shared.empty() && !cross.empty()))
                continue;

            std::vector<std::vector<Piece>> stub(static_cast<std::size_t>(g.order()));
            for (int v : bases - shared)
                stub[static_cast<std::size_t>(v)] = stubs_at(g, v, bases, alive, half);

            // Emits the orderings of a frame whose part 0 is the path a0..b0.
            auto emit_with_path = [&](const Piece & path, int a0, int b0, const std::vector<const Piece *> & chosen) {
                std::array<int, 2> ra{}, rb{};
                std::array<const Piece *, 2> pa{}, pb{};
                int na = 0, nb = 0;
                for (const Piece * p : chosen) {
                    if (sa.contains(p->front()) && p->front() != a0) {
                        ra[static_cast<std::size_t>(na)] = p->front();
                        pa[static_cast<std::size_t>(na++)] = p;
                    } else {
                        rb[static_cast<std::size_t>(nb)] = p->front();
                        pb[static_cast<std::size_t>(nb++)] = p;
                    }
                }
                for (int oa = 0; oa < 2; ++oa)
                    for (int ob = 0; ob < 2; ++ob) {
                        Frame f;
                        f.a = {a0, ra[static_cast<std::size_t>(oa)], ra[static_cast<std::size_t>(1 - oa)]};
                        f.b = {b0, rb[static_cast<std::size_t>(ob)], rb[static_cast<std::size_t>(1 - ob)]};
                        f.a_side[0] = path;
                        f.a_side[1] = *pa[static_cast<std::size_t>(oa)];
                        f.a_side[2] = *pa[static_cast<std::size_t>(1 - oa)];
                        f.b_side[1] = *pb[static_cast<std::size_t>(ob)];
                        f.b_side[2] = *pb[static_cast<std::size_t>(1 - ob)];
                        search.offer(f);
                    }
            };

            auto with_path = [&](const Piece & path, int a0, int b0) {
                std::vector<const std::vector<Piece> *> slots;
                for (int v : A)
                    if (v != a0)
                        slots.push_back(&stub[static_cast<std::size_t>(v)]);
                for (int v : B)
                    if (v != b0)
                        slots.push_back(&stub[static_cast<std::size_t>(v)]);
                VertexSet body = VertexSet::of(path) - VertexSet{a0, b0};
                std::vector<const Piece *> chosen;
                search.combine(slots, 0, g.closed_neighbours_of(body), chosen,
                               [&] { emit_with_path(path, a0, b0, chosen); });
            };

            if (!shared.empty()) {
                const int c = shared.first();
                with_path(Piece{c}, c, c);
                continue;
            }
            if (cross.size() == 1) {
                auto [u, v] = cross.front();
                if (sa.contains(v))
                    std::swap(u, v);
                with_path(Piece{u, v}, u, v);
                continue;
            }
            for (int a0 : A)
                for (int b0 : B)
                    for (const auto & p : paths_between(g, a0, b0, bases, alive, ell)) {
                        if (search.stopped)
                            break;
                        with_path(p, a0, b0);
                    }

            // Three stub pairs: every ordering of both bases.
            std::vector<const std::vector<Piece> *> slots;
            for (int v : A)
                slots.push_back(&stub[static_cast<std::size_t>(v)]);
            for (int v : B)
                slots.push_back(&stub[static_cast<std::size_t>(v)]);
            std::vector<const Piece *> chosen;
            search.combine(slots, 0, VertexSet{}, chosen, [&] {
                std::array<int, 3> pa{0, 1, 2};
                do {
                    std::array<int, 3> pb{0, 1, 2};
                    do {
                        Frame f;
                        for (std::size_t i = 0; i < 3; ++i) {
                            const Piece & x = *chosen[static_cast<std::size_t>(pa[i])];
                            const Piece & y = *chosen[3 + static_cast<std::size_t>(pb[i])];
                            f.a[i] = x.front();
                            f.b[i] = y.front();
                            f.a_side[i] = x;
                            f.b_side[i] = y;
                        }
                        search.offer(f);
                    } while (!search.stopped && std::next_permutation(pb.begin(), pb.end()));
                } while (!search.stopped && std::next_permutation(pa.begin(), pa.end()));
            });
        }
}

void enumerate_ordered_frames(const Graph & g, int ell, const std::function<bool(const Frame &)> & visit)
{
    enumerate_ordered_frames(g, ell, g.vertices(), visit);
}

} // namespace longhole
