#include "longhole/harness.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace longhole {

namespace {

    auto splitmix(std::uint64_t x) -> std::uint64_t
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    // std distributions are not specified bit-exactly, so draw by hand.
    struct Rng {
        std::mt19937_64 engine;

        explicit Rng(std::uint64_t seed) : engine(seed) {}
        auto unit() -> double { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }
        auto below(std::uint64_t k) -> std::uint64_t { return engine() % k; }
    };

    struct Builder {
        int n = 0;
        std::set<Edge> edges;

        auto add_vertex() -> int { return n++; }
        void add_edge(int u, int v) { edges.insert({std::min(u, v), std::max(u, v)}); }
        // Internal vertices of a u-v path with the given number of edges.
        void add_path(int u, int v, int length)
        {
            int prev = u;
            for (int i = 1; i < length; ++i) {
                int w = add_vertex();
                add_edge(prev, w);
                prev = w;
            }
            add_edge(prev, v);
        }
    };

    // Each vertex sees every earlier vertex independently with probability p.
    void add_random(Builder & b, int count, double p, Rng & rng)
    {
        for (int i = 0; i < count; ++i) {
            const int v = b.add_vertex();
            for (int u = 0; u < v; ++u)
                if (rng.unit() < p)
                    b.add_edge(u, v);
        }
    }

    // Noise around a planted structure: each new vertex hangs off one earlier vertex and sees
    // every other earlier vertex with probability p.
    void add_noise(Builder & b, int count, double p, Rng & rng)
    {
        for (int i = 0; i < count; ++i) {
            const int v = b.add_vertex();
            const int anchor = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
            for (int u = 0; u < v; ++u)
                if (u == anchor || rng.unit() < p)
                    b.add_edge(u, v);
        }
    }

    auto relabel(const Builder & b, Rng & rng) -> Graph
    {
        std::vector<int> perm(static_cast<std::size_t>(b.n));
        std::iota(perm.begin(), perm.end(), 0);
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[rng.below(i)]);
        std::vector<Edge> edges;
        for (auto [u, v] : b.edges)
            edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        return Graph(b.n, edges);
    }

    void require(bool ok, const std::string & what)
    {
        if (!ok)
            throw InputError("generate: " + what);
    }

} // namespace

auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t
{
    return splitmix(seed ^ splitmix(index));
}

auto generate(std::string_view kind, const GenParams & params, std::uint64_t seed) -> Instance
{
    Rng rng(seed);
    Builder b;
    std::ostringstream prov;
    prov << kind << " n=" << params.n << " p=" << params.p;
    if (!params.lengths.empty()) {
        prov << " lengths=";
        for (std::size_t i = 0; i < params.lengths.size(); ++i)
            prov << (i ? "," : "") << params.lengths[i];
    }
    prov << " seed=" << seed;
    require(params.p >= 0.0 && params.p <= 1.0, "p must lie in [0,1]");
    require(params.n >= 0 && params.n <= kMaxVertices, "n out of range");

    if (kind == "gnp") {
        add_random(b, params.n, params.p, rng);
        return {Graph(b.n, std::vector<Edge>(b.edges.begin(), b.edges.end())), 6, seed, prov.str()};
    }
    if (kind == "cycle") {
        require(params.n >= 3, "cycle needs n >= 3");
        for (int i = 0; i < params.n; ++i)
            b.add_vertex();
        for (int i = 0; i < params.n; ++i)
            b.add_edge(i, (i + 1) % params.n);
        return {Graph(b.n, std::vector<Edge>(b.edges.begin(), b.edges.end())), 6, seed, prov.str()};
    }
    if (kind == "planted-hole") {
        require(params.lengths.size() == 1 && params.lengths[0] >= 4, "planted-hole needs one length >= 4");
        const int len = params.lengths[0];
        for (int i = 0; i < len; ++i)
            b.add_vertex();
        for (int i = 0; i < len; ++i)
            b.add_edge(i, (i + 1) % len);
    } else if (kind == "planted-prism") {
        require(params.lengths.size() == 3, "planted-prism needs three lengths");
        for (int l : params.lengths)
            require(l >= 1, "prism path lengths must be >= 1");
        std::array<int, 3> a{}, c{};
        for (auto & v : a)
            v = b.add_vertex();
        for (auto & v : c)
            v = b.add_vertex();
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                b.add_edge(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]);
                b.add_edge(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
            }
        for (std::size_t i = 0; i < 3; ++i)
            b.add_path(a[i], c[i], params.lengths[i]);
    } else if (kind == "planted-theta") {
        require(params.lengths.size() == 3, "planted-theta needs three lengths");
        for (int l : params.lengths)
            require(l >= 2, "theta path lengths must be >= 2");
        const int u = b.add_vertex();
        const int v = b.add_vertex();
        for (int l : params.lengths)
            b.add_path(u, v, l);
    } else {
        throw InputError("generate: unknown kind " + std::string(kind));
    }
    require(b.n + params.n <= kMaxVertices, "instance too large");
    add_noise(b, params.n, params.p, rng);
    return {relabel(b, rng), 6, seed, prov.str()};
}

} // namespace longhole
