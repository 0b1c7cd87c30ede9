#include "longhole/cancellation.hpp"
#include "longhole/harness.hpp"
#include "longhole/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace longhole {

namespace {

    struct Outcome {
        std::uint64_t seed = 0;
        Graph graph;
        RunReport pipeline;
        bool oracle = false;
        bool violation = false;
        std::string note;
    };

    auto worker_count(int requested) -> int
    {
        if (requested > 0)
            return requested;
        if (const char * env = std::getenv("LONGHOLE_THREADS")) {
            int n = std::atoi(env);
            if (n > 0)
                return n;
        }
        return std::max(1U, std::thread::hardware_concurrency());
    }

    auto percentile(std::vector<double> xs, double q) -> double
    {
        if (xs.empty())
            return 0.0;
        std::sort(xs.begin(), xs.end());
        auto i = static_cast<std::size_t>(q * static_cast<double>(xs.size() - 1) + 0.5);
        return xs[std::min(i, xs.size() - 1)];
    }

    auto run_one(const FuzzConfig & config, int index) -> Outcome
    {
        Outcome o;
        o.seed = derive_seed(config.seed, static_cast<std::uint64_t>(index));
        const int span = config.n_max - config.n_min + 1;
        GenParams params;
        params.n = config.n_min + static_cast<int>(o.seed % static_cast<std::uint64_t>(span));
        params.p = config.ps[static_cast<std::size_t>(index) % config.ps.size()];
        o.graph = generate("gnp", params, o.seed).graph;
        try {
            o.pipeline = run_detect(o.graph, config.ell, "pipeline", config.timeout, config.options);
            if (o.pipeline.witness && !is_long_even_hole(o.graph, *o.pipeline.witness, config.ell)) {
                o.violation = true;
                o.note = "witness failed revalidation";
            }
        } catch (const InvariantViolation & e) {
            o.violation = true;
            o.note = e.what();
        }
        o.oracle = oracle::long_even_hole(o.graph, config.ell).verdict;
        return o;
    }

} // namespace

auto shrink(const Graph & g, const std::function<bool(const Graph &)> & still_bad) -> Graph
{
    Graph cur = g;
    auto drop_vertex = [&] {
        for (int v = 0; v < cur.order(); ++v) {
            std::vector<int> keep;
            for (int u = 0; u < cur.order(); ++u)
                if (u != v)
                    keep.push_back(u);
            Graph h = cur.induced_subgraph(keep);
            if (still_bad(h)) {
                cur = h;
                return true;
            }
        }
        return false;
    };
    auto drop_edge = [&] {
        for (auto [u, v] : cur.edges()) {
            Graph h = cur.without_edge(u, v);
            if (still_bad(h)) {
                cur = h;
                return true;
            }
        }
        return false;
    };
    bool changed = true;
    while (changed) {
        while (drop_vertex()) {
        }
        changed = drop_edge();
    }
    return cur;
}

auto fuzz(const FuzzConfig & config) -> FuzzReport
{
    if (config.count < 0 || config.n_min < 0 || config.n_max < config.n_min || config.ps.empty())
        throw InputError("fuzz: invalid configuration");
    std::vector<Outcome> outcomes(static_cast<std::size_t>(config.count));
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next++; i < config.count; i = next++)
            outcomes[static_cast<std::size_t>(i)] = run_one(config, i);
    };
    const int workers = std::min(worker_count(config.threads), std::max(1, config.count));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(work);
        for (auto & t : pool)
            t.join();
    }

    FuzzReport r;
    std::vector<double> times;
    for (const auto & o : outcomes) {
        ++r.instances;
        times.push_back(o.pipeline.elapsed_ms);
        if (o.violation) {
            ++r.invariant_violations;
            Graph small = o.graph;
            if (config.shrink)
                small = shrink(o.graph, [&](const Graph & h) {
                    try {
                        (void)run_detect(h, config.ell, "pipeline", config.timeout, config.options);
                        return false;
                    } catch (const InvariantViolation &) {
                        return true;
                    }
                });
            r.counterexamples.push_back({o.seed, encode_graph6(small), encode_graph6(o.graph), false,
                                         oracle::long_even_hole(small, config.ell).verdict, o.note});
            continue;
        }
        if (!o.pipeline.decided) {
            ++r.undecided;
            continue;
        }
        ++r.decided;
        ++r.stages[o.pipeline.stage];
        if (o.pipeline.verdict == o.oracle) {
            ++r.agreements;
            continue;
        }
        Graph small = o.graph;
        if (config.shrink)
            small = shrink(o.graph, [&](const Graph & h) {
                try {
                    auto p = run_detect(h, config.ell, "pipeline", config.timeout, config.options);
                    return p.decided && p.verdict != oracle::long_even_hole(h, config.ell).verdict;
                } catch (const InvariantViolation &) {
                    return false;
                }
            });
        r.counterexamples.push_back({o.seed, encode_graph6(small), encode_graph6(o.graph), o.pipeline.verdict, o.oracle,
                                     "verdict mismatch"});
    }
    r.p50_ms = percentile(times, 0.5);
    r.p90_ms = percentile(times, 0.9);
    r.p99_ms = percentile(times, 0.99);
    r.max_ms = times.empty() ? 0.0 : *std::max_element(times.begin(), times.end());

    if (config.out) {
        std::filesystem::create_directories(*config.out);
        std::ofstream g6(*config.out / "counterexamples.g6");
        for (const auto & c : r.counterexamples)
            g6 << c.graph6 << '\n';
        std::ofstream(*config.out / "manifest.json") << to_json(r) << '\n';
    }
    return r;
}

} // namespace longhole
