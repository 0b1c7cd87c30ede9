#include "longhole/cancellation.hpp"
#include "longhole/harness.hpp"
#include "longhole/oracle.hpp"

#include <json.hpp>

#include <cstdio>

namespace longhole {

auto fingerprint(const Graph & g) -> std::string
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : encode_graph6(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

auto to_json(const RunReport & r) -> std::string
{
    nlohmann::json j;
    j["verdict"] = !r.decided ? "undecided" : r.verdict ? "yes" : "no";
    j["engine"] = r.engine;
    j["stage"] = r.stage;
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
    j["elapsed_ms"] = r.elapsed_ms;
    j["fingerprint"] = r.fingerprint;
    j["l"] = r.ell;
    return j.dump();
}

auto run_detect(const Graph & g, int ell, std::string_view engine, std::optional<std::chrono::milliseconds> timeout,
                const PipelineOptions & options) -> RunReport
{
    RunReport r;
    r.engine = std::string(engine);
    r.ell = ell;
    r.fingerprint = fingerprint(g);
    const auto start = std::chrono::steady_clock::now();
    std::optional<ScopedDeadline::clock::time_point> deadline;
    if (timeout)
        deadline = ScopedDeadline::clock::now() + *timeout;
    ScopedDeadline guard(deadline);
    try {
        if (engine == "oracle") {
            auto o = oracle::long_even_hole(g, ell);
            r.verdict = o.verdict;
            r.stage = o.verdict ? "oracle" : "none";
            if (o.verdict)
                r.witness = o.witness;
        } else if (engine == "pipeline") {
            auto p = detect_long_even_hole(g, ell, options);
            r.verdict = p.found();
            r.stage = std::string(stage_name(p.stage));
            if (p.hole)
                r.witness = p.hole->cycle;
        } else {
            throw InputError("unknown engine: " + std::string(engine));
        }
    } catch (const Cancelled &) {
        r.decided = false;
        r.verdict = false;
        r.stage = "none";
        r.witness.reset();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

auto to_json(const FuzzReport & r) -> std::string
{
    nlohmann::json j;
    j["instances"] = r.instances;
    j["decided"] = r.decided;
    j["agreements"] = r.agreements;
    j["undecided"] = r.undecided;
    j["invariant_violations"] = r.invariant_violations;
    j["agreement_rate"] = r.agreement_rate();
    j["stages"] = r.stages;
    j["timing_ms"] = {{"p50", r.p50_ms}, {"p90", r.p90_ms}, {"p99", r.p99_ms}, {"max", r.max_ms}};
    auto & ces = j["counterexamples"] = nlohmann::json::array();
    for (const auto & c : r.counterexamples)
        ces.push_back({{"seed", c.seed},
                       {"graph6", c.graph6},
                       {"original_graph6", c.original_graph6},
                       {"pipeline", c.pipeline},
                       {"oracle", c.oracle},
                       {"note", c.note}});
    return j.dump(2);
}

} // namespace longhole
