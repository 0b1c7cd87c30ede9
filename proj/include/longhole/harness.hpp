#pragma once

#include "longhole/errors.hpp"
#include "longhole/even_hole.hpp"
#include "longhole/graph.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace longhole {

// Malformed encoded input; offset is the byte where decoding failed.
class ParseError : public InputError {
  public:
    ParseError(const std::string & what, std::size_t offset)
        : InputError(what + " at byte " + std::to_string(offset)), offset_(offset)
    {
    }
    [[nodiscard]] auto offset() const -> std::size_t { return offset_; }

  private:
    std::size_t offset_;
};

enum class Format { graph6, edgelist };

auto parse_format(std::string_view name) -> Format;
auto parse_graph(std::string_view bytes, Format format) -> Graph;

// Leading/trailing whitespace and an optional ">>graph6<<" header are accepted.
auto decode_graph6(std::string_view text) -> Graph;
auto encode_graph6(const Graph & g) -> std::string;

// One "u v" pair per line, 0-indexed; blank lines and '#' comments ignored. The vertex count is
// one more than the largest id unless a "# vertices N" comment says otherwise.
auto decode_edgelist(std::string_view text) -> Graph;
auto encode_edgelist(const Graph & g) -> std::string;

struct GenParams {
    int n = 0;                // gnp/cycle order, or the number of noise vertices for planted kinds
    double p = 0.0;           // gnp edge probability, or extra-edge probability for noise vertices
    std::vector<int> lengths; // planted-hole: {length}; planted-prism / planted-theta: three path lengths
};

struct Instance {
    Graph graph;
    int ell = 6;
    std::uint64_t seed = 0;
    std::string provenance;
};

// kind: gnp | cycle | planted-hole | planted-prism | planted-theta. Pure in (kind, params, seed).
auto generate(std::string_view kind, const GenParams & params, std::uint64_t seed) -> Instance;

// Seeds for the i-th instance of a run, derived from the run seed.
auto derive_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t;

struct RunReport {
    bool decided = true; // false when the timeout expired
    bool verdict = false;
    std::string engine = "pipeline";
    std::string stage = "none";
    std::optional<std::vector<int>> witness;
    double elapsed_ms = 0.0;
    std::string fingerprint;
    int ell = 6;
};

auto fingerprint(const Graph & g) -> std::string;
auto to_json(const RunReport & r) -> std::string;

// ell must already be normalized; engine "oracle" uses the brute-force search. A timeout gives an
// undecided report.
auto run_detect(const Graph & g, int ell, std::string_view engine,
                std::optional<std::chrono::milliseconds> timeout = std::nullopt,
                const PipelineOptions & options = {}) -> RunReport;

struct FuzzConfig {
    int count = 0;
    int n_min = 6, n_max = 16;
    std::vector<double> ps{0.1, 0.2, 0.3, 0.4, 0.5};
    int ell = 6;
    std::uint64_t seed = 1;
    std::chrono::milliseconds timeout{120000};
    int threads = 0; // 0: LONGHOLE_THREADS or hardware concurrency
    std::optional<std::filesystem::path> out;
    bool shrink = true;
    PipelineOptions options;
};

struct Counterexample {
    std::uint64_t seed = 0;
    std::string graph6;
    std::string original_graph6;
    bool pipeline = false, oracle = false;
    std::string note;
};

struct FuzzReport {
    int instances = 0;
    int decided = 0;
    int agreements = 0;
    int undecided = 0;
    int invariant_violations = 0;
    std::vector<Counterexample> counterexamples;
    std::map<std::string, int> stages;
    double p50_ms = 0, p90_ms = 0, p99_ms = 0, max_ms = 0;

    [[nodiscard]] auto agreement_rate() const -> double
    {
        return decided == 0 ? 1.0 : static_cast<double>(agreements) / decided;
    }
};

auto fuzz(const FuzzConfig & config) -> FuzzReport;
auto to_json(const FuzzReport & r) -> std::string;

// Greedy vertex deletion, then edge deletion, while still_bad holds.
auto shrink(const Graph & g, const std::function<bool(const Graph &)> & still_bad) -> Graph;

} // namespace longhole
