#include "longhole/audit.hpp"
#include "longhole/harness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace longhole;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

auto read_input(const std::string & path) -> std::string
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Odd ell rounds up; ell <= 4 can only mean "any even hole", which the oracle answers directly.
struct Normalized {
    int ell;
    std::string engine;
};

auto normalize(int ell, const std::string & engine) -> Normalized
{
    if (ell <= 4)
        return {4, "oracle"};
    if (ell % 2 != 0)
        ++ell;
    return {ell, engine};
}

void print_report(const RunReport & r, bool json)
{
    if (json) {
        std::cout << to_json(r) << '\n';
        return;
    }
    std::cout << "verdict: " << (!r.decided ? "undecided" : r.verdict ? "yes" : "no") << '\n'
              << "stage: " << r.stage << '\n';
    if (r.witness)
        std::cout << "witness: " << to_string(*r.witness) << '\n';
    std::cout << "elapsed_ms: " << r.elapsed_ms << '\n';
}

auto parse_doubles(const std::string & s) -> std::vector<double>
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stod(item));
    if (out.empty())
        throw InputError("expected a comma-separated list of numbers");
    return out;
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Detect long even holes"};
    app.require_subcommand(1);

    int ell = 6;
    std::string input = "-";
    std::string format = "graph6";
    std::string engine = "pipeline";
    bool json = false;
    long timeout_ms = 0;

    auto * detect = app.add_subcommand("detect", "Decide whether a graph has an even hole of length >= l");
    detect->add_option("--l", ell, "Minimum hole length")->required();
    detect->add_option("--input", input, "Graph file, '-' for stdin");
    detect->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
    detect->add_option("--engine", engine)->check(CLI::IsMember({"pipeline", "oracle"}));
    detect->add_option("--timeout-ms", timeout_ms, "Give up after this long (0: never)");
    detect->add_flag("--json", json);
    bool no_gate = false;
    detect->add_flag("--no-gate", no_gate, "Run every stage even without a hole longer than 2l");

    FuzzConfig fc;
    std::string ps = "0.1,0.2,0.3,0.4,0.5";
    long fuzz_timeout = 120000;
    std::string out_dir;
    auto * fz = app.add_subcommand("fuzz", "Differential run of the pipeline against the oracle");
    fz->add_option("--count", fc.count)->required();
    fz->add_option("--n-min", fc.n_min);
    fz->add_option("--n-max", fc.n_max);
    fz->add_option("--p", ps, "Edge probability or comma-separated list");
    fz->add_option("--l", fc.ell);
    fz->add_option("--seed", fc.seed);
    fz->add_option("--timeout-ms", fuzz_timeout);
    fz->add_option("--threads", fc.threads);
    fz->add_option("--out", out_dir, "Directory for counterexamples and the manifest");
    fz->add_flag("--no-gate", no_gate, "Run every stage even without a hole longer than 2l");

    int audit_objects = 4;
    auto * audit = app.add_subcommand("audit", "Check the structural lemmas on a certified graph");
    audit->add_option("--l", ell)->required();
    audit->add_option("--input", input);
    audit->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
    audit->add_option("--max-objects", audit_objects);

    std::string kind;
    std::uint64_t seed = 0;
    GenParams gp;
    std::string lengths;
    std::string out_path;
    auto * gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--kind", kind)->required()->check(
        CLI::IsMember({"gnp", "cycle", "planted-hole", "planted-prism", "planted-theta"}));
    gen->add_option("--seed", seed);
    gen->add_option("--n", gp.n);
    gen->add_option("--p", gp.p);
    gen->add_option("--lengths", lengths, "Comma-separated path or hole lengths");
    gen->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
    gen->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*detect) {
            Graph g = parse_graph(read_input(input), parse_format(format));
            auto norm = normalize(ell, engine);
            std::optional<std::chrono::milliseconds> t;
            if (timeout_ms > 0)
                t = std::chrono::milliseconds(timeout_ms);
            PipelineOptions opts;
            opts.long_hole_gate = !no_gate;
            auto r = run_detect(g, norm.ell, norm.engine, t, opts);
            if (r.witness && !is_hole(g, *r.witness))
                throw InvariantViolation("witness failed revalidation");
            print_report(r, json);
        } else if (*fz) {
            fc.ps = parse_doubles(ps);
            fc.options.long_hole_gate = !no_gate;
            fc.timeout = std::chrono::milliseconds(fuzz_timeout);
            if (!out_dir.empty())
                fc.out = out_dir;
            fc.ell = normalize(fc.ell, "pipeline").ell;
            if (fc.ell < 6)
                throw InputError("fuzz needs l >= 5");
            std::cout << to_json(fuzz(fc)) << '\n';
        } else if (*audit) {
            Graph g = parse_graph(read_input(input), parse_format(format));
            auto norm = normalize(ell, "pipeline");
            if (norm.ell < 6)
                throw InputError("audit needs l >= 5");
            auto r = audit_lemmas(g, EdgeOrder::canonical(g), norm.ell, audit_objects);
            nlohmann::json j;
            j["prospect"] = r.prospect;
            j["candidate"] = r.candidate;
            j["prisms_audited"] = r.prisms_audited;
            j["holes_audited"] = r.holes_audited;
            j["checks"] = r.checks;
            auto & vs = j["violations"] = nlohmann::json::array();
            for (const auto & v : r.violations)
                vs.push_back({{"lemma", v.lemma}, {"witness", v.witness}, {"detail", v.detail}});
            std::cout << j.dump(2) << '\n';
        } else if (*gen) {
            if (!lengths.empty())
                for (double x : parse_doubles(lengths))
                    gp.lengths.push_back(static_cast<int>(x));
            auto inst = generate(kind, gp, seed);
            std::string text = format == "graph6" ? encode_graph6(inst.graph) + "\n" : encode_edgelist(inst.graph);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream(out_path) << text;
            }
            std::cerr << inst.provenance << '\n';
        }
    } catch (const InputError & e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument & e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InvariantViolation & e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    }
    return 0;
}
