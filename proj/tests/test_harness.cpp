#include "corpus.hpp"

#include "longhole/cancellation.hpp"
#include "longhole/errors.hpp"
#include "longhole/families.hpp"
#include "longhole/harness.hpp"
#include "longhole/oracle.hpp"

#include <doctest.h>
#include <json.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>

using namespace longhole;

TEST_SUITE("harness")
{
    TEST_CASE("graph6 round trip")
    {
        Graph g = decode_graph6("D~{");
        CHECK(g.order() == 5);
        CHECK(encode_graph6(g) == "D~{");
        CHECK(encode_graph6(empty_graph(0)) == "?");
        CHECK(encode_graph6(complete_graph(2)) == "A_");
        CHECK(decode_graph6(">>graph6<<A_\n") == complete_graph(2));
        Graph big = cycle_graph(100);
        const std::string s = encode_graph6(big);
        CHECK(s.substr(0, 4) == "~?@c");
        CHECK(decode_graph6(s) == big);
    }

    TEST_CASE("graph6 rejects malformed input")
    {
        CHECK_THROWS_AS(decode_graph6(""), ParseError);
        CHECK_THROWS_AS(decode_graph6("D~"), ParseError);
        CHECK_THROWS_AS(decode_graph6("D~{?"), ParseError);
        CHECK_THROWS_AS(decode_graph6("D~|"), ParseError); // padding bit set
        CHECK_THROWS_AS(decode_graph6("D~ {"), ParseError);
        try {
            decode_graph6("D~\x01");
            FAIL("expected a parse error");
        } catch (const ParseError & e) {
            CHECK(e.offset() == 2);
        }
    }

    TEST_CASE("edge lists")
    {
        Graph p = parse_graph("0 1\n1 2\n", Format::edgelist);
        CHECK(p == path_graph(3));
        CHECK_THROWS_AS(parse_graph("0 0\n", Format::edgelist), InputError);
        CHECK_THROWS_AS(parse_graph("0 1\n1 0\n", Format::edgelist), InputError);
        CHECK_THROWS_AS(parse_graph("0 x\n", Format::edgelist), InputError);
        Graph iso = parse_graph("# vertices 4\n# comment\n\n0 1\n", Format::edgelist);
        CHECK(iso.order() == 4);
        CHECK(decode_edgelist(encode_edgelist(petersen_graph())) == petersen_graph());
        CHECK(decode_edgelist(encode_edgelist(empty_graph(3))) == empty_graph(3));
        CHECK_THROWS_AS(parse_format("dot"), InputError);
    }

    TEST_CASE("generators")
    {
        CHECK(generate("cycle", {14, 0.0, {}}, 1).graph == cycle_graph(14));
        auto a = generate("gnp", {14, 0.2, {}}, 42).graph;
        auto b = generate("gnp", {14, 0.2, {}}, 42).graph;
        CHECK(a == b);
        CHECK_FALSE(a == generate("gnp", {14, 0.2, {}}, 43).graph);
        auto prism = generate("planted-prism", {0, 0.0, {2, 7, 7}}, 3).graph;
        CHECK(oracle::configuration(prism, 6, oracle::Kind::near_prism).verdict);
        auto theta = generate("planted-theta", {3, 0.0, {5, 5, 7}}, 3).graph;
        CHECK(oracle::configuration(theta, 6, oracle::Kind::theta).verdict);
        CHECK_THROWS_AS(generate("torus", {5, 0.1, {}}, 1), InputError);
        CHECK_THROWS_AS(generate("gnp", {5, 1.5, {}}, 1), InputError);
        CHECK(derive_seed(1, 2) == derive_seed(1, 2));
        CHECK(derive_seed(1, 2) != derive_seed(1, 3));
    }

    TEST_CASE("both engines agree on cycles")
    {
        for (int i = 0; i < 100; ++i) {
            const int n = 4 + i % 27;
            Graph c = cycle_graph(n);
            auto p = run_detect(c, 6, "pipeline");
            auto o = run_detect(c, 6, "oracle");
            CHECK(p.verdict == o.verdict);
            CHECK(p.verdict == (n % 2 == 0 && n >= 6));
        }
    }

    TEST_CASE("run reports")
    {
        auto r = run_detect(cycle_graph(6), 6, "pipeline");
        auto j = nlohmann::json::parse(to_json(r));
        CHECK(j["verdict"] == "yes");
        CHECK(j["stage"] == "short-hole");
        CHECK(j["witness"].size() == 6);
        CHECK(j["fingerprint"].get<std::string>().size() == 16);
        auto o = nlohmann::json::parse(to_json(run_detect(cycle_graph(7), 6, "oracle")));
        CHECK(o["verdict"] == "no");
        CHECK(o["witness"].is_null());
        CHECK_THROWS_AS(run_detect(cycle_graph(7), 6, "magic"), InputError);
    }

    TEST_CASE("cancellation")
    {
        std::atomic<bool> stop{true};
        ScopedDeadline guard(std::nullopt, &stop);
        CHECK_THROWS_AS(detect_long_even_hole(cycle_graph(30), 6), Cancelled);
    }

    TEST_CASE("fuzz")
    {
        FuzzConfig empty;
        auto e = fuzz(empty);
        CHECK(e.instances == 0);
        CHECK(e.agreement_rate() == 1.0);

        FuzzConfig fc;
        fc.count = 10;
        fc.n_min = 6;
        fc.n_max = 10;
        fc.ps = {0.3};
        fc.seed = 1;
        fc.out = std::filesystem::temp_directory_path() / "longhole_fuzz_unit";
        auto r = fuzz(fc);
        CHECK(r.instances == 10);
        CHECK(r.agreements == 10);
        CHECK(std::filesystem::exists(*fc.out / "manifest.json"));
        auto j = nlohmann::json::parse(std::ifstream(*fc.out / "manifest.json"));
        CHECK(j["agreements"] == 10);
    }

    TEST_CASE("shrinking keeps the failure and drops the rest")
    {
        // "Bad" means: contains an induced C_6.
        auto bad = [](const Graph & h) { return oracle::bounded_long_even_hole(h, 6, 6).verdict; };
        std::mt19937_64 rng(3);
        Graph g = disjoint_union(cycle_graph(6), testing::random_graph(rng, 8, 0.3));
        REQUIRE(bad(g));
        Graph s = shrink(g, bad);
        CHECK(bad(s));
        CHECK(s == cycle_graph(6));
    }
}
