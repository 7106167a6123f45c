#include <doctest.h>

#include "oracle.hpp"
#include "persuasion/errors.hpp"
#include "persuasion/generate.hpp"
#include "persuasion/io.hpp"
#include "persuasion/reduction.hpp"

using namespace persuasion;
using testutil::worked_eci;

TEST_CASE("ppi round-trip on the worked reduced instance") {
    const ReductionArtifact art = reduce(worked_eci());
    const std::string text = render_ppi(art.instance);
    const PersuasionInstance reparsed = parse_ppi(text);
    CHECK(reparsed == art.instance);
    CHECK(render_ppi(reparsed) == text);  // byte-stable across a round trip

    // Exactness survives serialization.
    const ProbabilitySpace &space = reparsed.space;
    const Observation r3({*space.event_by_name("F3")});
    const Observation r13({*space.event_by_name("F1"), *space.event_by_name("F3")});
    CHECK(posterior(reparsed, r3) == rational(11, 21));
    CHECK(posterior(reparsed, r13) == rational(21, 41));
}

TEST_CASE("ppi parse failures carry line numbers and invariants") {
    SUBCASE("normalization checked on load") {
        const std::string text =
            "world a 1/2\n"
            "world b 9/20\n"  // sums to 19/20
            "goal a\n"
            "threshold 1/2\n";
        CHECK_THROWS_WITH_AS(parse_ppi(text), doctest::Contains("Normalization"), ParseError);
    }
    SUBCASE("syntax errors name the line") {
        try {
            parse_ppi("world a 1/1\nwat\ngoal a\nthreshold 1/1\n");
            FAIL("expected ParseError");
        } catch (const ParseError &e) {
            CHECK(e.line == 2);
        }
    }
    SUBCASE("unknown labels rejected") {
        CHECK_THROWS_AS(parse_ppi("world a 1/1\ngoal b\nthreshold 1/1\n"), ParseError);
    }
    SUBCASE("missing sections rejected") {
        CHECK_THROWS_AS(parse_ppi("world a 1/1\ngoal a\n"), ParseError);
        CHECK_THROWS_AS(parse_ppi("world a 1/1\nthreshold 1/2\n"), ParseError);
    }
    SUBCASE("threshold outside [0,1] rejected") {
        CHECK_THROWS_AS(parse_ppi("world a 1/1\ngoal a\nthreshold 3/2\n"), ParseError);
    }
}

TEST_CASE("eci fixture file parses to the worked instance") {
    const std::string text =
        "universe 2\n"
        "set A1 1\n"
        "set A2 2\n"
        "set A3 1 2\n";
    const ExactCoverInstance eci = parse_eci(text);
    CHECK(eci == worked_eci());
    CHECK(render_eci(eci) == text);
}

TEST_CASE("eci parse enforces instance invariants") {
    CHECK_THROWS_AS(parse_eci("universe 2\nset A1 1\n"), InvalidECI);          // uncovered
    CHECK_THROWS_AS(parse_eci("universe 1\nset A1 1\nset A2 1\n"), InvalidECI);  // duplicate
    CHECK_THROWS_AS(parse_eci("universe 1\nset A1 2\n"), InvalidECI);  // out of range
    CHECK_THROWS_AS(parse_eci("set A1 1\n"), ParseError);              // before universe
}

TEST_CASE("round-trip identity on generated instances") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const ExactCoverInstance eci = gen_eci({seed, 1, 6, 1, 7, seed % 2 == 0});
        CHECK(parse_eci(render_eci(eci)) == eci);

        PpiGenConfig cfg;
        cfg.seed = seed;
        const PersuasionInstance inst = gen_ppi(cfg);
        CHECK(parse_ppi(render_ppi(inst)) == inst);
    }
}

TEST_CASE("generators are seed-deterministic") {
    for (std::uint64_t seed : {1ULL, 77ULL, 123456789ULL}) {
        CHECK(render_eci(gen_eci({seed, 1, 6, 1, 7, false})) ==
              render_eci(gen_eci({seed, 1, 6, 1, 7, false})));
        PpiGenConfig cfg;
        cfg.seed = seed;
        CHECK(render_ppi(gen_ppi(cfg)) == render_ppi(gen_ppi(cfg)));
    }
}

TEST_CASE("planted instances are solvable, all outputs valid") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const ExactCoverInstance planted = gen_eci({seed, 2, 8, 2, 9, true});
        CHECK(exact_cover_dlx(planted).solvable);

        PpiGenConfig cfg;
        cfg.seed = seed;
        cfg.strictly_positive = seed % 2 == 0;
        const PersuasionInstance inst = gen_ppi(cfg);
        CHECK(validate_space(inst.space).empty());
        if (cfg.strictly_positive)
            for (const Rational &p : inst.space.prob) CHECK(p > Rational(0));
    }
}

TEST_CASE("roles sidecar carries the reduction parameters") {
    const std::string json = render_roles_json(reduce(worked_eci()));
    CHECK(json.find("\"tau\": \"11/21\"") != std::string::npos);
    CHECK(json.find("\"y\": \"1/60\"") != std::string::npos);
    CHECK(json.find("\"Y_3_2\"") != std::string::npos);
    CHECK(json.find("\"A3\": \"F3\"") != std::string::npos);
}
