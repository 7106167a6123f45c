#include <doctest.h>

#include "oracle.hpp"
#include "persuasion/errors.hpp"
#include "persuasion/generate.hpp"
#include "persuasion/reduction.hpp"
#include "persuasion/solvers.hpp"

using namespace persuasion;
using testutil::unsolvable_eci;
using testutil::worked_eci;

TEST_CASE("reduce: worked instance parameters and structure") {
    const ReductionArtifact art = reduce(worked_eci());

    CHECK(art.params.n == 2);
    CHECK(art.params.k == 3);
    CHECK(art.params.m == 4);
    CHECK(art.params.x == rational(1, 3));
    CHECK(art.params.y == rational(1, 60));
    CHECK(art.params.z == rational(2, 15));
    CHECK(art.params.tau == rational(11, 21));
    CHECK(art.instance.threshold == rational(11, 21));

    const ProbabilitySpace &space = art.instance.space;
    REQUIRE(space.world_count() == 8);
    // Canonical order: sentinels, Y by (subset, element), Z by element.
    const std::vector<std::string> expected = {"W0",    "X0",    "Y_1_1", "Y_2_2",
                                               "Y_3_1", "Y_3_2", "Z_1",   "Z_2"};
    for (std::size_t w = 0; w < 8; ++w) CHECK(space.worlds[w].label == expected[w]);

    // F3 excludes exactly its Y worlds and the Z worlds of its elements.
    const WorldSet &f3 = space.events[*space.event_by_name("F3")].members;
    for (const char *label : {"Y_3_1", "Y_3_2", "Z_1", "Z_2"})
        CHECK_FALSE(f3.test(*space.world_by_label(label)));
    for (const char *label : {"W0", "X0", "Y_1_1", "Y_2_2"})
        CHECK(f3.test(*space.world_by_label(label)));

    // E = W union Y.
    CHECK(art.instance.goal.count() == 5);
    CHECK(art.instance.goal.test(*space.world_by_label("W0")));
    CHECK_FALSE(art.instance.goal.test(*space.world_by_label("X0")));
    CHECK_FALSE(art.instance.goal.test(*space.world_by_label("Z_1")));

    CHECK(validate_space(space).empty());
}

TEST_CASE("reduce: parameter identities on seeded instances") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        const ExactCoverInstance eci = gen_eci({seed, 1, 6, 1, 7, seed % 4 == 0});
        const ReductionArtifact art = reduce(eci);
        const auto &p = art.params;
        const Rational m(static_cast<long long>(p.m));
        const Rational n(static_cast<long long>(p.n));

        CHECK(p.z == Rational(2) * m * p.y);
        CHECK(Rational(2) * p.x + m * p.y + n * p.z == Rational(1));
        CHECK(p.tau == (p.x + (m - n) * p.y) / (Rational(2) * p.x + (m - n) * p.y));
        CHECK(p.y > Rational(0));
        CHECK(p.z > p.y);
        CHECK(p.z < Rational(1));
        CHECK(p.tau >= rational(1, 2));
        CHECK(p.tau < Rational(1));

        Rational total(0);
        for (const Rational &pr : art.instance.space.prob) total += pr;
        CHECK(total == Rational(1));

        // No event rejects the sentinels; F_i rejects |A_i| of each role.
        for (std::size_t i = 0; i < p.k; ++i) {
            const WorldSet &members = art.instance.space.events[art.event_of_subset[i]].members;
            CHECK(members.test(0));
            CHECK(members.test(1));
            std::size_t dropped_y = 0, dropped_z = 0;
            for (std::size_t w = 0; w < art.roles.size(); ++w) {
                if (members.test(w)) continue;
                if (art.roles[w].kind == WorldRole::Kind::Y) ++dropped_y;
                if (art.roles[w].kind == WorldRole::Kind::Z) ++dropped_z;
            }
            CHECK(dropped_y == eci.subsets[i].size());
            CHECK(dropped_z == eci.subsets[i].size());
        }
    }
}

TEST_CASE("reduce: degenerate single-element instance has tau = 1/2") {
    ExactCoverInstance tiny;
    tiny.universe_size = 1;
    tiny.subset_names = {"A1"};
    tiny.subsets = {{1}};
    const ReductionArtifact art = reduce(tiny);
    CHECK(art.params.m == 1);
    CHECK(art.params.tau == rational(1, 2));
    CHECK(brute_force_persuasion(art.instance).solvable);
}

TEST_CASE("reduce rejects malformed input") {
    ExactCoverInstance bad;
    bad.universe_size = 2;
    bad.subset_names = {"A1"};
    bad.subsets = {{1}};  // element 2 uncovered
    CHECK_THROWS_AS(reduce(bad), InvalidECI);
}

namespace {

Observation named_obs(const ProbabilitySpace &space, std::initializer_list<const char *> names) {
    std::vector<std::size_t> idx;
    for (const char *name : names) idx.push_back(*space.event_by_name(name));
    return Observation(idx);
}

}  // namespace

TEST_CASE("back_map on the worked instance") {
    const ReductionArtifact art = reduce(worked_eci());
    const ProbabilitySpace &space = art.instance.space;

    CHECK(back_map(art, Observation{}).empty());
    CHECK(back_map(art, named_obs(space, {"F3"})) == std::vector<std::size_t>{2});
    CHECK(back_map(art, named_obs(space, {"F1", "F2"})) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("forward_map sends exact covers to posterior exactly tau") {
    const ReductionArtifact art = reduce(worked_eci());

    CHECK(forward_map(art, {}).empty());
    CHECK(posterior(art.instance, forward_map(art, {2})) == rational(11, 21));
    CHECK(posterior(art.instance, forward_map(art, {0, 1})) == rational(11, 21));
}

TEST_CASE("back/forward coherence on every observation") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const ExactCoverInstance eci = gen_eci({seed, 1, 4, 1, 5, false});
        const ReductionArtifact art = reduce(eci);
        const std::uint64_t total = std::uint64_t{1} << art.params.k;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            const Observation obs = Observation::from_mask(mask, art.params.k);
            const auto h = back_map(art, obs);  // asserts both formulations agree
            CHECK(forward_map(art, h) == obs);
        }
    }
}

TEST_CASE("profile counts surviving roles") {
    const ReductionArtifact art = reduce(worked_eci());
    const ProbabilitySpace &space = art.instance.space;

    const ObservationProfile empty = profile(art, Observation{});
    CHECK(empty == ObservationProfile{4, 2, true, true});

    const ObservationProfile f3 = profile(art, named_obs(space, {"F3"}));
    CHECK(f3.y_count == 2);
    CHECK(f3.z_count == 0);
    CHECK(f3.has_w0);
    CHECK(f3.has_x0);

    const ObservationProfile f1 = profile(art, named_obs(space, {"F1"}));
    CHECK(f1.y_count == 3);
    CHECK(f1.z_count == 1);
}

TEST_CASE("verify_reduction: fixtures pass all checks") {
    const VerificationReport worked = verify_reduction(worked_eci());
    CHECK(worked.all_passed());
    REQUIRE(worked.checks.size() == 6);
    for (const auto &c : worked.checks) CHECK(c.violations.empty());

    const VerificationReport unsolvable = verify_reduction(unsolvable_eci());
    CHECK(unsolvable.all_passed());
    // No observation reaches tau on the unsolvable reduction.
    const ReductionArtifact art = reduce(unsolvable_eci());
    const PersuasionVerdict verdict = brute_force_persuasion(art.instance);
    CHECK_FALSE(verdict.solvable);
    REQUIRE(verdict.best_posterior);
    CHECK(*verdict.best_posterior < art.params.tau);
}

TEST_CASE("verify_reduction: seeded batch is violation-free") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        const ExactCoverInstance eci = gen_eci({seed, 1, 6, 1, 7, seed % 5 == 0});
        const VerificationReport report = verify_reduction(eci);
        CHECK(report.all_passed());
    }
}

TEST_CASE("verify_reduction: report bytes independent of worker count") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const ExactCoverInstance eci = gen_eci({seed, 2, 6, 2, 7, false});
        CHECK(verify_reduction(eci, 24, 1).render() == verify_reduction(eci, 24, 4).render());
    }
}

TEST_CASE("verify_reduction: cap applies") {
    const ExactCoverInstance eci = gen_eci({99, 3, 3, 4, 4, false});
    CHECK_THROWS_AS(verify_reduction(eci, 2), CapExceeded);
}
