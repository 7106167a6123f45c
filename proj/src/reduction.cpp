#include "persuasion/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "persuasion/errors.hpp"
#include "persuasion/solvers.hpp"

namespace persuasion {

ReductionArtifact reduce(const ExactCoverInstance &eci) {
    eci.validate();

    const std::size_t n = eci.universe_size;
    const std::size_t k = eci.subset_count();
    const std::size_t m = eci.element_total();

    ReductionArtifact art;
    art.source = eci;
    art.params.n = n;
    art.params.k = k;
    art.params.m = m;

    const Rational x(1, 3);
    const Rational y = (Rational(1) - Rational(2) * x) /
                       Rational(static_cast<long long>(m * (1 + 2 * n)));
    const Rational z = Rational(static_cast<long long>(2 * m)) * y;
    const Rational mn(static_cast<long long>(m - n));
    const Rational tau = (x + mn * y) / (Rational(2) * x + mn * y);
    art.params.x = x;
    art.params.y = y;
    art.params.z = z;
    art.params.tau = tau;

    ProbabilitySpace &space = art.instance.space;

    auto add_world = [&](const std::string &label, const Rational &p, WorldRole role) {
        space.worlds.push_back({space.worlds.size(), label});
        space.prob.push_back(p);
        art.roles.push_back(role);
    };

    add_world("W0", x, {WorldRole::Kind::W0});
    add_world("X0", x, {WorldRole::Kind::X0});
    // Y worlds by (subset, element); subsets store sorted elements.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> y_index;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l : eci.subsets[i]) {
            y_index[{i + 1, l}] = space.worlds.size();
            add_world("Y_" + std::to_string(i + 1) + "_" + std::to_string(l), y,
                      {WorldRole::Kind::Y, i + 1, l});
        }
    std::vector<std::size_t> z_index(n + 1);
    for (std::size_t l = 1; l <= n; ++l) {
        z_index[l] = space.worlds.size();
        add_world("Z_" + std::to_string(l), z, {WorldRole::Kind::Z, 0, l});
    }

    const std::size_t width = space.worlds.size();
    for (std::size_t i = 0; i < k; ++i) {
        WorldSet members(width);
        members.set();
        for (std::size_t l : eci.subsets[i]) {
            members.reset(y_index[{i + 1, l}]);
            members.reset(z_index[l]);
        }
        art.event_of_subset.push_back(space.events.size());
        space.events.push_back({"F" + std::to_string(i + 1), std::move(members)});
    }

    WorldSet goal(width);
    for (std::size_t w = 0; w < width; ++w)
        if (art.roles[w].kind == WorldRole::Kind::W0 || art.roles[w].kind == WorldRole::Kind::Y)
            goal.set(w);
    art.instance.goal = std::move(goal);
    art.instance.threshold = tau;
    return art;
}

std::vector<std::size_t> back_map(const ReductionArtifact &art, const Observation &obs) {
    const ProbabilitySpace &space = art.instance.space;
    const std::size_t k = art.params.k;

    // Literal definition: A_i such that some selected event drops one of
    // the Y_{i,l} worlds with s_l in A_i.
    std::vector<bool> literal(k, false);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r : obs.selected()) {
            const WorldSet &members = space.events[r].members;
            for (std::size_t l : art.source.subsets[i]) {
                const std::size_t yw = *space.world_by_label(
                    "Y_" + std::to_string(i + 1) + "_" + std::to_string(l));
                if (!members.test(yw)) literal[i] = true;
            }
        }

    // Direct form: A_i with F_i selected.
    std::vector<bool> direct(k, false);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r : obs.selected())
            if (r == art.event_of_subset[i]) direct[i] = true;

    if (literal != direct)
        throw Error("back-map formulations disagree on a reduced instance");

    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < k; ++i)
        if (literal[i]) out.push_back(i);
    return out;
}

Observation forward_map(const ReductionArtifact &art, const std::vector<std::size_t> &subsets) {
    std::vector<std::size_t> events;
    for (std::size_t i : subsets) {
        if (i >= art.params.k) throw Error("forward_map: subset index out of range");
        events.push_back(art.event_of_subset[i]);
    }
    return Observation(std::move(events));
}

ObservationProfile profile(const ReductionArtifact &art, const Observation &obs) {
    const WorldSet conditioned = intersect(art.instance.space, obs);
    ObservationProfile p;
    for (std::size_t w = conditioned.find_first(); w != WorldSet::npos;
         w = conditioned.find_next(w)) {
        switch (art.roles[w].kind) {
            case WorldRole::Kind::W0: p.has_w0 = true; break;
            case WorldRole::Kind::X0: p.has_x0 = true; break;
            case WorldRole::Kind::Y: ++p.y_count; break;
            case WorldRole::Kind::Z: ++p.z_count; break;
        }
    }
    return p;
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult &c) { return c.passed; });
}

std::string VerificationReport::render() const {
    std::ostringstream os;
    for (const CheckResult &c : checks) {
        os << c.name << ' ' << (c.passed ? "PASS" : "FAIL") << " violations="
           << c.violations.size() << '\n';
        for (std::uint64_t mask : c.violations) os << "  obs_mask=" << mask << '\n';
        for (const std::string &note : c.notes) os << "  " << note << '\n';
    }
    return os.str();
}

namespace {

struct ShardResult {
    std::vector<std::uint64_t> lemma2, cor3, cor4, cor5, forward_tau;
    bool ppi_solvable = false;
    bool eci_solvable = false;
};

ShardResult verify_range(const ReductionArtifact &art, std::uint64_t begin, std::uint64_t end) {
    ShardResult res;
    const PersuasionInstance &inst = art.instance;
    const Rational &tau = art.params.tau;
    const std::size_t k = art.params.k;
    const std::size_t m = art.params.m;
    const std::size_t n = art.params.n;

    for (std::uint64_t mask = begin; mask < end; ++mask) {
        const Observation obs = Observation::from_mask(mask, k);
        const WorldSet conditioned = intersect(inst.space, obs);
        const Rational denom = event_mass(inst.space, conditioned);
        // W0 and X0 survive every observation, so the mass is positive.
        const Rational post = event_mass(inst.space, conditioned & inst.goal) / denom;
        const ObservationProfile prof = profile(art, obs);
        const bool reaches = post >= tau;
        // On reduced instances the event mask doubles as the subset mask.
        const bool covers = verify_cover_mask(art.source, mask);

        if (prof.z_count >= 1 && !(post < tau)) res.lemma2.push_back(mask);
        if (prof.y_count < m - n && !(post < tau)) res.cor3.push_back(mask);
        if (reaches && prof.y_count != m - n) res.cor4.push_back(mask);
        if (reaches && !verify_cover(art.source, back_map(art, obs))) res.cor5.push_back(mask);
        if (reaches) res.ppi_solvable = true;
        if (covers) {
            res.eci_solvable = true;
            std::vector<std::size_t> chosen;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) chosen.push_back(i);
            const Rational forward_post = posterior(inst, forward_map(art, chosen));
            if (!(forward_post == tau)) res.forward_tau.push_back(mask);
        }
    }
    return res;
}

}  // namespace

VerificationReport verify_reduction(const ExactCoverInstance &eci, std::size_t cap,
                                    std::size_t workers) {
    const std::size_t k = eci.subset_count();
    if (k > cap)
        throw CapExceeded("k = " + std::to_string(k) + " exceeds enumeration cap " +
                          std::to_string(cap));
    const ReductionArtifact art = reduce(eci);
    const std::uint64_t total = std::uint64_t{1} << k;

    std::vector<ShardResult> shards;
    if (workers <= 1 || total < 64) {
        shards.push_back(verify_range(art, 0, total));
    } else {
        shards.resize(workers);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
            pool.emplace_back([&art, &shards, w, lo, hi] {
                if (lo < hi) shards[w] = verify_range(art, lo, hi);
            });
        }
        for (auto &t : pool) t.join();
    }

    ShardResult merged;
    for (const ShardResult &s : shards) {  // ascending mask ranges
        auto append = [](std::vector<std::uint64_t> &dst, const std::vector<std::uint64_t> &src) {
            dst.insert(dst.end(), src.begin(), src.end());
        };
        append(merged.lemma2, s.lemma2);
        append(merged.cor3, s.cor3);
        append(merged.cor4, s.cor4);
        append(merged.cor5, s.cor5);
        append(merged.forward_tau, s.forward_tau);
        merged.ppi_solvable |= s.ppi_solvable;
        merged.eci_solvable |= s.eci_solvable;
    }

    VerificationReport report;
    auto add = [&report](const std::string &name, std::vector<std::uint64_t> violations) {
        CheckResult c;
        c.name = name;
        c.passed = violations.empty();
        c.violations = std::move(violations);
        report.checks.push_back(std::move(c));
    };
    add("lemma2_z_survivor", std::move(merged.lemma2));
    add("cor3_y_deficit", std::move(merged.cor3));
    add("cor4_y_exact", std::move(merged.cor4));
    add("cor5_backmap_cover", std::move(merged.cor5));

    CheckResult equiv;
    equiv.name = "theorem_equivalence";
    equiv.passed = merged.ppi_solvable == merged.eci_solvable;
    if (!equiv.passed)
        equiv.notes.push_back(std::string("persuasion_solvable=") +
                              (merged.ppi_solvable ? "true" : "false") + " cover_solvable=" +
                              (merged.eci_solvable ? "true" : "false"));
    report.checks.push_back(std::move(equiv));

    add("forward_cover_tau", std::move(merged.forward_tau));
    return report;
}

}  // namespace persuasion
