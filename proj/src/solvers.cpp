#include "persuasion/solvers.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "persuasion/errors.hpp"

namespace persuasion {

namespace {

// (|R|, index order) on observation bitmasks.
bool obs_mask_less(std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    const std::uint64_t diff = a ^ b;
    if (diff == 0) return false;
    return a >> std::countr_zero(diff) & 1;
}

struct SweepResult {
    bool found = false;
    std::uint64_t best_mask = 0;
    std::optional<Rational> best_posterior;

    void merge(const SweepResult &other) {
        if (other.found && (!found || obs_mask_less(other.best_mask, best_mask))) {
            found = true;
            best_mask = other.best_mask;
        }
        if (other.best_posterior &&
            (!best_posterior || *best_posterior < *other.best_posterior))
            best_posterior = other.best_posterior;
    }
};

SweepResult sweep_range(const PersuasionInstance &inst, std::uint64_t begin, std::uint64_t end) {
    SweepResult res;
    const std::size_t k = inst.space.event_count();
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        const Observation obs = Observation::from_mask(mask, k);
        const WorldSet conditioned = intersect(inst.space, obs);
        const Rational denom = event_mass(inst.space, conditioned);
        if (denom.is_zero()) continue;
        const Rational post = event_mass(inst.space, conditioned & inst.goal) / denom;
        if (!res.best_posterior || *res.best_posterior < post) res.best_posterior = post;
        if (post >= inst.threshold && (!res.found || obs_mask_less(mask, res.best_mask))) {
            res.found = true;
            res.best_mask = mask;
        }
    }
    return res;
}

}  // namespace

PersuasionVerdict brute_force_persuasion(const PersuasionInstance &inst, std::size_t cap,
                                         std::size_t workers) {
    const std::size_t k = inst.space.event_count();
    if (k > cap)
        throw CapExceeded("|F| = " + std::to_string(k) + " exceeds enumeration cap " +
                          std::to_string(cap));
    const std::uint64_t total = std::uint64_t{1} << k;

    SweepResult merged;
    if (workers <= 1 || total < 64) {
        merged = sweep_range(inst, 0, total);
    } else {
        const std::size_t nw = workers;
        std::vector<SweepResult> results(nw);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + nw - 1) / nw;
        for (std::size_t w = 0; w < nw; ++w) {
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
            pool.emplace_back([&inst, &results, w, lo, hi] {
                if (lo < hi) results[w] = sweep_range(inst, lo, hi);
            });
        }
        for (auto &t : pool) t.join();
        for (const SweepResult &r : results) merged.merge(r);  // worker-index order
    }

    PersuasionVerdict verdict;
    verdict.solvable = merged.found;
    verdict.best_posterior = merged.best_posterior;
    if (merged.found) verdict.witness = Observation::from_mask(merged.best_mask, k);
    return verdict;
}

PersuasionVerdict strong_persuasion_standard(const PersuasionInstance &inst) {
    if (!inst.threshold.is_one())
        throw NotStrongInstance("threshold is " + inst.threshold.str() + ", expected 1/1");
    std::vector<std::size_t> all(inst.space.event_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const Observation full(all);
    const WorldSet conditioned = intersect(inst.space, full);
    const Rational denom = event_mass(inst.space, conditioned);
    if (denom.is_zero())
        throw AssumptionViolated("pi*(int F) = 0");
    const Rational post = event_mass(inst.space, conditioned & inst.goal) / denom;

    PersuasionVerdict verdict;
    verdict.best_posterior = post;
    if (post.is_one()) {
        verdict.solvable = true;
        verdict.witness = full;
    }
    return verdict;
}

PersuasionVerdict strong_persuasion_general(const PersuasionInstance &inst) {
    if (!inst.threshold.is_one())
        throw NotStrongInstance("threshold is " + inst.threshold.str() + ", expected 1/1");
    PersuasionVerdict verdict;
    for (std::size_t w = inst.goal.find_first(); w != WorldSet::npos;
         w = inst.goal.find_next(w)) {
        if (inst.space.prob[w].is_zero()) continue;
        std::vector<std::size_t> picked;
        for (std::size_t i = 0; i < inst.space.event_count(); ++i)
            if (inst.space.events[i].members.test(w)) picked.push_back(i);
        const Observation candidate(picked);
        if (is_solution(inst, candidate)) {
            verdict.solvable = true;
            verdict.witness = candidate;
            verdict.best_posterior = Rational(1);
            return verdict;
        }
    }
    return verdict;
}

bool strong_inclusion_diagnostic(const PersuasionInstance &inst) {
    WorldSet acc = inst.space.full_set();
    for (const NamedEvent &e : inst.space.events) acc &= e.members;
    return acc.is_subset_of(inst.goal);
}

}  // namespace persuasion
