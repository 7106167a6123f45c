#include "persuasion/generate.hpp"

#include <algorithm>
#include <set>

#include "persuasion/errors.hpp"

namespace persuasion {

std::uint64_t SeededRng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t SeededRng::range(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw Error("empty range");
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();  // full 64-bit range
    // Rejection sampling keeps the draw unbiased and platform-stable.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + v % span;
}

namespace {

std::vector<std::size_t> mask_to_elements(std::uint64_t mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t e = 1; e <= n; ++e)
        if (mask >> (e - 1) & 1) out.push_back(e);
    return out;
}

// Random partition of {1..n} into `blocks` non-empty parts.
std::vector<std::vector<std::size_t>> random_partition(SeededRng &rng, std::size_t n,
                                                       std::size_t blocks) {
    std::vector<std::vector<std::size_t>> parts(blocks);
    // First `blocks` elements seed the parts so none is empty.
    std::vector<std::size_t> elems(n);
    for (std::size_t e = 0; e < n; ++e) elems[e] = e + 1;
    for (std::size_t e = n; e > 1; --e)
        std::swap(elems[e - 1], elems[rng.range(0, e - 1)]);
    for (std::size_t b = 0; b < blocks; ++b) parts[b].push_back(elems[b]);
    for (std::size_t idx = blocks; idx < n; ++idx)
        parts[rng.range(0, blocks - 1)].push_back(elems[idx]);
    for (auto &p : parts) std::sort(p.begin(), p.end());
    return parts;
}

}  // namespace

ExactCoverInstance gen_eci(const EciGenConfig &cfg) {
    if (cfg.min_n < 1 || cfg.min_n > cfg.max_n || cfg.min_k < 1 || cfg.min_k > cfg.max_k)
        throw Error("gen_eci: impossible size ranges");
    SeededRng rng(cfg.seed);
    const std::size_t n = rng.range(cfg.min_n, cfg.max_n);
    const std::uint64_t distinct_limit = (std::uint64_t{1} << n) - 1;
    std::size_t count = rng.range(cfg.min_k, cfg.max_k);
    count = std::min<std::size_t>(count, distinct_limit);

    std::set<std::vector<std::size_t>> chosen;
    std::vector<std::vector<std::size_t>> subsets;
    auto insert = [&](std::vector<std::size_t> s) {
        if (chosen.insert(s).second) subsets.push_back(std::move(s));
    };

    if (cfg.planted)
        for (auto &block : random_partition(rng, n, rng.range(1, n))) insert(std::move(block));

    std::size_t retries = 0;
    while (subsets.size() < count && retries < 64 * count) {
        insert(mask_to_elements(rng.range(1, distinct_limit), n));
        ++retries;
    }

    auto uncovered = [&] {
        std::vector<bool> covered(n + 1, false);
        for (const auto &s : subsets)
            for (std::size_t e : s) covered[e] = true;
        std::vector<std::size_t> u;
        for (std::size_t e = 1; e <= n; ++e)
            if (!covered[e]) u.push_back(e);
        return u;
    };

    auto missing = uncovered();
    if (!missing.empty()) {
        if (subsets.size() + missing.size() <= cfg.max_k || cfg.planted) {
            for (std::size_t e : missing) insert({e});
        } else {
            // Patching would blow the k budget; fall back to a partition
            // skeleton of the same arity plus fresh random subsets.
            chosen.clear();
            subsets.clear();
            const std::size_t blocks = std::min(count, n);
            for (auto &block : random_partition(rng, n, blocks)) insert(std::move(block));
            retries = 0;
            while (subsets.size() < count && retries < 64 * count) {
                insert(mask_to_elements(rng.range(1, distinct_limit), n));
                ++retries;
            }
        }
    }

    ExactCoverInstance eci;
    eci.universe_size = n;
    eci.subsets = std::move(subsets);
    for (std::size_t i = 0; i < eci.subsets.size(); ++i)
        eci.subset_names.push_back("A" + std::to_string(i + 1));
    eci.validate();
    return eci;
}

PersuasionInstance gen_ppi(const PpiGenConfig &cfg) {
    if (cfg.min_worlds < 1 || cfg.min_worlds > cfg.max_worlds || cfg.min_events > cfg.max_events)
        throw Error("gen_ppi: impossible size ranges");
    SeededRng rng(cfg.seed);
    const std::size_t n = rng.range(cfg.min_worlds, cfg.max_worlds);
    const std::size_t k = rng.range(cfg.min_events, cfg.max_events);

    PersuasionInstance inst;
    ProbabilitySpace &space = inst.space;
    for (std::size_t w = 0; w < n; ++w) space.worlds.push_back({w, "w" + std::to_string(w)});

    // Fixed denominator; residual mass goes to the last world, so the sum
    // is exactly 1 by construction.
    const std::uint64_t denom = std::max<std::uint64_t>(120, n);
    std::uint64_t remaining = denom;
    for (std::size_t w = 0; w + 1 < n; ++w) {
        const std::uint64_t reserve = cfg.strictly_positive ? (n - 1 - w) : 0;
        const std::uint64_t lo = cfg.strictly_positive ? 1 : 0;
        const std::uint64_t hi = remaining > reserve ? remaining - reserve : lo;
        const std::uint64_t p = rng.range(std::min(lo, hi), std::max(lo, hi));
        space.prob.emplace_back(static_cast<long long>(p), static_cast<long long>(denom));
        remaining -= std::min(p, remaining);
    }
    space.prob.emplace_back(static_cast<long long>(remaining), static_cast<long long>(denom));

    for (std::size_t i = 0; i < k; ++i) {
        WorldSet members(n);
        for (std::size_t w = 0; w < n; ++w)
            if (rng.next() & 1) members.set(w);
        if (cfg.common_world) members.set(0);
        space.events.push_back({"f" + std::to_string(i + 1), std::move(members)});
    }

    inst.goal.resize(n);
    for (std::size_t w = 0; w < n; ++w)
        if (rng.next() & 1) inst.goal.set(w);

    if (cfg.threshold) {
        inst.threshold = *cfg.threshold;
    } else {
        const std::uint64_t q = rng.range(1, 60);
        inst.threshold = Rational(static_cast<long long>(rng.range(0, q)),
                                  static_cast<long long>(q));
    }
    return inst;
}

}  // namespace persuasion
