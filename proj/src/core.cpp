#include "persuasion/core.hpp"

#include <algorithm>

#include "persuasion/errors.hpp"

namespace persuasion {

std::optional<std::size_t> ProbabilitySpace::world_by_label(const std::string &label) const {
    for (std::size_t i = 0; i < worlds.size(); ++i)
        if (worlds[i].label == label) return i;
    return std::nullopt;
}

std::optional<std::size_t> ProbabilitySpace::event_by_name(const std::string &name) const {
    for (std::size_t i = 0; i < events.size(); ++i)
        if (events[i].name == name) return i;
    return std::nullopt;
}

Observation::Observation(std::vector<std::size_t> indices) : selected_(std::move(indices)) {
    std::sort(selected_.begin(), selected_.end());
    selected_.erase(std::unique(selected_.begin(), selected_.end()), selected_.end());
}

Observation Observation::from_mask(std::uint64_t mask, std::size_t event_count) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < event_count; ++i)
        if (mask >> i & 1) idx.push_back(i);
    Observation obs;
    obs.selected_ = std::move(idx);  // already sorted unique
    return obs;
}

std::uint64_t Observation::mask() const {
    std::uint64_t m = 0;
    for (std::size_t i : selected_) m |= std::uint64_t{1} << i;
    return m;
}

std::vector<Violation> validate_space(const ProbabilitySpace &space) {
    std::vector<Violation> out;
    const std::size_t n = space.worlds.size();

    if (space.prob.size() != n)
        out.push_back({"ProbabilityArity", "", "pi defined for " + std::to_string(space.prob.size()) +
                                                   " of " + std::to_string(n) + " worlds"});

    for (std::size_t i = 0; i < n; ++i) {
        if (space.worlds[i].index != i)
            out.push_back({"WorldIndex", space.worlds[i].label,
                           "stored index " + std::to_string(space.worlds[i].index) +
                               " at position " + std::to_string(i)});
        for (std::size_t j = i + 1; j < n; ++j)
            if (space.worlds[i].label == space.worlds[j].label)
                out.push_back({"DuplicateWorldLabel", space.worlds[i].label, ""});
    }

    const Rational zero(0), one(1);
    for (std::size_t i = 0; i < space.prob.size() && i < n; ++i) {
        if (space.prob[i] < zero || space.prob[i] > one)
            out.push_back({"ProbabilityRange", space.worlds[i].label,
                           "pi = " + space.prob[i].str()});
    }

    if (space.prob.size() == n) {
        Rational total(0);
        for (const Rational &p : space.prob) total += p;
        if (!(total == one))
            out.push_back({"Normalization", "", "sum of pi is " + total.str()});
    }

    for (const NamedEvent &e : space.events)
        if (e.members.size() != n)
            out.push_back({"EventWidth", e.name,
                           "width " + std::to_string(e.members.size()) + ", expected " +
                               std::to_string(n)});

    return out;
}

WorldSet intersect(const ProbabilitySpace &space, const Observation &obs) {
    WorldSet acc = space.full_set();
    for (std::size_t i : obs.selected()) {
        if (i >= space.events.size()) throw Error("observation references event " + std::to_string(i));
        acc &= space.events[i].members;
    }
    return acc;
}

Rational event_mass(const ProbabilitySpace &space, const WorldSet &s) {
    Rational total(0);
    for (std::size_t i = s.find_first(); i != WorldSet::npos; i = s.find_next(i))
        total += space.prob[i];
    return total;
}

Rational posterior(const PersuasionInstance &inst, const Observation &obs) {
    const WorldSet conditioned = intersect(inst.space, obs);
    const Rational denom = event_mass(inst.space, conditioned);
    if (denom.is_zero())
        throw UndefinedPosterior("observation has zero-mass intersection");
    return event_mass(inst.space, conditioned & inst.goal) / denom;
}

bool is_solution(const PersuasionInstance &inst, const Observation &obs) {
    const WorldSet conditioned = intersect(inst.space, obs);
    const Rational denom = event_mass(inst.space, conditioned);
    if (denom.is_zero()) return false;
    return event_mass(inst.space, conditioned & inst.goal) / denom >= inst.threshold;
}

}  // namespace persuasion
