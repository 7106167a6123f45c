#ifndef PERSUASION_CORE_HPP
#define PERSUASION_CORE_HPP

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "persuasion/rational.hpp"

namespace persuasion {

// Membership bit-vector over a space's world indices. Width always equals
// the number of worlds of the owning space.
using WorldSet = boost::dynamic_bitset<>;

struct WorldId {
    std::size_t index;
    std::string label;

    bool operator==(const WorldId &) const = default;
};

struct NamedEvent {
    std::string name;
    WorldSet members;

    bool operator==(const NamedEvent &) const = default;
};

struct ProbabilitySpace {
    std::vector<WorldId> worlds;
    std::vector<NamedEvent> events;  // the family F, in index order
    std::vector<Rational> prob;      // pi, indexed by world index

    std::size_t world_count() const { return worlds.size(); }
    std::size_t event_count() const { return events.size(); }

    WorldSet full_set() const {
        WorldSet s(worlds.size());
        s.set();
        return s;
    }

    std::optional<std::size_t> world_by_label(const std::string &label) const;
    std::optional<std::size_t> event_by_name(const std::string &name) const;

    bool operator==(const ProbabilitySpace &) const = default;
};

struct PersuasionInstance {
    ProbabilitySpace space;
    WorldSet goal;       // the event E
    Rational threshold;  // tau

    bool operator==(const PersuasionInstance &) const = default;
};

// A subset R of the space's events, held as sorted unique indices.
class Observation {
  public:
    Observation() = default;
    explicit Observation(std::vector<std::size_t> indices);
    static Observation from_mask(std::uint64_t mask, std::size_t event_count);

    const std::vector<std::size_t> &selected() const { return selected_; }
    std::size_t size() const { return selected_.size(); }
    bool empty() const { return selected_.empty(); }
    std::uint64_t mask() const;

    bool operator==(const Observation &) const = default;

  private:
    std::vector<std::size_t> selected_;
};

// Role counts of the worlds surviving an observation's intersection,
// meaningful only for reduced instances (see reduction.hpp).
struct ObservationProfile {
    std::size_t y_count = 0;  // m'
    std::size_t z_count = 0;  // n'
    bool has_w0 = false;
    bool has_x0 = false;

    bool operator==(const ObservationProfile &) const = default;
};

struct Violation {
    std::string invariant;  // e.g. "ProbabilityRange", "Normalization"
    std::string subject;    // offending world/event label, or ""
    std::string detail;
};

std::vector<Violation> validate_space(const ProbabilitySpace &space);

// Intersection of the selected events; the empty observation yields the
// full set of worlds (neutral element of intersection).
WorldSet intersect(const ProbabilitySpace &space, const Observation &obs);

// pi* extended to sets: sum of pi over the members, exact.
Rational event_mass(const ProbabilitySpace &space, const WorldSet &s);

// Pr(E | R) = pi*(E cap int R) / pi*(int R). Throws UndefinedPosterior
// when the intersection has zero mass.
Rational posterior(const PersuasionInstance &inst, const Observation &obs);

// True iff the posterior is defined and >= tau, by exact comparison.
// Zero-mass intersections count as "not a solution".
bool is_solution(const PersuasionInstance &inst, const Observation &obs);

}  // namespace persuasion

#endif
