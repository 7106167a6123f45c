#ifndef PERSUASION_REDUCTION_HPP
#define PERSUASION_REDUCTION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "persuasion/core.hpp"
#include "persuasion/exact_cover.hpp"

namespace persuasion {

struct WorldRole {
    enum class Kind { W0, X0, Y, Z };
    Kind kind;
    std::size_t subset = 0;   // i, Y only (1-based)
    std::size_t element = 0;  // l, Y and Z (1-based)

    bool operator==(const WorldRole &) const = default;
};

struct ReductionParams {
    std::size_t n = 0;  // universe size
    std::size_t k = 0;  // subset count
    std::size_t m = 0;  // total elements across subsets
    Rational x, y, z, tau;
};

// The persuasion instance produced from an exact cover instance, plus the
// role of every world and the event standing for each subset. World order
// is canonical: W0, X0, Y worlds by (subset, element), Z worlds by element.
struct ReductionArtifact {
    PersuasionInstance instance;
    ExactCoverInstance source;
    std::vector<WorldRole> roles;             // by world index
    std::vector<std::size_t> event_of_subset; // subset index -> event index
    ReductionParams params;
};

ReductionArtifact reduce(const ExactCoverInstance &eci);

// H_R: subsets whose selected event excludes one of their Y worlds.
// Computed from the literal definition and cross-checked against the
// direct {A_i | F_i in R} form.
std::vector<std::size_t> back_map(const ReductionArtifact &art, const Observation &obs);

// R_H = {F_i | A_i in H}.
Observation forward_map(const ReductionArtifact &art, const std::vector<std::size_t> &subsets);

// Counts Y- and Z-role worlds surviving in the intersection of obs.
ObservationProfile profile(const ReductionArtifact &art, const Observation &obs);

struct CheckResult {
    std::string name;
    bool passed = true;
    std::vector<std::uint64_t> violations;  // observation bitmasks, ascending
    std::vector<std::string> notes;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    // One line per check: "<name> PASS|FAIL violations=<count>", followed
    // by one indented line per violating observation.
    std::string render() const;
};

// Sweeps every observation of reduce(eci) and checks, with exact
// arithmetic: Z-survivor observations fall below tau; Y-deficient
// observations fall below tau; threshold-reaching observations carry
// exactly m-n Y worlds and back-map to exact covers; persuasion and cover
// solvability agree; every exact cover forward-maps to posterior tau.
VerificationReport verify_reduction(const ExactCoverInstance &eci,
                                    std::size_t cap = default_enumeration_cap(),
                                    std::size_t workers = 1);

}  // namespace persuasion

#endif
