#ifndef PERSUASION_IO_HPP
#define PERSUASION_IO_HPP

#include <string>

#include "persuasion/core.hpp"
#include "persuasion/exact_cover.hpp"
#include "persuasion/reduction.hpp"
#include "persuasion/solvers.hpp"

namespace persuasion {

// PPI files: one "world <label> <p/q>" line per world, then one
// "event <name> excludes <label>*" line per event (events are serialized
// by the worlds they reject), a "goal <label>*" line and a
// "threshold <p/q>" line. '#' starts a comment. ECI files: a
// "universe <n>" line then one "set <name> <index>*" line per subset.
// Rationals are always "p/q" in lowest terms. See docs/formats.md.

std::string render_ppi(const PersuasionInstance &inst);
PersuasionInstance parse_ppi(const std::string &text);

std::string render_eci(const ExactCoverInstance &eci);
ExactCoverInstance parse_eci(const std::string &text);

// Role metadata sidecar for a reduced instance, as JSON.
std::string render_roles_json(const ReductionArtifact &art);

std::string render_observation(const ProbabilitySpace &space, const Observation &obs);
std::string render_persuasion_verdict(const ProbabilitySpace &space,
                                      const PersuasionVerdict &verdict);
std::string render_cover_verdict(const ExactCoverInstance &eci, const CoverVerdict &verdict);

}  // namespace persuasion

#endif
