#ifndef PERSUASION_SOLVERS_HPP
#define PERSUASION_SOLVERS_HPP

#include <optional>

#include "persuasion/core.hpp"
#include "persuasion/exact_cover.hpp"

namespace persuasion {

struct PersuasionVerdict {
    bool solvable = false;
    std::optional<Observation> witness;      // present iff solvable
    std::optional<Rational> best_posterior;  // max defined posterior seen
};

// Sweeps all 2^|F| observations. The witness is the least solution by
// (|R|, index order); best_posterior is the maximum defined posterior over
// every observation, absent when every intersection has zero mass.
// The sweep may be partitioned across `workers` threads; the verdict is
// identical regardless of worker count.
PersuasionVerdict brute_force_persuasion(const PersuasionInstance &inst,
                                         std::size_t cap = default_enumeration_cap(),
                                         std::size_t workers = 1);

// tau = 1 decider under the standing assumption pi*(int F) > 0:
// solvable iff Pr(E | F) = 1, witness F.
PersuasionVerdict strong_persuasion_standard(const PersuasionInstance &inst);

// tau = 1 decider without the assumption: scans positive-probability goal
// worlds omega and tests R_omega = {r in F | omega in r}.
PersuasionVerdict strong_persuasion_general(const PersuasionInstance &inst);

// The set-inclusion form of the tau = 1 condition, int F subseteq E.
// Differs from strong_persuasion_standard exactly when int F \ E carries
// zero probability mass.
bool strong_inclusion_diagnostic(const PersuasionInstance &inst);

}  // namespace persuasion

#endif
