#ifndef PERSUASION_EXACT_COVER_HPP
#define PERSUASION_EXACT_COVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace persuasion {

// Universe {1..n} plus a family of named, non-empty, pairwise-distinct
// subsets whose union covers the universe.
struct ExactCoverInstance {
    std::size_t universe_size = 0;                     // n
    std::vector<std::string> subset_names;             // |A| = k entries
    std::vector<std::vector<std::size_t>> subsets;     // 1-based universe indices, sorted

    std::size_t subset_count() const { return subsets.size(); }
    std::size_t element_total() const;  // m = sum of |A_i|

    // Throws InvalidECI on any structural violation.
    void validate() const;

    bool operator==(const ExactCoverInstance &) const = default;
};

struct CoverVerdict {
    bool solvable = false;
    std::optional<std::vector<std::size_t>> witness;  // subset indices, 0-based sorted
    std::optional<std::size_t> solution_count;        // brute-force / count-all mode only
};

// Default cap on 2^k enumerations; overridable via the PERSUASION_CAP
// environment variable and per-call arguments.
std::size_t default_enumeration_cap();

bool verify_cover(const ExactCoverInstance &eci, const std::vector<std::size_t> &chosen);
bool verify_cover_mask(const ExactCoverInstance &eci, std::uint64_t chosen_mask);

CoverVerdict exact_cover_brute(const ExactCoverInstance &eci, std::size_t cap = default_enumeration_cap());

// Algorithm-X over dancing links; column = universe element, row = subset,
// fewest-rows column heuristic with ties broken by lowest column index,
// rows tried in increasing subset index.
CoverVerdict exact_cover_dlx(const ExactCoverInstance &eci, bool count_all = false);

}  // namespace persuasion

#endif
