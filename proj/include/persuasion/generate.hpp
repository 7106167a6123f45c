#ifndef PERSUASION_GENERATE_HPP
#define PERSUASION_GENERATE_HPP

#include <cstdint>
#include <optional>

#include "persuasion/core.hpp"
#include "persuasion/exact_cover.hpp"

namespace persuasion {

// splitmix64; self-contained so generated instances are byte-stable
// across platforms and standard libraries.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform in [lo, hi], inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi);

  private:
    std::uint64_t state_;
};

struct EciGenConfig {
    std::uint64_t seed = 0;
    std::size_t min_n = 1, max_n = 6;
    std::size_t min_k = 1, max_k = 7;
    bool planted = false;  // insert a random partition of the universe
};

struct PpiGenConfig {
    std::uint64_t seed = 0;
    std::size_t min_worlds = 2, max_worlds = 8;
    std::size_t min_events = 1, max_events = 4;
    bool strictly_positive = false;
    bool common_world = false;  // world 0 joins every event, so int F is non-empty
    std::optional<Rational> threshold;  // random in [0,1] when unset
};

ExactCoverInstance gen_eci(const EciGenConfig &cfg);
PersuasionInstance gen_ppi(const PpiGenConfig &cfg);

}  // namespace persuasion

#endif
