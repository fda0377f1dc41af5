#pragma once

// Randomized invariant checks shared by the property runner and the
// acceptance binary. Each returns how many cases ran and how many failed.

#include <cstdint>
#include <string>
#include <vector>

namespace qfl::property {

struct Outcome {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;
};

Outcome sieve_reconstruction(std::uint64_t seed);
Outcome nx_at_most_two(std::uint64_t seed);
Outcome pell_identity(std::uint64_t seed);
Outcome root_sets(std::uint64_t seed);

std::vector<Outcome> run_all(std::uint64_t seed);

inline constexpr std::uint64_t kMinCases = 10'000;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2024'0611ULL;

}  // namespace qfl::property
