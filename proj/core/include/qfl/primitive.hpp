#pragma once

// Primitive-divisor classification of the terms n^2 + b.
//
// A term P_n has a primitive divisor when some d > 1 divides it and is
// coprime to every earlier non-zero term. Two routes are provided: the
// definitional one, which tracks every prime seen in P_1..P_{n-1}, and the
// fast criterion P+(n^2 + b) > 2n, valid only for n > |b|.

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "qfl/sieve.hpp"

namespace qfl {

struct PrimitiveStatus {
  std::uint64_t n = 0;
  bool has_primitive = false;
  /// Largest primitive prime, when any.
  std::optional<std::uint64_t> primitive_prime;
  /// Number of distinct primitive primes; above 1 only possible for n <= |b|.
  std::uint32_t primitive_count = 0;

  friend bool operator==(const PrimitiveStatus&, const PrimitiveStatus&) = default;
};

/// Stateful definitional classifier. Terms must be fed as n = 1, 2, 3, ...
/// Single-threaded by construction: each answer depends on the full history.
class DefinitionalClassifier {
 public:
  PrimitiveStatus classify(const TermFactorization& tf);
  std::size_t seen_primes() const noexcept { return seen_.size(); }

 private:
  std::unordered_set<std::uint64_t> seen_;
  std::uint64_t next_n_ = 1;
};

/// One-shot definitional check of `current` against explicit history P_1..P_{n-1}.
PrimitiveStatus primitive_status_definitional(std::span<const TermFactorization> history,
                                              const TermFactorization& current);

/// P+(n^2 + b) > 2n. Throws PreconditionViolated for n <= |b|.
PrimitiveStatus primitive_status_fast(const SequenceSpec& spec, const TermFactorization& tf);

struct DensityPoint {
  std::uint64_t x = 0;
  std::uint64_t rho = 0;
  double ratio = 0.0;
  friend bool operator==(const DensityPoint&, const DensityPoint&) = default;
};

struct DensityReport {
  std::int64_t b = 0;
  std::vector<DensityPoint> checkpoints;
};

/// `count` checkpoints x*i/count, i = 1..count (deduplicated, all >= 1).
std::vector<std::uint64_t> even_checkpoints(std::uint64_t x, std::uint64_t count);

/// rho_b at every checkpoint (ascending, last one is the scan length).
/// Definitional path for n <= |b|, fast criterion beyond.
DensityReport rho(const SequenceSpec& spec, std::span<const std::uint64_t> checkpoints, unsigned threads = 1,
                  std::uint64_t segment_size = 1 << 15);

/// rho_b(x) using only the definitional path. Oracle; O(x) memory in primes.
std::uint64_t rho_definitional(const SequenceSpec& spec, std::uint64_t x);

struct Census {
  std::uint64_t x = 0;
  std::vector<std::uint64_t> non_primitive;
  std::uint64_t count() const noexcept { return non_primitive.size(); }
};

/// Indices n <= x whose term has no primitive divisor.
Census non_primitive_census(const SequenceSpec& spec, std::uint64_t x, unsigned threads = 1,
                            std::uint64_t segment_size = 1 << 15);

}  // namespace qfl
