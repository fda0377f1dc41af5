#pragma once

// Exact integer primitives for the sequence P_n = n^2 + b.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "qfl/error.hpp"

namespace qfl {

using i128 = __int128;
using u128 = unsigned __int128;

/// Largest index any term evaluation accepts.
inline constexpr std::uint64_t kMaxIndex = 1'000'000'000ULL;
/// Largest |b| accepted by validate_b.
inline constexpr std::int64_t kMaxAbsB = std::int64_t{1} << 31;

/// The fixed shift b of P_n = n^2 + b. Only constructible through
/// validate_b, which rejects b = -k^2 (those sequences hit zero).
class SequenceSpec {
 public:
  std::int64_t b() const noexcept { return b_; }
  std::uint64_t abs_b() const noexcept { return b_ < 0 ? std::uint64_t(-b_) : std::uint64_t(b_); }

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

 private:
  friend SequenceSpec validate_b(std::int64_t b);
  explicit SequenceSpec(std::int64_t b) : b_(b) {}
  std::int64_t b_;
};

SequenceSpec validate_b(std::int64_t b);

/// n^2 + b exactly. Throws CapExceeded for n > kMaxIndex, OutOfDomain for n == 0.
i128 term(const SequenceSpec& spec, std::uint64_t n);

/// |n^2 + b|; fits in 64 bits for every admissible (n, b).
std::uint64_t abs_term(const SequenceSpec& spec, std::uint64_t n);

// ---------------------------------------------------------------------------
// modular arithmetic on 64-bit residues

constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

constexpr std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// (-b) mod m as a residue in [0, m).
std::uint64_t neg_b_mod(std::int64_t b, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t m);

/// Square roots of a modulo an odd prime p, ascending. Empty when a is a
/// non-residue, {0} when a == 0, otherwise {r, p - r}.
std::vector<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

/// Roots of n^2 + b == 0 (mod p) for a prime p.
struct RootSet {
  std::uint64_t p = 0;
  std::array<std::uint64_t, 2> root{};
  std::uint8_t count = 0;

  std::span<const std::uint64_t> roots() const noexcept { return {root.data(), count}; }
  bool empty() const noexcept { return count == 0; }
  friend bool operator==(const RootSet&, const RootSet&) = default;
};

RootSet roots_of_term_mod_p(const SequenceSpec& spec, std::uint64_t p);

/// Greatest prime factor by trial division. Reference path only; the sieve
/// computes P+ in bulk. Throws OutOfDomain for m <= 1.
std::uint64_t p_plus(std::uint64_t m);

/// Prime factors of m (with multiplicity, ascending) by Pollard-Brent.
/// Used to finish cofactors the sieve cannot certify as prime.
std::vector<std::uint64_t> factor_u64(std::uint64_t m);

/// floor(sqrt(m)) exactly.
std::uint64_t isqrt(std::uint64_t m);

/// All primes <= limit, ascending (segmented Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace qfl
