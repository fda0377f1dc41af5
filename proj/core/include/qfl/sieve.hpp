#pragma once

// Segmented factor sieve over the values |n^2 + b| for n in [lo, hi).

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "qfl/arithmetic.hpp"

namespace qfl {

struct PrimePower {
  std::uint64_t p = 0;
  std::uint32_t e = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Complete factorization of n^2 + b:
///   sign * prod(p^e) * cofactor == n^2 + b,
/// where cofactor is 1 or a prime above the sieve's prime limit.
struct TermFactorization {
  std::uint64_t n = 0;
  int sign = 1;
  std::vector<PrimePower> factors;  // ascending p
  std::uint64_t cofactor = 1;

  /// Distinct prime divisors of |n^2 + b| including the cofactor, ascending.
  std::vector<std::uint64_t> primes() const;
  bool is_unit() const noexcept { return factors.empty() && cofactor == 1; }
  friend bool operator==(const TermFactorization&, const TermFactorization&) = default;
};

/// sign * prod(p^e) * cofactor, for checking reconstruction.
i128 reconstruct(const TermFactorization& tf);

struct SieveConfig {
  std::uint64_t lo = 1;
  std::uint64_t hi = 2;
  /// 0 selects the default 2 * hi, which makes every cofactor prime.
  std::uint64_t prime_limit = 0;
  std::uint64_t segment_size = 1 << 15;

  std::uint64_t effective_prime_limit() const noexcept { return prime_limit ? prime_limit : 2 * hi; }
  void validate() const;
};

/// Primes p <= limit that divide some term, with the roots of n^2 + b mod p.
std::vector<RootSet> sieve_primes(const SequenceSpec& spec, std::uint64_t limit);

/// A configured sieve. Segments are independent: segment(k) depends only on
/// the immutable root table, so any subset may be computed on any thread.
class FactorSieve {
 public:
  FactorSieve(const SequenceSpec& spec, const SieveConfig& cfg);

  std::size_t segment_count() const noexcept { return segments_; }
  std::vector<TermFactorization> segment(std::size_t k) const;

  const SequenceSpec& spec() const noexcept { return spec_; }
  const SieveConfig& config() const noexcept { return cfg_; }
  const std::vector<RootSet>& root_table() const noexcept { return roots_; }

 private:
  SequenceSpec spec_;
  SieveConfig cfg_;
  std::uint64_t limit_;
  std::vector<RootSet> roots_;
  std::size_t segments_;
};

using TermSink = std::function<void(const TermFactorization&)>;

/// Streams one factorization per n in [lo, hi), ascending, regardless of
/// `threads`.
void sieve_range(const SequenceSpec& spec, const SieveConfig& cfg, const TermSink& sink,
                 unsigned threads = 1);

std::vector<TermFactorization> sieve_range(const SequenceSpec& spec, const SieveConfig& cfg,
                                           unsigned threads = 1);

/// Greatest prime factor of |n^2 + b|. OutOfDomain when the term is a unit.
std::uint64_t p_plus_of(const TermFactorization& tf);

/// CSV row `n,sign,factors,cofactor` with factors as space-separated p^e.
std::string sieve_csv_row(const TermFactorization& tf);
inline constexpr const char* kSieveCsvHeader = "n,sign,factors,cofactor";

}  // namespace qfl
