#pragma once

// Enumeration of all n with P+(n^2 + 1) < B.
//
// If n^2 + 1 is B-smooth then n^2 + 1 = D y^2 with D > 1 squarefree and
// built from the primes that can divide n^2 + 1 (2 and p = 1 mod 4), and
// (n, y) solves the negative Pell equation x^2 - D y^2 = -1. Every solution
// of that equation is an odd power of the fundamental unit, so the search
// walks finitely many D and a bounded number of odd powers per D.
//
// The bound on the power index is a reconstruction: for odd k past the
// Lucas-sequence primitive-divisor threshold (index > 12), y_k picks up a
// prime that does not divide earlier y_j, and past (B + 1) / 2 that prime
// is forced above B. It is exposed as an override.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "qfl/error.hpp"

namespace qfl {

/// Primes p < B with p = 2 or p = 1 (mod 4).
std::vector<std::uint64_t> allowed_primes(std::uint64_t B);

/// Every squarefree product D > 1 of allowed primes, ascending.
/// CapExceeded when there are more than 20 allowed primes.
std::vector<mpz_class> enumerate_D(std::uint64_t B);

struct PellSolution {
  mpz_class D;
  std::uint32_t k = 1;  // odd power of the fundamental unit
  mpz_class x;
  mpz_class y;
};

enum class PellOutcome { Solved, NoSolution, Truncated };

struct FundamentalResult {
  PellOutcome outcome = PellOutcome::NoSolution;
  std::optional<PellSolution> solution;
  std::uint64_t period = 0;  // continued-fraction period of sqrt(D); 0 when truncated
};

/// Least positive solution of x^2 - D y^2 = -1 from the continued fraction of
/// sqrt(D); present iff the period is odd. With digit_cap > 0 the expansion
/// stops (Truncated) once the convergent numerator exceeds that many digits.
FundamentalResult negative_pell_fundamental(const mpz_class& D, std::uint64_t digit_cap = 0);

struct PellChain {
  std::vector<PellSolution> solutions;  // k = 1, 3, 5, ...
  bool truncated = false;               // digit_cap cut the chain before k_max
};

/// Odd-index solutions k = 1, 3, ..., k_max via the recurrence
/// x_{k+2} = x_k (2 x_1^2 + 1) + 2 x_1 y_1 D y_k.
PellChain pell_solutions_odd(const PellSolution& fundamental, std::uint32_t k_max, std::uint64_t digit_cap);

/// (x_1 + y_1 sqrt D)^k by repeated multiplication; reference for the chain.
PellSolution pell_power(const PellSolution& fundamental, std::uint32_t k);

/// All prime factors of m are below B (m >= 1).
bool is_smooth(const mpz_class& m, std::uint64_t B);

/// max(13, least odd integer >= (B + 1) / 2).
std::uint32_t default_k_max(std::uint64_t B);

struct StormerOptions {
  std::optional<std::uint32_t> k_max;
  std::uint64_t digit_cap = 10'000;
  unsigned threads = 1;
};

struct SmoothResult {
  std::uint64_t B = 0;
  std::uint32_t k_max = 0;
  std::vector<mpz_class> solutions;  // strictly increasing
  mpz_class max_n = 0;               // 0 when there are no solutions
  std::vector<mpz_class> truncated_Ds;
  std::uint64_t equations = 0;  // number of D examined
  std::uint64_t solvable = 0;   // D with odd period
};

SmoothResult stormer_search(std::uint64_t B, const StormerOptions& options = {});

}  // namespace qfl
