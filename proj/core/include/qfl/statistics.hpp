#pragma once

// Aggregate statistics over the terms n^2 + b: the Chebyshev decomposition
// of log Q_x (Q_x = prod_{n<=x} |P_n|), the large-prime histogram N_x(p)
// and its windows V_x(v), the Chowla-Todd density, and Mertens' sum.

#include <cmath>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qfl/arithmetic.hpp"

namespace qfl {

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      carry_ += (sum_ - t) + v;
    } else {
      carry_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Primes dividing Q_x split at 2x (S below, S' at or above), and S' split
/// further into T = (2x, Kx) and U = [Kx, inf). A prime equal to 2x would
/// sit in S' but in neither T nor U; it is counted in `boundary`.
struct ChebyshevReport {
  std::uint64_t x = 0;
  double K = 0.0;
  double log_Qx = 0.0;      // sum over n <= x of log|P_n|, straight from the values
  double sum_S = 0.0;       // sum over S of e_p log p
  double sum_Sprime = 0.0;  // sum over S' of e_p log p
  std::uint64_t s = 0;
  std::uint64_t s_prime = 0;
  std::uint64_t t = 0;
  std::uint64_t u = 0;
  std::uint64_t boundary = 0;
  /// Largest e_p over S'; 1 whenever the large primes are simple.
  std::uint32_t max_exponent_Sprime = 0;
};

ChebyshevReport chebyshev_report(const SequenceSpec& spec, std::uint64_t x, double K, unsigned threads = 1,
                                 std::uint64_t segment_size = 1 << 15);

/// N_x(p) = #{x <= n < 2x : p | n^2 + b} for primes p >= 2x.
struct NxHistogram {
  std::uint64_t x = 0;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> counts;  // ascending p
  std::uint64_t total = 0;
  double weighted = 0.0;  // sum N_x(p) log p
};

NxHistogram nx_histogram(const SequenceSpec& spec, std::uint64_t x, unsigned threads = 1,
                         std::uint64_t segment_size = 1 << 15);

/// V_x(v): sum of N_x(p) over primes v < p <= e*v. WindowOutOfRange if v < 2x.
std::uint64_t vx(const NxHistogram& hist, double v);

struct VxWindow {
  double v = 0.0;
  std::uint64_t V = 0;
  double x_over_log_v = 0.0;
};

/// Windows v = 2x e^j, j = 0, 1, ... while v is below the largest stored prime.
std::vector<VxWindow> vx_windows(const NxHistogram& hist);

struct DensityCount {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  double ratio = 0.0;
};

/// #{2 <= m <= x : P+(m) > 2 sqrt(m)} at each ascending checkpoint.
std::vector<DensityCount> chowla_todd_series(std::span<const std::uint64_t> checkpoints, unsigned threads = 1);
DensityCount chowla_todd_density(std::uint64_t x, unsigned threads = 1);

/// Sum of 1/p over primes p < x, accumulated in ascending p.
double mertens_sum(std::uint64_t x);

}  // namespace qfl
