#include "qfl/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qfl/parallel.hpp"
#include "qfl/sieve.hpp"

namespace qfl {

namespace {

// Sorts (p, weight) pairs and merges equal p by summing weights.
template <class W>
void merge_sorted(std::vector<std::pair<std::uint64_t, W>>& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (w > 0 && v[w - 1].first == v[r].first) {
      v[w - 1].second += v[r].second;
    } else {
      v[w++] = v[r];
    }
  }
  v.resize(w);
}

}  // namespace

ChebyshevReport chebyshev_report(const SequenceSpec& spec, std::uint64_t x, double K, unsigned threads,
                                 std::uint64_t segment_size) {
  if (x < 2) throw Error(ErrorCode::InvalidArgument, "chebyshev_report needs x >= 2");
  if (!(K > 2.0)) throw Error(ErrorCode::InvalidArgument, "partition parameter K must exceed 2");

  ChebyshevReport r;
  r.x = x;
  r.K = K;
  const std::uint64_t two_x = 2 * x;

  std::vector<std::uint64_t> small_exp(two_x, 0);  // e_p for p < 2x, indexed by p
  std::vector<std::pair<std::uint64_t, std::uint32_t>> large;
  CompensatedSum log_q;

  SieveConfig cfg;
  cfg.lo = 1;
  cfg.hi = x + 1;
  cfg.segment_size = segment_size;
  sieve_range(
      spec, cfg,
      [&](const TermFactorization& tf) {
        log_q.add(std::log(static_cast<double>(abs_term(spec, tf.n))));
        auto add = [&](std::uint64_t p, std::uint32_t e) {
          if (p < two_x) {
            small_exp[p] += e;
          } else {
            large.emplace_back(p, e);
          }
        };
        for (const auto& f : tf.factors) add(f.p, f.e);
        if (tf.cofactor > 1) add(tf.cofactor, 1);
      },
      threads);
  r.log_Qx = log_q.value();

  CompensatedSum sum_s;
  for (std::uint64_t p = 2; p < two_x; ++p) {
    if (small_exp[p] == 0) continue;
    ++r.s;
    sum_s.add(static_cast<double>(small_exp[p]) * std::log(static_cast<double>(p)));
  }
  r.sum_S = sum_s.value();

  merge_sorted(large);
  const long double kx = static_cast<long double>(K) * static_cast<long double>(x);
  CompensatedSum sum_sp;
  for (const auto& [p, e] : large) {
    ++r.s_prime;
    r.max_exponent_Sprime = std::max(r.max_exponent_Sprime, e);
    sum_sp.add(static_cast<double>(e) * std::log(static_cast<double>(p)));
    if (p == two_x) {
      ++r.boundary;
    } else if (static_cast<long double>(p) < kx) {
      ++r.t;
    } else {
      ++r.u;
    }
  }
  r.sum_Sprime = sum_sp.value();
  return r;
}

NxHistogram nx_histogram(const SequenceSpec& spec, std::uint64_t x, unsigned threads, std::uint64_t segment_size) {
  if (x < 2) throw Error(ErrorCode::InvalidArgument, "nx_histogram needs x >= 2");
  NxHistogram h;
  h.x = x;
  const std::uint64_t two_x = 2 * x;

  SieveConfig cfg;
  cfg.lo = x;
  cfg.hi = two_x;
  cfg.prime_limit = two_x;
  cfg.segment_size = segment_size;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> hits;
  sieve_range(
      spec, cfg,
      [&](const TermFactorization& tf) {
        for (std::uint64_t p : tf.primes()) {
          if (p >= two_x) hits.emplace_back(p, 1);
        }
      },
      threads);
  merge_sorted(hits);
  h.counts = std::move(hits);

  CompensatedSum weighted;
  for (const auto& [p, c] : h.counts) {
    h.total += c;
    weighted.add(static_cast<double>(c) * std::log(static_cast<double>(p)));
  }
  h.weighted = weighted.value();
  return h;
}

std::uint64_t vx(const NxHistogram& hist, double v) {
  if (!(v >= 2.0 * static_cast<double>(hist.x))) {
    throw Error(ErrorCode::WindowOutOfRange,
                "window start " + std::to_string(v) + " is below 2x = " + std::to_string(2 * hist.x));
  }
  const long double top = std::numbers::e_v<long double> * static_cast<long double>(v);
  std::uint64_t sum = 0;
  auto it = std::upper_bound(hist.counts.begin(), hist.counts.end(), v,
                             [](double value, const auto& entry) { return value < static_cast<double>(entry.first); });
  for (; it != hist.counts.end() && static_cast<long double>(it->first) <= top; ++it) sum += it->second;
  return sum;
}

std::vector<VxWindow> vx_windows(const NxHistogram& hist) {
  std::vector<VxWindow> out;
  if (hist.counts.empty()) return out;
  const double largest = static_cast<double>(hist.counts.back().first);
  for (int j = 0;; ++j) {
    const double v = 2.0 * static_cast<double>(hist.x) * std::exp(static_cast<double>(j));
    if (v >= largest) break;
    out.push_back({v, vx(hist, v), static_cast<double>(hist.x) / std::log(v)});
  }
  return out;
}

namespace {

constexpr std::uint64_t kCtSegment = 1 << 20;

// Chowla-Todd members in [lo, hi): m with P+(m)^2 > 4m.
std::vector<std::uint64_t> chowla_todd_segment(std::uint64_t lo, std::uint64_t hi,
                                               const std::vector<std::uint64_t>& base) {
  const std::size_t len = hi - lo;
  std::vector<std::uint64_t> rest(len), top(len, 1);
  for (std::size_t i = 0; i < len; ++i) rest[i] = lo + i;
  for (std::uint64_t p : base) {
    // Past sqrt(hi) at most one prime factor remains, and it is left in rest.
    if (p * p >= hi) break;
    for (std::uint64_t m = std::max(p, (lo + p - 1) / p * p); m < hi; m += p) {
      std::uint64_t& v = rest[m - lo];
      do {
        v /= p;
      } while (v % p == 0);
      top[m - lo] = p;
    }
  }
  std::vector<std::uint64_t> members;
  for (std::size_t i = 0; i < len; ++i) {
    const std::uint64_t m = lo + i;
    if (m < 2) continue;
    const std::uint64_t largest = rest[i] > 1 ? rest[i] : top[i];
    if (static_cast<u128>(largest) * largest > static_cast<u128>(4) * m) members.push_back(m);
  }
  return members;
}

}  // namespace

std::vector<DensityCount> chowla_todd_series(std::span<const std::uint64_t> checkpoints, unsigned threads) {
  if (checkpoints.empty()) return {};
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) || checkpoints.front() < 2) {
    throw Error(ErrorCode::InvalidArgument, "checkpoints must be ascending and >= 2");
  }
  const std::uint64_t x = checkpoints.back();
  const auto base = primes_up_to(isqrt(x) + 1);
  const std::size_t segments = static_cast<std::size_t>((x + kCtSegment) / kCtSegment);  // covers [0, x]

  std::vector<DensityCount> out;
  std::uint64_t count = 0;
  std::size_t next = 0;
  ordered_for_each(
      segments, threads,
      [&](std::size_t k) {
        const std::uint64_t lo = k * kCtSegment;
        const std::uint64_t hi = std::min(x + 1, lo + kCtSegment);
        return std::make_pair(hi, chowla_todd_segment(lo, hi, base));
      },
      [&](std::pair<std::uint64_t, std::vector<std::uint64_t>>&& seg) {
        const auto& [hi, members] = seg;
        std::size_t i = 0;
        for (; next < checkpoints.size() && checkpoints[next] < hi; ++next) {
          const std::uint64_t c = checkpoints[next];
          for (; i < members.size() && members[i] <= c; ++i) ++count;
          out.push_back({c, count, static_cast<double>(count) / static_cast<double>(c)});
        }
        count += members.size() - i;
      });
  return out;
}

DensityCount chowla_todd_density(std::uint64_t x, unsigned threads) {
  const std::uint64_t cp[] = {x};
  return chowla_todd_series(cp, threads).front();
}

double mertens_sum(std::uint64_t x) {
  if (x < 3) throw Error(ErrorCode::InvalidArgument, "mertens_sum needs x >= 3");
  double sum = 0.0;
  for (std::uint64_t p : primes_up_to(x - 1)) sum += 1.0 / static_cast<double>(p);
  return sum;
}

}  // namespace qfl
