#include "qfl/sieve.hpp"

#include <algorithm>
#include <string>

#include "qfl/parallel.hpp"

namespace qfl {

std::vector<std::uint64_t> TermFactorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size() + 1);
  for (const auto& f : factors) out.push_back(f.p);
  if (cofactor > 1) out.push_back(cofactor);
  return out;
}

i128 reconstruct(const TermFactorization& tf) {
  i128 v = tf.cofactor;
  for (const auto& f : tf.factors) {
    for (std::uint32_t i = 0; i < f.e; ++i) v *= f.p;
  }
  return tf.sign * v;
}

void SieveConfig::validate() const {
  if (lo < 1 || hi <= lo) {
    throw Error(ErrorCode::InvalidArgument,
                "sieve range must satisfy 1 <= lo < hi, got [" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
  if (hi > kMaxIndex) throw Error(ErrorCode::CapExceeded, "sieve range end " + std::to_string(hi) + " exceeds 10^9");
  if (segment_size < 1) throw Error(ErrorCode::InvalidArgument, "segment_size must be >= 1");
  if (prime_limit != 0 && prime_limit < 2) throw Error(ErrorCode::InvalidArgument, "prime_limit must be >= 2");
}

std::vector<RootSet> sieve_primes(const SequenceSpec& spec, std::uint64_t limit) {
  std::vector<RootSet> out;
  for (std::uint64_t p : primes_up_to(limit)) {
    RootSet rs = roots_of_term_mod_p(spec, p);
    if (!rs.empty()) out.push_back(rs);
  }
  return out;
}

FactorSieve::FactorSieve(const SequenceSpec& spec, const SieveConfig& cfg)
    : spec_(spec), cfg_(cfg), limit_(cfg.effective_prime_limit()) {
  cfg_.validate();
  roots_ = sieve_primes(spec_, limit_);
  segments_ = static_cast<std::size_t>((cfg_.hi - cfg_.lo + cfg_.segment_size - 1) / cfg_.segment_size);
}

std::vector<TermFactorization> FactorSieve::segment(std::size_t k) const {
  const std::uint64_t lo = cfg_.lo + k * cfg_.segment_size;
  const std::uint64_t hi = std::min(cfg_.hi, lo + cfg_.segment_size);
  const std::size_t len = hi - lo;

  std::vector<TermFactorization> out(len);
  std::vector<std::uint64_t> rest(len);
  for (std::size_t i = 0; i < len; ++i) {
    const i128 v = term(spec_, lo + i);
    out[i].n = lo + i;
    out[i].sign = v < 0 ? -1 : 1;
    rest[i] = static_cast<std::uint64_t>(v < 0 ? -v : v);
  }

  // Every n with p | n^2 + b is a hit, so repeated division yields the exact exponent.
  for (const RootSet& rs : roots_) {
    const std::uint64_t p = rs.p;
    const std::uint64_t lo_mod = lo % p;
    for (std::uint64_t r : rs.roots()) {
      std::uint64_t i = (r + p - lo_mod) % p;
      for (; i < len; i += p) {
        std::uint32_t e = 0;
        std::uint64_t v = rest[i];
        while (v % p == 0) {
          v /= p;
          ++e;
        }
        rest[i] = v;
        out[i].factors.push_back({p, e});
      }
    }
  }

  const u128 limit_sq = static_cast<u128>(limit_) * limit_;
  for (std::size_t i = 0; i < len; ++i) {
    // Factors are already ascending: primes are visited in order and the two
    // roots of one p never hit the same index.
    auto& tf = out[i];
    const std::uint64_t c = rest[i];
    if (c > 1 && static_cast<u128>(c) >= limit_sq && !is_prime(c)) {
      // Only reachable when |b| is large against the range: finish by Pollard-Brent.
      for (std::uint64_t q : factor_u64(c)) {
        if (!tf.factors.empty() && tf.factors.back().p == q) {
          ++tf.factors.back().e;
        } else {
          tf.factors.push_back({q, 1});
        }
      }
      tf.cofactor = 1;
    } else {
      tf.cofactor = c;
    }
  }
  return out;
}

void sieve_range(const SequenceSpec& spec, const SieveConfig& cfg, const TermSink& sink, unsigned threads) {
  const FactorSieve sieve(spec, cfg);
  ordered_for_each(
      sieve.segment_count(), threads, [&](std::size_t k) { return sieve.segment(k); },
      [&](std::vector<TermFactorization>&& seg) {
        for (const auto& tf : seg) sink(tf);
      });
}

std::vector<TermFactorization> sieve_range(const SequenceSpec& spec, const SieveConfig& cfg, unsigned threads) {
  std::vector<TermFactorization> out;
  out.reserve(cfg.hi > cfg.lo ? cfg.hi - cfg.lo : 0);
  sieve_range(spec, cfg, [&](const TermFactorization& tf) { out.push_back(tf); }, threads);
  return out;
}

std::uint64_t p_plus_of(const TermFactorization& tf) {
  if (tf.is_unit()) {
    throw Error(ErrorCode::OutOfDomain, "P+ undefined: |P_" + std::to_string(tf.n) + "| = 1");
  }
  if (tf.cofactor > 1) return tf.cofactor;
  return tf.factors.back().p;
}

std::string sieve_csv_row(const TermFactorization& tf) {
  std::string row = std::to_string(tf.n) + ',' + (tf.sign < 0 ? "-1" : "1") + ',';
  for (std::size_t i = 0; i < tf.factors.size(); ++i) {
    if (i) row += ' ';
    row += std::to_string(tf.factors[i].p) + '^' + std::to_string(tf.factors[i].e);
  }
  row += ',' + std::to_string(tf.cofactor);
  return row;
}

}  // namespace qfl
