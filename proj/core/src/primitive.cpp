#include "qfl/primitive.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace qfl {

namespace {

PrimitiveStatus status_from_new_primes(std::uint64_t n, const std::vector<std::uint64_t>& fresh) {
  PrimitiveStatus st;
  st.n = n;
  st.primitive_count = static_cast<std::uint32_t>(fresh.size());
  st.has_primitive = !fresh.empty();
  if (st.has_primitive) st.primitive_prime = *std::max_element(fresh.begin(), fresh.end());
  return st;
}

// Runs the scan over n in [1, x], calling visit(n, has_primitive) in order.
void scan(const SequenceSpec& spec, std::uint64_t x, unsigned threads, std::uint64_t segment_size,
          const std::function<void(std::uint64_t, bool)>& visit) {
  if (x < 1) throw Error(ErrorCode::InvalidArgument, "x must be >= 1");
  SieveConfig cfg;
  cfg.lo = 1;
  cfg.hi = x + 1;
  cfg.segment_size = segment_size;
  DefinitionalClassifier definitional;
  const std::uint64_t small = spec.abs_b();
  sieve_range(
      spec, cfg,
      [&](const TermFactorization& tf) {
        const bool has = tf.n <= small ? definitional.classify(tf).has_primitive
                                       : primitive_status_fast(spec, tf).has_primitive;
        visit(tf.n, has);
      },
      threads);
}

}  // namespace

PrimitiveStatus DefinitionalClassifier::classify(const TermFactorization& tf) {
  if (tf.n != next_n_) {
    throw Error(ErrorCode::PreconditionViolated,
                "definitional classifier expected n = " + std::to_string(next_n_) + ", got " + std::to_string(tf.n));
  }
  ++next_n_;
  std::vector<std::uint64_t> fresh;
  for (std::uint64_t p : tf.primes()) {
    if (seen_.insert(p).second) fresh.push_back(p);
  }
  return status_from_new_primes(tf.n, fresh);
}

PrimitiveStatus primitive_status_definitional(std::span<const TermFactorization> history,
                                              const TermFactorization& current) {
  std::unordered_set<std::uint64_t> seen;
  for (const auto& tf : history) {
    for (std::uint64_t p : tf.primes()) seen.insert(p);
  }
  std::vector<std::uint64_t> fresh;
  for (std::uint64_t p : current.primes()) {
    if (!seen.contains(p)) fresh.push_back(p);
  }
  return status_from_new_primes(current.n, fresh);
}

PrimitiveStatus primitive_status_fast(const SequenceSpec& spec, const TermFactorization& tf) {
  if (tf.n <= spec.abs_b()) {
    throw Error(ErrorCode::PreconditionViolated,
                "fast criterion needs n > |b|; n = " + std::to_string(tf.n) + ", b = " + std::to_string(spec.b()));
  }
  PrimitiveStatus st;
  st.n = tf.n;
  if (tf.is_unit()) return st;
  const std::uint64_t top = p_plus_of(tf);
  if (top > 2 * tf.n) {
    st.has_primitive = true;
    st.primitive_prime = top;
    st.primitive_count = 1;
  }
  return st;
}

std::vector<std::uint64_t> even_checkpoints(std::uint64_t x, std::uint64_t count) {
  std::vector<std::uint64_t> out;
  count = std::max<std::uint64_t>(1, count);
  for (std::uint64_t i = 1; i <= count; ++i) {
    const auto c = static_cast<std::uint64_t>(static_cast<u128>(x) * i / count);
    if (c >= 1 && (out.empty() || out.back() != c)) out.push_back(c);
  }
  return out;
}

DensityReport rho(const SequenceSpec& spec, std::span<const std::uint64_t> checkpoints, unsigned threads,
                  std::uint64_t segment_size) {
  if (checkpoints.empty()) throw Error(ErrorCode::InvalidArgument, "at least one checkpoint is required");
  if (!std::is_sorted(checkpoints.begin(), checkpoints.end()) || checkpoints.front() < 1) {
    throw Error(ErrorCode::InvalidArgument, "checkpoints must be ascending and >= 1");
  }
  DensityReport report;
  report.b = spec.b();
  std::uint64_t count = 0;
  std::size_t next = 0;
  scan(spec, checkpoints.back(), threads, segment_size, [&](std::uint64_t n, bool has) {
    count += has ? 1 : 0;
    while (next < checkpoints.size() && checkpoints[next] == n) {
      report.checkpoints.push_back({n, count, static_cast<double>(count) / static_cast<double>(n)});
      ++next;
    }
  });
  return report;
}

std::uint64_t rho_definitional(const SequenceSpec& spec, std::uint64_t x) {
  SieveConfig cfg;
  cfg.lo = 1;
  cfg.hi = x + 1;
  DefinitionalClassifier classifier;
  std::uint64_t count = 0;
  sieve_range(spec, cfg, [&](const TermFactorization& tf) { count += classifier.classify(tf).has_primitive; });
  return count;
}

Census non_primitive_census(const SequenceSpec& spec, std::uint64_t x, unsigned threads,
                            std::uint64_t segment_size) {
  Census census;
  census.x = x;
  scan(spec, x, threads, segment_size, [&](std::uint64_t n, bool has) {
    if (!has) census.non_primitive.push_back(n);
  });
  return census;
}

}  // namespace qfl
