#include "qfl/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qfl {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeSquare: return "NegativeSquare";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::WindowOutOfRange: return "WindowOutOfRange";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

std::uint64_t isqrt(std::uint64_t m) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(m)));
  while (r > 0 && static_cast<u128>(r) * r > m) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= m) ++r;
  return r;
}

SequenceSpec validate_b(std::int64_t b) {
  if (b > kMaxAbsB || b < -kMaxAbsB) {
    throw Error(ErrorCode::CapExceeded, "|b| must not exceed 2^31, got " + std::to_string(b));
  }
  if (b <= 0) {
    const auto m = static_cast<std::uint64_t>(-b);
    const auto r = isqrt(m);
    if (r * r == m) {
      throw Error(ErrorCode::NegativeSquare,
                  "b = " + std::to_string(b) + " is minus the square of " + std::to_string(r));
    }
  }
  return SequenceSpec(b);
}

i128 term(const SequenceSpec& spec, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::OutOfDomain, "term index must be >= 1");
  if (n > kMaxIndex) {
    throw Error(ErrorCode::CapExceeded, "term index " + std::to_string(n) + " exceeds 10^9");
  }
  return static_cast<i128>(n) * static_cast<i128>(n) + spec.b();
}

std::uint64_t abs_term(const SequenceSpec& spec, std::uint64_t n) {
  const i128 v = term(spec, n);
  return static_cast<std::uint64_t>(v < 0 ? -v : v);
}

std::uint64_t neg_b_mod(std::int64_t b, std::uint64_t m) {
  const i128 r = (-static_cast<i128>(b)) % static_cast<i128>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

namespace {

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (m % p == 0) return m == p;
  }
  if (m < 37 * 37) return true;
  std::uint64_t d = m - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Jim Sinclair's base set: deterministic below 2^64.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (!strong_probable_prime(m, a, d, s)) return false;
  }
  return true;
}

std::vector<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
#ifndef NDEBUG
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not an odd prime");
#endif
  a %= p;
  if (a == 0) return {0};
  if (pow_mod(a, (p - 1) / 2, p) != 1) return {};

  std::uint64_t r;
  if (p % 4 == 3) {
    r = pow_mod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks; the non-residue is the least one, found by counting up from 2.
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(a, q, p);
    r = pow_mod(a, (q + 1) / 2, p);
    int m = s;
    while (t != 1) {
      int i = 0;
      for (std::uint64_t t2 = t; t2 != 1; t2 = mul_mod(t2, t2, p)) ++i;
      std::uint64_t bb = c;
      for (int j = 0; j < m - i - 1; ++j) bb = mul_mod(bb, bb, p);
      m = i;
      c = mul_mod(bb, bb, p);
      t = mul_mod(t, c, p);
      r = mul_mod(r, bb, p);
    }
  }
  const std::uint64_t other = p - r;
  return r < other ? std::vector<std::uint64_t>{r, other} : std::vector<std::uint64_t>{other, r};
}

RootSet roots_of_term_mod_p(const SequenceSpec& spec, std::uint64_t p) {
  RootSet out;
  out.p = p;
  const std::uint64_t a = neg_b_mod(spec.b(), p);
  if (p == 2) {
    out.root[0] = a;
    out.count = 1;
    return out;
  }
  const auto roots = sqrt_mod(a, p);
  for (std::size_t i = 0; i < roots.size(); ++i) out.root[i] = roots[i];
  out.count = static_cast<std::uint8_t>(roots.size());
  return out;
}

std::uint64_t p_plus(std::uint64_t m) {
  if (m <= 1) throw Error(ErrorCode::OutOfDomain, "P+ needs m > 1, got " + std::to_string(m));
  std::uint64_t largest = 1;
  for (std::uint64_t d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
    if (m % d == 0) {
      largest = d;
      while (m % d == 0) m /= d;
      if (m > 1 && is_prime(m)) break;
    }
  }
  return std::max(largest, m);
}

namespace {

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    constexpr std::uint64_t kBatch = 128;
    for (std::uint64_t r = 1; g == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t m, std::vector<std::uint64_t>& out) {
  if (m == 1) return;
  if (is_prime(m)) {
    out.push_back(m);
    return;
  }
  const std::uint64_t d = pollard_brent(m);
  factor_into(d, out);
  factor_into(m / d, out);
}

}  // namespace

std::vector<std::uint64_t> factor_u64(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
    while (m > 1 && m % p == 0) {
      out.push_back(p);
      m /= p;
    }
  }
  factor_into(m, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  if (limit < 3) return primes;

  const std::uint64_t root = isqrt(limit);
  // Base primes up to sqrt(limit), odd only.
  std::vector<char> small(root / 2 + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 1; 2 * i + 1 <= root; ++i) {
    if (!small[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    base.push_back(p);
    for (std::uint64_t j = p * p / 2; j < small.size(); j += p) small[j] = 0;
  }

  // Segment k covers odd numbers 2*i+1 for i in [lo, hi).
  constexpr std::uint64_t kSegment = 1 << 18;
  const std::uint64_t last = (limit - 1) / 2;  // index of the largest odd <= limit
  std::vector<char> seg(kSegment);
  const std::uint64_t estimate = limit > 10 ? static_cast<std::uint64_t>(1.26 * limit / std::log(double(limit))) : 8;
  primes.reserve(estimate);
  for (std::uint64_t lo = 1; lo <= last; lo += kSegment) {
    const std::uint64_t hi = std::min(last + 1, lo + kSegment);
    std::fill(seg.begin(), seg.begin() + (hi - lo), 1);
    for (std::uint64_t p : base) {
      const std::uint64_t start_value = std::max(p * p, ((2 * lo + 1 + p - 1) / p) * p);
      std::uint64_t v = start_value % 2 == 0 ? start_value + p : start_value;
      for (std::uint64_t j = (v - 1) / 2; j < hi; j += p) seg[j - lo] = 0;
    }
    for (std::uint64_t j = lo; j < hi; ++j) {
      if (seg[j - lo]) primes.push_back(2 * j + 1);
    }
  }
  return primes;
}

}  // namespace qfl
