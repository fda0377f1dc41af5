#include "qfl/stormer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qfl/arithmetic.hpp"
#include "qfl/error.hpp"
#include "qfl/parallel.hpp"

namespace qfl {

std::vector<std::uint64_t> allowed_primes(std::uint64_t B) {
  if (B < 3) throw Error(ErrorCode::InvalidArgument, "smoothness bound must be >= 3");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p : primes_up_to(B - 1)) {
    if (p == 2 || p % 4 == 1) out.push_back(p);
  }
  return out;
}

std::vector<mpz_class> enumerate_D(std::uint64_t B) {
  const auto primes = allowed_primes(B);
  if (primes.size() > 20) {
    throw Error(ErrorCode::CapExceeded, std::to_string(primes.size()) + " allowed primes below " + std::to_string(B) +
                                            " give more than 2^20 equations");
  }
  std::vector<mpz_class> out;
  const std::uint64_t subsets = std::uint64_t{1} << primes.size();
  out.reserve(subsets);
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    mpz_class d = 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask >> i & 1) d *= static_cast<unsigned long>(primes[i]);
    }
    if (d > 1) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

mpz_class to_mpz(u128 v) {
  mpz_class hi = static_cast<unsigned long>(v >> 64);
  mpz_class lo = static_cast<unsigned long>(v);
  return (hi << 64) + lo;
}

u128 to_u128(const mpz_class& v) {
  const mpz_class hi = v >> 64;
  const mpz_class lo = v - (hi << 64);
  return (static_cast<u128>(hi.get_ui()) << 64) | lo.get_ui();
}

double to_double(u128 v) { return static_cast<double>(v); }
double to_double(const mpz_class& v) { return v.get_d(); }
mpz_class as_mpz(u128 v) { return to_mpz(v); }
const mpz_class& as_mpz(const mpz_class& v) { return v; }

// Continued fraction of sqrt(D) with partial quotients a_k and the state
// (m_k, d_k): a_{k+1} = floor((a_0 + m_{k+1}) / d_{k+1}). T is u128 when
// D fits comfortably, otherwise mpz_class.
template <class T>
FundamentalResult expand(const mpz_class& D_mpz, const T& D, const T& a0, std::uint64_t digit_cap) {
  FundamentalResult result;
  T m = 0, d = 1, a = a0;
  mpz_class h_prev = 1, h = as_mpz(a0);
  mpz_class k_prev = 0, k = 1;
  double log10_h = std::log10(to_double(a0));
  double ratio = to_double(a0);
  const T two_a0 = a0 + a0;
  for (std::uint64_t step = 1;; ++step) {
    if (a == two_a0) {
      // Period ended at the previous convergent.
      result.period = step - 1;
      if (result.period % 2 == 0) {
        result.outcome = PellOutcome::NoSolution;
        return result;
      }
      result.outcome = PellOutcome::Solved;
      result.solution = PellSolution{D_mpz, 1, h_prev, k_prev};
      return result;
    }
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    const mpz_class az = as_mpz(a);
    mpz_class h_next = az * h + h_prev;
    mpz_class k_next = az * k + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
    if (digit_cap > 0) {
      ratio = to_double(a) + 1.0 / ratio;
      log10_h += std::log10(ratio);
      if (log10_h > static_cast<double>(digit_cap) + 1.0) {
        result.outcome = PellOutcome::Truncated;
        return result;
      }
    }
  }
}

}  // namespace

FundamentalResult negative_pell_fundamental(const mpz_class& D, std::uint64_t digit_cap) {
  if (D < 2) throw Error(ErrorCode::InvalidArgument, "negative Pell needs D >= 2");
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), D.get_mpz_t());
  if (root * root == D) return {};  // square D: x^2 - D y^2 = -1 is unsolvable
  if (mpz_sizeinbase(D.get_mpz_t(), 2) <= 120) {
    return expand<u128>(D, to_u128(D), to_u128(root), digit_cap);
  }
  return expand<mpz_class>(D, D, root, digit_cap);
}

PellChain pell_solutions_odd(const PellSolution& fundamental, std::uint32_t k_max, std::uint64_t digit_cap) {
  if (k_max % 2 == 0) throw Error(ErrorCode::InvalidArgument, "k_max must be odd");
  PellChain chain;
  const mpz_class& D = fundamental.D;
  const mpz_class c = 2 * fundamental.x * fundamental.x + 1;
  const mpz_class s = 2 * fundamental.x * fundamental.y;
  mpz_class x = fundamental.x, y = fundamental.y;
  for (std::uint32_t k = 1; k <= k_max; k += 2) {
    if (digit_cap > 0 && mpz_sizeinbase(x.get_mpz_t(), 10) > digit_cap) {
      chain.truncated = true;
      break;
    }
    chain.solutions.push_back({D, k, x, y});
    mpz_class nx = x * c + s * D * y;
    mpz_class ny = x * s + y * c;
    x = std::move(nx);
    y = std::move(ny);
  }
  return chain;
}

PellSolution pell_power(const PellSolution& fundamental, std::uint32_t k) {
  mpz_class x = 1, y = 0;
  for (std::uint32_t i = 0; i < k; ++i) {
    mpz_class nx = x * fundamental.x + fundamental.D * y * fundamental.y;
    mpz_class ny = x * fundamental.y + y * fundamental.x;
    x = std::move(nx);
    y = std::move(ny);
  }
  return {fundamental.D, k, x, y};
}

bool is_smooth(const mpz_class& m, std::uint64_t B) {
  if (m < 1) throw Error(ErrorCode::OutOfDomain, "smoothness test needs m >= 1");
  mpz_class rest = m;
  for (std::uint64_t p : primes_up_to(B > 0 ? B - 1 : 0)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    if (rest == 1) break;
  }
  return rest == 1;
}

std::uint32_t default_k_max(std::uint64_t B) {
  std::uint64_t half = (B + 2) / 2;  // ceil((B + 1) / 2)
  if (half % 2 == 0) ++half;
  return static_cast<std::uint32_t>(std::max<std::uint64_t>(13, half));
}

SmoothResult stormer_search(std::uint64_t B, const StormerOptions& options) {
  SmoothResult result;
  result.B = B;
  result.k_max = options.k_max.value_or(default_k_max(B));
  if (result.k_max % 2 == 0) ++result.k_max;
  const auto Ds = enumerate_D(B);
  result.equations = Ds.size();

  struct PerD {
    std::size_t index = 0;
    bool solvable = false;
    bool truncated = false;
    std::vector<mpz_class> smooth;
  };
  std::vector<mpz_class> found;
  ordered_for_each(
      Ds.size(), options.threads,
      [&](std::size_t i) {
        PerD out;
        out.index = i;
        const auto fund = negative_pell_fundamental(Ds[i], options.digit_cap);
        if (fund.outcome == PellOutcome::Truncated) {
          out.truncated = true;
          return out;
        }
        if (fund.outcome == PellOutcome::NoSolution) return out;
        out.solvable = true;
        const auto chain = pell_solutions_odd(*fund.solution, result.k_max, options.digit_cap);
        out.truncated = chain.truncated;
        for (const auto& sol : chain.solutions) {
          const mpz_class value = sol.x * sol.x + 1;
          if (is_smooth(value, B)) out.smooth.push_back(sol.x);
        }
        return out;
      },
      [&](PerD&& d) {
        result.solvable += d.solvable;
        for (auto& n : d.smooth) found.push_back(std::move(n));
        if (d.truncated) result.truncated_Ds.push_back(Ds[d.index]);
      });
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (!found.empty()) result.max_n = found.back();
  result.solutions = std::move(found);
  return result;
}

}  // namespace qfl
