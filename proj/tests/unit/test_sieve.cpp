#include <doctest.h>

#include <map>
#include <random>

#include "qfl/sieve.hpp"
#include "support/oracles.hpp"

using namespace qfl;

namespace {

std::vector<std::uint64_t> primes_of(const std::vector<RootSet>& table) {
  std::vector<std::uint64_t> out;
  for (const auto& rs : table) out.push_back(rs.p);
  return out;
}

std::vector<TermFactorization> run(std::int64_t b, std::uint64_t lo, std::uint64_t hi, std::uint64_t limit = 0,
                                   std::uint64_t segment = 1 << 15, unsigned threads = 1) {
  SieveConfig cfg;
  cfg.lo = lo;
  cfg.hi = hi;
  cfg.prime_limit = limit;
  cfg.segment_size = segment;
  return sieve_range(validate_b(b), cfg, threads);
}

}  // namespace

TEST_CASE("sieve_primes lists exactly the primes that divide some term") {
  CHECK(primes_of(sieve_primes(validate_b(1), 20)) == std::vector<std::uint64_t>{2, 5, 13, 17});
  CHECK(primes_of(sieve_primes(validate_b(1), 3)) == std::vector<std::uint64_t>{2});
  CHECK(primes_of(sieve_primes(validate_b(-2), 10)) == std::vector<std::uint64_t>{2, 7});
  const auto t = sieve_primes(validate_b(-2), 10);
  CHECK(t[1].root[0] == 3);
  CHECK(t[1].root[1] == 4);
  // odd primes dividing b are included with the root 0
  CHECK(primes_of(sieve_primes(validate_b(15), 5)) == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("sieve_range small factorizations") {
  const auto terms = run(1, 1, 11, 22);
  REQUIRE(terms.size() == 10);
  CHECK(terms[6].n == 7);
  CHECK(terms[6].factors == std::vector<PrimePower>{{2, 1}, {5, 2}});
  CHECK(terms[6].cofactor == 1);
  CHECK(terms[9].factors.empty());
  CHECK(terms[9].cofactor == 101);
  CHECK(terms[4].factors == std::vector<PrimePower>{{2, 1}, {13, 1}});
  CHECK(terms[4].cofactor == 1);

  const auto first = run(1, 1, 2, 2);
  CHECK(first[0].factors == std::vector<PrimePower>{{2, 1}});
  CHECK(first[0].cofactor == 1);

  for (std::uint64_t limit : {2ULL, 3ULL, 100ULL}) {
    const auto neg = run(-2, 1, 2, limit);
    CHECK(neg[0].sign == -1);
    CHECK(neg[0].factors.empty());
    CHECK(neg[0].cofactor == 1);
  }
}

TEST_CASE("p_plus_of") {
  const auto terms = run(1, 1, 11);
  CHECK(p_plus_of(terms[6]) == 5);
  CHECK(p_plus_of(terms[9]) == 101);
  try {
    p_plus_of(run(-2, 1, 2)[0]);
    FAIL("expected OutOfDomain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfDomain);
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(run(1, 0, 10), Error);
  CHECK_THROWS_AS(run(1, 5, 5), Error);
  try {
    run(1, 999'999'990, 1'000'000'001, 100);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("reconstruction identity for the listed shifts, n <= 10^5") {
  for (std::int64_t b : {1, 2, 3, 5, 7, -2, -3}) {
    CAPTURE(b);
    const auto spec = validate_b(b);
    const auto terms = run(b, 1, 100'001);
    for (const auto& tf : terms) {
      REQUIRE(reconstruct(tf) == term(spec, tf.n));
      REQUIRE((tf.cofactor == 1 || (tf.cofactor > 200'000 && is_prime(tf.cofactor))));
    }
  }
}

TEST_CASE("sieve P+ agrees with the trial-division oracle for n <= 10^4") {
  for (std::int64_t b : {1, 2, 3, 5, 7, -2, -3}) {
    const auto spec = validate_b(b);
    for (const auto& tf : run(b, 1, 10'001)) {
      const std::uint64_t v = abs_term(spec, tf.n);
      if (v <= 1) continue;
      REQUIRE(p_plus_of(tf) == p_plus(v));
    }
  }
}

TEST_CASE("exponents match trial division") {
  const auto spec = validate_b(7);
  for (const auto& tf : run(7, 1, 3000)) {
    const auto expected = testing::trial_factor(abs_term(spec, tf.n));
    std::map<std::uint64_t, std::uint32_t> got;
    for (const auto& f : tf.factors) got[f.p] = f.e;
    if (tf.cofactor > 1) ++got[tf.cofactor];
    REQUIRE(got == expected);
  }
}

TEST_CASE("segment size and thread count do not change the output") {
  const auto reference = run(3, 17, 5000, 0, 5000 - 17);
  for (std::uint64_t segment : {1ULL, 64ULL, 4096ULL}) {
    CHECK(run(3, 17, 5000, 0, segment) == reference);
  }
  for (unsigned threads : {4u, 16u}) CHECK(run(3, 17, 5000, 0, 64, threads) == reference);
}

TEST_CASE("cofactors are prime on random indices when prime_limit >= 2 hi") {
  const std::uint64_t hi = 300'000;
  const auto terms = run(1, 1, hi);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::uint64_t> pick(1, hi - 1);
  std::size_t checked = 0;
  for (int i = 0; i < 10'000; ++i) {
    const auto& tf = terms[pick(rng) - 1];
    if (tf.cofactor > 1) {
      REQUIRE(is_prime(tf.cofactor));
      REQUIRE(tf.cofactor > 2 * hi);
      ++checked;
    }
  }
  CHECK(checked > 5'000);
}

TEST_CASE("large |b| against a short range still yields a complete factorization") {
  const std::int64_t b = (std::int64_t{1} << 31) - 1;
  const auto spec = validate_b(b);
  for (const auto& tf : run(b, 1, 200)) {
    REQUIRE(reconstruct(tf) == term(spec, tf.n));
    REQUIRE((tf.cofactor == 1 || is_prime(tf.cofactor)));
    for (const auto& f : tf.factors) REQUIRE(is_prime(f.p));
  }
}

TEST_CASE("csv row") {
  const auto terms = run(1, 7, 8);
  CHECK(sieve_csv_row(terms[0]) == "7,1,2^1 5^2,1");
  CHECK(sieve_csv_row(run(-2, 1, 2)[0]) == "1,-1,,1");
  CHECK(sieve_csv_row(run(1, 10, 11)[0]) == "10,1,,101");
}
