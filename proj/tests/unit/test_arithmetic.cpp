#include <doctest.h>

#include "qfl/arithmetic.hpp"
#include "support/oracles.hpp"

using namespace qfl;

TEST_CASE("validate_b accepts non-squares and rejects negative squares") {
  CHECK(validate_b(1).b() == 1);
  CHECK(validate_b(-2).b() == -2);
  CHECK(validate_b(-3).abs_b() == 3);

  for (std::int64_t b : {0, -1, -4, -9, -1'000'000}) {
    try {
      validate_b(b);
      FAIL("expected NegativeSquare for b = " << b);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NegativeSquare);
    }
  }
  CHECK_THROWS_AS(validate_b((std::int64_t{1} << 31) + 1), Error);
}

TEST_CASE("term evaluates n^2 + b exactly") {
  CHECK(term(validate_b(1), 4) == 17);
  CHECK(term(validate_b(-2), 1) == -1);
  CHECK(term(validate_b(3), 10) == 103);
  CHECK(abs_term(validate_b(-2), 1) == 1);

  const auto big = validate_b(-(std::int64_t{1} << 31) + 1);
  CHECK(term(big, kMaxIndex) == static_cast<i128>(kMaxIndex) * kMaxIndex - (std::int64_t{1} << 31) + 1);
  CHECK_THROWS_AS(term(big, kMaxIndex + 1), Error);
  CHECK_THROWS_AS(term(big, 0), Error);
}

TEST_CASE("sqrt_mod") {
  CHECK(sqrt_mod(4, 5) == std::vector<std::uint64_t>{2, 3});
  CHECK(sqrt_mod(12, 13) == std::vector<std::uint64_t>{5, 8});
  CHECK(sqrt_mod(2, 3).empty());
  for (std::uint64_t p : {3ULL, 5ULL, 13ULL, 1'000'003ULL}) CHECK(sqrt_mod(0, p) == std::vector<std::uint64_t>{0});

  // p = 1 (mod 8) forces the full Tonelli-Shanks loop.
  const std::uint64_t p = 998'244'353;  // 119 * 2^23 + 1
  const auto r = sqrt_mod(p - 1, p);
  REQUIRE(r.size() == 2);
  for (auto v : r) CHECK(mul_mod(v, v, p) == p - 1);
}

TEST_CASE("sqrt_mod agrees with brute force for every residue of small primes") {
  for (std::uint64_t p = 3; p < 200; p += 2) {
    if (!testing::trial_is_prime(p)) continue;
    for (std::uint64_t a = 0; a < p; ++a) {
      std::vector<std::uint64_t> expected;
      for (std::uint64_t r = 0; r < p; ++r) {
        if (r * r % p == a) expected.push_back(r);
      }
      CHECK(sqrt_mod(a, p) == expected);
    }
  }
}

TEST_CASE("roots_of_term_mod_p") {
  const auto one = validate_b(1);
  CHECK(roots_of_term_mod_p(one, 2).roots().size() == 1);
  CHECK(roots_of_term_mod_p(one, 2).root[0] == 1);
  const auto r5 = roots_of_term_mod_p(one, 5);
  REQUIRE(r5.count == 2);
  CHECK(r5.root[0] == 2);
  CHECK(r5.root[1] == 3);
  CHECK(roots_of_term_mod_p(one, 3).empty());

  // odd p | b: the single root 0
  const auto r3 = roots_of_term_mod_p(validate_b(3), 3);
  REQUIRE(r3.count == 1);
  CHECK(r3.root[0] == 0);
  // p = 2 always has exactly the root -b mod 2
  CHECK(roots_of_term_mod_p(validate_b(-2), 2).root[0] == 0);
  CHECK(roots_of_term_mod_p(validate_b(7), 2).root[0] == 1);
}

TEST_CASE("is_prime") {
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(561));                      // Carmichael
  CHECK_FALSE(is_prime(3'215'031'751ULL));         // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime((1ULL << 61) - 1));
  CHECK(is_prime(18'446'744'073'709'551'557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(18'446'744'073'709'551'615ULL));
  for (std::uint64_t m = 0; m < 20'000; ++m) CHECK(is_prime(m) == testing::trial_is_prime(m));
}

TEST_CASE("p_plus") {
  CHECK(p_plus(50) == 5);
  CHECK(p_plus(17) == 17);
  CHECK(p_plus(2) == 2);
  CHECK(p_plus(1024) == 2);
  try {
    p_plus(1);
    FAIL("expected OutOfDomain");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfDomain);
  }
}

TEST_CASE("p_plus matches full factorization up to 10^5") {
  for (std::uint64_t m = 2; m <= 100'000; ++m) {
    const auto f = testing::trial_factor(m);
    REQUIRE(p_plus(m) == f.rbegin()->first);
  }
}

TEST_CASE("factor_u64 splits semiprimes of large primes") {
  const std::uint64_t p = 4'294'967'291ULL, q = 4'294'967'279ULL;
  CHECK(factor_u64(p * q) == std::vector<std::uint64_t>{q, p});
  CHECK(factor_u64(1).empty());
  CHECK(factor_u64(2 * 2 * 3 * 1'000'003ULL) == std::vector<std::uint64_t>{2, 2, 3, 1'000'003});
}

TEST_CASE("primes_up_to") {
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(2) == std::vector<std::uint64_t>{2});
  CHECK(primes_up_to(20) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(primes_up_to(1'000'000).size() == 78'498);
  CHECK(primes_up_to(10'000'000).size() == 664'579);
}

TEST_CASE("isqrt is exact at perfect-square boundaries") {
  for (std::uint64_t r : {0ULL, 1ULL, 3'037'000'499ULL, 4'294'967'295ULL}) {
    CHECK(isqrt(r * r) == r);
    if (r) CHECK(isqrt(r * r - 1) == r - 1);
  }
}
