#include <doctest.h>

#include "qfl/stormer.hpp"
#include "support/oracles.hpp"

using namespace qfl;

namespace {

std::vector<std::uint64_t> as_u64(const std::vector<mpz_class>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& z : v) out.push_back(z.get_ui());
  return out;
}

PellSolution fundamental(unsigned long D) {
  const auto f = negative_pell_fundamental(mpz_class(D));
  REQUIRE(f.outcome == PellOutcome::Solved);
  return *f.solution;
}

}  // namespace

TEST_CASE("allowed primes") {
  CHECK(allowed_primes(6) == std::vector<std::uint64_t>{2, 5});
  CHECK(allowed_primes(3) == std::vector<std::uint64_t>{2});
  CHECK(allowed_primes(14) == std::vector<std::uint64_t>{2, 5, 13});
  CHECK(allowed_primes(13) == std::vector<std::uint64_t>{2, 5});  // strict bound
}

TEST_CASE("enumerate_D") {
  CHECK(as_u64(enumerate_D(6)) == std::vector<std::uint64_t>{2, 5, 10});
  CHECK(as_u64(enumerate_D(3)) == std::vector<std::uint64_t>{2});
  CHECK(as_u64(enumerate_D(14)) == std::vector<std::uint64_t>{2, 5, 10, 13, 26, 65, 130});
  CHECK(enumerate_D(101).size() == 4095);
  // far more than 20 allowed primes below 400
  try {
    enumerate_D(400);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("negative Pell fundamental solutions") {
  auto f2 = fundamental(2);
  CHECK(f2.x == 1);
  CHECK(f2.y == 1);
  auto f5 = fundamental(5);
  CHECK(f5.x == 2);
  CHECK(f5.y == 1);
  auto f13 = fundamental(13);
  CHECK(f13.x == 18);
  CHECK(f13.y == 5);
  CHECK(negative_pell_fundamental(mpz_class(3)).outcome == PellOutcome::NoSolution);
  // -1 is a square mod 34, yet sqrt(34) = [5; 1, 4, 1, 10] has even period
  CHECK(negative_pell_fundamental(mpz_class(34)).outcome == PellOutcome::NoSolution);
  const auto f = negative_pell_fundamental(mpz_class(61));
  REQUIRE(f.outcome == PellOutcome::Solved);
  CHECK(f.solution->x == 29718);
  CHECK(f.solution->y == 3805);
  CHECK(f.period == 11);
}

TEST_CASE("D beyond 120 bits takes the unbounded path") {
  // sqrt(m^2 + 1) = [m; 2m] and sqrt(m^2 + 2) = [m; m, 2m]
  const mpz_class m = mpz_class(1) << 70;
  const mpz_class D1 = m * m + 1;
  REQUIRE(mpz_sizeinbase(D1.get_mpz_t(), 2) > 120);
  const auto f = negative_pell_fundamental(D1, 100);
  REQUIRE(f.outcome == PellOutcome::Solved);
  CHECK(f.period == 1);
  CHECK(f.solution->x == m);
  CHECK(f.solution->y == 1);
  const auto g = negative_pell_fundamental(m * m + 2, 100);
  CHECK(g.outcome == PellOutcome::NoSolution);
  CHECK(g.period == 2);
}

TEST_CASE("digit cap truncates long expansions") {
  const auto f = negative_pell_fundamental(mpz_class(61), 3);
  CHECK(f.outcome == PellOutcome::Truncated);
  CHECK(negative_pell_fundamental(mpz_class(61), 5).outcome == PellOutcome::Solved);
}

TEST_CASE("odd power chains") {
  const auto c2 = pell_solutions_odd(fundamental(2), 5, 10'000);
  REQUIRE(c2.solutions.size() == 3);
  CHECK(c2.solutions[1].x == 7);
  CHECK(c2.solutions[1].y == 5);
  CHECK(c2.solutions[2].x == 41);
  CHECK(c2.solutions[2].y == 29);
  CHECK_FALSE(c2.truncated);

  const auto c5 = pell_solutions_odd(fundamental(5), 3, 10'000);
  REQUIRE(c5.solutions.size() == 2);
  CHECK(c5.solutions[1].x == 38);
  CHECK(c5.solutions[1].y == 17);

  for (const auto& s : c2.solutions) CHECK(s.x * s.x - s.D * s.y * s.y == -1);

  const auto cut = pell_solutions_odd(fundamental(2), 101, 5);
  CHECK(cut.truncated);
  CHECK(cut.solutions.back().x < 100'000);
  CHECK_THROWS_AS(pell_solutions_odd(fundamental(2), 4, 10), Error);
}

TEST_CASE("recurrence matches direct powers") {
  for (unsigned long D : {2ul, 5ul, 10ul, 13ul, 26ul, 29ul, 130ul}) {
    const auto f = fundamental(D);
    const auto chain = pell_solutions_odd(f, 21, 0);
    for (const auto& s : chain.solutions) {
      const auto direct = pell_power(f, s.k);
      CHECK(direct.x == s.x);
      CHECK(direct.y == s.y);
    }
  }
}

TEST_CASE("is_smooth") {
  CHECK(is_smooth(50, 6));
  CHECK_FALSE(is_smooth(325, 6));
  CHECK(is_smooth(1, 2));
  CHECK(is_smooth(1, 1000));
  CHECK_FALSE(is_smooth(13, 13));
  CHECK(is_smooth(13, 14));
}

TEST_CASE("default index cutoff") {
  CHECK(default_k_max(3) == 13);
  CHECK(default_k_max(14) == 13);
  CHECK(default_k_max(42) == 23);
  CHECK(default_k_max(101) == 51);
  CHECK(default_k_max(103) == 53);
}

TEST_CASE("stormer search small bounds") {
  CHECK(as_u64(stormer_search(3).solutions) == std::vector<std::uint64_t>{1});
  CHECK(as_u64(stormer_search(6).solutions) == std::vector<std::uint64_t>{1, 2, 3, 7});
  const auto r14 = stormer_search(14);
  CHECK(as_u64(r14.solutions) == std::vector<std::uint64_t>{1, 2, 3, 5, 7, 8, 18, 57, 239});
  CHECK(r14.max_n == 239);
  CHECK(r14.truncated_Ds.empty());
  CHECK(as_u64(stormer_search(14, {.threads = 4}).solutions) == as_u64(r14.solutions));
}

TEST_CASE("stormer search matches brute force at B = 42") {
  const auto r = stormer_search(42);
  CHECK(as_u64(r.solutions) == testing::brute_smooth_scan(42, 200'000));
  CHECK(r.max_n == 18543);
}
