#include "doctest.h"

#include <random>

#include <boost/multiprecision/miller_rabin.hpp>

#include "wlpkit/errors.hpp"
#include "wlpkit/exact_linalg.hpp"

using namespace wlpkit;

namespace {

IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Upper unitriangular times lower unitriangular: determinant 1.
IntegerMatrix unimodular(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-9, 9);
  IntegerMatrix u(n, n), l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    u(i, i) = l(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      u(i, j) = dist(rng);
      l(j, i) = dist(rng);
    }
  }
  return u * l;
}

}  // namespace

TEST_CASE("rank modulo a prime") {
  CHECK(rank_mod_p(IntegerMatrix{{1, 0}, {0, 1}}, 101) == 2);
  CHECK(rank_mod_p(IntegerMatrix{{0, 0}, {0, 0}}, 101) == 0);
  CHECK(rank_mod_p(IntegerMatrix{{1, 2}, {2, 4}}, 101) == 1);
  CHECK(rank_mod_p(IntegerMatrix{{101, 0}, {0, 1}}, 101) == 1);
  CHECK_THROWS_AS(rank_mod_p(IntegerMatrix{{1}}, 100), InvalidModulus);
}

TEST_CASE("exact rank by fraction-free elimination") {
  CHECK(rank_exact(IntegerMatrix{{2, 0}, {0, 3}}) == 2);
  CHECK(rank_exact(IntegerMatrix{{1, 1}, {1, 1}}) == 1);
  // x+y on K[x,y]/(x^2,y^2): degree 1 {x, y} -> degree 2 {x^2, xy, y^2}; x^2, y^2 vanish, both columns hit xy
  CHECK(rank_exact(IntegerMatrix{{0, 0}, {1, 1}, {0, 0}}) == 1);
  CHECK(rank_exact(IntegerMatrix(0, 5)) == 0);
}

TEST_CASE("certified ranks") {
  IntegerMatrix id(4, 4);
  for (int i = 0; i < 4; ++i) id(i, i) = 1;
  auto c = certified_rank(id, 4, 1, 0);
  CHECK(c.rank == 4);
  CHECK(c.certified);
  CHECK(c.method == RankMethod::ModularTrials);

  auto z = certified_rank(IntegerMatrix(3, 3), 0, 2, 0);
  CHECK(z.rank == 0);
  CHECK(z.certified);

  auto uncertain = certified_rank(id, std::nullopt, 2, 0);
  CHECK_FALSE(uncertain.certified);
  auto exact = certified_rank(id, std::nullopt, 2, 0, true);
  CHECK(exact.certified);
  CHECK(exact.method == RankMethod::FractionFreeExact);

  CHECK_THROWS_AS(certified_rank(id, 3, 1, 0), RankInconsistency);

  std::mt19937_64 rng(11);
  const IntegerMatrix m = unimodular(10, rng);
  CHECK(rank_exact(m) == 10);
  auto full = certified_rank(m, 10, 5, 3);
  CHECK(full.rank == 10);
  for (auto p : full.primes_used) CHECK(rank_mod_p(m, p) == 10);

  // pure function of its arguments
  CHECK(certified_rank(m, std::nullopt, 3, 9).primes_used == certified_rank(m, std::nullopt, 3, 9).primes_used);
}

TEST_CASE("random primes") {
  const auto p = random_prime(31, 1);
  CHECK(p >= (1ULL << 30));
  CHECK(p < (1ULL << 31));
  CHECK(boost::multiprecision::miller_rabin_test(p, 30));
  CHECK(random_prime(31, 1) == p);
  const auto q = random_prime(62, 7);
  CHECK(q >= (1ULL << 61));
  CHECK(boost::multiprecision::miller_rabin_test(q, 30));
  CHECK_THROWS_AS(random_prime(19, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_prime(63, 0), std::invalid_argument);
}

TEST_CASE("modular rank never exceeds exact rank and agrees for random primes") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 4; ++round) {
    // rank-deficient: product of thin factors
    const IntegerMatrix a = random_matrix(7, 3 + round, 1000, rng);
    const IntegerMatrix b = random_matrix(3 + round, 8, 1000, rng);
    const IntegerMatrix m = a * b;
    const auto exact = rank_exact(m);
    CHECK(exact == rank_exact(m.transpose()));
    std::size_t disagreements = 0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const auto p = random_prime(31, mix_seed(round, s));
      const auto rp = rank_mod_p(m, p);
      CHECK(rp <= exact);
      disagreements += rp != exact;
    }
    CHECK(disagreements == 0);
  }
}

TEST_CASE("rank is invariant under transposition") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 10; ++round) {
    const IntegerMatrix m = random_matrix(4 + round % 3, 6 - round % 4, 3, rng);
    CHECK(rank_exact(m) == rank_exact(m.transpose()));
    CHECK(rank_mod_p(m, 1000003) == rank_mod_p(m.transpose(), 1000003));
  }
}
