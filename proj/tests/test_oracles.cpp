#include "doctest.h"

#include "wlpkit/oracles.hpp"

using namespace wlpkit;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("square complete intersections") {
  CHECK(hf_square_ci(4).values == big({1, 4, 6, 4, 1}));
  CHECK(hf_square_ci(1).values == big({1, 1}));
  CHECK(hf_square_ci(7).values == big({1, 7, 21, 35, 35, 21, 7, 1}));
}

TEST_CASE("Gorenstein quotient of the squarefree sum") {
  CHECK(hf_gorenstein_G(5).values == big({1, 5, 5, 1}));
  CHECK(hf_gorenstein_G(3).values == big({1, 1}));
  CHECK(hf_gorenstein_G(7).values == big({1, 7, 21, 21, 7, 1}));
  CHECK_THROWS(hf_gorenstein_G(2));
  for (unsigned r = 3; r <= 20; ++r) {
    const auto g = hf_gorenstein_G(r);
    CHECK(std::equal(g.values.begin(), g.values.end(), g.values.rbegin()));
    for (unsigned i = 0; i + 2 <= r; ++i) CHECK(g.at(i) == std::min(binomial(r, i), binomial(r, r - 2 - i)));
  }
}

TEST_CASE("squares plus the square of the sum") {
  CHECK(hf_acm_squares(7).values == big({1, 7, 20, 28, 14}));
  CHECK(hf_acm_squares(6).values == big({1, 6, 14, 14}));
  CHECK(hf_acm_squares(4).values == big({1, 4, 5}));
  CHECK(hf_acm_squares(9).at(5) == binomial(9, 4) - binomial(9, 3));
  for (unsigned r = 3; r <= 20; ++r) {
    const auto acm = hf_acm_squares(r);
    const auto ci = hf_square_ci(r);
    const auto g = hf_gorenstein_G(r);
    for (long t = 0; t <= static_cast<long>(r) + 1; ++t) CHECK(acm.at(t) == ci.at(t) - g.at(static_cast<long>(r) - t));
    CHECK(acm.values.size() == socle_degree_J(r) + 1);
  }
}

TEST_CASE("socle degrees and the 2^q residual") {
  CHECK(socle_degree_J(7) == 4);
  CHECK(socle_degree_J(6) == 3);
  CHECK(socle_degree_J(3) == 2);
  CHECK(coinvariant_dim_2q(3) == 8);
  CHECK(coinvariant_dim_2q(1) == 2);
  CHECK(coinvariant_dim_2q(6) == 64);
}

TEST_CASE("inequality chain") {
  for (unsigned q : {4u, 5u, 6u}) {
    const auto t = inequality_check(q);
    CHECK(t.holds);
    CHECK(t.steps_consistent);
  }
  // the bracket numerator -2(q-6)(q+1) is positive below q = 6 and non-positive from there on
  CHECK(inequality_check(5).bracket_numerator > 0);
  CHECK(inequality_check(6).bracket_numerator <= 0);
  CHECK(inequality_check(7).bracket_numerator < 0);
  CHECK_THROWS_AS(inequality_check(3), std::domain_error);
  for (unsigned q = 4; q <= 1000; ++q) {
    const auto t = inequality_check(q);
    REQUIRE(t.holds);
    REQUIRE(t.steps_consistent);
  }
}

TEST_CASE("binomial identities") {
  CHECK(binomial_identities(10, 3));
  CHECK(binomial_identities(2, 1));
  for (unsigned n = 1; n <= 64; ++n)
    for (unsigned k = 1; k <= n; ++k) REQUIRE(binomial_identities(n, k));
}

TEST_CASE("relatively compressed bound") {
  CHECK(relatively_compressed_bound(hf_square_ci(5), 1, 3, 1) == 5);
  const auto ci = hf_square_ci(6);
  CHECK(relatively_compressed_bound(ci, 1, 4, 4) == std::min(ci.at(4), BigInt(1)));
  CHECK(relatively_compressed_bound(hf_square_ci(7), 1, 5, 2) == 21);
}

TEST_CASE("semicontinuity") {
  for (unsigned r : {4u, 5u}) {
    const auto rep = semicontinuity_bounds(r);
    CHECK(rep.all_equal);
    CHECK(rep.general_le_special);
    CHECK(rep.a.values == hf_acm_squares(r).values);
  }
  CHECK_THROWS(semicontinuity_bounds(2));
}
