#include "doctest.h"

#include <random>

#include "wlpkit/errors.hpp"
#include "wlpkit/poly_ring.hpp"

using namespace wlpkit;

namespace {

HomogeneousForm random_form(unsigned r, unsigned d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-4, 4);
  HomogeneousForm f(r, d);
  for (auto& c : f.coefficients) c = dist(rng);
  return f;
}

DualPolynomial random_dual(unsigned r, unsigned d, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-4, 4);
  DualPolynomial g(r, d);
  for (auto& c : g.coefficients) c = dist(rng);
  return g;
}

}  // namespace

TEST_CASE("monomial bases") {
  const auto b = monomial_basis(2, 2);
  REQUIRE(b->size() == 3);
  CHECK((*b)[0] == ExponentVector{2, 0});
  CHECK((*b)[1] == ExponentVector{1, 1});
  CHECK((*b)[2] == ExponentVector{0, 2});
  CHECK(monomial_basis(4, 0)->size() == 1);
  CHECK(monomial_basis(7, 3)->size() == 84);
  for (unsigned r = 1; r <= 10; ++r)
    for (unsigned d = 0; d <= 8; ++d) {
      const auto basis = monomial_basis(r, d);
      CHECK(BigInt(basis->size()) == binomial(r - 1 + d, d));
      for (std::size_t i = 0; i < basis->size(); ++i) {
        CHECK(basis->index_of((*basis)[i]) == i);
        CHECK(grevlex_rank((*basis)[i].exponents()) == i);
      }
    }
}

TEST_CASE("powers of linear forms") {
  const auto sq = expand_power_of_linear_form(LinearForm{1, 1}, 2);
  CHECK(sq.coefficients == std::vector<BigInt>{1, 2, 1});
  const auto x5 = expand_power_of_linear_form(LinearForm{1, 0, 0}, 5);
  CHECK(x5 == monomial_form(ExponentVector{5, 0, 0}));
  const auto tri = expand_power_of_linear_form(LinearForm{1, 1, 1}, 2);
  CHECK(tri.coefficient(ExponentVector{2, 0, 0}) == 1);
  CHECK(tri.coefficient(ExponentVector{0, 0, 2}) == 1);
  CHECK(tri.coefficient(ExponentVector{1, 1, 0}) == 2);
  CHECK(tri.coefficient(ExponentVector{0, 1, 1}) == 2);
  CHECK_THROWS_AS(expand_power_of_linear_form(LinearForm{0, 0}, 2), std::invalid_argument);
}

TEST_CASE("multiplication matrices") {
  const auto x = to_form(LinearForm{1, 0});
  const auto mx = multiplication_matrix(x, 1);
  CHECK(mx.rows() == 3);
  CHECK(mx.cols() == 2);
  CHECK(rank_exact(mx) == 2);
  const auto sum = multiplication_matrix(to_form(LinearForm{1, 1}), 0);
  CHECK(sum == IntegerMatrix{{1}, {1}});
  const auto m = multiplication_matrix(expand_power_of_linear_form(LinearForm{1, 1, 1}, 2), 1);
  CHECK(m.rows() == 10);
  CHECK(m.cols() == 3);
  CHECK(rank_exact(m) == 3);

  std::mt19937_64 rng(3);
  for (int round = 0; round < 10; ++round) {
    const unsigned r = 2 + round % 3;
    const auto f = random_form(r, 1 + round % 2, rng);
    const auto g = random_form(r, 2, rng);
    const unsigned d = round % 3;
    CHECK(multiplication_matrix(f * g, d) == multiplication_matrix(f, d + g.degree) * multiplication_matrix(g, d));
  }
}

TEST_CASE("apolar action") {
  CHECK(apolar_action(to_form(LinearForm{1, -1, 0}), elementary_squarefree_sum(3, 1)).is_zero());
  const auto g = elementary_squarefree_sum(5, 3);
  for (unsigned i = 0; i < 5; ++i) {
    std::vector<unsigned> e(5, 0);
    e[i] = 2;
    CHECK(apolar_action(monomial_form(ExponentVector(e)), g).is_zero());
  }
  const auto x3 = apolar_action(monomial_form(ExponentVector{1, 1, 0}), dual_monomial(ExponentVector{1, 1, 1}));
  CHECK(x3 == dual_monomial(ExponentVector{0, 0, 1}));
  CHECK_THROWS_AS(apolar_action(monomial_form(ExponentVector{2, 0}), dual_monomial(ExponentVector{1, 0})),
                  DegreeUnderflow);
}

TEST_CASE("the apolarity pairing is diagonal with positive entries") {
  for (unsigned r = 1; r <= 4; ++r)
    for (unsigned d = 0; d <= 4; ++d) {
      const auto basis = monomial_basis(r, d);
      for (const auto& m : basis->monomials())
        for (const auto& n : basis->monomials()) {
          const auto v = apolar_action(monomial_form(m), dual_monomial(n));
          REQUIRE(v.degree == 0);
          if (m == n)
            CHECK(v.coefficients[0] > 0);
          else
            CHECK(v.coefficients[0] == 0);
        }
    }
}

TEST_CASE("the apolar action is bilinear") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 20; ++round) {
    const unsigned r = 2 + round % 3;
    const unsigned a = 1 + round % 2;
    const unsigned e = a + round % 3;
    const auto f1 = random_form(r, a, rng), f2 = random_form(r, a, rng);
    const auto g1 = random_dual(r, e, rng), g2 = random_dual(r, e, rng);
    const BigInt c = round - 7;
    CHECK(apolar_action(f1 + f2 * c, g1) == apolar_action(f1, g1) + apolar_action(f2, g1) * c);
    CHECK(apolar_action(f1, g1 + g2 * c) == apolar_action(f1, g1) + apolar_action(f1, g2) * c);
  }
}

TEST_CASE("squarefree sums") {
  CHECK(elementary_squarefree_sum(3, 1) == dual_monomial(ExponentVector{1, 0, 0}) +
                                               dual_monomial(ExponentVector{0, 1, 0}) +
                                               dual_monomial(ExponentVector{0, 0, 1}));
  const auto g = elementary_squarefree_sum(5, 3);
  CHECK(g.term_count() == 10);
  CHECK(g.coefficient(ExponentVector{1, 1, 1, 0, 0}) == 1);
  CHECK(g.coefficient(ExponentVector{0, 0, 1, 1, 1}) == 1);
  CHECK(g.coefficient(ExponentVector{2, 1, 0, 0, 0}) == 0);
  CHECK(elementary_squarefree_sum(4, 0) == dual_monomial(ExponentVector{0, 0, 0, 0}));
  CHECK_THROWS_AS(elementary_squarefree_sum(3, 4), std::invalid_argument);
}

TEST_CASE("difference products") {
  const auto s3 = difference_product_generators(3);
  REQUIRE(s3.size() == 6);
  for (std::size_t i = 3; i < 6; ++i) {
    CHECK(s3[i].degree == 1);
    CHECK(s3[i].term_count() == 2);
  }
  const auto s4 = difference_product_generators(4);
  for (std::size_t i = 4; i < s4.size(); ++i) {
    CHECK(s4[i].degree == 2);
    // (x_i - x_j) x_k: two squarefree terms
    CHECK(s4[i].term_count() == 2);
    CHECK(s4[i].coefficient(ExponentVector{2, 0, 0, 0}) == 0);
  }
  CHECK_THROWS_AS(difference_product_generators(2), std::invalid_argument);

  for (unsigned r = 3; r <= 9; ++r) {
    const auto g = elementary_squarefree_sum(r, r - 2);
    for (const auto& f : difference_product_generators(r))
      if (f.degree <= g.degree) CHECK(apolar_action(f, g).is_zero());
  }
}
