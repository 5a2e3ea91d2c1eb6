#include "doctest.h"

#include "wlpkit/graded_quotient.hpp"

using namespace wlpkit;

namespace {

ModForm pure_power(unsigned r, unsigned var, unsigned e) {
  std::vector<unsigned> exps(r, 0);
  exps[var] = e;
  return {e, {{exps, 1}}};
}

}  // namespace

TEST_CASE("standard monomials respect pure powers and mixed monomials") {
  StandardMonomials sm(3, 2, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(sm.size() == 3);
  CHECK(sm.find(std::vector<unsigned>{1, 1, 0}) >= 0);
  CHECK(sm.find(std::vector<unsigned>{2, 0, 0}) == -1);
  StandardMonomials mixed(2, 2, {{1, 1}});
  CHECK(mixed.size() == 2);
}

TEST_CASE("monomial complete intersection in two variables") {
  auto q = make_quotient(2, 101, {pure_power(2, 0, 3), pure_power(2, 1, 3)});
  auto [values, zero] = hilbert_values(q, 10);
  CHECK(zero);
  CHECK(values == std::vector<std::size_t>{1, 2, 3, 2, 1});
}

TEST_CASE("squares plus the square of the sum, with and without syzygy levels") {
  for (unsigned r : {3u, 4u, 5u, 6u, 7u}) {
    std::vector<ModForm> gens;
    for (unsigned i = 0; i < r; ++i) gens.push_back(pure_power(r, i, 2));
    gens.push_back(reduce_form(expand_power_of_linear_form(LinearForm(std::vector<BigInt>(r, 1)), 2), 1000003));
    for (bool koszul : {true, false}) {
      auto q = make_quotient(r, 1000003, gens, {koszul});
      auto [values, zero] = hilbert_values(q, 20);
      CHECK(zero);
      std::vector<std::size_t> expected;
      const auto half = r / 2;
      for (unsigned t = 0; t <= half; ++t)
        expected.push_back(static_cast<std::size_t>(binomial(r, t) - binomial(r, long(t) - 2)));
      if (r % 2 == 1) expected.push_back(static_cast<std::size_t>(binomial(r, half) - binomial(r, long(half) - 1)));
      CHECK(values == expected);
    }
  }
}
