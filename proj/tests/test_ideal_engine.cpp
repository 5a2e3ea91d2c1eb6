#include "doctest.h"

#include "wlpkit/errors.hpp"
#include "wlpkit/ideal_engine.hpp"
#include "wlpkit/oracles.hpp"

using namespace wlpkit;

namespace {

HomogeneousForm power(std::initializer_list<unsigned> e) { return monomial_form(ExponentVector(e)); }

GradedIdeal squares(unsigned r) {
  GradedIdeal a{r, {}};
  for (unsigned i = 0; i < r; ++i) {
    std::vector<unsigned> e(r, 0);
    e[i] = 2;
    a.generators.push_back(monomial_form(ExponentVector(e)));
  }
  return a;
}

std::vector<std::size_t> as_sizes(const OracleTable& t) {
  std::vector<std::size_t> out;
  for (const auto& v : t.values) out.push_back(static_cast<std::size_t>(v));
  return out;
}

}  // namespace

TEST_CASE("graded pieces") {
  CHECK(graded_piece_dim(GradedIdeal{2, {power({2, 0}), power({0, 2})}}, 2) == 1);
  CHECK(graded_piece_dim(squares(5), 3) == 10);
  CHECK(graded_piece_dim(IdealSpec::general_powers(7, std::vector<unsigned>(8, 2)), 3) == 28);
}

TEST_CASE("Hilbert functions") {
  CHECK(hilbert_function(GradedIdeal{2, {power({3, 0}), power({0, 3})}}).values ==
        std::vector<std::size_t>{1, 2, 3, 2, 1});
  CHECK(hilbert_function(IdealSpec::monomial_ci({2, 2, 2, 2, 2})).values == std::vector<std::size_t>{1, 5, 10, 10, 5, 1});
  CHECK(hilbert_function(IdealSpec::general_powers(7, std::vector<unsigned>(8, 2))).values ==
        std::vector<std::size_t>{1, 7, 20, 28, 14});
  CHECK(hilbert_function(IdealSpec::general_powers(6, std::vector<unsigned>(7, 2))).values ==
        std::vector<std::size_t>{1, 6, 14, 14});

  // Written with x_4^4 the ideal has h-vector (1,4,10,16,18,12,...); the stated
  // (1,4,10,15,15,6) is that of all cubes, so x_4^4 is a misprint for x_4^3.
  IdealSpec cubes = IdealSpec::monomial_ci({3, 3, 3, 3});
  cubes.generators.push_back(LinearPower{std::nullopt, 3});
  CHECK(hilbert_function(cubes).values == std::vector<std::size_t>{1, 4, 10, 15, 15, 6});
  IdealSpec sum_cube = IdealSpec::monomial_ci({3, 3, 3, 3});
  sum_cube.generators.push_back(LinearPower{LinearForm{1, 1, 1, 1}, 3});
  CHECK(hilbert_function(sum_cube).values == std::vector<std::size_t>{1, 4, 10, 15, 15, 6});
  IdealSpec misprint = IdealSpec::monomial_ci({3, 3, 3, 4});
  misprint.generators.push_back(LinearPower{LinearForm{1, 1, 1, 1}, 3});
  CHECK(hilbert_function(misprint).values != std::vector<std::size_t>{1, 4, 10, 15, 15, 6});
}

TEST_CASE("non-artinian ideals are rejected") {
  CHECK_THROWS_AS(hilbert_function(GradedIdeal{2, {power({2, 0})}}), NotArtinian);
  CHECK_THROWS_AS(socle_degree(GradedIdeal{3, {power({1, 0, 0}), power({0, 1, 0})}}), NotArtinian);
}

TEST_CASE("ideal sums") {
  const GradedIdeal i{2, {power({2, 0})}};
  const auto j = ideal_sum(i, power({0, 1}));
  CHECK(j.generators.size() == 2);
  CHECK(hilbert_function(j).values == std::vector<std::size_t>{1, 1});
  CHECK_THROWS_AS(ideal_sum(i, HomogeneousForm(2, 1)), std::invalid_argument);

  // adding an element of I changes nothing
  const auto a = squares(4);
  CHECK(hilbert_function(ideal_sum(a, power({2, 1, 0, 0}) + power({0, 0, 2, 1}))) == hilbert_function(a));

  // eight general squares in seven variables plus a general linear form: 2^3 in degree 3
  IdealSpec b = IdealSpec::general_powers(7, std::vector<unsigned>(8, 2));
  b.generators.push_back(LinearPower{std::nullopt, 1});
  CHECK(graded_piece_dim(b, 3) == 8);
}

TEST_CASE("socle degrees") {
  for (unsigned r = 1; r <= 6; ++r) CHECK(socle_degree(squares(r)) == r);
  for (unsigned r = 3; r <= 9; ++r)
    CHECK(socle_degree(IdealSpec::general_powers(r, std::vector<unsigned>(r + 1, 2))) == socle_degree_J(r));
}

TEST_CASE("graded dimensions stay within bounds and shrink as the ideal grows") {
  const auto spec = IdealSpec::general_powers(4, {2, 3, 3});
  IdealSpec bigger = spec;
  bigger.generators.push_back(LinearPower{std::nullopt, 2});
  const auto h = hilbert_function(ideal_sum(squares(4), power({1, 1, 0, 0})));
  for (std::size_t d = 0; d < h.values.size(); ++d) CHECK(BigInt(h[d]) <= binomial(3 + d, d));
  const auto h_small = hilbert_function(IdealSpec::general_powers(4, {2, 3, 3, 3}));
  const auto h_big = hilbert_function(IdealSpec::general_powers(4, {2, 3, 3, 3, 2}));
  for (std::size_t d = 0; d < h_small.values.size(); ++d) CHECK(h_big[d] <= h_small[d]);
}

TEST_CASE("general ideals match the closed forms through r = 13") {
  for (unsigned r = 2; r <= 13; ++r)
    CHECK(hilbert_function(IdealSpec::general_powers(r, std::vector<unsigned>(r + 1, 2))).values ==
          as_sizes(hf_acm_squares(r)));
}

TEST_CASE("coordinate changes do not alter Hilbert functions") {
  EngineConfig plain;
  plain.reduce_coordinates = false;
  for (unsigned r = 3; r <= 6; ++r) {
    const auto spec = IdealSpec::general_powers(r, std::vector<unsigned>(r + 1, 2));
    CHECK(hilbert_function(spec, plain) == hilbert_function(spec));
  }
  const auto mixed = IdealSpec::general_powers(3, {2, 3, 3, 4});
  CHECK(hilbert_function(mixed, plain) == hilbert_function(mixed));
}

TEST_CASE("results are deterministic for a fixed seed and cached") {
  clear_hilbert_cache();
  EngineConfig cfg;
  cfg.seed = 42;
  const auto spec = IdealSpec::general_powers(5, std::vector<unsigned>(6, 2));
  const auto first = hilbert_function(spec, cfg);
  CHECK(hilbert_cache_stats().entries == 1);
  CHECK(hilbert_function(spec, cfg) == first);
  CHECK(hilbert_cache_stats().hits >= 1);
  CHECK(draw_ideal(spec, cfg, 1).prime == draw_ideal(spec, cfg, 1).prime);
  CHECK(trial_prime(cfg, 0) != trial_prime(cfg, 1));
}

TEST_CASE("specification helpers") {
  const auto spec = IdealSpec::general_powers(3, {2, 3});
  CHECK(spec.has_general());
  CHECK(spec.generator_degree(1) == 3);
  CHECK(spec.default_guard() == 6);
  CHECK(spec.canonical() == "r=3;L(general)^2;L(general)^3");
  CHECK_FALSE(IdealSpec::monomial_ci({2, 2}).has_general());
  IdealSpec bad{2, {LinearPower{LinearForm{1, 0, 0}, 2}}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  EngineConfig cfg;
  cfg.prime_bits = 70;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("restriction to a hyperplane") {
  // (x^2, y^2) restricted to x + y = 0 becomes (y^2, y^2) in one variable
  const std::uint64_t p = 1000003;
  std::vector<ModForm> gens = {reduce_form(power({2, 0}), p), reduce_form(power({0, 2}), p)};
  const std::vector<std::uint64_t> l = {1, 1};
  const auto restricted = restrict_to_hyperplane(gens, 2, l, p);
  REQUIRE(restricted.size() == 2);
  for (const auto& g : restricted) {
    REQUIRE(g.terms.size() == 1);
    CHECK(g.terms[0].exponents == std::vector<unsigned>{2});
    CHECK(g.terms[0].coeff == 1);
  }
}
