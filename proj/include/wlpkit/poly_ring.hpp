#pragma once

// Monomial bases, homogeneous forms and the apolar (differentiation) action
// of K[x_1..x_r] on the dual ring K[X_1..X_r].
//
// Within each degree monomials are listed in graded reverse-lexicographic
// order, largest first: x_1^d, x_1^{d-1} x_2, ..., x_r^d. Equivalently the
// exponent vectors are sorted lexicographically by (a_r, a_{r-1}, ..., a_1).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wlpkit/exact_linalg.hpp"

namespace wlpkit {

class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<unsigned> exps) : exps_(std::move(exps)) {}
  ExponentVector(std::initializer_list<unsigned> exps) : exps_(exps) {}

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned degree() const noexcept;
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const noexcept { return exps_; }

  bool divides(const ExponentVector& other) const;
  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector operator-(const ExponentVector& other) const;

  auto operator<=>(const ExponentVector&) const = default;

 private:
  std::vector<unsigned> exps_;
};

std::string to_string(const ExponentVector& m, char var = 'x');

/// Exact binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// C(n, k) in 64 bits for the small ranges used by monomial ranking.
std::uint64_t binomial_u64(unsigned n, unsigned k);

/// Position of `m` in the degree-|m| basis of `m.nvars()` variables.
std::uint64_t grevlex_rank(std::span<const unsigned> exps);

class MonomialBasis {
 public:
  MonomialBasis(unsigned r, unsigned degree);

  unsigned nvars() const noexcept { return r_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const ExponentVector& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<ExponentVector>& monomials() const noexcept { return monomials_; }
  std::size_t index_of(const ExponentVector& m) const;

 private:
  unsigned r_;
  unsigned degree_;
  std::vector<ExponentVector> monomials_;
};

/// Shared, memoized basis of [R]_d for R = K[x_1..x_r]. Safe for concurrent callers.
std::shared_ptr<const MonomialBasis> monomial_basis(unsigned r, unsigned d);

struct LinearForm {
  std::vector<BigInt> coefficients;

  LinearForm() = default;
  explicit LinearForm(std::vector<BigInt> c) : coefficients(std::move(c)) {}
  LinearForm(std::initializer_list<long long> c);

  unsigned nvars() const noexcept { return static_cast<unsigned>(coefficients.size()); }
  bool is_zero() const;
};

struct PrimalTag {};
struct DualTag {};

/// Homogeneous element of degree `degree`, coefficients indexed by monomial_basis(r, degree).
template <class Tag>
struct GradedElement {
  unsigned r = 1;
  unsigned degree = 0;
  std::vector<BigInt> coefficients;

  GradedElement() = default;
  GradedElement(unsigned nvars, unsigned deg) : r(nvars), degree(deg), coefficients(monomial_basis(nvars, deg)->size()) {}

  std::shared_ptr<const MonomialBasis> basis() const { return monomial_basis(r, degree); }
  const BigInt& coefficient(const ExponentVector& m) const { return coefficients[basis()->index_of(m)]; }
  void add_term(const ExponentVector& m, const BigInt& c) { coefficients[basis()->index_of(m)] += c; }
  bool is_zero() const {
    for (const auto& c : coefficients)
      if (c != 0) return false;
    return true;
  }
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& c : coefficients) n += (c != 0);
    return n;
  }

  GradedElement& operator+=(const GradedElement& o) {
    check_shape(o);
    for (std::size_t i = 0; i < coefficients.size(); ++i) coefficients[i] += o.coefficients[i];
    return *this;
  }
  GradedElement& operator-=(const GradedElement& o) {
    check_shape(o);
    for (std::size_t i = 0; i < coefficients.size(); ++i) coefficients[i] -= o.coefficients[i];
    return *this;
  }
  GradedElement& operator*=(const BigInt& c) {
    for (auto& v : coefficients) v *= c;
    return *this;
  }
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator*(GradedElement a, const BigInt& c) { return a *= c; }
  bool operator==(const GradedElement&) const = default;

 private:
  void check_shape(const GradedElement& o) const {
    if (o.r != r || o.degree != degree) throw std::invalid_argument("graded elements of different shape");
  }
};

using HomogeneousForm = GradedElement<PrimalTag>;
using DualPolynomial = GradedElement<DualTag>;

HomogeneousForm monomial_form(const ExponentVector& m, const BigInt& c = 1);
DualPolynomial dual_monomial(const ExponentVector& m, const BigInt& c = 1);
HomogeneousForm to_form(const LinearForm& l);

HomogeneousForm operator*(const HomogeneousForm& f, const HomogeneousForm& g);

std::string to_string(const HomogeneousForm& f);
std::string to_string(const DualPolynomial& g);

/// l^a expanded in the monomial basis of degree a.
HomogeneousForm expand_power_of_linear_form(const LinearForm& l, unsigned a);

/// Matrix of [R]_d -> [R]_{d+deg f}, m |-> f*m; columns follow monomial_basis(r, d).
IntegerMatrix multiplication_matrix(const HomogeneousForm& f, unsigned d);

/// f o g with x_i acting as d/dX_i (no divided-power normalization).
DualPolynomial apolar_action(const HomogeneousForm& f, const DualPolynomial& g);

/// Sum of the C(r, k) squarefree dual monomials of degree k.
DualPolynomial elementary_squarefree_sum(unsigned r, unsigned k);

/// x_1^2..x_r^2 followed by the sign-normalized, deduplicated products
/// (x_{i1}-x_{i2})(x_{i3}-x_{i4})... over pairwise distinct indices: q pairs
/// for r = 2q+1, and q-1 pairs times one more variable for r = 2q.
std::vector<HomogeneousForm> difference_product_generators(unsigned r);

}  // namespace wlpkit
