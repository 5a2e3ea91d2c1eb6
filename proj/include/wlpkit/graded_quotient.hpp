#pragma once

// Graded pieces of R/I over a prime field, one degree at a time.
//
// Monomial generators of I are never put into a matrix: they only shrink the
// set of standard monomials, so the remaining generators are reduced modulo
// the monomial part. Each degree t is then one of
//
//   monomial level  ambient = standard monomials of degree t, rows = m*g;
//   Koszul level    ambient = R_1 (x) (R/I)_{t-1}, rows = x_j*mu_k(b) - x_k*mu_j(b)
//                   for b in (R/I)_{t-2}. Valid once t exceeds every
//                   generator degree, because then I_t = R_1 I_{t-1};
//   zero level      (R/I)_{t-1} = 0 already.
//
// After elimination every level keeps, for each pivot ambient coordinate, its
// normal form over the non-pivot coordinates, which form the quotient basis.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "wlpkit/modular.hpp"
#include "wlpkit/poly_ring.hpp"

namespace wlpkit {

struct ModTerm {
  std::vector<unsigned> exponents;
  std::uint64_t coeff = 0;
};

/// Homogeneous form with coefficients reduced modulo some prime; zero terms dropped.
struct ModForm {
  unsigned degree = 0;
  std::vector<ModTerm> terms;
};

ModForm reduce_form(const HomogeneousForm& f, std::uint64_t p);

/// Monomials of one degree that are not divisible by any monomial generator.
class StandardMonomials {
 public:
  StandardMonomials(unsigned r, unsigned degree, const std::vector<std::vector<unsigned>>& monomial_generators);

  unsigned nvars() const noexcept { return r_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return count_; }
  std::span<const unsigned> monomial(std::size_t i) const { return {flat_.data() + i * r_, r_}; }
  /// Position of `e`, or -1 when `e` is divisible by a monomial generator.
  long find(std::span<const unsigned> e) const;

 private:
  unsigned r_;
  unsigned degree_;
  std::size_t count_ = 0;
  std::vector<unsigned> flat_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

struct QuotientOptions {
  /// Koszul levels are skipped when callers need normal forms of arbitrary monomials.
  bool allow_koszul = true;
};

enum class LevelKind { Monomial, Koszul, Zero };

template <class W>
class GradedQuotient {
 public:
  using Options = QuotientOptions;

  GradedQuotient(unsigned r, modp::Field<W> field, std::vector<ModForm> generators, Options options = {});

  unsigned nvars() const noexcept { return r_; }
  const modp::Field<W>& field() const noexcept { return field_; }
  unsigned max_generator_degree() const noexcept { return max_degree_; }

  std::size_t dim(unsigned t) { return level(t).basis.size(); }
  LevelKind kind(unsigned t) { return level(t).kind; }

  /// Standard monomials of degree t (independent of the level kind).
  const StandardMonomials& standard(unsigned t);

  /// Quotient basis of a monomial level, as positions into standard(t).
  const std::vector<std::uint32_t>& basis(unsigned t) { return level(t).basis; }

  /// Coordinates over the quotient basis of a vector given over standard(t).
  std::vector<W> normal_form(unsigned t, std::span<const W> ambient);

  /// Matrix of multiplication by the linear form `l` from degree t to t+1,
  /// shape dim(t+1) x dim(t).
  modp::DenseMatrix<W> linear_map(unsigned t, std::span<const W> l);

 private:
  struct Level {
    LevelKind kind = LevelKind::Monomial;
    std::size_t ambient = 0;
    std::vector<std::uint32_t> basis;
    std::vector<std::int32_t> basis_pos;
    std::vector<std::int32_t> reducer_of;
    std::vector<std::vector<W>> reducers;
  };

  Level& level(unsigned t);
  void build_next();
  void build_monomial(unsigned t, Level& lv);
  void build_koszul(unsigned t, Level& lv);
  void finalize(Level& lv, modp::Echelon<W>& echelon);
  void add_unit_nf(const Level& lv, std::size_t a, W c, W* out) const;
  std::uint64_t estimate_standard(unsigned t) const;

  unsigned r_;
  modp::Field<W> field_;
  Options options_;
  std::vector<std::vector<unsigned>> monomial_gens_;
  std::vector<ModForm> other_gens_;
  unsigned max_degree_ = 0;
  std::vector<unsigned> caps_;
  std::vector<Level> levels_;
  std::unordered_map<unsigned, std::unique_ptr<StandardMonomials>> standard_;
};

extern template class GradedQuotient<std::uint32_t>;
extern template class GradedQuotient<std::uint64_t>;

using AnyQuotient = std::variant<GradedQuotient<std::uint32_t>, GradedQuotient<std::uint64_t>>;

/// Builds the quotient with the narrowest word type for `p`.
AnyQuotient make_quotient(unsigned r, std::uint64_t p, std::vector<ModForm> generators,
                          QuotientOptions options = {});

/// dim (R/I)_t for t = 0, 1, ... up to and excluding the first zero, or through
/// `guard` when no zero appears. The flag reports whether a zero was reached.
std::pair<std::vector<std::size_t>, bool> hilbert_values(AnyQuotient& q, unsigned guard);

}  // namespace wlpkit
