#pragma once

// Ideal specifications, seeded random draws of "general" generators, and
// Hilbert functions of the resulting artinian quotients.
//
// Every trial t works over its own random prime p_t and draws its own integer
// coefficients, so a trial is a fully specified ideal over F_{p_t}. When all
// generators are powers of linear forms, r linearly independent forms among
// them are turned into the variables by an exact change of coordinates over
// F_{p_t}; their powers become monomials and never enter a matrix.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wlpkit/graded_quotient.hpp"
#include "wlpkit/poly_ring.hpp"

namespace wlpkit {

struct EngineConfig {
  unsigned trials = 3;
  std::uint64_t seed = 0;
  unsigned prime_bits = 31;
  std::uint64_t coeff_bound = 10000;
  /// Turn independent linear forms into variables (off: work in the given coordinates).
  bool reduce_coordinates = true;
  /// Confirm integer-matrix ranks by fraction-free elimination.
  bool certify = false;
  /// Degrees scanned before declaring a quotient non-artinian; default 1 + sum of generator degrees.
  std::optional<unsigned> guard_degree;

  void validate() const;
};

/// l^exponent; `form` empty means a general linear form drawn per trial.
struct LinearPower {
  std::optional<LinearForm> form;
  unsigned exponent = 1;
};

/// A general form of the given degree, drawn per trial.
struct GeneralForm {
  unsigned degree = 1;
};

using Generator = std::variant<LinearPower, HomogeneousForm, GeneralForm>;

struct GradedIdeal {
  unsigned r = 1;
  std::vector<HomogeneousForm> generators;
};

struct IdealSpec {
  unsigned r = 1;
  std::vector<Generator> generators;

  IdealSpec() = default;
  IdealSpec(unsigned nvars, std::vector<Generator> gens) : r(nvars), generators(std::move(gens)) {}
  IdealSpec(const GradedIdeal& ideal);  // NOLINT(google-explicit-constructor)

  /// (l_1^{a_1}, ..., l_s^{a_s}) with general l_i.
  static IdealSpec general_powers(unsigned r, const std::vector<unsigned>& exponents);
  /// (x_1^{a_1}, ..., x_r^{a_r}).
  static IdealSpec monomial_ci(const std::vector<unsigned>& exponents);

  unsigned generator_degree(std::size_t i) const;
  /// 1 + sum of generator degrees.
  unsigned default_guard() const;
  /// True when some generator is drawn at random.
  bool has_general() const;
  /// Canonical text, stable across runs; used for cache keys.
  std::string canonical() const;

  void validate() const;
};

/// Generator list extended by `f`; throws on the zero form.
GradedIdeal ideal_sum(const GradedIdeal& ideal, const HomogeneousForm& f);
IdealSpec ideal_sum(const IdealSpec& ideal, const HomogeneousForm& f);

struct HilbertFunction {
  std::vector<std::size_t> values;

  /// Last degree with a nonzero value; throws for the zero algebra.
  unsigned socle_degree() const;
  std::size_t operator[](std::size_t d) const { return d < values.size() ? values[d] : 0; }
  bool operator==(const HilbertFunction&) const = default;
};

/// One trial's ideal over F_p, in working coordinates.
struct DrawnIdeal {
  unsigned r = 0;
  std::uint64_t prime = 0;
  std::vector<ModForm> generators;
  /// r x r row-major matrix M with x = M y; empty when the coordinates are unchanged.
  std::vector<std::uint64_t> to_working;

  /// Coefficients of the linear form l in working coordinates (l * M).
  std::vector<std::uint64_t> working_linear(const LinearForm& l) const;
};

/// Prime used by trial `trial`.
std::uint64_t trial_prime(const EngineConfig& cfg, unsigned trial);

DrawnIdeal draw_ideal(const IdealSpec& spec, const EngineConfig& cfg, unsigned trial);

/// General linear form drawn from `stream` of the configured seed.
LinearForm draw_linear_form(unsigned r, const EngineConfig& cfg, std::uint64_t stream);

/// l^a over F_p.
ModForm power_of_linear_mod(std::span<const std::uint64_t> l, unsigned a, std::uint64_t p);

/// f(M y) for f in rows(M) variables, giving a form in cols(M) variables.
ModForm substitute(const ModForm& f, std::span<const std::uint64_t> m, unsigned rows, unsigned cols,
                   std::uint64_t p);

/// Generators of (I, l)/(l) as forms in r-1 variables, eliminating the last
/// variable with a nonzero coefficient in l. Requires r >= 2.
std::vector<ModForm> restrict_to_hyperplane(const std::vector<ModForm>& generators, unsigned r,
                                            std::span<const std::uint64_t> l, std::uint64_t p);

/// dim_K [R/I]_d, the minimum over trials.
std::size_t graded_piece_dim(const IdealSpec& spec, unsigned d, const EngineConfig& cfg = {});

/// Full h-vector; throws NotArtinian when no zero appears by the guard degree.
HilbertFunction hilbert_function(const IdealSpec& spec, const EngineConfig& cfg = {});

unsigned socle_degree(const IdealSpec& spec, const EngineConfig& cfg = {});

/// Entries and hits of the in-process Hilbert function cache.
struct CacheStats {
  std::size_t entries = 0;
  std::size_t hits = 0;
};
CacheStats hilbert_cache_stats();
void clear_hilbert_cache();

}  // namespace wlpkit
