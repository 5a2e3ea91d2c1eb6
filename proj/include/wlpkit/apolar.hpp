#pragma once

// Inverse systems: catalecticant matrices, graded pieces of Ann(g), graded
// colon ideals (a : B) for an artinian ideal a, and the checks built on them
// for g = sum of all squarefree dual monomials of degree r-2.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "wlpkit/exact_linalg.hpp"
#include "wlpkit/ideal_engine.hpp"
#include "wlpkit/poly_ring.hpp"

namespace wlpkit {

/// Matrix of [R]_d -> [E]_{deg g - d}, f |-> f o g. Rows follow monomial_basis(r, deg g - d),
/// columns monomial_basis(r, d). Zero rows when d > deg g.
IntegerMatrix catalecticant_matrix(const DualPolynomial& g, unsigned d);

struct AnnihilatorPiece {
  unsigned degree = 0;
  /// Rank of the catalecticant, i.e. dim [R/Ann(g)]_d.
  std::size_t quotient_dim = 0;
  /// dim [Ann(g)]_d.
  std::size_t dim = 0;
  RankCertificate certificate;
  /// Prime of the kernel below.
  std::uint64_t prime = 0;
  /// Basis of [Ann(g)]_d over monomial_basis(r, d), modulo `prime`.
  std::vector<std::vector<std::uint64_t>> kernel;
};

AnnihilatorPiece annihilator_graded(const DualPolynomial& g, unsigned d, const EngineConfig& cfg = {});

/// Sparse vector over monomial_basis(r, e): (index, coefficient mod p).
struct SparseVector {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> entries;
};

/// Spanning sets of the graded pieces [B]_e of a homogeneous ideal B, modulo `prime`.
struct PieceProvider {
  unsigned r = 0;
  std::uint64_t prime = 0;
  std::function<std::vector<SparseVector>(unsigned e)> piece;
};

PieceProvider annihilator_provider(const DualPolynomial& g, std::uint64_t p);
PieceProvider maximal_ideal_provider(unsigned r, std::uint64_t p);
PieceProvider ideal_provider(unsigned r, const std::vector<HomogeneousForm>& generators, std::uint64_t p);

struct ColonPiece {
  unsigned degree = 0;
  /// dim [(a : B)]_d.
  std::size_t dim = 0;
  /// dim [R/(a : B)]_d.
  std::size_t codim = 0;
  /// dim [a]_d.
  std::size_t ideal_dim = 0;
  std::uint64_t prime = 0;
  /// Membership test for forms of degree d.
  std::function<bool(const HomogeneousForm&)> contains;
};

/// [a : B]_d = {f in [R]_d : f [B]_e in [a]_{d+e} for 1 <= e <= e_max}.
/// `e_max` defaults to the socle degree of R/a, past which the test is vacuous.
ColonPiece colon_graded(const GradedIdeal& a, const PieceProvider& b, unsigned d,
                        std::optional<unsigned> e_max = std::nullopt);

/// (x_1^2, ..., x_r^2).
GradedIdeal squares_ideal(unsigned r);

/// Hilbert function of R/Ann(g) from catalecticant ranks.
HilbertFunction gorenstein_hilbert(const DualPolynomial& g, const EngineConfig& cfg = {});

struct SDegree {
  unsigned d = 0;
  std::size_t dim_s = 0;
  std::size_t dim_ann = 0;
  bool equal = false;
};

/// Compares the ideal generated by difference_product_generators(r) with Ann(g).
struct SGenerationReport {
  unsigned r = 0;
  /// Every generator annihilates g (exact integer check).
  bool contained = false;
  std::vector<SDegree> degrees;
  bool all_equal = false;
  /// Degree of the difference products.
  unsigned product_degree = 0;
  /// Products linearly independent modulo the squares.
  std::size_t new_generators = 0;
  /// C(r-1, q-1) for r = 2q+1 and C(r, q) - C(r, q-2) for r = 2q; reported for comparison only.
  BigInt binomial_count;
};

/// 3 <= r <= 9.
SGenerationReport check_S_generates(unsigned r, const EngineConfig& cfg = {});

/// J = (a : Ann(g)) against (x_1^2, ..., x_r^2, (x_1+...+x_r)^2), degree by degree.
struct LinkageReport {
  unsigned r = 0;
  std::vector<std::size_t> colon_codim;  // dim [R/J]_t
  std::vector<std::size_t> explicit_codim;  // dim [R/(squares, (sum x)^2)]_t
  std::vector<std::size_t> squares_codim;  // dim [R/a]_t
  HilbertFunction gorenstein;  // H_G
  bool generators_contained = false;
  bool graded_equal = false;
  /// dim [R/J]_t = dim [R/a]_t - H_G(r-t) for every t.
  bool linkage_identity = false;
};

/// 3 <= r <= 9.
LinkageReport linkage_check(unsigned r, const EngineConfig& cfg = {});

inline constexpr unsigned kApolarCap = 9;

}  // namespace wlpkit
