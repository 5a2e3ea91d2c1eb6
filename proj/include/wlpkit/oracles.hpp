#pragma once

// Closed-form Hilbert functions and exact-integer identities used as
// independent cross-checks for the engine.

#include <string>
#include <vector>

#include "wlpkit/exact_linalg.hpp"
#include "wlpkit/ideal_engine.hpp"

namespace wlpkit {

struct OracleTable {
  std::string name;
  unsigned r = 0;
  std::vector<BigInt> values;
  std::string source;

  /// values[i], or 0 outside the table.
  BigInt at(long i) const;
  bool operator==(const OracleTable&) const = default;
};

/// C(r, j) for 0 <= j <= r: K[x_1..x_r]/(x_1^2..x_r^2).
OracleTable hf_square_ci(unsigned r);

/// Hilbert function of R/Ann(g), g the sum of all squarefree dual monomials of degree r-2.
OracleTable hf_gorenstein_G(unsigned r);

/// Hilbert function of R/(x_1^2, ..., x_r^2, (x_1 + ... + x_r)^2), equal to
/// that of r+1 general squares. Defined for r >= 2.
OracleTable hf_acm_squares(unsigned r);

/// Socle degree of the quotient in hf_acm_squares: q+1 for r = 2q+1, q for r = 2q.
unsigned socle_degree_J(unsigned r);

/// 2^q, the degree-q residual dimension for r = 2q+1 general squares plus a general linear form.
BigInt coinvariant_dim_2q(unsigned q);

/// Exact trace of the chain showing h(q) < 2^q + h(q-1) for r = 2q+1.
struct InequalityTrace {
  unsigned q = 0;
  BigInt power;          // 2^q
  BigInt h_q;            // C(2q+1,q) - C(2q+1,q-2)
  BigInt h_q_minus_1;    // C(2q+1,q-1) - C(2q+1,q-3)
  BigInt central;        // C(2q+2,q)
  BigInt shifted;        // C(2q+2,q-2)
  BigInt scaled_lhs;     // C(2q+2,q) - 3 C(2q+2,q-2)
  BigInt scaled_rhs;     // (q+1) 2^q
  BigInt bracket_numerator;  // (q+4)(q+3) - 3(q-1)q
  BigInt bracket_denominator;  // (q+4)(q+3)
  bool steps_consistent = false;  // every rewriting step is an exact identity
  bool holds = false;
};

/// Throws std::domain_error for q < 4.
InequalityTrace inequality_check(unsigned q);

/// C(n-1,k) - C(n-1,k-1) = (n-2k)/n C(n,k) and C(n,k) = (n+1-k)/k C(n,k-1), cleared of denominators.
bool binomial_identities(unsigned n, unsigned k);

/// min{hf_ci[i], t * hf_ci[e-i]}, reading out-of-range entries as 0.
BigInt relatively_compressed_bound(const OracleTable& hf_ci, unsigned t, unsigned e, unsigned i);

/// Engine-computed Hilbert functions of
///   A = (x_1^2, ..., x_r^2, l^2), B = r+1 general squares, C = r+1 general quadrics.
struct SemicontinuityReport {
  OracleTable a;
  OracleTable b;
  OracleTable c;
  bool a_le_b = false;
  bool b_le_c = false;
  /// H_C <= H_B <= H_A, the direction forced by upper semicontinuity of graded dimensions.
  bool general_le_special = false;
  bool all_equal = false;
};

SemicontinuityReport semicontinuity_bounds(unsigned r, const EngineConfig& cfg = {});

/// Ideal specs used by semicontinuity_bounds.
IdealSpec squares_plus_general_square(unsigned r);
IdealSpec general_squares(unsigned r, unsigned count);
IdealSpec general_quadrics(unsigned r, unsigned count);

}  // namespace wlpkit
