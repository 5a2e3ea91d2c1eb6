#include "wlpkit/oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace wlpkit {

namespace {

BigInt pow2(unsigned q) { return BigInt(1) << q; }

OracleTable from_hilbert(std::string name, unsigned r, const HilbertFunction& h, std::string source) {
  OracleTable t{std::move(name), r, {}, std::move(source)};
  for (std::size_t v : h.values) t.values.emplace_back(v);
  return t;
}

bool pointwise_le(const OracleTable& x, const OracleTable& y) {
  const std::size_t n = std::max(x.values.size(), y.values.size());
  for (std::size_t i = 0; i < n; ++i)
    if (x.at(static_cast<long>(i)) > y.at(static_cast<long>(i))) return false;
  return true;
}

}  // namespace

BigInt OracleTable::at(long i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= values.size()) return 0;
  return values[static_cast<std::size_t>(i)];
}

OracleTable hf_square_ci(unsigned r) {
  if (r < 1) throw std::invalid_argument("hf_square_ci needs r >= 1");
  OracleTable t{"hf_square_ci", r, {}, "C(r,j) for 0 <= j <= r; complete intersection of r squares"};
  for (unsigned j = 0; j <= r; ++j) t.values.push_back(binomial(r, j));
  return t;
}

OracleTable hf_gorenstein_G(unsigned r) {
  if (r < 3) throw std::invalid_argument("hf_gorenstein_G needs r >= 3");
  OracleTable t{"hf_gorenstein_G", r, {},
                "C(r,t) for 2t <= r-2, C(r,r-2-t) above; R/Ann of the squarefree sum of degree r-2"};
  for (unsigned s = 0; s + 2 <= r; ++s)
    t.values.push_back(2 * s <= r - 2 ? binomial(r, s) : binomial(r, static_cast<long>(r) - 2 - s));
  return t;
}

OracleTable hf_acm_squares(unsigned r) {
  if (r < 2) throw std::invalid_argument("hf_acm_squares needs r >= 2");
  OracleTable t{"hf_acm_squares", r, {},
                "C(r,t)-C(r,t-2) for t <= floor(r/2), plus C(r,q)-C(r,q-1) at q+1 when r = 2q+1; "
                "R/(x_1^2..x_r^2,(x_1+..+x_r)^2)"};
  const unsigned q = r / 2;
  for (unsigned s = 0; s <= q; ++s) t.values.push_back(binomial(r, s) - binomial(r, static_cast<long>(s) - 2));
  if (r % 2 == 1) t.values.push_back(binomial(r, q) - binomial(r, static_cast<long>(q) - 1));
  return t;
}

unsigned socle_degree_J(unsigned r) {
  if (r < 2) throw std::invalid_argument("socle_degree_J needs r >= 2");
  return r % 2 == 1 ? r / 2 + 1 : r / 2;
}

BigInt coinvariant_dim_2q(unsigned q) {
  if (q < 1) throw std::invalid_argument("coinvariant_dim_2q needs q >= 1");
  return pow2(q);
}

InequalityTrace inequality_check(unsigned q) {
  if (q < 4) throw std::domain_error("the inequality chain is stated for q >= 4");
  const long n = 2 * static_cast<long>(q) + 1;
  const long lq = q;
  InequalityTrace tr;
  tr.q = q;
  tr.power = pow2(q);
  tr.h_q = binomial(n, lq) - binomial(n, lq - 2);
  tr.h_q_minus_1 = binomial(n, lq - 1) - binomial(n, lq - 3);
  tr.central = binomial(n + 1, lq);
  tr.shifted = binomial(n + 1, lq - 2);
  tr.scaled_lhs = tr.central - 3 * tr.shifted;
  tr.scaled_rhs = BigInt(lq + 1) * tr.power;
  tr.bracket_denominator = BigInt((lq + 4) * (lq + 3));
  tr.bracket_numerator = tr.bracket_denominator - BigInt(3 * (lq - 1) * lq);

  bool ok = true;
  // moving C(2q+1,q-1) and C(2q+1,q-2) across keeps the difference of the two sides
  const BigInt diff1 = tr.h_q - (tr.power + tr.h_q_minus_1);
  const BigInt lhs2 = binomial(n, lq) - binomial(n, lq - 1);
  const BigInt rhs2 = tr.power + binomial(n, lq - 2) - binomial(n, lq - 3);
  ok = ok && diff1 == lhs2 - rhs2;
  // both differences of consecutive binomials are multiples of C(2q+2, .)/(q+1)
  ok = ok && BigInt(lq + 1) * lhs2 == tr.central;
  ok = ok && BigInt(lq + 1) * (binomial(n, lq - 2) - binomial(n, lq - 3)) == 3 * tr.shifted;
  ok = ok && BigInt(lq + 1) * (lhs2 - rhs2) == tr.scaled_lhs - tr.scaled_rhs;
  // factoring C(2q+2,q) out of the bracket
  ok = ok && tr.scaled_lhs * tr.bracket_denominator == tr.central * tr.bracket_numerator;
  ok = ok && tr.bracket_numerator == BigInt(-2 * lq * lq + 10 * lq + 12);
  ok = ok && tr.bracket_numerator == BigInt(-2 * (lq - 6) * (lq + 1));
  tr.steps_consistent = ok;
  tr.holds = ok && tr.scaled_rhs > tr.scaled_lhs && diff1 < 0;
  return tr;
}

bool binomial_identities(unsigned n, unsigned k) {
  if (k < 1 || k > n) throw std::invalid_argument("binomial_identities needs 1 <= k <= n");
  const long ln = n;
  const long lk = k;
  const bool first = BigInt(ln) * (binomial(ln - 1, lk) - binomial(ln - 1, lk - 1)) == BigInt(ln - 2 * lk) * binomial(ln, lk);
  const bool second = BigInt(lk) * binomial(ln, lk) == BigInt(ln + 1 - lk) * binomial(ln, lk - 1);
  return first && second;
}

BigInt relatively_compressed_bound(const OracleTable& hf_ci, unsigned t, unsigned e, unsigned i) {
  if (i > e) throw std::invalid_argument("relatively_compressed_bound needs i <= e");
  return std::min(hf_ci.at(i), BigInt(t) * hf_ci.at(static_cast<long>(e) - static_cast<long>(i)));
}

IdealSpec squares_plus_general_square(unsigned r) {
  IdealSpec spec;
  spec.r = r;
  for (unsigned i = 0; i < r; ++i) {
    std::vector<BigInt> c(r, 0);
    c[i] = 1;
    spec.generators.emplace_back(LinearPower{LinearForm(std::move(c)), 2});
  }
  spec.generators.emplace_back(LinearPower{std::nullopt, 2});
  return spec;
}

IdealSpec general_squares(unsigned r, unsigned count) {
  return IdealSpec::general_powers(r, std::vector<unsigned>(count, 2));
}

IdealSpec general_quadrics(unsigned r, unsigned count) {
  IdealSpec spec;
  spec.r = r;
  for (unsigned i = 0; i < count; ++i) spec.generators.emplace_back(GeneralForm{2});
  return spec;
}

SemicontinuityReport semicontinuity_bounds(unsigned r, const EngineConfig& cfg) {
  if (r < 3) throw std::invalid_argument("semicontinuity_bounds needs r >= 3");
  SemicontinuityReport rep;
  rep.a = from_hilbert("H_A", r, hilbert_function(squares_plus_general_square(r), cfg),
                       "squares of the variables plus a general square");
  rep.b = from_hilbert("H_B", r, hilbert_function(general_squares(r, r + 1), cfg), "r+1 general squares");
  rep.c = from_hilbert("H_C", r, hilbert_function(general_quadrics(r, r + 1), cfg), "r+1 general quadrics");
  rep.a_le_b = pointwise_le(rep.a, rep.b);
  rep.b_le_c = pointwise_le(rep.b, rep.c);
  // specializing coefficients can only enlarge a quotient
  rep.general_le_special = pointwise_le(rep.c, rep.b) && pointwise_le(rep.b, rep.a);
  rep.all_equal = rep.a.values == rep.b.values && rep.b.values == rep.c.values;
  return rep;
}

}  // namespace wlpkit
