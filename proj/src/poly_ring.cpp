#include "wlpkit/poly_ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wlpkit {

unsigned ExponentVector::degree() const noexcept { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

bool ExponentVector::divides(const ExponentVector& other) const {
  if (other.nvars() != nvars()) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (other.nvars() != nvars()) throw std::invalid_argument("exponent vectors of different length");
  ExponentVector out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  if (!other.divides(*this)) throw std::invalid_argument("monomial quotient is not a monomial");
  ExponentVector out = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= other.exps_[i];
  return out;
}

std::string to_string(const ExponentVector& m, char var) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (any) os << '*';
    os << var << (i + 1);
    if (m[i] > 1) os << '^' << m[i];
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

namespace {

constexpr unsigned kBinomTable = 64;

const std::vector<std::uint64_t>& binomial_table() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> t(kBinomTable * kBinomTable, 0);
    for (unsigned n = 0; n < kBinomTable; ++n) {
      t[n * kBinomTable] = 1;
      for (unsigned k = 1; k <= n; ++k) t[n * kBinomTable + k] = t[(n - 1) * kBinomTable + k - 1] + t[(n - 1) * kBinomTable + k];
    }
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t binomial_u64(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (n >= kBinomTable) throw std::out_of_range("binomial table exhausted");
  return binomial_table()[n * kBinomTable + k];
}

std::uint64_t grevlex_rank(std::span<const unsigned> exps) {
  // count monomials whose reversed exponent tuple is lexicographically smaller
  unsigned remaining = 0;
  for (unsigned e : exps) remaining += e;
  std::uint64_t rank = 0;
  for (std::size_t k = exps.size(); k >= 2; --k) {
    const unsigned a = exps[k - 1];
    // completions of degree (remaining - v) in k-1 variables, for v < a
    for (unsigned v = 0; v < a; ++v) rank += binomial_u64(static_cast<unsigned>(k) - 2 + remaining - v, static_cast<unsigned>(k) - 2);
    remaining -= a;
  }
  return rank;
}

MonomialBasis::MonomialBasis(unsigned r, unsigned degree) : r_(r), degree_(degree) {
  if (r == 0) throw std::invalid_argument("polynomial ring needs at least one variable");
  std::vector<unsigned> e(r, 0);
  // reversed-lex enumeration: fix a_r, then a_{r-1}, ..., a_1 takes the rest
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos == 0) {
      e[0] = remaining;
      monomials_.emplace_back(e);
      return;
    }
    for (unsigned v = 0; v <= remaining; ++v) {
      e[pos] = v;
      self(self, pos - 1, remaining - v);
    }
    e[pos] = 0;
  };
  rec(rec, r - 1, degree);
}

std::size_t MonomialBasis::index_of(const ExponentVector& m) const {
  if (m.nvars() != r_ || m.degree() != degree_) throw std::invalid_argument("monomial outside this basis: " + to_string(m));
  return static_cast<std::size_t>(grevlex_rank(m.exponents()));
}

std::shared_ptr<const MonomialBasis> monomial_basis(unsigned r, unsigned d) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const MonomialBasis>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({r, d}); it != cache.end()) return it->second;
  }
  auto basis = std::make_shared<const MonomialBasis>(r, d);
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(r, d), std::move(basis)).first->second;
}

LinearForm::LinearForm(std::initializer_list<long long> c) {
  for (long long v : c) coefficients.emplace_back(v);
}

bool LinearForm::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const BigInt& c) { return c == 0; });
}

HomogeneousForm monomial_form(const ExponentVector& m, const BigInt& c) {
  HomogeneousForm f(static_cast<unsigned>(m.nvars()), m.degree());
  f.add_term(m, c);
  return f;
}

DualPolynomial dual_monomial(const ExponentVector& m, const BigInt& c) {
  DualPolynomial g(static_cast<unsigned>(m.nvars()), m.degree());
  g.add_term(m, c);
  return g;
}

HomogeneousForm to_form(const LinearForm& l) {
  HomogeneousForm f(l.nvars(), 1);
  auto basis = f.basis();
  for (unsigned i = 0; i < l.nvars(); ++i) {
    std::vector<unsigned> e(l.nvars(), 0);
    e[i] = 1;
    f.coefficients[basis->index_of(ExponentVector(e))] = l.coefficients[i];
  }
  return f;
}

HomogeneousForm operator*(const HomogeneousForm& f, const HomogeneousForm& g) {
  if (f.r != g.r) throw std::invalid_argument("forms over different rings");
  HomogeneousForm out(f.r, f.degree + g.degree);
  auto fb = f.basis();
  auto gb = g.basis();
  auto ob = out.basis();
  for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
    if (f.coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < g.coefficients.size(); ++j) {
      if (g.coefficients[j] == 0) continue;
      out.coefficients[ob->index_of((*fb)[i] + (*gb)[j])] += f.coefficients[i] * g.coefficients[j];
    }
  }
  return out;
}

namespace {

template <class Tag>
std::string render(const GradedElement<Tag>& f, char var) {
  std::ostringstream os;
  auto basis = f.basis();
  bool any = false;
  for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
    const BigInt& c = f.coefficients[i];
    if (c == 0) continue;
    const bool constant = (*basis)[i].degree() == 0;
    if (any) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (mag != 1 || constant) os << mag;
    if (!constant) {
      if (mag != 1) os << '*';
      os << to_string((*basis)[i], var);
    }
    any = true;
  }
  if (!any) os << '0';
  return os.str();
}

}  // namespace

std::string to_string(const HomogeneousForm& f) { return render(f, 'x'); }
std::string to_string(const DualPolynomial& g) { return render(g, 'X'); }

HomogeneousForm expand_power_of_linear_form(const LinearForm& l, unsigned a) {
  if (l.is_zero()) throw std::invalid_argument("cannot expand a power of the zero linear form");
  if (a < 1) throw std::invalid_argument("exponent must be at least 1");
  const unsigned r = l.nvars();
  HomogeneousForm out(r, a);
  auto basis = out.basis();
  BigInt a_fact = 1;
  for (unsigned i = 2; i <= a; ++i) a_fact *= i;
  for (std::size_t idx = 0; idx < basis->size(); ++idx) {
    const ExponentVector& m = (*basis)[idx];
    BigInt coeff = a_fact;
    for (unsigned i = 0; i < r; ++i) {
      for (unsigned k = 2; k <= m[i]; ++k) coeff /= k;
    }
    for (unsigned i = 0; i < r && coeff != 0; ++i) coeff *= boost::multiprecision::pow(l.coefficients[i], m[i]);
    out.coefficients[idx] = coeff;
  }
  return out;
}

IntegerMatrix multiplication_matrix(const HomogeneousForm& f, unsigned d) {
  auto src = monomial_basis(f.r, d);
  auto dst = monomial_basis(f.r, d + f.degree);
  auto fb = f.basis();
  IntegerMatrix m(dst->size(), src->size());
  for (std::size_t j = 0; j < src->size(); ++j)
    for (std::size_t t = 0; t < fb->size(); ++t) {
      if (f.coefficients[t] == 0) continue;
      m(dst->index_of((*src)[j] + (*fb)[t]), j) += f.coefficients[t];
    }
  return m;
}

DualPolynomial apolar_action(const HomogeneousForm& f, const DualPolynomial& g) {
  if (f.r != g.r) throw std::invalid_argument("form and dual polynomial over different rings");
  if (f.degree > g.degree)
    throw DegreeUnderflow("apolar action of degree " + std::to_string(f.degree) + " on degree " + std::to_string(g.degree));
  DualPolynomial out(g.r, g.degree - f.degree);
  auto fb = f.basis();
  auto gb = g.basis();
  auto ob = out.basis();
  for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
    if (f.coefficients[i] == 0) continue;
    const ExponentVector& alpha = (*fb)[i];
    for (std::size_t j = 0; j < g.coefficients.size(); ++j) {
      if (g.coefficients[j] == 0) continue;
      const ExponentVector& beta = (*gb)[j];
      if (!alpha.divides(beta)) continue;
      // falling factorials beta_i (beta_i - 1) ... (beta_i - alpha_i + 1)
      BigInt c = f.coefficients[i] * g.coefficients[j];
      for (unsigned v = 0; v < g.r; ++v)
        for (unsigned k = 0; k < alpha[v]; ++k) c *= (beta[v] - k);
      out.coefficients[ob->index_of(beta - alpha)] += c;
    }
  }
  return out;
}

DualPolynomial elementary_squarefree_sum(unsigned r, unsigned k) {
  if (k > r) throw std::invalid_argument("squarefree degree exceeds the number of variables");
  DualPolynomial g(r, k);
  auto basis = g.basis();
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const auto& e = (*basis)[i].exponents();
    if (std::all_of(e.begin(), e.end(), [](unsigned v) { return v <= 1; })) g.coefficients[i] = 1;
  }
  return g;
}

namespace {

HomogeneousForm difference(unsigned r, unsigned i, unsigned j) {
  LinearForm l(std::vector<BigInt>(r, 0));
  l.coefficients[i] = 1;
  l.coefficients[j] = -1;
  return to_form(l);
}

HomogeneousForm variable(unsigned r, unsigned i) {
  std::vector<unsigned> e(r, 0);
  e[i] = 1;
  return monomial_form(ExponentVector(e));
}

void sign_normalize(HomogeneousForm& f) {
  for (const auto& c : f.coefficients) {
    if (c == 0) continue;
    if (c < 0) f *= BigInt(-1);
    return;
  }
}

// All ways to split `pool` into `pairs` disjoint unordered pairs, leaving the rest unused.
void enumerate_pairings(const std::vector<unsigned>& pool, unsigned pairs, std::vector<std::pair<unsigned, unsigned>>& current,
                        std::vector<bool>& used, std::size_t start,
                        const std::function<void(const std::vector<std::pair<unsigned, unsigned>>&)>& emit) {
  if (current.size() == pairs) {
    emit(current);
    return;
  }
  // smallest unused index at or after `start` opens the next pair, or is skipped
  for (std::size_t a = start; a < pool.size(); ++a) {
    if (used[a]) continue;
    used[a] = true;
    for (std::size_t b = a + 1; b < pool.size(); ++b) {
      if (used[b]) continue;
      used[b] = true;
      current.emplace_back(pool[a], pool[b]);
      enumerate_pairings(pool, pairs, current, used, a + 1, emit);
      current.pop_back();
      used[b] = false;
    }
    used[a] = false;
  }
}

}  // namespace

std::vector<HomogeneousForm> difference_product_generators(unsigned r) {
  if (r < 3) throw std::invalid_argument("difference products need at least 3 variables");
  std::vector<HomogeneousForm> out;
  for (unsigned i = 0; i < r; ++i) {
    std::vector<unsigned> e(r, 0);
    e[i] = 2;
    out.push_back(monomial_form(ExponentVector(e)));
  }
  const bool odd = r % 2 == 1;
  const unsigned pairs = odd ? (r - 1) / 2 : r / 2 - 1;
  std::vector<unsigned> pool(r);
  std::iota(pool.begin(), pool.end(), 0u);
  std::set<std::vector<BigInt>> seen;
  std::vector<std::pair<unsigned, unsigned>> current;
  std::vector<bool> used(r, false);
  enumerate_pairings(pool, pairs, current, used, 0, [&](const std::vector<std::pair<unsigned, unsigned>>& pairing) {
    HomogeneousForm prod = monomial_form(ExponentVector(std::vector<unsigned>(r, 0)));
    std::vector<bool> taken(r, false);
    for (auto [i, j] : pairing) {
      prod = prod * difference(r, i, j);
      taken[i] = taken[j] = true;
    }
    std::vector<HomogeneousForm> candidates;
    if (odd) {
      candidates.push_back(std::move(prod));
    } else {
      for (unsigned k = 0; k < r; ++k)
        if (!taken[k]) candidates.push_back(prod * variable(r, k));
    }
    for (auto& f : candidates) {
      sign_normalize(f);
      if (seen.insert(f.coefficients).second) out.push_back(std::move(f));
    }
  });
  return out;
}

}  // namespace wlpkit
