#include "wlpkit/graded_quotient.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace wlpkit {

ModForm reduce_form(const HomogeneousForm& f, std::uint64_t p) {
  const PrimeField field(p);
  ModForm out;
  out.degree = f.degree;
  const auto basis = f.basis();
  for (std::size_t i = 0; i < basis->size(); ++i) {
    if (f.coefficients[i] == 0) continue;
    const std::uint64_t c = field.reduce(f.coefficients[i]);
    if (c != 0) out.terms.push_back({(*basis)[i].exponents(), c});
  }
  return out;
}

namespace {

bool divides(std::span<const unsigned> a, std::span<const unsigned> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Largest exponent of each variable allowed by the pure-power generators.
std::vector<unsigned> power_caps(unsigned r, const std::vector<std::vector<unsigned>>& gens) {
  std::vector<unsigned> caps(r, std::numeric_limits<unsigned>::max());
  for (const auto& g : gens) {
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (g[i] > 0) {
        ++support;
        var = i;
      }
    if (support == 1) caps[var] = std::min(caps[var], g[var] - 1);
  }
  return caps;
}

}  // namespace

StandardMonomials::StandardMonomials(unsigned r, unsigned degree,
                                     const std::vector<std::vector<unsigned>>& monomial_generators)
    : r_(r), degree_(degree) {
  const auto caps = power_caps(r, monomial_generators);
  for (const auto& g : monomial_generators) {
    unsigned deg = 0;
    for (unsigned e : g) deg += e;
    if (deg == 0) return;  // unit ideal
  }
  std::vector<unsigned> others;
  for (std::size_t k = 0; k < monomial_generators.size(); ++k) {
    const auto& g = monomial_generators[k];
    if (std::count_if(g.begin(), g.end(), [](unsigned e) { return e > 0; }) > 1) others.push_back(k);
  }
  // reach[k] = largest degree expressible in variables 0..k-1
  std::vector<unsigned long long> reach(r + 1, 0);
  for (unsigned k = 0; k < r; ++k) reach[k + 1] = reach[k] + std::min<unsigned long long>(caps[k], degree);

  std::vector<unsigned> e(r, 0);
  auto emit = [&] {
    for (std::size_t k : others)
      if (divides(monomial_generators[k], e)) return;
    index_.emplace(grevlex_rank(e), static_cast<std::uint32_t>(count_));
    flat_.insert(flat_.end(), e.begin(), e.end());
    ++count_;
  };
  // reversed-lex enumeration, as in MonomialBasis, pruned by the caps
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (reach[pos + 1] < remaining) return;
    if (pos == 0) {
      e[0] = remaining;
      emit();
      return;
    }
    const unsigned top = std::min(remaining, caps[pos]);
    for (unsigned v = 0; v <= top; ++v) {
      e[pos] = v;
      self(self, pos - 1, remaining - v);
    }
    e[pos] = 0;
  };
  rec(rec, r - 1, degree);
}

long StandardMonomials::find(std::span<const unsigned> e) const {
  const auto it = index_.find(grevlex_rank(e));
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

template <class W>
GradedQuotient<W>::GradedQuotient(unsigned r, modp::Field<W> field, std::vector<ModForm> generators, Options options)
    : r_(r), field_(field), options_(options) {
  if (r == 0) throw std::invalid_argument("polynomial ring needs at least one variable");
  for (auto& g : generators) {
    if (g.terms.empty()) continue;
    for (const auto& t : g.terms)
      if (t.exponents.size() != r) throw std::invalid_argument("generator has the wrong number of variables");
    max_degree_ = std::max(max_degree_, g.degree);
    if (g.terms.size() == 1) {
      monomial_gens_.push_back(g.terms.front().exponents);
    } else {
      for (auto& t : g.terms) t.coeff %= field_.modulus();
      other_gens_.push_back(std::move(g));
    }
  }
  caps_ = power_caps(r, monomial_gens_);
}

template <class W>
const StandardMonomials& GradedQuotient<W>::standard(unsigned t) {
  auto& slot = standard_[t];
  if (!slot) slot = std::make_unique<StandardMonomials>(r_, t, monomial_gens_);
  return *slot;
}

template <class W>
typename GradedQuotient<W>::Level& GradedQuotient<W>::level(unsigned t) {
  while (levels_.size() <= t) build_next();
  return levels_[t];
}

template <class W>
std::uint64_t GradedQuotient<W>::estimate_standard(unsigned t) const {
  // monomials of degree t respecting the pure-power caps
  std::vector<std::uint64_t> count(t + 1, 0);
  count[0] = 1;
  for (unsigned k = 0; k < r_; ++k) {
    const unsigned cap = std::min<unsigned>(caps_[k], t);
    std::vector<std::uint64_t> next(t + 1, 0);
    for (unsigned d = 0; d <= t; ++d) {
      if (count[d] == 0) continue;
      for (unsigned v = 0; v <= cap && d + v <= t; ++v) {
        const std::uint64_t sum = next[d + v] + count[d];
        next[d + v] = sum < next[d + v] ? std::numeric_limits<std::uint64_t>::max() : sum;
      }
    }
    count = std::move(next);
  }
  return count[t];
}

template <class W>
void GradedQuotient<W>::build_next() {
  const auto t = static_cast<unsigned>(levels_.size());
  Level lv;
  if (t > 0 && levels_[t - 1].basis.empty()) {
    lv.kind = LevelKind::Zero;
  } else if (t >= 2 && t > max_degree_ && options_.allow_koszul &&
             (levels_[t - 1].kind == LevelKind::Koszul ||
              estimate_standard(t) > std::uint64_t{r_} * levels_[t - 1].basis.size())) {
    lv.kind = LevelKind::Koszul;
    build_koszul(t, lv);
  } else {
    lv.kind = LevelKind::Monomial;
    build_monomial(t, lv);
  }
  levels_.push_back(std::move(lv));
}

template <class W>
void GradedQuotient<W>::build_monomial(unsigned t, Level& lv) {
  const StandardMonomials& target = standard(t);
  lv.ambient = target.size();
  modp::Echelon<W> echelon(field_, lv.ambient);
  std::vector<unsigned> e(r_);
  for (const auto& g : other_gens_) {
    if (g.degree > t || echelon.full()) continue;
    const StandardMonomials& source = standard(t - g.degree);
    for (std::size_t i = 0; i < source.size() && !echelon.full(); ++i) {
      const auto m = source.monomial(i);
      std::vector<W> row(lv.ambient, W{0});
      bool nonzero = false;
      for (const auto& term : g.terms) {
        for (unsigned k = 0; k < r_; ++k) e[k] = m[k] + term.exponents[k];
        const long pos = target.find(e);
        if (pos < 0) continue;
        row[pos] = field_.add(row[pos], static_cast<W>(term.coeff));
        nonzero = true;
      }
      if (nonzero) echelon.insert(std::move(row));
    }
  }
  finalize(lv, echelon);
}

template <class W>
void GradedQuotient<W>::build_koszul(unsigned t, Level& lv) {
  const std::size_t n_prev = levels_[t - 1].basis.size();
  const std::size_t n_prev2 = levels_[t - 2].basis.size();
  lv.ambient = std::size_t{r_} * n_prev;
  modp::Echelon<W> echelon(field_, lv.ambient);
  // mu[k] is multiplication by x_k from degree t-2 to t-1
  std::vector<modp::DenseMatrix<W>> mu;
  mu.reserve(r_);
  std::vector<W> unit(r_, W{0});
  for (unsigned k = 0; k < r_; ++k) {
    unit.assign(r_, W{0});
    unit[k] = 1;
    mu.push_back(linear_map(t - 2, unit));
  }
  for (std::size_t b = 0; b < n_prev2 && !echelon.full(); ++b)
    for (unsigned j = 0; j < r_ && !echelon.full(); ++j)
      for (unsigned k = j + 1; k < r_ && !echelon.full(); ++k) {
        // x_j (x) mu_k(b) - x_k (x) mu_j(b)
        std::vector<W> row(lv.ambient, W{0});
        bool nonzero = false;
        for (std::size_t c = 0; c < n_prev; ++c) {
          const W a = mu[k](c, b);
          const W s = mu[j](c, b);
          row[j * n_prev + c] = a;
          row[k * n_prev + c] = field_.neg(s);
          nonzero = nonzero || a != 0 || s != 0;
        }
        if (nonzero) echelon.insert(std::move(row));
      }
  finalize(lv, echelon);
}

template <class W>
void GradedQuotient<W>::finalize(Level& lv, modp::Echelon<W>& echelon) {
  echelon.make_reduced();
  lv.basis_pos.assign(lv.ambient, -1);
  lv.reducer_of.assign(lv.ambient, -1);
  for (std::size_t c : echelon.free_columns()) {
    lv.basis_pos[c] = static_cast<std::int32_t>(lv.basis.size());
    lv.basis.push_back(static_cast<std::uint32_t>(c));
  }
  const auto& pivots = echelon.pivots();
  lv.reducers.resize(pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const auto& row = echelon.row(k);
    auto& red = lv.reducers[k];
    red.resize(lv.basis.size());
    for (std::size_t j = 0; j < lv.basis.size(); ++j) red[j] = field_.neg(row[lv.basis[j]]);
    lv.reducer_of[pivots[k]] = static_cast<std::int32_t>(k);
  }
}

template <class W>
void GradedQuotient<W>::add_unit_nf(const Level& lv, std::size_t a, W c, W* out) const {
  if (c == 0) return;
  if (const auto pos = lv.basis_pos[a]; pos >= 0) {
    out[pos] = field_.add(out[pos], c);
    return;
  }
  const auto& red = lv.reducers[lv.reducer_of[a]];
  field_.sub_mul(out, field_.neg(c), red.data(), red.size());
}

template <class W>
std::vector<W> GradedQuotient<W>::normal_form(unsigned t, std::span<const W> ambient) {
  const Level& lv = level(t);
  if (lv.kind == LevelKind::Koszul)
    throw std::logic_error("normal forms over monomials need a quotient built without Koszul levels");
  std::vector<W> out(lv.basis.size(), W{0});
  if (lv.kind == LevelKind::Zero) return out;
  if (ambient.size() != lv.ambient) throw std::invalid_argument("vector does not match the standard monomials");
  for (std::size_t a = 0; a < ambient.size(); ++a) add_unit_nf(lv, a, ambient[a], out.data());
  return out;
}

template <class W>
modp::DenseMatrix<W> GradedQuotient<W>::linear_map(unsigned t, std::span<const W> l) {
  if (l.size() != r_) throw std::invalid_argument("linear form has the wrong number of variables");
  level(t + 1);
  const Level& src = levels_[t];
  const Level& dst = levels_[t + 1];
  const std::size_t n_src = src.basis.size();
  const std::size_t n_dst = dst.basis.size();
  // column b of the result is accumulated as a row of the transpose
  modp::DenseMatrix<W> trans(n_src, n_dst);
  if (n_src > 0 && n_dst > 0) {
    if (dst.kind == LevelKind::Koszul) {
      for (std::size_t b = 0; b < n_src; ++b)
        for (unsigned k = 0; k < r_; ++k) add_unit_nf(dst, k * n_src + b, l[k], trans.row(b).data());
    } else {
      const StandardMonomials& from = standard(t);
      const StandardMonomials& to = standard(t + 1);
      std::vector<unsigned> e(r_);
      for (std::size_t b = 0; b < n_src; ++b) {
        const auto m = from.monomial(src.basis[b]);
        std::copy(m.begin(), m.end(), e.begin());
        for (unsigned k = 0; k < r_; ++k) {
          if (l[k] == 0) continue;
          ++e[k];
          if (const long pos = to.find(e); pos >= 0) add_unit_nf(dst, static_cast<std::size_t>(pos), l[k], trans.row(b).data());
          --e[k];
        }
      }
    }
  }
  modp::DenseMatrix<W> out(n_dst, n_src);
  for (std::size_t b = 0; b < n_src; ++b)
    for (std::size_t c = 0; c < n_dst; ++c) out(c, b) = trans(b, c);
  return out;
}

template class GradedQuotient<std::uint32_t>;
template class GradedQuotient<std::uint64_t>;

AnyQuotient make_quotient(unsigned r, std::uint64_t p, std::vector<ModForm> generators, QuotientOptions options) {
  if (p < modp::WordTraits<std::uint32_t>::kMaxModulus)
    return AnyQuotient(std::in_place_index<0>, r, modp::Field<std::uint32_t>(p), std::move(generators), options);
  return AnyQuotient(std::in_place_index<1>, r, modp::Field<std::uint64_t>(p), std::move(generators), options);
}

std::pair<std::vector<std::size_t>, bool> hilbert_values(AnyQuotient& q, unsigned guard) {
  return std::visit(
      [&](auto& quotient) {
        std::vector<std::size_t> values;
        for (unsigned t = 0; t <= guard; ++t) {
          const std::size_t d = quotient.dim(t);
          if (d == 0) return std::make_pair(values, true);
          values.push_back(d);
        }
        return std::make_pair(values, false);
      },
      q);
}

}  // namespace wlpkit
