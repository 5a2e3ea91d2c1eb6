#include "wlpkit/apolar.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace wlpkit {

namespace {

using F64 = modp::Field<std::uint64_t>;

void check_cap(unsigned r) {
  if (r < 3 || r > kApolarCap)
    throw std::invalid_argument("r = " + std::to_string(r) + " is outside the supported range 3.." +
                                std::to_string(kApolarCap));
}

// Sub-monomials alpha <= beta of degree d, with the falling-factorial weight of alpha acting on beta.
void for_each_divisor(const ExponentVector& beta, unsigned d,
                      const std::function<void(const ExponentVector&, const BigInt&)>& fn) {
  ExponentVector alpha(std::vector<unsigned>(beta.nvars(), 0));
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining, const BigInt& weight) -> void {
    if (pos == beta.nvars()) {
      if (remaining == 0) fn(alpha, weight);
      return;
    }
    BigInt w = weight;
    for (unsigned v = 0; v <= beta[pos] && v <= remaining; ++v) {
      alpha[pos] = v;
      self(self, pos + 1, remaining - v, w);
      w *= beta[pos] - v;
    }
    alpha[pos] = 0;
  };
  rec(rec, 0, d, BigInt(1));
}

// Null space of the catalecticant modulo p, as an echelon over the columns.
modp::Echelon<std::uint64_t> catalecticant_echelon(const IntegerMatrix& cat, std::uint64_t p) {
  const PrimeField pf(p);
  modp::Echelon<std::uint64_t> e(F64(p), cat.cols());
  for (std::size_t i = 0; i < cat.rows() && !e.full(); ++i) {
    std::vector<std::uint64_t> row(cat.cols());
    for (std::size_t j = 0; j < cat.cols(); ++j) row[j] = pf.reduce(cat(i, j));
    e.insert(std::move(row));
  }
  return e;
}

std::vector<SparseVector> unit_vectors(unsigned r, unsigned e) {
  const auto basis = monomial_basis(r, e);
  std::vector<SparseVector> out(basis->size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i].entries.push_back({static_cast<std::uint32_t>(i), 1});
  return out;
}

SparseVector sparse(const std::vector<std::uint64_t>& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.entries.push_back({static_cast<std::uint32_t>(i), v[i]});
  return s;
}

// Memoizes the pieces of a provider; safe for concurrent callers.
PieceProvider memoized(unsigned r, std::uint64_t p, std::function<std::vector<SparseVector>(unsigned)> fn) {
  struct Memo {
    std::mutex mutex;
    std::map<unsigned, std::shared_ptr<const std::vector<SparseVector>>> pieces;
  };
  auto memo = std::make_shared<Memo>();
  return {r, p, [memo, fn = std::move(fn)](unsigned e) {
            {
              std::lock_guard lock(memo->mutex);
              if (auto it = memo->pieces.find(e); it != memo->pieces.end()) return *it->second;
            }
            auto piece = std::make_shared<const std::vector<SparseVector>>(fn(e));
            std::lock_guard lock(memo->mutex);
            return *memo->pieces.emplace(e, std::move(piece)).first->second;
          }};
}

// Coordinates of a vector over monomial_basis(r, e) in the standard monomials of the quotient.
std::vector<std::uint64_t> to_standard(GradedQuotient<std::uint64_t>& q, unsigned e, const SparseVector& v) {
  const auto basis = monomial_basis(q.nvars(), e);
  const auto& std_e = q.standard(e);
  std::vector<std::uint64_t> amb(std_e.size(), 0);
  for (const auto& [idx, c] : v.entries) {
    const long pos = std_e.find((*basis)[idx].exponents());
    if (pos >= 0) amb[pos] = q.field().add(amb[pos], c % q.field().modulus());
  }
  return amb;
}

}  // namespace

IntegerMatrix catalecticant_matrix(const DualPolynomial& g, unsigned d) {
  const auto cols = monomial_basis(g.r, d);
  if (d > g.degree) return IntegerMatrix(0, cols->size());
  const auto rows = monomial_basis(g.r, g.degree - d);
  const auto gb = g.basis();
  IntegerMatrix m(rows->size(), cols->size());
  for (std::size_t j = 0; j < g.coefficients.size(); ++j) {
    if (g.coefficients[j] == 0) continue;
    const ExponentVector& beta = (*gb)[j];
    for_each_divisor(beta, d, [&](const ExponentVector& alpha, const BigInt& w) {
      m(rows->index_of(beta - alpha), cols->index_of(alpha)) += g.coefficients[j] * w;
    });
  }
  return m;
}

AnnihilatorPiece annihilator_graded(const DualPolynomial& g, unsigned d, const EngineConfig& cfg) {
  cfg.validate();
  AnnihilatorPiece out;
  out.degree = d;
  const IntegerMatrix cat = catalecticant_matrix(g, d);
  out.certificate = certified_rank(cat, std::nullopt, cfg.trials, cfg.seed, cfg.certify, cfg.prime_bits);
  out.quotient_dim = out.certificate.rank;
  out.dim = cat.cols() - out.quotient_dim;
  for (std::uint64_t p : out.certificate.primes_used) {
    auto e = catalecticant_echelon(cat, p);
    if (e.rank() != out.quotient_dim) continue;
    out.prime = p;
    out.kernel = e.kernel_basis();
    return out;
  }
  throw GenericityFailure("no sampled prime attains the rank of the catalecticant");
}

PieceProvider annihilator_provider(const DualPolynomial& g, std::uint64_t p) {
  return memoized(g.r, p, [g, p](unsigned e) {
    if (e > g.degree) return unit_vectors(g.r, e);
    auto ech = catalecticant_echelon(catalecticant_matrix(g, e), p);
    std::vector<SparseVector> out;
    for (const auto& v : ech.kernel_basis()) out.push_back(sparse(v));
    return out;
  });
}

PieceProvider maximal_ideal_provider(unsigned r, std::uint64_t p) {
  return {r, p, [r](unsigned e) { return e == 0 ? std::vector<SparseVector>{} : unit_vectors(r, e); }};
}

PieceProvider ideal_provider(unsigned r, const std::vector<HomogeneousForm>& generators, std::uint64_t p) {
  return memoized(r, p, [r, generators, p](unsigned e) {
    const PrimeField pf(p);
    const auto target = monomial_basis(r, e);
    std::vector<SparseVector> out;
    for (const auto& g : generators) {
      if (g.degree > e) continue;
      const auto gb = g.basis();
      for (const auto& m : monomial_basis(r, e - g.degree)->monomials()) {
        std::map<std::uint32_t, std::uint64_t> acc;
        for (std::size_t i = 0; i < g.coefficients.size(); ++i) {
          if (g.coefficients[i] == 0) continue;
          auto& slot = acc[static_cast<std::uint32_t>(target->index_of(m + (*gb)[i]))];
          slot = (slot + pf.reduce(g.coefficients[i])) % p;
        }
        SparseVector v;
        for (const auto& [idx, c] : acc)
          if (c != 0) v.entries.push_back({idx, c});
        out.push_back(std::move(v));
      }
    }
    return out;
  });
}

ColonPiece colon_graded(const GradedIdeal& a, const PieceProvider& b, unsigned d, std::optional<unsigned> e_max) {
  if (b.r != a.r) throw std::invalid_argument("ideals over different rings");
  const F64 field(b.prime);
  std::vector<ModForm> gens;
  unsigned guard = 1;
  for (const auto& f : a.generators) {
    gens.push_back(reduce_form(f, b.prime));
    guard += f.degree;
  }
  auto q = std::make_shared<GradedQuotient<std::uint64_t>>(a.r, field, std::move(gens), QuotientOptions{false});
  unsigned socle = 0;
  bool artinian = false;
  for (unsigned t = 0; t <= guard; ++t) {
    if (q->dim(t) == 0) {
      artinian = true;
      break;
    }
    socle = t;
  }
  if (!artinian) throw NotArtinian("the colon test needs an artinian ideal");
  const unsigned top = e_max.value_or(socle);

  ColonPiece out;
  out.degree = d;
  out.prime = b.prime;
  const std::size_t n_d = q->dim(d);
  out.ideal_dim = monomial_basis(a.r, d)->size() - n_d;

  // constraints on the coordinates of f over the quotient basis in degree d
  auto constraints = std::make_shared<modp::Echelon<std::uint64_t>>(field, n_d);
  const auto& std_d = q->standard(d);
  const auto& basis_d = q->basis(d);
  std::vector<unsigned> uw(a.r);
  for (unsigned e = 1; e <= top && !constraints->full() && n_d > 0; ++e) {
    const std::size_t n_e = q->dim(e);
    const std::size_t n_de = q->dim(d + e);
    if (n_e == 0 || n_de == 0) continue;
    const auto& std_e = q->standard(e);
    const auto& basis_e = q->basis(e);
    const auto& std_de = q->standard(d + e);
    modp::Echelon<std::uint64_t> image(field, n_e);
    for (const auto& v : b.piece(e)) {
      if (constraints->full()) break;
      const auto nf = q->normal_form(e, to_standard(*q, e, v));
      if (!image.insert(nf)) continue;
      // column j holds the normal form of u_j * nf(b)
      modp::DenseMatrix<std::uint64_t> cols(n_d, n_de);
      for (std::size_t j = 0; j < n_d; ++j) {
        const auto u = std_d.monomial(basis_d[j]);
        std::vector<std::uint64_t> amb(std_de.size(), 0);
        for (std::size_t k = 0; k < n_e; ++k) {
          if (nf[k] == 0) continue;
          const auto w = std_e.monomial(basis_e[k]);
          for (unsigned i = 0; i < a.r; ++i) uw[i] = u[i] + w[i];
          if (const long pos = std_de.find(uw); pos >= 0) amb[pos] = field.add(amb[pos], nf[k]);
        }
        const auto col = q->normal_form(d + e, amb);
        std::copy(col.begin(), col.end(), cols.row(j).begin());
      }
      for (std::size_t row = 0; row < n_de && !constraints->full(); ++row) {
        std::vector<std::uint64_t> c(n_d);
        for (std::size_t j = 0; j < n_d; ++j) c[j] = cols(j, row);
        constraints->insert(std::move(c));
      }
    }
  }
  const std::size_t kernel_dim = n_d - constraints->rank();
  out.dim = out.ideal_dim + kernel_dim;
  out.codim = constraints->rank();
  const unsigned r = a.r;
  const std::uint64_t p = b.prime;
  out.contains = [q, constraints, d, r, p](const HomogeneousForm& f) {
    if (f.r != r || f.degree != d) throw std::invalid_argument("form does not live in the colon's degree");
    const auto mf = reduce_form(f, p);
    const auto& std_d = q->standard(d);
    std::vector<std::uint64_t> amb(std_d.size(), 0);
    for (const auto& t : mf.terms)
      if (const long pos = std_d.find(t.exponents); pos >= 0) amb[pos] = q->field().add(amb[pos], t.coeff);
    const auto nf = q->normal_form(d, amb);
    // f lies in the colon iff it satisfies every constraint
    for (std::size_t k = 0; k < constraints->rank(); ++k) {
      const auto& row = constraints->row(k);
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < nf.size(); ++j) s = q->field().add(s, q->field().mul(row[j], nf[j]));
      if (s != 0) return false;
    }
    return true;
  };
  return out;
}

GradedIdeal squares_ideal(unsigned r) {
  GradedIdeal a;
  a.r = r;
  for (unsigned i = 0; i < r; ++i) {
    std::vector<unsigned> e(r, 0);
    e[i] = 2;
    a.generators.push_back(monomial_form(ExponentVector(std::move(e))));
  }
  return a;
}

HilbertFunction gorenstein_hilbert(const DualPolynomial& g, const EngineConfig& cfg) {
  HilbertFunction h;
  for (unsigned d = 0; d <= g.degree; ++d) {
    const IntegerMatrix cat = catalecticant_matrix(g, d);
    h.values.push_back(certified_rank(cat, std::nullopt, cfg.trials, cfg.seed, cfg.certify, cfg.prime_bits).rank);
  }
  while (!h.values.empty() && h.values.back() == 0) h.values.pop_back();
  return h;
}

SGenerationReport check_S_generates(unsigned r, const EngineConfig& cfg) {
  check_cap(r);
  SGenerationReport rep;
  rep.r = r;
  const DualPolynomial g = elementary_squarefree_sum(r, r - 2);
  const auto s = difference_product_generators(r);
  rep.contained = true;
  for (const auto& f : s)
    if (f.degree <= g.degree && !apolar_action(f, g).is_zero()) rep.contained = false;

  const HilbertFunction hs = hilbert_function(GradedIdeal{r, s}, cfg);
  const HilbertFunction hg = gorenstein_hilbert(g, cfg);
  rep.all_equal = true;
  for (unsigned d = 0; d <= g.degree + 1; ++d) {
    const std::size_t total = monomial_basis(r, d)->size();
    SDegree row{d, total - hs[d], total - hg[d], false};
    row.equal = row.dim_s == row.dim_ann;
    rep.all_equal = rep.all_equal && row.equal;
    rep.degrees.push_back(row);
  }

  const unsigned q = r / 2;
  rep.product_degree = q;
  rep.binomial_count = r % 2 == 1 ? binomial(r - 1, static_cast<long>(q) - 1)
                                  : binomial(r, q) - binomial(r, static_cast<long>(q) - 2);
  // products modulo the squares live on the squarefree monomials of degree q
  const std::uint64_t p = trial_prime(cfg, 0);
  std::vector<std::vector<unsigned>> squares;
  for (unsigned i = 0; i < r; ++i) {
    squares.emplace_back(r, 0);
    squares.back()[i] = 2;
  }
  const StandardMonomials squarefree(r, q, squares);
  modp::Echelon<std::uint64_t> span(F64(p), squarefree.size());
  for (const auto& f : s) {
    if (f.degree != q) continue;
    std::vector<std::uint64_t> v(squarefree.size(), 0);
    for (const auto& t : reduce_form(f, p).terms)
      if (const long pos = squarefree.find(t.exponents); pos >= 0) v[pos] = t.coeff;
    span.insert(std::move(v));
  }
  rep.new_generators = span.rank();
  return rep;
}

LinkageReport linkage_check(unsigned r, const EngineConfig& cfg) {
  check_cap(r);
  LinkageReport rep;
  rep.r = r;
  const DualPolynomial g = elementary_squarefree_sum(r, r - 2);
  const GradedIdeal a = squares_ideal(r);
  GradedIdeal j = a;
  j.generators.push_back(expand_power_of_linear_form(LinearForm(std::vector<BigInt>(r, 1)), 2));
  const HilbertFunction hj = hilbert_function(j, cfg);
  rep.gorenstein = gorenstein_hilbert(g, cfg);
  const PieceProvider ann = annihilator_provider(g, trial_prime(cfg, 0));

  rep.generators_contained = true;
  rep.graded_equal = true;
  rep.linkage_identity = true;
  for (unsigned t = 0; t <= r + 1; ++t) {
    const ColonPiece piece = colon_graded(a, ann, t);
    rep.colon_codim.push_back(piece.codim);
    rep.explicit_codim.push_back(hj[t]);
    const BigInt sq = binomial(r, t);
    rep.squares_codim.push_back(static_cast<std::size_t>(sq));
    if (t == 2)
      for (const auto& f : j.generators) rep.generators_contained = rep.generators_contained && piece.contains(f);
    rep.graded_equal = rep.graded_equal && piece.codim == hj[t];
    const long s = static_cast<long>(r) - static_cast<long>(t);
    const std::size_t hg = s < 0 ? 0 : rep.gorenstein[static_cast<std::size_t>(s)];
    rep.linkage_identity = rep.linkage_identity && BigInt(piece.codim) == sq - BigInt(hg);
  }
  return rep;
}

}  // namespace wlpkit
