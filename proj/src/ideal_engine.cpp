#include "wlpkit/ideal_engine.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace wlpkit {

namespace {

using F64 = modp::Field<std::uint64_t>;

unsigned form_degree(const Generator& g) {
  return std::visit(
      [](const auto& x) -> unsigned {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, LinearPower>) return x.exponent;
        else return x.degree;
      },
      g);
}

std::vector<std::uint64_t> reduce_linear(const LinearForm& l, std::uint64_t p) {
  const PrimeField field(p);
  std::vector<std::uint64_t> out;
  out.reserve(l.coefficients.size());
  for (const auto& c : l.coefficients) out.push_back(field.reduce(c));
  return out;
}

// Index of the variable when `f` is c * x_i^a, otherwise -1.
long pure_power_variable(const HomogeneousForm& f) {
  if (f.term_count() != 1 || f.degree == 0) return -1;
  const auto basis = f.basis();
  for (std::size_t i = 0; i < basis->size(); ++i) {
    if (f.coefficients[i] == 0) continue;
    const auto& m = (*basis)[i];
    for (std::size_t k = 0; k < m.nvars(); ++k)
      if (m[k] == f.degree) return static_cast<long>(k);
    return -1;
  }
  return -1;
}

// Inverse of an invertible r x r matrix over F_p by Gauss-Jordan elimination.
std::vector<std::uint64_t> invert(std::vector<std::uint64_t> a, unsigned r, const F64& field) {
  std::vector<std::uint64_t> inv(std::size_t{r} * r, 0);
  for (unsigned i = 0; i < r; ++i) inv[i * r + i] = 1;
  for (unsigned c = 0; c < r; ++c) {
    unsigned piv = c;
    while (piv < r && a[piv * r + c] == 0) ++piv;
    if (piv == r) throw std::logic_error("change of coordinates is singular");
    if (piv != c)
      for (unsigned j = 0; j < r; ++j) {
        std::swap(a[piv * r + j], a[c * r + j]);
        std::swap(inv[piv * r + j], inv[c * r + j]);
      }
    const std::uint64_t s = field.inv(a[c * r + c]);
    field.scale(&a[c * r], s, r);
    field.scale(&inv[c * r], s, r);
    for (unsigned i = 0; i < r; ++i) {
      if (i == c) continue;
      const std::uint64_t f = a[i * r + c];
      field.sub_mul(&a[i * r], f, &a[c * r], r);
      field.sub_mul(&inv[i * r], f, &inv[c * r], r);
    }
  }
  return inv;
}

std::vector<std::uint64_t> times_matrix(std::span<const std::uint64_t> l, std::span<const std::uint64_t> m,
                                        unsigned rows, unsigned cols, const F64& field) {
  std::vector<std::uint64_t> out(cols, 0);
  for (unsigned i = 0; i < rows; ++i) field.sub_mul(out.data(), field.neg(l[i]), &m[std::size_t{i} * cols], cols);
  return out;
}

using SparsePoly = std::map<std::vector<unsigned>, std::uint64_t>;

SparsePoly multiply(const SparsePoly& a, const ModForm& b, const F64& field) {
  SparsePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& t : b.terms) {
      std::vector<unsigned> e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += t.exponents[k];
      auto& slot = out[e];
      slot = field.add(slot, field.mul(ca, t.coeff));
    }
  return out;
}

std::string cache_key(const IdealSpec& spec, const EngineConfig& cfg) {
  std::ostringstream key;
  key << spec.canonical() << "|seed=" << cfg.seed << "|trials=" << cfg.trials << "|bits=" << cfg.prime_bits
      << "|bound=" << cfg.coeff_bound << "|coords=" << cfg.reduce_coordinates
      << "|guard=" << cfg.guard_degree.value_or(0);
  return key.str();
}

struct HilbertCache {
  std::mutex mutex;
  std::map<std::string, HilbertFunction> entries;
  std::size_t hits = 0;
};

HilbertCache& hilbert_cache() {
  static HilbertCache cache;
  return cache;
}

}  // namespace

void EngineConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("at least one trial is required");
  if (prime_bits < 20 || prime_bits > 62) throw std::invalid_argument("prime size must be between 20 and 62 bits");
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be positive");
}

IdealSpec::IdealSpec(const GradedIdeal& ideal) : r(ideal.r) {
  for (const auto& f : ideal.generators) generators.emplace_back(f);
}

IdealSpec IdealSpec::general_powers(unsigned r, const std::vector<unsigned>& exponents) {
  IdealSpec spec;
  spec.r = r;
  for (unsigned a : exponents) spec.generators.emplace_back(LinearPower{std::nullopt, a});
  return spec;
}

IdealSpec IdealSpec::monomial_ci(const std::vector<unsigned>& exponents) {
  IdealSpec spec;
  spec.r = static_cast<unsigned>(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    std::vector<BigInt> c(exponents.size(), 0);
    c[i] = 1;
    spec.generators.emplace_back(LinearPower{LinearForm(std::move(c)), exponents[i]});
  }
  return spec;
}

unsigned IdealSpec::generator_degree(std::size_t i) const { return form_degree(generators.at(i)); }

unsigned IdealSpec::default_guard() const {
  unsigned sum = 1;
  for (const auto& g : generators) sum += form_degree(g);
  return sum;
}

bool IdealSpec::has_general() const {
  return std::any_of(generators.begin(), generators.end(), [](const Generator& g) {
    if (const auto* lp = std::get_if<LinearPower>(&g)) return !lp->form.has_value();
    return std::holds_alternative<GeneralForm>(g);
  });
}

void IdealSpec::validate() const {
  if (r < 1) throw std::invalid_argument("polynomial ring needs at least one variable");
  for (const auto& g : generators) {
    if (const auto* lp = std::get_if<LinearPower>(&g)) {
      if (lp->exponent < 1) throw std::invalid_argument("exponents must be at least 1");
      if (lp->form && lp->form->nvars() != r) throw std::invalid_argument("linear form has the wrong number of variables");
      if (lp->form && lp->form->is_zero()) throw std::invalid_argument("linear form is zero");
    } else if (const auto* f = std::get_if<HomogeneousForm>(&g)) {
      if (f->r != r) throw std::invalid_argument("generator has the wrong number of variables");
      if (f->is_zero()) throw std::invalid_argument("zero generator");
    } else if (std::get<GeneralForm>(g).degree < 1) {
      throw std::invalid_argument("general forms must have positive degree");
    }
  }
}

std::string IdealSpec::canonical() const {
  std::ostringstream out;
  out << "r=" << r;
  for (const auto& g : generators) {
    out << ';';
    if (const auto* lp = std::get_if<LinearPower>(&g)) {
      out << "L(";
      if (!lp->form) {
        out << "general";
      } else {
        for (std::size_t i = 0; i < lp->form->coefficients.size(); ++i)
          out << (i ? "," : "") << lp->form->coefficients[i];
      }
      out << ")^" << lp->exponent;
    } else if (const auto* f = std::get_if<HomogeneousForm>(&g)) {
      out << "F" << f->degree << "(";
      for (std::size_t i = 0; i < f->coefficients.size(); ++i) out << (i ? "," : "") << f->coefficients[i];
      out << ")";
    } else {
      out << "G" << std::get<GeneralForm>(g).degree;
    }
  }
  return out.str();
}

GradedIdeal ideal_sum(const GradedIdeal& ideal, const HomogeneousForm& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot add the zero form to an ideal");
  if (f.r != ideal.r) throw std::invalid_argument("form has the wrong number of variables");
  GradedIdeal out = ideal;
  out.generators.push_back(f);
  return out;
}

IdealSpec ideal_sum(const IdealSpec& ideal, const HomogeneousForm& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot add the zero form to an ideal");
  if (f.r != ideal.r) throw std::invalid_argument("form has the wrong number of variables");
  IdealSpec out = ideal;
  out.generators.emplace_back(f);
  return out;
}

unsigned HilbertFunction::socle_degree() const {
  if (values.empty()) throw std::logic_error("the zero algebra has no socle degree");
  return static_cast<unsigned>(values.size() - 1);
}

std::vector<std::uint64_t> DrawnIdeal::working_linear(const LinearForm& l) const {
  if (l.nvars() != r) throw std::invalid_argument("linear form has the wrong number of variables");
  auto v = reduce_linear(l, prime);
  if (to_working.empty()) return v;
  return times_matrix(v, to_working, r, r, F64(prime));
}

std::uint64_t trial_prime(const EngineConfig& cfg, unsigned trial) {
  return random_prime(cfg.prime_bits, mix_seed(cfg.seed, trial));
}

LinearForm draw_linear_form(unsigned r, const EngineConfig& cfg, std::uint64_t stream) {
  std::mt19937_64 rng(mix_seed(cfg.seed, stream));
  const auto bound = static_cast<std::int64_t>(cfg.coeff_bound);
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  LinearForm l;
  do {
    l.coefficients.clear();
    for (unsigned i = 0; i < r; ++i) l.coefficients.emplace_back(dist(rng));
  } while (l.is_zero());
  return l;
}

ModForm power_of_linear_mod(std::span<const std::uint64_t> l, unsigned a, std::uint64_t p) {
  const F64 field(p);
  const auto r = static_cast<unsigned>(l.size());
  std::vector<std::uint64_t> fact(a + 1, 1);
  for (unsigned i = 1; i <= a; ++i) fact[i] = field.mul(fact[i - 1], i % p);
  std::vector<unsigned> support;
  for (unsigned i = 0; i < r; ++i)
    if (l[i] % p != 0) support.push_back(i);
  ModForm out;
  out.degree = a;
  // only monomials supported on the nonzero coefficients contribute
  const auto basis = monomial_basis(static_cast<unsigned>(std::max<std::size_t>(support.size(), 1)), a);
  if (support.empty()) return out;
  for (const auto& m : basis->monomials()) {
    std::uint64_t c = fact[a];
    std::vector<unsigned> e(r, 0);
    for (std::size_t k = 0; k < support.size(); ++k) {
      const unsigned v = support[k];
      e[v] = m[k];
      c = field.mul(c, field.inv(fact[m[k]]));
      c = field.mul(c, modp::powmod64(l[v] % p, m[k], p));
    }
    if (c != 0) out.terms.push_back({std::move(e), c});
  }
  return out;
}

ModForm substitute(const ModForm& f, std::span<const std::uint64_t> m, unsigned rows, unsigned cols,
                   std::uint64_t p) {
  const F64 field(p);
  SparsePoly acc;
  for (const auto& t : f.terms) {
    SparsePoly term{{std::vector<unsigned>(cols, 0), t.coeff % p}};
    for (unsigned i = 0; i < rows; ++i) {
      if (t.exponents[i] == 0) continue;
      term = multiply(term, power_of_linear_mod(m.subspan(std::size_t{i} * cols, cols), t.exponents[i], p), field);
    }
    for (auto& [e, c] : term) {
      auto& slot = acc[e];
      slot = field.add(slot, c);
    }
  }
  ModForm out;
  out.degree = f.degree;
  for (auto& [e, c] : acc)
    if (c != 0) out.terms.push_back({e, c});
  return out;
}

std::vector<ModForm> restrict_to_hyperplane(const std::vector<ModForm>& generators, unsigned r,
                                            std::span<const std::uint64_t> l, std::uint64_t p) {
  if (r < 2) throw std::invalid_argument("restriction to a hyperplane needs at least two variables");
  const F64 field(p);
  long k = -1;
  for (unsigned i = 0; i < r; ++i)
    if (l[i] % p != 0) k = i;
  if (k < 0) throw std::invalid_argument("linear form is zero");
  // x_i = y_i below k, y_{i-1} above k, and x_k = -(1/l_k) sum_{j != k} l_j x_j
  const unsigned cols = r - 1;
  std::vector<std::uint64_t> m(std::size_t{r} * cols, 0);
  const std::uint64_t scale = field.neg(field.inv(l[k] % p));
  for (unsigned i = 0; i < r; ++i) {
    if (static_cast<long>(i) == k) continue;
    const unsigned y = static_cast<long>(i) < k ? i : i - 1;
    m[std::size_t{i} * cols + y] = 1;
    m[static_cast<std::size_t>(k) * cols + y] = field.mul(scale, l[i] % p);
  }
  std::vector<ModForm> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(substitute(g, m, r, cols, p));
  return out;
}

DrawnIdeal draw_ideal(const IdealSpec& spec, const EngineConfig& cfg, unsigned trial) {
  spec.validate();
  cfg.validate();
  DrawnIdeal out;
  out.r = spec.r;
  out.prime = trial_prime(cfg, trial);
  const std::uint64_t p = out.prime;
  const F64 field(p);
  const unsigned r = spec.r;

  std::mt19937_64 rng(mix_seed(cfg.seed, 1000 + trial));
  const auto bound = static_cast<std::int64_t>(cfg.coeff_bound);
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  auto draw_vector = [&](std::size_t n) {
    std::vector<std::int64_t> v(n);
    do {
      for (auto& x : v) x = dist(rng);
    } while (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; }));
    std::vector<std::uint64_t> red(n);
    for (std::size_t i = 0; i < n; ++i) red[i] = field.from_signed(v[i]);
    return red;
  };

  // linear powers as (coefficients mod p, exponent); other forms as reduced forms
  struct Power {
    std::vector<std::uint64_t> l;
    unsigned exponent;
  };
  std::vector<std::variant<Power, ModForm>> drawn;
  bool all_powers = true;
  for (const auto& g : spec.generators) {
    if (const auto* lp = std::get_if<LinearPower>(&g)) {
      drawn.emplace_back(Power{lp->form ? reduce_linear(*lp->form, p) : draw_vector(r), lp->exponent});
    } else if (const auto* f = std::get_if<HomogeneousForm>(&g)) {
      if (const long v = pure_power_variable(*f); v >= 0) {
        std::vector<std::uint64_t> unit(r, 0);
        unit[v] = 1;
        drawn.emplace_back(Power{std::move(unit), f->degree});
      } else {
        drawn.emplace_back(reduce_form(*f, p));
        all_powers = false;
      }
    } else {
      const unsigned d = std::get<GeneralForm>(g).degree;
      const auto basis = monomial_basis(r, d);
      const auto c = draw_vector(basis->size());
      ModForm form;
      form.degree = d;
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) form.terms.push_back({(*basis)[i].exponents(), c[i]});
      drawn.emplace_back(std::move(form));
      all_powers = false;
    }
  }

  if (cfg.reduce_coordinates && all_powers) {
    // lowest exponents first, so that as many small powers as possible become monomials
    std::vector<std::size_t> order(drawn.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::get<Power>(drawn[a]).exponent < std::get<Power>(drawn[b]).exponent;
    });
    modp::Echelon<std::uint64_t> span(field, r);
    std::vector<std::uint64_t> t;
    for (std::size_t i : order) {
      if (span.full()) break;
      const auto& l = std::get<Power>(drawn[i]).l;
      if (span.insert(l)) t.insert(t.end(), l.begin(), l.end());
    }
    for (unsigned j = 0; j < r && !span.full(); ++j) {
      std::vector<std::uint64_t> unit(r, 0);
      unit[j] = 1;
      if (span.insert(unit)) t.insert(t.end(), unit.begin(), unit.end());
    }
    bool identity = true;
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < r; ++j) identity = identity && t[i * r + j] == (i == j ? 1u : 0u);
    if (!identity) out.to_working = invert(t, r, field);
  }

  for (auto& d : drawn) {
    if (auto* pw = std::get_if<Power>(&d)) {
      auto l = out.to_working.empty() ? pw->l : times_matrix(pw->l, out.to_working, r, r, field);
      out.generators.push_back(power_of_linear_mod(l, pw->exponent, p));
    } else {
      out.generators.push_back(std::move(std::get<ModForm>(d)));
    }
  }
  return out;
}

std::size_t graded_piece_dim(const IdealSpec& spec, unsigned d, const EngineConfig& cfg) {
  {
    auto& cache = hilbert_cache();
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.entries.find(cache_key(spec, cfg)); it != cache.entries.end()) {
      ++cache.hits;
      return it->second[d];
    }
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (unsigned t = 0; t < cfg.trials; ++t) {
    DrawnIdeal ideal = draw_ideal(spec, cfg, t);
    auto q = make_quotient(spec.r, ideal.prime, std::move(ideal.generators));
    best = std::min(best, std::visit([&](auto& quotient) { return quotient.dim(d); }, q));
  }
  return best;
}

HilbertFunction hilbert_function(const IdealSpec& spec, const EngineConfig& cfg) {
  const std::string key = cache_key(spec, cfg);
  auto& cache = hilbert_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) {
      ++cache.hits;
      return it->second;
    }
  }
  const unsigned guard = cfg.guard_degree.value_or(spec.default_guard());
  HilbertFunction best;
  for (unsigned t = 0; t < cfg.trials; ++t) {
    DrawnIdeal ideal = draw_ideal(spec, cfg, t);
    auto q = make_quotient(spec.r, ideal.prime, std::move(ideal.generators));
    auto [values, reached_zero] = hilbert_values(q, guard);
    if (!reached_zero)
      throw NotArtinian("no zero graded piece up to degree " + std::to_string(guard) + " for " + spec.canonical());
    if (t == 0) {
      best.values = std::move(values);
      continue;
    }
    // generic dimensions are the smallest ones
    best.values.resize(std::min(best.values.size(), values.size()));
    for (std::size_t i = 0; i < best.values.size(); ++i) best.values[i] = std::min(best.values[i], values[i]);
  }
  std::lock_guard lock(cache.mutex);
  cache.entries.emplace(key, best);
  return best;
}

unsigned socle_degree(const IdealSpec& spec, const EngineConfig& cfg) {
  return hilbert_function(spec, cfg).socle_degree();
}

CacheStats hilbert_cache_stats() {
  auto& cache = hilbert_cache();
  std::lock_guard lock(cache.mutex);
  return {cache.entries.size(), cache.hits};
}

void clear_hilbert_cache() {
  auto& cache = hilbert_cache();
  std::lock_guard lock(cache.mutex);
  cache.entries.clear();
  cache.hits = 0;
}

}  // namespace wlpkit
