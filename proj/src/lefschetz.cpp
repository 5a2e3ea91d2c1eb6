#include "wlpkit/lefschetz.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wlpkit/oracles.hpp"

namespace wlpkit {

namespace {

struct MapData {
  std::size_t rank = 0;
  std::size_t residual = 0;
};

struct TrialResult {
  std::uint64_t prime = 0;
  std::vector<std::size_t> dims;
  // keyed by (source degree, power)
  std::map<std::pair<unsigned, unsigned>, MapData> maps;

  std::size_t dim(std::size_t d) const { return d < dims.size() ? dims[d] : 0; }
};

template <class W>
std::vector<W> to_words(const std::vector<std::uint64_t>& v) {
  return {v.begin(), v.end()};
}

template <class Q>
using word_of = typename std::decay_t<decltype(std::declval<Q&>().field())>::word;

// Dimensions through the socle, or through `upto` when given.
template <class W>
std::vector<std::size_t> trial_dims(GradedQuotient<W>& q, const IdealSpec& spec, const EngineConfig& cfg,
                                    std::optional<unsigned> upto) {
  std::vector<std::size_t> dims;
  if (upto) {
    for (unsigned t = 0; t <= *upto; ++t) dims.push_back(q.dim(t));
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    return dims;
  }
  const unsigned guard = cfg.guard_degree.value_or(spec.default_guard());
  for (unsigned t = 0; t <= guard; ++t) {
    const std::size_t d = q.dim(t);
    if (d == 0) return dims;
    dims.push_back(d);
  }
  throw NotArtinian("no zero graded piece up to degree " + std::to_string(guard) + " for " + spec.canonical());
}

// x L at target degrees `only`, or at 1..socle+1.
TrialResult run_linear_trial(const IdealSpec& spec, const EngineConfig& cfg, unsigned trial,
                             const std::optional<LinearForm>& fixed, std::optional<unsigned> only) {
  DrawnIdeal ideal = draw_ideal(spec, cfg, trial);
  const LinearForm l = fixed ? *fixed : draw_linear_form(spec.r, cfg, 2000 + trial);
  const auto lw = ideal.working_linear(l);
  const std::uint64_t p = ideal.prime;

  unsigned residual_r = spec.r - 1;
  std::vector<ModForm> residual_gens;
  if (spec.r >= 2) {
    residual_gens = restrict_to_hyperplane(ideal.generators, spec.r, lw, p);
  } else {
    residual_r = 1;
    residual_gens = ideal.generators;
    residual_gens.push_back({1, {{{1}, lw[0]}}});
  }
  AnyQuotient qi = make_quotient(spec.r, p, ideal.generators);
  AnyQuotient qr = make_quotient(residual_r, p, std::move(residual_gens));

  TrialResult out;
  out.prime = p;
  std::visit(
      [&](auto& q) {
        using Q = std::decay_t<decltype(q)>;
        using W = word_of<Q>;
        auto& rq = std::get<Q>(qr);
        out.dims = trial_dims(q, spec, cfg, only);
        const auto lv = to_words<W>(lw);
        const unsigned lo = only ? *only : 1;
        const unsigned hi = only ? *only : static_cast<unsigned>(out.dims.size());
        for (unsigned i = lo; i <= hi; ++i) {
          const auto m = q.linear_map(i - 1, lv);
          MapData md;
          md.rank = modp::rank(m, q.field());
          md.residual = rq.dim(i);
          if (md.rank + md.residual != q.dim(i))
            throw DualPathMismatch("degree " + std::to_string(i) + ": matrix rank " + std::to_string(md.rank) +
                                   " but dim [R/I]_i - dim [R/(I,L)]_i = " + std::to_string(q.dim(i)) + " - " +
                                   std::to_string(md.residual));
          out.maps[{i - 1, 1}] = md;
        }
      },
      qi);
  return out;
}

// x L^k for all sources i and powers k with i+k <= socle.
TrialResult run_power_trial(const IdealSpec& spec, const EngineConfig& cfg, unsigned trial,
                            std::optional<unsigned> max_power) {
  DrawnIdeal ideal = draw_ideal(spec, cfg, trial);
  const LinearForm l = draw_linear_form(spec.r, cfg, 2000 + trial);
  const auto lw = ideal.working_linear(l);
  const std::uint64_t p = ideal.prime;
  AnyQuotient qi = make_quotient(spec.r, p, ideal.generators);

  TrialResult out;
  out.prime = p;
  std::visit(
      [&](auto& q) {
        using Q = std::decay_t<decltype(q)>;
        using W = word_of<Q>;
        out.dims = trial_dims(q, spec, cfg, std::nullopt);
        const auto e = static_cast<unsigned>(out.dims.size()) - 1;
        const unsigned kmax = std::min(e, max_power.value_or(e));
        const auto lv = to_words<W>(lw);
        for (unsigned k = 1; k <= kmax; ++k) {
          auto gens = ideal.generators;
          gens.push_back(power_of_linear_mod(lw, k, p));
          auto qk = std::get<Q>(make_quotient(spec.r, p, std::move(gens)));
          for (unsigned i = 0; i + k <= e; ++i) {
            // x L^k as a product of k consecutive x L maps
            auto m = q.linear_map(i, lv);
            for (unsigned s = 1; s < k; ++s) m = modp::multiply(q.linear_map(i + s, lv), m, q.field());
            MapData md;
            md.rank = modp::rank(m, q.field());
            md.residual = qk.dim(i + k);
            if (md.rank + md.residual != q.dim(i + k))
              throw DualPathMismatch("power " + std::to_string(k) + " from degree " + std::to_string(i) +
                                     ": matrix rank " + std::to_string(md.rank) + " disagrees with the quotient by L^k");
            out.maps[{i, k}] = md;
          }
        }
      },
      qi);
  return out;
}

std::vector<std::size_t> generic_dims(const std::vector<TrialResult>& trials) {
  std::vector<std::size_t> h = trials.front().dims;
  for (const auto& t : trials) {
    h.resize(std::min(h.size(), t.dims.size()));
    for (std::size_t d = 0; d < h.size(); ++d) h[d] = std::min(h[d], t.dims[d]);
  }
  return h;
}

// Largest rank among trials whose dimensions at both ends are the generic ones.
MapData combine_map(const std::vector<TrialResult>& trials, const HilbertFunction& h, unsigned src, unsigned k) {
  std::optional<MapData> best;
  for (const auto& t : trials) {
    if (t.dim(src) != h[src] || t.dim(src + k) != h[src + k]) continue;
    const auto it = t.maps.find({src, k});
    if (it == t.maps.end()) continue;
    if (!best || it->second.rank > best->rank) best = it->second;
  }
  if (!best)
    throw GenericityFailure("no trial reached the generic dimensions in degrees " + std::to_string(src) + " and " +
                            std::to_string(src + k) + "; increase the number of trials");
  return *best;
}

DegreeRecord make_record(unsigned i, std::size_t dim_prev, std::size_t dim_cur, std::size_t rank) {
  DegreeRecord rec;
  rec.i = i;
  rec.dim_prev = dim_prev;
  rec.dim_cur = dim_cur;
  rec.rank = rank;
  rec.max_possible = std::min(dim_prev, dim_cur);
  if (rank > rec.max_possible) throw RankInconsistency("rank exceeds the smaller dimension");
  rec.residual_dim = dim_cur - rank;
  rec.maximal = rank == rec.max_possible;
  return rec;
}

bool trials_agree(const std::vector<TrialResult>& trials, const HilbertFunction& h) {
  for (const auto& t : trials) {
    if (t.dims != h.values) return false;
    for (const auto& [key, md] : t.maps) {
      const auto [src, k] = key;
      const bool maximal = md.rank == std::min(t.dim(src), t.dim(src + k));
      const bool reference = trials.front().maps.at(key).rank ==
                             std::min(trials.front().dim(src), trials.front().dim(src + k));
      if (maximal != reference) return false;
    }
  }
  return true;
}

std::vector<TrialResult> linear_trials(const IdealSpec& spec, const EngineConfig& cfg,
                                       const std::optional<LinearForm>& fixed, std::optional<unsigned> only) {
  spec.validate();
  cfg.validate();
  std::vector<TrialResult> out;
  for (unsigned t = 0; t < cfg.trials; ++t) out.push_back(run_linear_trial(spec, cfg, t, fixed, only));
  return out;
}

}  // namespace

std::string to_string(Verdict v) { return v == Verdict::Holds ? "holds" : "fails"; }

DegreeRecord max_rank_residual_check(const IdealSpec& spec, const LinearForm& l, unsigned i, const EngineConfig& cfg) {
  if (i < 1) throw std::invalid_argument("the source degree i-1 must be nonnegative");
  const auto trials = linear_trials(spec, cfg, l, i);
  const HilbertFunction h{generic_dims(trials)};
  const MapData md = combine_map(trials, h, i - 1, 1);
  return make_record(i, h[i - 1], h[i], md.rank);
}

std::size_t multiplication_rank(const IdealSpec& spec, const LinearForm& l, unsigned i, const EngineConfig& cfg) {
  return max_rank_residual_check(spec, l, i, cfg).rank;
}

WlpReport wlp_test(const IdealSpec& spec, const EngineConfig& cfg) {
  const auto trials = linear_trials(spec, cfg, std::nullopt, std::nullopt);
  WlpReport rep;
  rep.spec = spec;
  rep.hilbert.values = generic_dims(trials);
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  for (const auto& t : trials) rep.primes.push_back(t.prime);
  const auto top = static_cast<unsigned>(rep.hilbert.values.size());
  for (unsigned i = 1; i <= top; ++i) {
    const MapData md = combine_map(trials, rep.hilbert, i - 1, 1);
    rep.records.push_back(make_record(i, rep.hilbert[i - 1], rep.hilbert[i], md.rank));
    if (!rep.records.back().maximal) rep.failing_degrees.push_back(i);
  }
  rep.verdict = rep.failing_degrees.empty() ? Verdict::Holds : Verdict::Fails;
  rep.certified = trials_agree(trials, rep.hilbert);
  return rep;
}

SlpReport slp_test(const IdealSpec& spec, const EngineConfig& cfg, std::optional<unsigned> max_power) {
  spec.validate();
  cfg.validate();
  if (max_power && *max_power < 1) throw std::invalid_argument("max_power must be at least 1");
  std::vector<TrialResult> trials;
  for (unsigned t = 0; t < cfg.trials; ++t) trials.push_back(run_power_trial(spec, cfg, t, max_power));
  SlpReport rep;
  rep.spec = spec;
  rep.hilbert.values = generic_dims(trials);
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;
  for (const auto& t : trials) rep.primes.push_back(t.prime);
  const auto e = static_cast<unsigned>(rep.hilbert.values.size()) - 1;
  const unsigned kmax = std::min(e, max_power.value_or(e));
  for (unsigned k = 1; k <= kmax; ++k)
    for (unsigned i = 0; i + k <= e; ++i) {
      const MapData md = combine_map(trials, rep.hilbert, i, k);
      PowerRecord rec;
      rec.i = i;
      rec.k = k;
      rec.dim_src = rep.hilbert[i];
      rec.dim_dst = rep.hilbert[i + k];
      rec.rank = md.rank;
      rec.max_possible = std::min(rec.dim_src, rec.dim_dst);
      rec.maximal = rec.rank == rec.max_possible;
      if (!rec.maximal) rep.verdict = Verdict::Fails;
      rep.records.push_back(rec);
    }
  rep.certified = trials_agree(trials, rep.hilbert);
  return rep;
}

Verdict expected_verdict(unsigned r) {
  return (r >= 2 && r <= 5) || r == 7 ? Verdict::Holds : Verdict::Fails;
}

ConjectureVerdict verify_conjecture(unsigned r, const EngineConfig& cfg, unsigned cap) {
  if (r < 2 || r > cap)
    throw std::invalid_argument("r must lie between 2 and " + std::to_string(cap));
  ConjectureVerdict out;
  out.r = r;
  out.report = wlp_test(general_squares(r, r + 1), cfg);
  out.wlp = out.report.verdict;
  out.expected = expected_verdict(r);
  out.agrees = out.wlp == out.expected;
  if (!out.report.failing_degrees.empty()) out.failing_degree = out.report.failing_degrees.front();

  const OracleTable oracle = hf_acm_squares(r);
  const auto& h = out.report.hilbert.values;
  if (h.size() != oracle.values.size()) out.mismatches.push_back("h-vector length differs from the closed form");
  for (std::size_t t = 0; t < std::max(h.size(), oracle.values.size()); ++t)
    if (BigInt(out.report.hilbert[t]) != oracle.at(static_cast<long>(t)))
      out.mismatches.push_back("h(" + std::to_string(t) + ") = " + std::to_string(out.report.hilbert[t]) +
                               ", closed form " + oracle.at(static_cast<long>(t)).str());
  if (r % 2 == 1) {
    const unsigned q = r / 2;
    const BigInt expected = coinvariant_dim_2q(q);
    const auto& rec = out.report.records.at(q - 1);
    if (BigInt(rec.residual_dim) != expected)
      out.mismatches.push_back("residual in degree " + std::to_string(q) + " is " + std::to_string(rec.residual_dim) +
                               ", expected " + expected.str());
  }
  if (!out.report.certified) out.mismatches.push_back("trials disagree");
  out.certified = out.mismatches.empty();
  return out;
}

WlpReport probe_power_ideal(unsigned r, unsigned s, const std::vector<unsigned>& exponents, const EngineConfig& cfg) {
  if (s < r) throw std::invalid_argument("an artinian power ideal needs at least r generators");
  if (exponents.size() != s) throw std::invalid_argument("expected one exponent per linear form");
  return wlp_test(IdealSpec::general_powers(r, exponents), cfg);
}

}  // namespace wlpkit
