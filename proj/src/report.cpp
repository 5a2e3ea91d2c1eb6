#include "wlpkit/report.hpp"

#include <algorithm>
#include <sstream>

#include "wlpkit/spec_io.hpp"
#include "wlpkit/version.hpp"

namespace wlpkit {

namespace {

Json values_json(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(bigint_json(x));
  return out;
}

Json degree_record(const DegreeRecord& rec) {
  return {{"i", rec.i},
          {"dim_prev", rec.dim_prev},
          {"dim_cur", rec.dim_cur},
          {"rank", rec.rank},
          {"max_possible", rec.max_possible},
          {"residual_dim", rec.residual_dim},
          {"maximal", rec.maximal}};
}

bool is_squares_of_variables(const IdealSpec& spec) {
  if (spec.generators.size() != spec.r) return false;
  std::vector<bool> seen(spec.r, false);
  for (const auto& g : spec.generators) {
    std::optional<ExponentVector> mono;
    if (const auto* f = std::get_if<HomogeneousForm>(&g); f && f->degree == 2 && f->term_count() == 1) {
      const auto basis = f->basis();
      for (std::size_t i = 0; i < f->coefficients.size(); ++i)
        if (f->coefficients[i] != 0) mono = (*basis)[i];
    } else if (const auto* lp = std::get_if<LinearPower>(&g); lp && lp->exponent == 2 && lp->form) {
      const auto& c = lp->form->coefficients;
      if (std::count_if(c.begin(), c.end(), [](const BigInt& x) { return x != 0; }) == 1) {
        std::vector<unsigned> e(spec.r, 0);
        e[std::find_if(c.begin(), c.end(), [](const BigInt& x) { return x != 0; }) - c.begin()] = 2;
        mono = ExponentVector(std::move(e));
      }
    }
    if (!mono) return false;
    const auto pos = std::find((*mono).exponents().begin(), (*mono).exponents().end(), 2u) - (*mono).exponents().begin();
    if (static_cast<unsigned>(pos) >= spec.r || seen[pos]) return false;
    seen[pos] = true;
  }
  return true;
}

}  // namespace

std::string tuple_string(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

std::vector<std::uint64_t> trial_primes(const EngineConfig& cfg) {
  std::vector<std::uint64_t> primes;
  for (unsigned t = 0; t < cfg.trials; ++t) primes.push_back(trial_prime(cfg, t));
  return primes;
}

Json meta_json(const std::string& command, const EngineConfig& cfg, const std::vector<std::uint64_t>& primes) {
  return {{"command", command},
          {"seed", cfg.seed},
          {"trials", cfg.trials},
          {"prime_bits", cfg.prime_bits},
          {"coeff_bound", cfg.coeff_bound},
          {"certify", cfg.certify},
          {"primes", primes},
          {"version", kVersion}};
}

Json envelope(Json meta, Json records, Json verdict, bool certified, Json summary) {
  return {{"meta", std::move(meta)},
          {"records", std::move(records)},
          {"verdict", std::move(verdict)},
          {"certified", certified},
          {"summary", std::move(summary)}};
}

std::optional<OracleTable> matching_oracle(const IdealSpec& spec) {
  if (is_squares_of_variables(spec)) return hf_square_ci(spec.r);
  if (spec.r >= 2 && spec.canonical() == general_squares(spec.r, spec.r + 1).canonical()) return hf_acm_squares(spec.r);
  return std::nullopt;
}

Json hilbert_report(const IdealSpec& spec, const HilbertFunction& h, const EngineConfig& cfg,
                    const std::optional<OracleTable>& oracle) {
  Json records = Json::array();
  bool matches = true;
  const std::size_t len = std::max(h.values.size(), oracle ? oracle->values.size() : 0);
  for (std::size_t d = 0; d < len; ++d) {
    Json row = {{"d", d}, {"dim", h[d]}};
    if (oracle) {
      row["oracle"] = bigint_json(oracle->at(static_cast<long>(d)));
      matches = matches && BigInt(h[d]) == oracle->at(static_cast<long>(d));
    }
    records.push_back(std::move(row));
  }
  Json summary = {{"spec", spec_to_json(spec)}, {"h_vector", h.values}, {"socle_degree", h.socle_degree()}};
  if (oracle) {
    summary["oracle"] = oracle->name;
    summary["oracle_source"] = oracle->source;
    summary["oracle_matches"] = matches;
  }
  return envelope(meta_json("hilbert", cfg, trial_primes(cfg)), std::move(records), nullptr,
                  !spec.has_general() || (oracle && matches), std::move(summary));
}

Json wlp_report(const WlpReport& rep, const EngineConfig& cfg, const std::string& command) {
  Json records = Json::array();
  for (const auto& rec : rep.records) records.push_back(degree_record(rec));
  Json summary = {{"spec", spec_to_json(rep.spec)},
                  {"h_vector", rep.hilbert.values},
                  {"failing_degrees", rep.failing_degrees}};
  return envelope(meta_json(command, cfg, rep.primes), std::move(records), to_string(rep.verdict), rep.certified,
                  std::move(summary));
}

Json slp_report(const SlpReport& rep, const EngineConfig& cfg) {
  Json records = Json::array();
  for (const auto& rec : rep.records)
    records.push_back({{"i", rec.i},
                       {"k", rec.k},
                       {"dim_src", rec.dim_src},
                       {"dim_dst", rec.dim_dst},
                       {"rank", rec.rank},
                       {"max_possible", rec.max_possible},
                       {"maximal", rec.maximal}});
  Json summary = {{"spec", spec_to_json(rep.spec)}, {"h_vector", rep.hilbert.values}};
  return envelope(meta_json("slp", cfg, rep.primes), std::move(records), to_string(rep.verdict), rep.certified,
                  std::move(summary));
}

Json conjecture_report(const std::vector<ConjectureVerdict>& rows, const EngineConfig& cfg) {
  Json records = Json::array();
  bool all_agree = true;
  bool all_certified = true;
  for (const auto& v : rows) {
    records.push_back({{"r", v.r},
                       {"wlp", to_string(v.wlp)},
                       {"expected", to_string(v.expected)},
                       {"agrees", v.agrees},
                       {"failing_degree", v.failing_degree ? Json(*v.failing_degree) : Json(nullptr)},
                       {"h_vector", v.report.hilbert.values},
                       {"certified", v.certified},
                       {"mismatches", v.mismatches}});
    all_agree = all_agree && v.agrees;
    all_certified = all_certified && v.certified;
  }
  return envelope(meta_json("verify-hss", cfg, trial_primes(cfg)), std::move(records),
                  all_agree ? "reproduced" : "not-reproduced", all_certified,
                  {{"all_agree", all_agree}, {"all_certified", all_certified}});
}

Json apolar_report(unsigned r, const HilbertFunction& hg, const OracleTable& oracle, const SGenerationReport& s,
                   const std::optional<LinkageReport>& linkage, const EngineConfig& cfg) {
  Json records = Json::array();
  bool hg_matches = true;
  for (const auto& row : s.degrees) {
    Json rec = {{"d", row.d},
                {"h_g", hg[row.d]},
                {"oracle", bigint_json(oracle.at(row.d))},
                {"dim_s", row.dim_s},
                {"dim_ann", row.dim_ann},
                {"s_equals_ann", row.equal}};
    hg_matches = hg_matches && BigInt(hg[row.d]) == oracle.at(row.d);
    if (linkage) {
      rec["colon_codim"] = row.d < linkage->colon_codim.size() ? Json(linkage->colon_codim[row.d]) : Json(nullptr);
      rec["explicit_codim"] = row.d < linkage->explicit_codim.size() ? Json(linkage->explicit_codim[row.d]) : Json(nullptr);
    }
    records.push_back(std::move(rec));
  }
  Json summary = {{"r", r},
                  {"h_g", hg.values},
                  {"h_g_matches_oracle", hg_matches},
                  {"s_contained_in_ann", s.contained},
                  {"s_generates_ann", s.all_equal},
                  {"product_degree", s.product_degree},
                  {"new_generators", s.new_generators},
                  {"binomial_count", bigint_json(s.binomial_count)}};
  bool ok = hg_matches && s.contained && s.all_equal;
  if (linkage) {
    summary["j_generators_contained"] = linkage->generators_contained;
    summary["j_identity"] = linkage->graded_equal;
    summary["linkage_identity"] = linkage->linkage_identity;
    ok = ok && linkage->generators_contained && linkage->graded_equal && linkage->linkage_identity;
  }
  return envelope(meta_json("apolar", cfg, trial_primes(cfg)), std::move(records), ok ? "holds" : "fails", hg_matches,
                  std::move(summary));
}

Json oracle_report(const std::vector<OracleTable>& tables, const EngineConfig& cfg) {
  Json records = Json::array();
  for (const auto& t : tables)
    records.push_back({{"name", t.name}, {"r", t.r}, {"values", values_json(t.values)}, {"source", t.source}});
  return envelope(meta_json("oracle", cfg, {}), std::move(records), nullptr, true);
}

Json inequality_report(const std::vector<InequalityTrace>& traces, const EngineConfig& cfg) {
  Json records = Json::array();
  bool all = true;
  for (const auto& t : traces) {
    records.push_back({{"q", t.q},
                       {"power", bigint_json(t.power)},
                       {"h_q", bigint_json(t.h_q)},
                       {"h_q_minus_1", bigint_json(t.h_q_minus_1)},
                       {"scaled_lhs", bigint_json(t.scaled_lhs)},
                       {"scaled_rhs", bigint_json(t.scaled_rhs)},
                       {"steps_consistent", t.steps_consistent},
                       {"holds", t.holds}});
    all = all && t.holds && t.steps_consistent;
  }
  return envelope(meta_json("oracle", cfg, {}), std::move(records), all ? "holds" : "fails", true);
}

}  // namespace wlpkit
