// wlpkit: Hilbert functions and Lefschetz properties of artinian ideals.
//
// Exit codes: 0 success or property holds, 2 verified failure, 1 error.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wlpkit/apolar.hpp"
#include "wlpkit/errors.hpp"
#include "wlpkit/lefschetz.hpp"
#include "wlpkit/oracles.hpp"
#include "wlpkit/report.hpp"
#include "wlpkit/spec_io.hpp"
#include "wlpkit/version.hpp"

namespace fs = std::filesystem;
using namespace wlpkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFails = 2;

struct Options {
  std::optional<std::uint64_t> seed;
  unsigned trials = 3;
  unsigned prime_bits = 31;
  std::uint64_t coeff_bound = 10000;
  bool certify = false;
  std::string output = "text";
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  std::optional<unsigned> r;
  std::optional<unsigned> r_min;
  std::optional<unsigned> r_max;
  std::string spec;
};

EngineConfig engine_config(const Options& o) {
  EngineConfig cfg;
  cfg.trials = o.trials;
  cfg.prime_bits = o.prime_bits;
  cfg.coeff_bound = o.coeff_bound;
  cfg.certify = o.certify;
  if (o.seed) {
    cfg.seed = *o.seed;
  } else if (const char* env = std::getenv("WLPKIT_SEED")) {
    try {
      cfg.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("WLPKIT_SEED is not a number: ") + env);
    }
  }
  cfg.validate();
  return cfg;
}

std::pair<unsigned, unsigned> r_range(const Options& o, unsigned lo, unsigned hi) {
  if (o.r) return {*o.r, *o.r};
  return {o.r_min.value_or(lo), o.r_max.value_or(hi)};
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Results stored under <dir>/v<version>/<hash>.json, each holding its full key.
class FileCache {
 public:
  explicit FileCache(std::optional<fs::path> dir) : dir_(std::move(dir)) {}

  static FileCache from_options(const Options& o) {
    if (o.no_cache) return FileCache(std::nullopt);
    if (o.cache_dir) return FileCache(fs::path(*o.cache_dir));
    if (const char* env = std::getenv("WLPKIT_CACHE_DIR"); env && *env) return FileCache(fs::path(env));
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return FileCache(fs::path(xdg) / "wlpkit");
    if (const char* home = std::getenv("HOME"); home && *home) return FileCache(fs::path(home) / ".cache" / "wlpkit");
    return FileCache(std::nullopt);
  }

  const std::optional<fs::path>& dir() const { return dir_; }

  std::optional<Json> get(const std::string& key) const {
    if (!dir_) return std::nullopt;
    std::ifstream in(file(key));
    if (!in) return std::nullopt;
    try {
      Json doc = Json::parse(in);
      if (doc.at("key") != key) return std::nullopt;
      return doc.at("report");
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  void put(const std::string& key, const Json& report) const {
    if (!dir_) return;
    std::error_code ec;
    fs::create_directories(file(key).parent_path(), ec);
    if (ec) return;
    const fs::path tmp = file(key).string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << Json{{"key", key}, {"report", report}}.dump();
      if (!out) return;
    }
    fs::rename(tmp, file(key), ec);
  }

  // (entries, bytes) of the current version
  std::pair<std::size_t, std::uintmax_t> stats() const {
    std::size_t n = 0;
    std::uintmax_t bytes = 0;
    if (!dir_ || !fs::is_directory(version_dir())) return {n, bytes};
    for (const auto& e : fs::directory_iterator(version_dir()))
      if (e.is_regular_file() && e.path().extension() == ".json") {
        ++n;
        bytes += e.file_size();
      }
    return {n, bytes};
  }

  std::size_t clear() const {
    std::size_t removed = 0;
    if (!dir_ || !fs::is_directory(*dir_)) return removed;
    for (const auto& v : fs::directory_iterator(*dir_)) {
      if (!v.is_directory() || v.path().filename().string().rfind('v', 0) != 0) continue;
      for (const auto& e : fs::directory_iterator(v.path()))
        if (e.is_regular_file() && e.path().extension() == ".json") removed += fs::remove(e.path());
      std::error_code ec;
      fs::remove(v.path(), ec);
    }
    return removed;
  }

 private:
  fs::path version_dir() const { return *dir_ / (std::string("v") + kVersion); }
  fs::path file(const std::string& key) const {
    std::ostringstream name;
    name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".json";
    return version_dir() / name.str();
  }

  std::optional<fs::path> dir_;
};

std::string config_key(const std::string& command, const EngineConfig& cfg) {
  std::ostringstream key;
  key << command << "|seed=" << cfg.seed << "|trials=" << cfg.trials << "|bits=" << cfg.prime_bits
      << "|bound=" << cfg.coeff_bound << "|certify=" << cfg.certify << "|version=" << kVersion;
  return key.str();
}

template <class Fn>
Json cached(const FileCache& cache, const std::string& key, Fn&& compute) {
  if (auto hit = cache.get(key)) return *hit;
  Json report = compute();
  cache.put(key, report);
  return report;
}

// ---- rendering ------------------------------------------------------------

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + cell(v[i]);
    return s + ")";
  }
  return v.dump();
}

std::vector<std::string> columns(const Json& records) {
  std::vector<std::string> cols;
  for (const auto& rec : records)
    for (const auto& [k, _] : rec.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  return cols;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void render_csv(const Json& report, std::ostream& out) {
  const Json& records = report.at("records");
  const auto cols = columns(records);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_escape(cols[i]);
  out << '\n';
  for (const auto& rec : records) {
    for (std::size_t i = 0; i < cols.size(); ++i)
      out << (i ? "," : "") << csv_escape(rec.contains(cols[i]) ? cell(rec[cols[i]]) : "");
    out << '\n';
  }
}

void render_text(const Json& report, std::ostream& out) {
  const Json& meta = report.at("meta");
  out << meta.at("command").get<std::string>() << "  seed=" << meta.at("seed") << " trials=" << meta.at("trials")
      << " primes=" << cell(meta.at("primes")) << "\n\n";
  const Json& records = report.at("records");
  const auto cols = columns(records);
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  for (const auto& rec : records)
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (rec.contains(cols[i])) width[i] = std::max(width[i], cell(rec[cols[i]]).size());
  auto line = [&](auto&& value_of) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const std::string v = value_of(i);
      out << (i ? "  " : "") << std::string(width[i] - std::min(width[i], v.size()), ' ') << v;
    }
    out << '\n';
  };
  if (!cols.empty()) {
    line([&](std::size_t i) { return cols[i]; });
    for (const auto& rec : records)
      line([&](std::size_t i) { return rec.contains(cols[i]) ? cell(rec[cols[i]]) : std::string(); });
    out << '\n';
  }
  for (const auto& [k, v] : report.at("summary").items())
    if (k != "spec") out << k << ": " << cell(v) << '\n';
  if (!report.at("verdict").is_null()) out << "verdict: " << cell(report.at("verdict")) << '\n';
  out << "certified: " << (report.at("certified").get<bool>() ? "true" : "false") << '\n';
}

void render(const Json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump(2) << '\n';
  } else if (format == "csv") {
    render_csv(report, std::cout);
  } else {
    render_text(report, std::cout);
  }
}

int verdict_exit(const Json& report) {
  return report.at("verdict") == "fails" ? kExitFails : kExitOk;
}

// ---- subcommands ------------------------------------------------------------

int cmd_verify_hss(const Options& o, unsigned cap) {
  const EngineConfig cfg = engine_config(o);
  const auto [lo, hi] = r_range(o, 2, cap);
  if (lo < 2 || lo > hi || hi > cap)
    throw std::invalid_argument("need 2 <= r-min <= r-max <= " + std::to_string(cap) + " (raise --cap for larger r)");
  std::ostringstream key;
  key << config_key("verify-hss", cfg) << "|r=" << lo << ".." << hi << "|cap=" << cap;
  const Json report = cached(FileCache::from_options(o), key.str(), [&, lo = lo, hi = hi] {
    std::vector<ConjectureVerdict> rows;
    for (unsigned r = lo; r <= hi; ++r) rows.push_back(verify_conjecture(r, cfg, cap));
    return conjecture_report(rows, cfg);
  });
  render(report, o.output);
  bool ok = true;
  for (const auto& rec : report.at("records"))
    if (!rec.at("agrees").get<bool>() || !rec.at("certified").get<bool>()) {
      std::cerr << "offending record: " << rec.dump() << '\n';
      ok = false;
    }
  return ok ? kExitOk : kExitFails;
}

IdealSpec load_spec(const Options& o) {
  if (o.spec.empty()) throw std::invalid_argument("--spec <file|-> is required");
  IdealSpec spec = read_spec(o.spec);
  spec.validate();
  return spec;
}

int cmd_hilbert(const Options& o) {
  const EngineConfig cfg = engine_config(o);
  const IdealSpec spec = load_spec(o);
  const Json report = cached(FileCache::from_options(o), config_key("hilbert", cfg) + "|" + spec.canonical(),
                             [&] { return hilbert_report(spec, hilbert_function(spec, cfg), cfg, matching_oracle(spec)); });
  render(report, o.output);
  return kExitOk;
}

int cmd_wlp(const Options& o) {
  const EngineConfig cfg = engine_config(o);
  const IdealSpec spec = load_spec(o);
  const Json report = cached(FileCache::from_options(o), config_key("wlp", cfg) + "|" + spec.canonical(),
                             [&] { return wlp_report(wlp_test(spec, cfg), cfg); });
  render(report, o.output);
  return verdict_exit(report);
}

int cmd_slp(const Options& o, std::optional<unsigned> max_power) {
  const EngineConfig cfg = engine_config(o);
  const IdealSpec spec = load_spec(o);
  const std::string key = config_key("slp", cfg) + "|" + spec.canonical() + "|k=" +
                          (max_power ? std::to_string(*max_power) : std::string("all"));
  const Json report =
      cached(FileCache::from_options(o), key, [&] { return slp_report(slp_test(spec, cfg, max_power), cfg); });
  render(report, o.output);
  return verdict_exit(report);
}

int cmd_apolar(const Options& o) {
  const EngineConfig cfg = engine_config(o);
  if (!o.r) throw std::invalid_argument("--r is required");
  const unsigned r = *o.r;
  if (r < 3 || r > kApolarCap)
    throw std::invalid_argument("apolar runs at desk scale only: 3 <= r <= " + std::to_string(kApolarCap));
  const Json report = cached(FileCache::from_options(o), config_key("apolar", cfg) + "|r=" + std::to_string(r), [&] {
    const auto g = elementary_squarefree_sum(r, r - 2);
    return apolar_report(r, gorenstein_hilbert(g, cfg), hf_gorenstein_G(r), check_S_generates(r, cfg),
                         linkage_check(r, cfg), cfg);
  });
  render(report, o.output);
  return verdict_exit(report);
}

int cmd_probe(const Options& o, unsigned s, const std::vector<unsigned>& exps) {
  const EngineConfig cfg = engine_config(o);
  if (!o.r) throw std::invalid_argument("--r is required");
  std::vector<unsigned> exponents = exps;
  if (exponents.size() == 1) exponents.assign(s, exps.front());
  std::ostringstream key;
  key << config_key("probe", cfg) << "|r=" << *o.r << "|s=" << s << "|exp=" << tuple_string({exponents.begin(), exponents.end()});
  const Json report = cached(FileCache::from_options(o), key.str(),
                             [&] { return wlp_report(probe_power_ideal(*o.r, s, exponents, cfg), cfg, "probe"); });
  render(report, o.output);
  return verdict_exit(report);
}

const std::vector<std::string> kOracleNames = {"hf_square_ci",       "hf_gorenstein_G", "hf_acm_squares",
                                               "socle_degree_J",     "coinvariant_dim_2q", "inequality",
                                               "binomial_identities", "semicontinuity"};

int cmd_oracle(const Options& o, const std::string& name, unsigned q_min, unsigned q_max, unsigned n_max) {
  const EngineConfig cfg = engine_config(o);
  Json report;
  if (name == "hf_square_ci" || name == "hf_gorenstein_G" || name == "hf_acm_squares") {
    const auto [lo, hi] = r_range(o, name == "hf_square_ci" ? 1 : 3, 9);
    std::vector<OracleTable> tables;
    for (unsigned r = lo; r <= hi; ++r)
      tables.push_back(name == "hf_square_ci" ? hf_square_ci(r) : name == "hf_gorenstein_G" ? hf_gorenstein_G(r) : hf_acm_squares(r));
    report = oracle_report(tables, cfg);
  } else if (name == "socle_degree_J") {
    const auto [lo, hi] = r_range(o, 2, 13);
    Json records = Json::array();
    for (unsigned r = lo; r <= hi; ++r) records.push_back({{"r", r}, {"socle_degree", socle_degree_J(r)}});
    report = envelope(meta_json("oracle", cfg, {}), records, nullptr, true);
  } else if (name == "coinvariant_dim_2q") {
    Json records = Json::array();
    for (unsigned q = q_min; q <= q_max; ++q) records.push_back({{"q", q}, {"dim", bigint_json(coinvariant_dim_2q(q))}});
    report = envelope(meta_json("oracle", cfg, {}), records, nullptr, true);
  } else if (name == "inequality") {
    std::vector<InequalityTrace> traces;
    for (unsigned q = std::max(q_min, 4u); q <= q_max; ++q) traces.push_back(inequality_check(q));
    report = inequality_report(traces, cfg);
  } else if (name == "binomial_identities") {
    Json records = Json::array();
    bool all = true;
    for (unsigned n = 1; n <= n_max; ++n) {
      bool holds = true;
      for (unsigned k = 1; k <= n; ++k) holds = holds && binomial_identities(n, k);
      records.push_back({{"n", n}, {"k_checked", n}, {"holds", holds}});
      all = all && holds;
    }
    report = envelope(meta_json("oracle", cfg, {}), records, all ? "holds" : "fails", true);
  } else if (name == "semicontinuity") {
    const auto [lo, hi] = r_range(o, 3, 9);
    Json records = Json::array();
    bool all = true;
    for (unsigned r = lo; r <= hi; ++r) {
      const auto rep = semicontinuity_bounds(r, cfg);
      const bool acm = rep.a.values == hf_acm_squares(r).values;
      Json hv = Json::array();
      for (const auto& v : rep.a.values) hv.push_back(bigint_json(v));
      records.push_back({{"r", r},
                         {"h_vector", hv},
                         {"all_equal", rep.all_equal},
                         {"equals_closed_form", acm},
                         {"a_le_b", rep.a_le_b},
                         {"b_le_c", rep.b_le_c},
                         {"general_le_special", rep.general_le_special}});
      all = all && rep.all_equal && acm;
    }
    report = envelope(meta_json("oracle", cfg, trial_primes(cfg)), records, all ? "holds" : "fails", all);
  } else {
    std::string known;
    for (const auto& n : kOracleNames) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown oracle \"" + name + "\"; available: " + known);
  }
  render(report, o.output);
  return verdict_exit(report);
}

int cmd_cache(const Options& o, const std::string& action) {
  const FileCache cache = FileCache::from_options(o);
  if (!cache.dir()) throw std::invalid_argument("no cache directory configured");
  if (action == "clear") {
    std::cout << "removed " << cache.clear() << " entries from " << cache.dir()->string() << '\n';
    return kExitOk;
  }
  const auto [n, bytes] = cache.stats();
  if (o.output == "json") {
    std::cout << Json{{"dir", cache.dir()->string()}, {"version", kVersion}, {"entries", n}, {"bytes", bytes}}.dump(2)
              << '\n';
  } else {
    std::cout << "dir: " << cache.dir()->string() << "\nversion: " << kVersion << "\nentries: " << n
              << "\nbytes: " << bytes << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert functions and Lefschetz properties of artinian ideals"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--seed", o.seed, "Random seed (default: $WLPKIT_SEED or 0)");
  app.add_option("--trials", o.trials, "Independent random trials")->check(CLI::PositiveNumber);
  app.add_option("--prime-bits", o.prime_bits, "Size of the random primes")->check(CLI::Range(20, 62));
  app.add_option("--coeff-bound", o.coeff_bound, "Random coefficients lie in [-B, B]")->check(CLI::PositiveNumber);
  app.add_flag("--certify", o.certify, "Confirm integer ranks by fraction-free elimination");
  app.add_option("--output", o.output, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", o.cache_dir, "Result cache (default: $WLPKIT_CACHE_DIR or ~/.cache/wlpkit)");
  app.add_flag("--no-cache", o.no_cache, "Do not read or write the result cache");
  app.add_option("--r", o.r, "Number of variables");
  app.add_option("--r-min", o.r_min, "Smallest number of variables");
  app.add_option("--r-max", o.r_max, "Largest number of variables");
  app.add_option("--spec", o.spec, "Ideal specification file, or - for standard input");

  unsigned cap = kConjectureCap;
  auto* verify = app.add_subcommand("verify-hss", "WLP of r+1 general squares against the expected verdicts");
  verify->add_option("--cap", cap, "Largest r accepted");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of R/I");
  auto* wlp = app.add_subcommand("wlp", "Weak Lefschetz test");
  std::optional<unsigned> max_power;
  auto* slp = app.add_subcommand("slp", "Strong Lefschetz test");
  slp->add_option("--max-power", max_power, "Largest power of L checked");
  auto* apolar = app.add_subcommand("apolar", "Inverse-system checks for g = sum of squarefree monomials of degree r-2");
  std::string oracle_name;
  unsigned q_min = 4, q_max = 100, n_max = 64;
  auto* oracle = app.add_subcommand("oracle", "Closed-form tables and exact identities");
  oracle->add_option("name", oracle_name, "Oracle name")->required();
  oracle->add_option("--q-min", q_min, "Smallest q");
  oracle->add_option("--q-max", q_max, "Largest q");
  oracle->add_option("--n-max", n_max, "Largest n for binomial identities");
  unsigned s = 0;
  std::vector<unsigned> exps;
  auto* probe = app.add_subcommand("probe", "WLP of s general linear forms raised to given powers");
  probe->add_option("--s", s, "Number of forms")->required();
  probe->add_option("--exp", exps, "One exponent, or one per form")->delimiter(',')->required();
  std::string action;
  auto* cache = app.add_subcommand("cache", "Inspect or clear the result cache");
  cache->add_option("action", action, "clear or stats")->required()->check(CLI::IsMember({"clear", "stats"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*verify) return cmd_verify_hss(o, cap);
    if (*hilbert) return cmd_hilbert(o);
    if (*wlp) return cmd_wlp(o);
    if (*slp) return cmd_slp(o, max_power);
    if (*apolar) return cmd_apolar(o);
    if (*oracle) return cmd_oracle(o, oracle_name, q_min, q_max, n_max);
    if (*probe) return cmd_probe(o, s, exps);
    if (*cache) return cmd_cache(o, action);
  } catch (const SpecParseError& e) {
    std::cerr << "error: " << (o.spec == "-" ? "<stdin>" : o.spec) << ": " << e.what() << '\n';
  } catch (const NotArtinian& e) {
    std::cerr << "error: not artinian: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
