#pragma once

// Weak and strong Lefschetz tests for artinian quotients A = R/I.
//
// The rank of x L: [A]_{i-1} -> [A]_i is computed twice in every trial: as
// the rank of the induced matrix, and as dim [A]_i - dim [R/(I,L)]_i from
// the exact sequence  [A]_{i-1} -> [A]_i -> [R/(I,L)]_i -> 0. The second
// path works in R/(L), i.e. one variable fewer. Disagreement raises
// DualPathMismatch.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wlpkit/ideal_engine.hpp"

namespace wlpkit {

enum class Verdict { Holds, Fails };

std::string to_string(Verdict v);

/// The map x L: [A]_{i-1} -> [A]_i.
struct DegreeRecord {
  unsigned i = 0;
  std::size_t dim_prev = 0;
  std::size_t dim_cur = 0;
  std::size_t rank = 0;
  std::size_t max_possible = 0;
  std::size_t residual_dim = 0;
  bool maximal = true;

  bool operator==(const DegreeRecord&) const = default;
};

struct WlpReport {
  IdealSpec spec;
  HilbertFunction hilbert;
  std::vector<DegreeRecord> records;
  Verdict verdict = Verdict::Holds;
  /// Degrees j whose map [A]_{j-1} -> [A]_j is not of maximal rank.
  std::vector<unsigned> failing_degrees;
  unsigned trials = 0;
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 0;
  /// Every trial produced the same Hilbert function and the same per-degree verdicts.
  bool certified = false;
};

/// The map x L^k: [A]_i -> [A]_{i+k}.
struct PowerRecord {
  unsigned i = 0;
  unsigned k = 0;
  std::size_t dim_src = 0;
  std::size_t dim_dst = 0;
  std::size_t rank = 0;
  std::size_t max_possible = 0;
  bool maximal = true;
};

struct SlpReport {
  IdealSpec spec;
  HilbertFunction hilbert;
  std::vector<PowerRecord> records;
  Verdict verdict = Verdict::Holds;
  unsigned trials = 0;
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 0;
  bool certified = false;
};

struct ConjectureVerdict {
  unsigned r = 0;
  Verdict wlp = Verdict::Holds;
  Verdict expected = Verdict::Holds;
  bool agrees = false;
  std::optional<unsigned> failing_degree;
  /// All oracle cross-checks matched and every trial agreed.
  bool certified = false;
  std::vector<std::string> mismatches;
  WlpReport report;
};

/// Rank of x l: [R/I]_{i-1} -> [R/I]_i, the maximum over trials; both rank paths are checked.
std::size_t multiplication_rank(const IdealSpec& spec, const LinearForm& l, unsigned i, const EngineConfig& cfg = {});

/// Full record for x l at degree i.
DegreeRecord max_rank_residual_check(const IdealSpec& spec, const LinearForm& l, unsigned i,
                                     const EngineConfig& cfg = {});

/// Checks degrees 1..socle+1 with a fresh general L per trial.
WlpReport wlp_test(const IdealSpec& spec, const EngineConfig& cfg = {});

/// Checks x L^k: [A]_i -> [A]_{i+k} for every i and 1 <= k <= max_power with i+k <= socle.
SlpReport slp_test(const IdealSpec& spec, const EngineConfig& cfg = {}, std::optional<unsigned> max_power = {});

/// WLP holds for r+1 general squares in r variables exactly when r is 2, 3, 4, 5 or 7.
Verdict expected_verdict(unsigned r);

inline constexpr unsigned kConjectureCap = 13;

/// Runs wlp_test on r+1 general squares and cross-checks it against the oracles.
ConjectureVerdict verify_conjecture(unsigned r, const EngineConfig& cfg = {}, unsigned cap = kConjectureCap);

/// WLP report for s general linear forms raised to `exponents`; requires s >= r.
WlpReport probe_power_ideal(unsigned r, unsigned s, const std::vector<unsigned>& exponents,
                            const EngineConfig& cfg = {});

}  // namespace wlpkit
