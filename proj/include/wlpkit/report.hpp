#pragma once

// JSON reports shared by the command-line tool and the Python module.
//
// Every report has the shape
//   {"meta": {...}, "records": [...], "verdict": ..., "certified": ..., "summary": {...}}
// where records are flat objects with the same keys. docs/json-schema.md lists the fields.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wlpkit/apolar.hpp"
#include "wlpkit/lefschetz.hpp"
#include "wlpkit/oracles.hpp"

namespace wlpkit {

using Json = nlohmann::ordered_json;

Json meta_json(const std::string& command, const EngineConfig& cfg, const std::vector<std::uint64_t>& primes);

/// Primes of trials 0..trials-1.
std::vector<std::uint64_t> trial_primes(const EngineConfig& cfg);

Json envelope(Json meta, Json records, Json verdict, bool certified, Json summary = Json::object());

Json hilbert_report(const IdealSpec& spec, const HilbertFunction& h, const EngineConfig& cfg,
                    const std::optional<OracleTable>& oracle);
Json wlp_report(const WlpReport& rep, const EngineConfig& cfg, const std::string& command = "wlp");
Json slp_report(const SlpReport& rep, const EngineConfig& cfg);
Json conjecture_report(const std::vector<ConjectureVerdict>& rows, const EngineConfig& cfg);
Json apolar_report(unsigned r, const HilbertFunction& hg, const OracleTable& oracle, const SGenerationReport& s,
                   const std::optional<LinkageReport>& linkage, const EngineConfig& cfg);
Json oracle_report(const std::vector<OracleTable>& tables, const EngineConfig& cfg);
Json inequality_report(const std::vector<InequalityTrace>& traces, const EngineConfig& cfg);

/// Oracle table that applies to `spec`, if any: squares of the variables or r+1 general squares.
std::optional<OracleTable> matching_oracle(const IdealSpec& spec);

/// Compact "(1,5,10)" form.
std::string tuple_string(const std::vector<std::size_t>& v);

}  // namespace wlpkit
