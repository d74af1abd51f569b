#pragma once

// Exhaustive sweeps over prime powers, one JSON line per check.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wilsonff/ffield.hpp"

namespace wilsonff {

struct Check {
  std::uint64_t q = 0;
  std::string suite;
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

void to_json(nlohmann::json& j, const Check& c);
void from_json(const nlohmann::json& j, Check& c);

inline const std::vector<std::string> kAllSuites = {"tables",      "dickson",  "cardinality", "correspondence",
                                                    "reciprocity", "rescaling", "intro"};

/// (p, n) with p odd, n <= max_degree and qmin <= p^n <= qmax, ordered by q.
std::vector<std::pair<std::uint32_t, unsigned>> prime_powers(std::uint64_t qmin, std::uint64_t qmax,
                                                             unsigned max_degree);

/// Checks of one suite at one field, in a fixed order. Throws std::invalid_argument
/// for an unknown suite.
std::vector<Check> run_suite(const FieldCtx& f, const std::string& suite);

struct SweepConfig {
  std::uint64_t qmin = 3;
  std::uint64_t qmax = 100;
  unsigned max_degree = 3;
  std::vector<std::string> suites = kAllSuites;
  unsigned workers = 1;
};

/// Throws std::invalid_argument for qmin < 3, no suites or unknown suites.
void validate(const SweepConfig& cfg);

struct SweepSummary {
  std::uint64_t fields = 0;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  bool ok() const { return failures == 0; }
};

/// Writes one JSON line per check to `out`; lines of one q stay together and in order.
SweepSummary run_verify(const SweepConfig& cfg, std::ostream& out);

}  // namespace wilsonff
