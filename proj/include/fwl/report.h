// Copyright 2026 The fwl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FWL_REPORT_H_
#define FWL_REPORT_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fwl/code_lab.h"
#include "fwl/cyclotomic.h"
#include "fwl/finite_field.h"
#include "fwl/spectral_transform.h"
#include "fwl/theory_oracle.h"

namespace fwl {

enum class OutputFormat { kText, kJson, kCsv };

std::optional<OutputFormat> ParseFormat(const std::string& name);

struct RunConfig {
  uint32_t p = 2;
  uint32_t t = 3;
  std::optional<Polynomial> poly;
  FamilyKind family = FamilyKind::kCD;
  std::optional<uint32_t> r;
  // Exponents e of the T basis elements a^e (cd1 only).
  std::vector<uint32_t> t_basis_exponents;
  uint64_t budget = kDefaultBudget;
  std::string cache_dir;
  std::string registry_path;
  OutputFormat format = OutputFormat::kText;
  int verbosity = 0;
  bool allow_small_t = false;
  uint64_t seed = 1;
  uint32_t samples = 1000;
  unsigned threads = 0;

  // Throws kInvalidArgument on inconsistent settings.
  void Validate() const;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  // Non-gating checks are reported but do not decide the verdict.
  bool gating = true;
  bool skipped = false;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ReportParams {
  uint32_t p = 0;
  uint32_t t = 0;
  uint32_t m = 0;
  uint64_t q = 0;
  Polynomial poly;
  FamilyKind family = FamilyKind::kCD;
  uint32_t r = 0;
  std::vector<uint32_t> t_basis;  // element indices
  uint64_t n = 0;
  uint32_t k = 0;
  uint64_t d = 0;  // minimum nonzero weight

  friend bool operator==(const ReportParams&, const ReportParams&) = default;
};

struct VerificationReport {
  ReportParams params;
  SValue s_value;
  WeightDistribution empirical;
  PredictedDistribution predicted;
  std::vector<CheckResult> checks;
  std::map<std::string, double> timings_ms;
  std::vector<std::string> warnings;

  bool AllPassed() const;
  const CheckResult* Find(const std::string& name) const;
};

// Everything needed to describe one code instance.
struct CodeSetup {
  Field field;
  SubsetTables tables;
  DefiningSet defining_set;
  CodeFamily family;
};

CodeSetup PrepareCode(const RunConfig& config);

// Transform (or cache hit) for the setup's field and defining set.
WeightTable ObtainWeightTable(const CodeSetup& setup, const RunConfig& config);

// build -> transform -> empirical distribution -> S -> prediction -> checks.
VerificationReport RunVerification(const RunConfig& config);

PredictedDistribution PredictFor(const CodeSetup& setup, int64_t s);

nlohmann::json ToJson(const VerificationReport& report,
                      bool include_timings = true);
VerificationReport ReportFromJson(const nlohmann::json& j);

bool SameContent(const VerificationReport& a, const VerificationReport& b);

// Rows "weight,frequency,source".
std::string DistributionCsv(const WeightDistribution& empirical,
                            const PredictedDistribution& predicted);
std::string ReportText(const VerificationReport& report);

// Sorted [weight, frequency] pairs.
nlohmann::json DistributionArray(const WeightDistribution& dist);
nlohmann::json DistributionArray(const PredictedDistribution& dist);

// "1 + x^448 + 49x^960 + ..."
std::string EnumeratorString(const WeightDistribution& dist);

}  // namespace fwl

#endif  // FWL_REPORT_H_
