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

#include "fwl/report.h"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <random>
#include <sstream>
#include <unordered_map>

#include "fwl/error.h"
#include "fwl/weight_cache.h"

namespace fwl {
namespace {

using Clock = std::chrono::steady_clock;

double MsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

uint64_t IntPow(uint64_t base, uint32_t e) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

CheckResult Check(std::string name, bool passed, std::string detail,
                  bool gating = true) {
  return {std::move(name), passed, gating, false, std::move(detail)};
}

CheckResult Skipped(std::string name, std::string reason) {
  return {std::move(name), false, false, true, std::move(reason)};
}

}  // namespace

std::optional<OutputFormat> ParseFormat(const std::string& name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  return std::nullopt;
}

void RunConfig::Validate() const {
  if (family != FamilyKind::kCD1 && (r || !t_basis_exponents.empty())) {
    throw Error(Errc::kInvalidArgument, "--r and --t-basis apply to cd1 only");
  }
  if (r && !t_basis_exponents.empty() && *r != t_basis_exponents.size()) {
    throw Error(Errc::kInvalidArgument, "--r disagrees with --t-basis length");
  }
  if (budget == 0) throw Error(Errc::kInvalidArgument, "budget must be positive");
}

bool VerificationReport::AllPassed() const {
  for (const CheckResult& c : checks) {
    if (c.gating && !c.skipped && !c.passed) return false;
  }
  return true;
}

const CheckResult* VerificationReport::Find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CodeSetup PrepareCode(const RunConfig& config) {
  config.Validate();
  std::optional<PolyRegistry> loaded;
  if (!config.registry_path.empty()) {
    loaded = PolyRegistry::Load(config.registry_path);
  }
  FieldOptions options;
  options.allow_small_t = config.allow_small_t;
  options.registry = loaded ? &*loaded : nullptr;
  Field field = Field::Make(config.p, config.t, config.poly, options);
  SubsetTables tables = BuildSubsets(field);
  DefiningSet d = BuildDefiningSet(field);

  CodeFamily family = CodeFamily::CD();
  if (config.family == FamilyKind::kCD2) family = CodeFamily::CD2();
  if (config.family == FamilyKind::kCD1) {
    std::vector<Elem> basis;
    if (!config.t_basis_exponents.empty()) {
      for (uint32_t e : config.t_basis_exponents) basis.push_back(field.exp(e));
    } else {
      basis = DefaultT(field, config.r.value_or(field.m() - 1));
    }
    family = CodeFamily::CD1(field, std::move(basis));
  }
  return {std::move(field), std::move(tables), std::move(d), std::move(family)};
}

WeightTable ObtainWeightTable(const CodeSetup& setup, const RunConfig& config) {
  const Field& field = setup.field;
  // Budget applies whether or not the table comes from the cache.
  SpectrumSize(field.p(), 2 * field.m(), config.budget);
  std::string path;
  if (!config.cache_dir.empty()) {
    path = WeightCachePath(config.cache_dir, field.spec());
    if (auto cached = ReadWeightTable(path, field.spec(),
                                      setup.defining_set.size())) {
      return *std::move(cached);
    }
  }
  TransformOptions options;
  options.budget = config.budget;
  options.threads = config.threads;
  WeightTable table = WeightTableFull(field, setup.defining_set, options);
  if (!path.empty() && table.bin_sums_conserved) {
    WriteWeightTable(path, field.spec(), table);
  }
  return table;
}

PredictedDistribution PredictFor(const CodeSetup& setup, int64_t s) {
  switch (setup.family.kind()) {
    case FamilyKind::kCD: return PredictCD(setup.field, s);
    case FamilyKind::kCD1: {
      PredictedDistribution d = PredictCD1(setup.field, setup.family.r());
      d.s = s;
      return d;
    }
    case FamilyKind::kCD2: return PredictCD2(setup.field, s);
  }
  throw Error(Errc::kInternal, "unknown family");
}

VerificationReport RunVerification(const RunConfig& config) {
  const auto start = Clock::now();
  VerificationReport report;

  auto stage = Clock::now();
  const CodeSetup setup = PrepareCode(config);
  const Field& field = setup.field;
  const DefiningSet& d = setup.defining_set;
  const CodeFamily& family = setup.family;
  const uint32_t p = field.p(), m = field.m();
  report.warnings = field.warnings();
  report.timings_ms["build"] = MsSince(stage);

  stage = Clock::now();
  const WeightTable table = ObtainWeightTable(setup, config);
  report.timings_ms["transform"] = MsSince(stage);

  stage = Clock::now();
  report.empirical = ComputeWeightDistribution(field, family, table);
  report.s_value = ComputeS(field, setup.tables);
  report.predicted = PredictFor(setup, report.s_value.value);
  report.timings_ms["distribution"] = MsSince(stage);

  ReportParams& params = report.params;
  params.p = p;
  params.t = field.t();
  params.m = m;
  params.q = field.q();
  params.poly = field.spec().poly;
  params.family = family.kind();
  params.r = family.kind() == FamilyKind::kCD1 ? family.r() : 0;
  for (Elem e : family.t_basis()) params.t_basis.push_back(e.index);
  params.n = d.size();
  params.k = family.dimension(field);
  params.d = report.empirical.min_nonzero();

  const bool is_cd = family.kind() == FamilyKind::kCD;
  auto& checks = report.checks;

  stage = Clock::now();
  {
    const uint64_t expected_n = IntPow(p, 2 * m - 1) - 1;
    std::ostringstream detail;
    detail << "[" << params.n << ", " << params.k << ", " << params.d
           << "], expected n = " << expected_n;
    checks.push_back(Check("parameters", params.n == expected_n, detail.str()));
  }
  checks.push_back(Check("transform_bin_sums", table.bin_sums_conserved,
                         "every histogram sums to |D| = " +
                             std::to_string(d.size())));
  {
    // Sampled (a, b) from the family, weight by direct count over D.
    std::vector<Pair> members;
    for (uint32_t bi = 0; bi < field.q(); ++bi) {
      for (uint32_t ai = 0; ai < field.q(); ++ai) {
        if (family.contains(field, Elem{ai}, Elem{bi})) {
          members.push_back({Elem{ai}, Elem{bi}});
        }
      }
    }
    std::mt19937_64 rng(config.seed);
    std::vector<Pair> sample;
    std::sample(members.begin(), members.end(), std::back_inserter(sample),
                config.samples, rng);
    uint64_t mismatches = 0;
    for (const Pair& ab : sample) {
      mismatches += NaiveWeight(field, ab.x, ab.y, d) != table.weight(ab.x, ab.y);
    }
    checks.push_back(Check("naive_cross_check", mismatches == 0,
                           std::to_string(sample.size()) +
                               " sampled codewords, " +
                               std::to_string(mismatches) + " mismatches"));
  }
  {
    const ComparisonVerdict verdict = Compare(report.empirical, report.predicted);
    checks.push_back(Check("compare", verdict.pass,
                           verdict.pass ? "empirical distribution equals "
                                          "the closed form"
                                        : verdict.diff));
  }
  checks.push_back(Check("distinct_weights",
                         report.predicted.WeightsDistinctAndPositive(),
                         std::to_string(report.empirical.nonzero_weight_count()) +
                             " distinct nonzero weights observed",
                         false));
  const uint64_t zero_coords = CountZeroCoordinates(field, family, d.pairs);
  checks.push_back(Check("zero_coordinate", zero_coords == 0,
                         std::to_string(zero_coords) +
                             " identically-zero coordinates",
                         family.kind() != FamilyKind::kCD1));
  {
    const uint64_t a1_dual = zero_coords * (p - 1);
    checks.push_back(Check("pless", PlessCheck(report.empirical, a1_dual),
                           "A1_dual = " + std::to_string(a1_dual)));
  }
  checks.push_back(Check("s_consistency",
                         report.s_value.direct == report.s_value.series,
                         "direct " + std::to_string(report.s_value.direct) +
                             ", series " +
                             std::to_string(report.s_value.series)));
  {
    const BoundItem sb = SBound(field, report.s_value.value);
    std::ostringstream detail;
    detail << sb.value << " <= " << sb.bound;
    checks.push_back(Check("s_bound", sb.pass, detail.str()));

    const Field small = Field::MakeDegree(p, field.t());
    uint64_t failures = 0;
    double worst = 0;
    const std::vector<BoundItem> items = KloostermanBounds(small);
    for (const BoundItem& item : items) {
      failures += !item.pass;
      worst = std::max(worst, item.value);
    }
    std::ostringstream kdetail;
    kdetail << items.size() << " values, max |K_t(a)| = " << worst
            << " <= " << (items.empty() ? 0.0 : items.front().bound);
    checks.push_back(Check("kloosterman_bound", failures == 0, kdetail.str()));
  }
  {
    const bool ratio = AshikhminBarg(report.empirical);
    std::ostringstream detail;
    detail << "w_min/w_max = " << report.empirical.min_nonzero() << "/"
           << report.empirical.max_weight() << (ratio ? " > " : " <= ")
           << (p - 1) << "/" << p;
    checks.push_back(Check("minimality_ratio", ratio, detail.str(), !is_cd));
  }
  if (IntPow(p, params.k) <= kMinimalityGuard) {
    const MinimalityResult minimal = IsMinimalExhaustive(field, family, d);
    std::string detail = "no codeword covers another";
    if (minimal.counterexample) {
      const auto& [big, small] = *minimal.counterexample;
      detail = "c(" + std::to_string(big.x.index) + "," +
               std::to_string(big.y.index) + ") covers c(" +
               std::to_string(small.x.index) + "," +
               std::to_string(small.y.index) + ")";
    }
    checks.push_back(Check("minimality_exhaustive", minimal.minimal, detail,
                           !is_cd));
  } else {
    checks.push_back(Skipped("minimality_exhaustive",
                             "p^k = " + std::to_string(IntPow(p, params.k)) +
                                 " exceeds the pairwise-scan guard " +
                                 std::to_string(kMinimalityGuard)));
  }
  if (is_cd) {
    uint64_t mismatches = 0;
    std::vector<std::optional<PairClass>> b_class(field.q());
    for (uint32_t bi = 0; bi < field.q(); ++bi) {
      for (uint32_t ai = 0; ai < field.q(); ++ai) {
        if (ai == 0 && bi == 0) continue;
        const Elem a{ai}, b{bi};
        PairClass c;
        if (!field.in_prime_field(a) || a.is_zero() || b.is_zero()) {
          c = ClassifyPair(field, setup.tables, a, b);
        } else {
          if (!b_class[bi]) b_class[bi] = ClassifyPair(field, setup.tables, a, b);
          c = *b_class[bi];
        }
        const int64_t n_emp =
            static_cast<int64_t>(d.size()) - table.weight(a, b);
        mismatches += n_emp != PredictN(c, field, report.s_value.value);
      }
    }
    checks.push_back(Check("n_pairs_closed_form", mismatches == 0,
                           std::to_string(uint64_t{field.q()} * field.q() - 1) +
                               " nonzero pairs, " + std::to_string(mismatches) +
                               " mismatches"));

    const DualDistance dd = DualMinDistanceUpTo4(field, d);
    checks.push_back(Check("dual_distance", dd.value >= 2 && dd.value <= 4,
                           "d_dual = " + std::to_string(dd.value) + " (" +
                               dd.method + ")"));
  } else {
    checks.push_back(Skipped("dual_distance", "computed for family cd only"));
  }
  report.timings_ms["checks"] = MsSince(stage);
  report.timings_ms["total"] = MsSince(start);
  return report;
}

nlohmann::json DistributionArray(const WeightDistribution& dist) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, f] : dist.entries) arr.push_back({w, f});
  return arr;
}

nlohmann::json DistributionArray(const PredictedDistribution& dist) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, f] : dist.Merged()) arr.push_back({w, f});
  return arr;
}

nlohmann::json ToJson(const VerificationReport& report, bool include_timings) {
  using nlohmann::json;
  const ReportParams& pr = report.params;
  json j;
  j["params"] = {{"p", pr.p},          {"t", pr.t},
                 {"m", pr.m},          {"q", pr.q},
                 {"poly", pr.poly},    {"family", FamilyName(pr.family)},
                 {"r", pr.r},          {"t_basis", pr.t_basis},
                 {"n", pr.n},          {"k", pr.k},
                 {"d", pr.d}};
  j["s_value"] = {{"direct", report.s_value.direct},
                  {"series", report.s_value.series},
                  {"value", report.s_value.value}};
  j["empirical"] = {{"n", report.empirical.n},
                    {"k", report.empirical.k},
                    {"distribution", DistributionArray(report.empirical)}};
  json entries = json::array();
  for (const PredictedEntry& e : report.predicted.entries) {
    entries.push_back(
        {{"label", e.label}, {"weight", e.weight}, {"frequency", e.frequency}});
  }
  j["predicted"] = {{"family", FamilyName(report.predicted.family)},
                    {"k", report.predicted.k},
                    {"S", report.predicted.s},
                    {"entries", entries},
                    {"distribution", DistributionArray(report.predicted)}};
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"gating", c.gating},
                      {"skipped", c.skipped},
                      {"detail", c.detail}});
  }
  j["checks"] = checks;
  j["warnings"] = report.warnings;
  j["timings"] = include_timings ? json(report.timings_ms) : json::object();
  return j;
}

VerificationReport ReportFromJson(const nlohmann::json& j) {
  VerificationReport r;
  const auto& pj = j.at("params");
  ReportParams& pr = r.params;
  pj.at("p").get_to(pr.p);
  pj.at("t").get_to(pr.t);
  pj.at("m").get_to(pr.m);
  pj.at("q").get_to(pr.q);
  pj.at("poly").get_to(pr.poly);
  const auto family = ParseFamily(pj.at("family").get<std::string>());
  if (!family) throw Error(Errc::kInvalidArgument, "unknown family in report");
  pr.family = *family;
  pj.at("r").get_to(pr.r);
  pj.at("t_basis").get_to(pr.t_basis);
  pj.at("n").get_to(pr.n);
  pj.at("k").get_to(pr.k);
  pj.at("d").get_to(pr.d);

  const auto& sj = j.at("s_value");
  sj.at("direct").get_to(r.s_value.direct);
  sj.at("series").get_to(r.s_value.series);
  sj.at("value").get_to(r.s_value.value);

  const auto& ej = j.at("empirical");
  r.empirical.p = pr.p;
  ej.at("n").get_to(r.empirical.n);
  ej.at("k").get_to(r.empirical.k);
  for (const auto& row : ej.at("distribution")) {
    r.empirical.entries[row.at(0).get<uint64_t>()] = row.at(1).get<uint64_t>();
  }

  const auto& dj = j.at("predicted");
  const auto pfamily = ParseFamily(dj.at("family").get<std::string>());
  if (!pfamily) throw Error(Errc::kInvalidArgument, "unknown family in report");
  r.predicted.family = *pfamily;
  r.predicted.p = pr.p;
  r.predicted.t = pr.t;
  dj.at("k").get_to(r.predicted.k);
  dj.at("S").get_to(r.predicted.s);
  for (const auto& e : dj.at("entries")) {
    r.predicted.entries.push_back({e.at("label").get<std::string>(),
                                   e.at("weight").get<int64_t>(),
                                   e.at("frequency").get<int64_t>()});
  }
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(),
                        c.at("passed").get<bool>(), c.at("gating").get<bool>(),
                        c.at("skipped").get<bool>(),
                        c.at("detail").get<std::string>()});
  }
  if (j.contains("warnings")) j.at("warnings").get_to(r.warnings);
  if (j.contains("timings")) j.at("timings").get_to(r.timings_ms);
  return r;
}

bool SameContent(const VerificationReport& a, const VerificationReport& b) {
  return ToJson(a, false) == ToJson(b, false);
}

std::string DistributionCsv(const WeightDistribution& empirical,
                            const PredictedDistribution& predicted) {
  std::ostringstream out;
  out << "weight,frequency,source\n";
  for (const auto& [w, f] : empirical.entries) {
    out << w << "," << f << ",empirical\n";
  }
  for (const auto& [w, f] : predicted.Merged()) {
    out << w << "," << f << ",predicted\n";
  }
  return out.str();
}

std::string EnumeratorString(const WeightDistribution& dist) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, f] : dist.entries) {
    if (!first) out << " + ";
    first = false;
    if (w == 0) {
      out << f;
      continue;
    }
    if (f != 1) out << f;
    out << "x^" << w;
  }
  return out.str();
}

std::string ReportText(const VerificationReport& report) {
  const ReportParams& pr = report.params;
  std::ostringstream out;
  out << "family " << FamilyName(pr.family) << " over GF(" << pr.p << "^"
      << pr.m << "), p = " << pr.p << ", t = " << pr.t
      << ", poly = " << PolynomialToString(pr.poly) << "\n";
  if (pr.family == FamilyKind::kCD1) out << "r = " << pr.r << "\n";
  out << "parameters [" << pr.n << ", " << pr.k << ", " << pr.d << "]\n";
  out << "S = " << report.s_value.value << " (direct " << report.s_value.direct
      << ", series " << report.s_value.series << ")\n";
  out << "empirical enumerator: " << EnumeratorString(report.empirical) << "\n";
  out << "predicted:";
  for (const PredictedEntry& e : report.predicted.entries) {
    out << " " << e.label << "=" << e.weight << ":" << e.frequency;
  }
  out << "\n";
  for (const CheckResult& c : report.checks) {
    const char* status = c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL";
    out << "  [" << status << "] " << c.name
        << (c.gating || c.skipped ? "" : " (informational)") << ": "
        << c.detail << "\n";
  }
  for (const std::string& w : report.warnings) out << "warning: " << w << "\n";
  out << (report.AllPassed() ? "VERIFIED" : "FAILED") << "\n";
  return out.str();
}

}  // namespace fwl
