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

// fwl: build the defining-set codes over F_p, compute their weight
// distributions with the character-count transform, and check them against
// the Kloosterman-sum closed forms.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fwl/code_lab.h"
#include "fwl/cyclotomic.h"
#include "fwl/error.h"
#include "fwl/finite_field.h"
#include "fwl/report.h"
#include "fwl/theory_oracle.h"

namespace {

using fwl::Errc;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBudget = 3;

int ExitCodeFor(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument:
    case Errc::kNotPrime:
    case Errc::kNotPrimitive:
    case Errc::kSmallT:
    case Errc::kIntersectionNotTrivial:
    case Errc::kIo:
      return kExitConfig;
    case Errc::kDimensionTooLarge:
    case Errc::kTooLarge:
      return kExitBudget;
    default:
      return kExitVerdict;
  }
}

std::vector<uint32_t> ParseList(const std::string& text, const char* what) {
  std::vector<uint32_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      const unsigned long v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<uint32_t>(v));
    } catch (const std::exception&) {
      throw fwl::Error(Errc::kInvalidArgument,
                       std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  return out;
}

struct Options {
  fwl::RunConfig config;
  std::string poly;
  std::string family = "cd";
  std::string t_basis;
  std::string format = "text";
  std::string out;
  uint32_t r = 0;
  uint32_t l = 1;
  int64_t a = -1;
};

void AddFieldOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--p", o.config.p, "Prime characteristic")->required();
  cmd->add_option("--t", o.config.t, "Half degree, m = 2t")->required();
  cmd->add_option("--poly", o.poly,
                  "Primitive polynomial, comma-separated coefficients "
                  "low-to-high (degree 2t, monic)");
  cmd->add_option("--registry", o.config.registry_path,
                  "Polynomial registry file of 'p m c_0 ... c_m' lines");
  cmd->add_flag("--allow-small-t", o.config.allow_small_t,
                "Permit t < 3 (emits a warning)");
}

void AddOutputOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", o.out, "Write output to this file");
  cmd->add_flag("-v,--verbose", o.config.verbosity, "More detail on stderr");
}

void AddCodeOptions(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "cd, cd1 or cd2")
      ->check(CLI::IsMember({"cd", "cd1", "cd2"}));
  cmd->add_option("--r", o.r, "Rank of T for cd1 (default m-1)");
  cmd->add_option("--t-basis", o.t_basis,
                  "cd1 T basis as comma-separated exponents of alpha");
  cmd->add_option("--cache-dir", o.config.cache_dir, "Weight-table cache")
      ->envname("FWL_CACHE_DIR");
  cmd->add_option("--budget", o.config.budget,
                  "Maximum transform entries p^(4t)")
      ->envname("FWL_BUDGET");
  cmd->add_option("--seed", o.config.seed, "Seed for sampled checks");
  cmd->add_option("--samples", o.config.samples,
                  "Codewords for the naive cross-check");
  cmd->add_option("--threads", o.config.threads, "Transform workers (0 = auto)");
}

void Finalize(Options& o) {
  if (!o.poly.empty()) o.config.poly = ParseList(o.poly, "--poly");
  o.config.family = *fwl::ParseFamily(o.family);
  if (o.r != 0) o.config.r = o.r;
  if (!o.t_basis.empty()) {
    o.config.t_basis_exponents = ParseList(o.t_basis, "--t-basis");
  }
  o.config.format = *fwl::ParseFormat(o.format);
}

void Emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw fwl::Error(Errc::kIo, "cannot write " + o.out);
  file << text;
}

void PrintWarnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

fwl::Field MakeField(const fwl::RunConfig& config) {
  std::optional<fwl::PolyRegistry> loaded;
  if (!config.registry_path.empty()) {
    loaded = fwl::PolyRegistry::Load(config.registry_path);
  }
  fwl::FieldOptions options;
  options.allow_small_t = config.allow_small_t;
  options.registry = loaded ? &*loaded : nullptr;
  return fwl::Field::Make(config.p, config.t, config.poly, options);
}

int CmdFieldInfo(const Options& o) {
  const fwl::Field field = MakeField(o.config);
  PrintWarnings(field.warnings());
  const fwl::SubsetTables tables = fwl::BuildSubsets(field);
  std::vector<uint64_t> trace_counts(field.p(), 0);
  for (uint32_t i = 0; i < field.q(); ++i) {
    ++trace_counts[field.abs_trace(fwl::Elem{i})];
  }
  uint64_t delta_trace_zero = 0;
  for (fwl::Elem x : tables.delta) delta_trace_zero += field.abs_trace(x) == 0;

  json j = {{"p", field.p()},
            {"t", field.t()},
            {"m", field.m()},
            {"q", field.q()},
            {"poly", field.spec().poly},
            {"poly_text", fwl::PolynomialToString(field.spec().poly)},
            {"alpha_order", field.spec().alpha_order},
            {"delta_size", tables.delta.size()},
            {"gamma_size", tables.gamma.size()},
            {"subfield_star_size", tables.subfield_star.size()},
            {"trace_counts", trace_counts},
            {"delta_trace_zero", delta_trace_zero}};
  std::ostringstream out;
  switch (o.config.format) {
    case fwl::OutputFormat::kJson:
      out << j.dump(2) << "\n";
      break;
    case fwl::OutputFormat::kCsv:
      out << "key,value\n";
      for (const auto& [key, value] : j.items()) {
        if (value.is_primitive()) out << key << "," << value << "\n";
      }
      break;
    case fwl::OutputFormat::kText:
      out << "GF(" << field.p() << "^" << field.m() << "), q = " << field.q()
          << ", t = " << field.t() << "\n"
          << "poly = " << fwl::PolynomialToString(field.spec().poly) << "\n"
          << "alpha order = " << field.spec().alpha_order << "\n"
          << "|Delta| = " << tables.delta.size()
          << ", |Gamma| = " << tables.gamma.size()
          << ", |F_{p^t}^*| = " << tables.subfield_star.size() << "\n"
          << "trace counts:";
      for (uint32_t c = 0; c < field.p(); ++c) {
        out << " Tr=" << c << ":" << trace_counts[c];
      }
      out << "\n#{x in Delta : Tr(x) = 0} = " << delta_trace_zero << "\n";
      break;
  }
  Emit(o, out.str());
  return kExitOk;
}

int CmdVerify(const Options& o) {
  const fwl::VerificationReport report = fwl::RunVerification(o.config);
  PrintWarnings(report.warnings);
  switch (o.config.format) {
    case fwl::OutputFormat::kJson:
      Emit(o, fwl::ToJson(report).dump(2) + "\n");
      break;
    case fwl::OutputFormat::kCsv:
      Emit(o, fwl::DistributionCsv(report.empirical, report.predicted));
      break;
    case fwl::OutputFormat::kText:
      Emit(o, fwl::ReportText(report));
      break;
  }
  return report.AllPassed() ? kExitOk : kExitVerdict;
}

int CmdDist(const Options& o) {
  const fwl::CodeSetup setup = fwl::PrepareCode(o.config);
  PrintWarnings(setup.field.warnings());
  const fwl::WeightTable table = fwl::ObtainWeightTable(setup, o.config);
  const fwl::WeightDistribution dist =
      fwl::ComputeWeightDistribution(setup.field, setup.family, table);
  const fwl::SValue s = fwl::ComputeS(setup.field, setup.tables);
  const fwl::PredictedDistribution predicted = fwl::PredictFor(setup, s.value);
  const fwl::ComparisonVerdict verdict = fwl::Compare(dist, predicted);
  switch (o.config.format) {
    case fwl::OutputFormat::kJson:
      Emit(o, json{{"family", fwl::FamilyName(setup.family.kind())},
                   {"n", dist.n},
                   {"k", dist.k},
                   {"d", dist.min_nonzero()},
                   {"empirical", fwl::DistributionArray(dist)},
                   {"predicted", fwl::DistributionArray(predicted)},
                   {"match", verdict.pass}}
                  .dump(2) +
                  "\n");
      break;
    case fwl::OutputFormat::kCsv:
      Emit(o, fwl::DistributionCsv(dist, predicted));
      break;
    case fwl::OutputFormat::kText:
      Emit(o, "[" + std::to_string(dist.n) + ", " + std::to_string(dist.k) +
                  ", " + std::to_string(dist.min_nonzero()) + "]\n" +
                  fwl::EnumeratorString(dist) + "\n" +
                  (verdict.pass ? "matches closed form\n" : verdict.diff));
      break;
  }
  return verdict.pass ? kExitOk : kExitVerdict;
}

int CmdKsum(const Options& o) {
  std::optional<fwl::Polynomial> poly;
  if (!o.poly.empty()) poly = ParseList(o.poly, "--poly");
  std::optional<fwl::PolyRegistry> loaded;
  if (!o.config.registry_path.empty()) {
    loaded = fwl::PolyRegistry::Load(o.config.registry_path);
  }
  const fwl::Field field = fwl::Field::MakeDegree(
      o.config.p, o.l, poly, loaded ? &*loaded : nullptr);
  std::vector<uint32_t> args;
  if (o.a >= 0) {
    if (static_cast<uint64_t>(o.a) >= field.q()) {
      throw fwl::Error(Errc::kInvalidArgument, "--a is outside the field");
    }
    args.push_back(static_cast<uint32_t>(o.a));
  } else {
    for (uint32_t i = 0; i < field.q(); ++i) args.push_back(i);
  }
  const double bound = 2.0 * std::sqrt(static_cast<double>(field.q()));
  json rows = json::array();
  std::ostringstream text, csv;
  csv << "a,value,abs,bound\n";
  for (uint32_t a : args) {
    const fwl::CycInt k = fwl::Kloosterman(field, fwl::Elem{a});
    const double mag = std::abs(k.to_complex());
    rows.push_back({{"a", a},
                    {"value", k.ToString()},
                    {"coeffs", k.coeffs()},
                    {"abs", mag}});
    text << "K_" << o.l << "(" << a << ") = " << k.ToString();
    if (o.config.verbosity > 0) text << "  |.| = " << mag << " <= " << bound;
    text << "\n";
    csv << a << ",\"" << k.ToString() << "\"," << mag << "," << bound << "\n";
  }
  switch (o.config.format) {
    case fwl::OutputFormat::kJson:
      Emit(o, json{{"p", o.config.p}, {"l", o.l}, {"bound", bound}, {"values", rows}}
                      .dump(2) +
                  "\n");
      break;
    case fwl::OutputFormat::kCsv:
      Emit(o, csv.str());
      break;
    case fwl::OutputFormat::kText:
      Emit(o, text.str());
      break;
  }
  return kExitOk;
}

int CmdSValue(const Options& o) {
  const fwl::Field field = MakeField(o.config);
  PrintWarnings(field.warnings());
  const fwl::SubsetTables tables = fwl::BuildSubsets(field);
  const fwl::SValue s = fwl::ComputeS(field, tables);
  const fwl::BoundItem bound = fwl::SBound(field, s.value);
  switch (o.config.format) {
    case fwl::OutputFormat::kJson:
      Emit(o, json{{"S", s.value},
                   {"direct", s.direct},
                   {"series", s.series},
                   {"bound", bound.bound},
                   {"within_bound", bound.pass}}
                      .dump(2) +
                  "\n");
      break;
    case fwl::OutputFormat::kCsv:
      Emit(o, "S,direct,series,bound\n" + std::to_string(s.value) + "," +
                  std::to_string(s.direct) + "," + std::to_string(s.series) +
                  "," + std::to_string(bound.bound) + "\n");
      break;
    case fwl::OutputFormat::kText:
      Emit(o, "S = " + std::to_string(s.value) + " (direct " +
                  std::to_string(s.direct) + ", series " +
                  std::to_string(s.series) + ")\n");
      break;
  }
  return bound.pass ? kExitOk : kExitVerdict;
}

int CmdMinimality(const Options& o) {
  const fwl::CodeSetup setup = fwl::PrepareCode(o.config);
  PrintWarnings(setup.field.warnings());
  const fwl::WeightTable table = fwl::ObtainWeightTable(setup, o.config);
  const fwl::WeightDistribution dist =
      fwl::ComputeWeightDistribution(setup.field, setup.family, table);
  const bool ratio = fwl::AshikhminBarg(dist);
  std::optional<bool> exhaustive;
  uint64_t codewords = 1;
  for (uint32_t i = 0; i < dist.k; ++i) codewords *= setup.field.p();
  if (codewords <= fwl::kMinimalityGuard) {
    exhaustive = fwl::IsMinimalExhaustive(setup.field, setup.family,
                                          setup.defining_set)
                     .minimal;
  }
  // The ratio criterion is sufficient; the exhaustive scan is decisive.
  const std::optional<bool> minimal =
      exhaustive ? exhaustive : (ratio ? std::optional<bool>(true) : std::nullopt);
  const std::string verdict =
      minimal ? (*minimal ? "minimal" : "not minimal") : "undetermined";
  const std::string ratio_text =
      std::to_string(dist.min_nonzero()) + "/" + std::to_string(dist.max_weight());
  switch (o.config.format) {
    case fwl::OutputFormat::kJson: {
      json j = {{"family", fwl::FamilyName(setup.family.kind())},
                {"verdict", verdict},
                {"w_min", dist.min_nonzero()},
                {"w_max", dist.max_weight()},
                {"ratio", static_cast<double>(dist.min_nonzero()) /
                              static_cast<double>(dist.max_weight())},
                {"ratio_criterion", ratio}};
      j["exhaustive"] = exhaustive ? json(*exhaustive) : json(nullptr);
      Emit(o, j.dump(2) + "\n");
      break;
    }
    case fwl::OutputFormat::kCsv:
      Emit(o, "verdict,w_min,w_max,ratio_criterion,exhaustive\n" + verdict +
                  "," + std::to_string(dist.min_nonzero()) + "," +
                  std::to_string(dist.max_weight()) + "," +
                  (ratio ? "true" : "false") + "," +
                  (exhaustive ? (*exhaustive ? "true" : "false") : "skipped") +
                  "\n");
      break;
    case fwl::OutputFormat::kText: {
      const double r = static_cast<double>(dist.min_nonzero()) /
                       static_cast<double>(dist.max_weight());
      std::ostringstream out;
      out << verdict << ", ratio " << r << " (" << ratio_text << ")"
          << (ratio ? " > " : " <= ") << (setup.field.p() - 1) << "/"
          << setup.field.p() << ", exhaustive scan: "
          << (exhaustive ? (*exhaustive ? "minimal" : "not minimal")
                         : "skipped (too many codewords)")
          << "\n";
      Emit(o, out.str());
      break;
    }
  }
  return minimal.value_or(false) ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defining-set codes from Kloosterman sums: exact weight "
               "distributions and their closed forms"};
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("field-info", "Field and subset summary");
  AddFieldOptions(info, o);
  AddOutputOptions(info, o);

  auto* verify = app.add_subcommand("verify", "Full verification pipeline");
  AddFieldOptions(verify, o);
  AddCodeOptions(verify, o);
  AddOutputOptions(verify, o);

  auto* dist = app.add_subcommand("dist", "Empirical weight distribution");
  AddFieldOptions(dist, o);
  AddCodeOptions(dist, o);
  AddOutputOptions(dist, o);

  auto* ksum = app.add_subcommand("ksum", "Kloosterman sums K_l(a)");
  ksum->add_option("--p", o.config.p, "Prime characteristic")->required();
  ksum->add_option("--l", o.l, "Extension degree")->check(CLI::PositiveNumber);
  ksum->add_option("--a", o.a, "Element index (all elements if omitted)");
  ksum->add_option("--poly", o.poly, "Primitive polynomial of degree l");
  ksum->add_option("--registry", o.config.registry_path, "Polynomial registry");
  AddOutputOptions(ksum, o);

  auto* svalue = app.add_subcommand("s-value", "S by both routes");
  AddFieldOptions(svalue, o);
  AddOutputOptions(svalue, o);

  auto* minimality = app.add_subcommand("minimality", "Minimality verdict");
  AddFieldOptions(minimality, o);
  AddCodeOptions(minimality, o);
  AddOutputOptions(minimality, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    Finalize(o);
    if (*info) return CmdFieldInfo(o);
    if (*verify) return CmdVerify(o);
    if (*dist) return CmdDist(o);
    if (*ksum) return CmdKsum(o);
    if (*svalue) return CmdSValue(o);
    if (*minimality) return CmdMinimality(o);
  } catch (const fwl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerdict;
  }
  return kExitConfig;
}
