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

#include <unistd.h>

#include <filesystem>
#include <string>

#include "doctest.h"
#include "fwl/error.h"

namespace fwl {
namespace {

RunConfig Config(uint32_t p, uint32_t t, FamilyKind family) {
  RunConfig c;
  c.p = p;
  c.t = t;
  c.family = family;
  if (family == FamilyKind::kCD1) c.r = 5;
  return c;
}

TEST_CASE("config validation") {
  RunConfig c = Config(2, 3, FamilyKind::kCD);
  CHECK_NOTHROW(c.Validate());
  c.r = 3;
  CHECK_THROWS_AS(c.Validate(), Error);  // r only applies to cd1
  RunConfig d = Config(2, 3, FamilyKind::kCD1);
  d.r = 6;  // r must be below m = 6; checked once the field exists
  CHECK_NOTHROW(d.Validate());
  CHECK_THROWS_AS(RunVerification(d), Error);
  d.r = 2;
  d.t_basis_exponents = {1, 2, 3};
  CHECK_THROWS_AS(d.Validate(), Error);
  RunConfig e = Config(2, 3, FamilyKind::kCD);
  e.budget = 0;
  CHECK_THROWS_AS(e.Validate(), Error);
  CHECK(ParseFormat("json") == OutputFormat::kJson);
  CHECK_FALSE(ParseFormat("xml").has_value());
  CHECK(ParseFamily("cd2") == FamilyKind::kCD2);
  CHECK_FALSE(ParseFamily("cd3").has_value());
}

TEST_CASE("verification report at p=2, t=3") {
  const VerificationReport r = RunVerification(Config(2, 3, FamilyKind::kCD));
  CHECK(r.AllPassed());
  CHECK(r.params.n == 2047);
  CHECK(r.params.k == 12);
  CHECK(r.params.d == 448);
  CHECK(r.s_value.direct == 5);
  CHECK(r.s_value.series == 5);
  CHECK(EnumeratorString(r.empirical) ==
        "1 + x^448 + 49x^960 + 4031x^1024 + 14x^1216");
  for (const char* name : {"compare", "pless", "s_bound", "dual_distance",
                           "transform_bin_sums", "naive_cross_check"}) {
    REQUIRE(r.Find(name) != nullptr);
    CHECK(r.Find(name)->passed);
  }
  CHECK(r.Find("no_such_check") == nullptr);
  for (const char* stage : {"build", "transform", "distribution", "checks", "total"}) {
    CHECK(r.timings_ms.count(stage) == 1);
  }
  const std::string text = ReportText(r);
  CHECK(text.find("VERIFIED") != std::string::npos);
  const std::string csv = DistributionCsv(r.empirical, r.predicted);
  CHECK(csv.rfind("weight,frequency,source\n", 0) == 0);
  CHECK(csv.find("448,1,empirical\n") != std::string::npos);
  CHECK(csv.find("448,1,predicted\n") != std::string::npos);
}

TEST_CASE("json schema and round trip") {
  const VerificationReport r = RunVerification(Config(2, 3, FamilyKind::kCD2));
  const nlohmann::json j = ToJson(r);
  for (const char* key : {"params", "s_value", "empirical", "predicted",
                          "checks", "timings"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["empirical"]["distribution"] ==
        nlohmann::json::parse("[[0,1],[960,24],[1024,2015],[1216,8]]"));
  CHECK(j["empirical"]["k"] == 11);
  CHECK(ToJson(r, false)["timings"].empty());

  const VerificationReport back = ReportFromJson(nlohmann::json::parse(j.dump()));
  CHECK(SameContent(r, back));
  CHECK(back.timings_ms == r.timings_ms);
  CHECK(ToJson(back).dump() == j.dump());
}

TEST_CASE("identical configs give identical reports") {
  for (FamilyKind family : {FamilyKind::kCD, FamilyKind::kCD1, FamilyKind::kCD2}) {
    const RunConfig c = Config(2, 3, family);
    const VerificationReport a = RunVerification(c);
    RunConfig threaded = c;
    threaded.threads = 1;
    const VerificationReport b = RunVerification(threaded);
    CHECK(SameContent(a, b));
    CHECK(ToJson(a, false).dump() == ToJson(b, false).dump());
  }
}

TEST_CASE("cached tables give the same report") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("fwl_report_test_" + std::to_string(::getpid()));
  RunConfig c = Config(2, 3, FamilyKind::kCD);
  c.cache_dir = dir.string();
  const VerificationReport cold = RunVerification(c);
  CHECK(std::filesystem::exists(dir));
  const VerificationReport warm = RunVerification(c);
  CHECK(SameContent(cold, warm));
  c.family = FamilyKind::kCD2;
  CHECK(RunVerification(c).AllPassed());
  std::filesystem::remove_all(dir);
}

TEST_CASE("small t runs carry the warning") {
  RunConfig c = Config(2, 2, FamilyKind::kCD);
  CHECK_THROWS_AS(RunVerification(c), Error);
  c.allow_small_t = true;
  const VerificationReport r = RunVerification(c);
  REQUIRE_FALSE(r.warnings.empty());
  CHECK(r.warnings[0].find("t>2") != std::string::npos);
}

TEST_CASE("budget errors propagate") {
  RunConfig c = Config(3, 3, FamilyKind::kCD);
  c.budget = 1000;
  try {
    RunVerification(c);
    FAIL("expected DimensionTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kDimensionTooLarge);
  }
}

}  // namespace
}  // namespace fwl
