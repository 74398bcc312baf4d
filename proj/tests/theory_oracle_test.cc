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

#include "fwl/theory_oracle.h"

#include <map>
#include <random>

#include "doctest.h"
#include "fwl/code_lab.h"
#include "fwl/cyclotomic.h"
#include "fwl/error.h"
#include "fwl/finite_field.h"

namespace fwl {
namespace {

using Merged = std::map<int64_t, int64_t>;

WeightDistribution MakeDist(uint32_t p, uint32_t k, uint64_t n,
                            std::map<uint64_t, uint64_t> entries) {
  WeightDistribution d;
  d.p = p;
  d.k = k;
  d.n = n;
  d.entries = std::move(entries);
  return d;
}

TEST_CASE("predicted distributions at p=2, t=3") {
  const Field f = Field::Make(2, 3);
  const PredictedDistribution cd = PredictCD(f, 5);
  CHECK(cd.k == 12);
  CHECK(cd.Merged() == Merged{{0, 1}, {448, 1}, {960, 49}, {1024, 4031}, {1216, 14}});
  CHECK(cd.WeightsDistinctAndPositive());
  int64_t total = 0;
  for (const auto& e : cd.entries) total += e.frequency;
  CHECK(total == 4096);

  const PredictedDistribution cd1 = PredictCD1(f, 5);
  CHECK(cd1.k == 11);
  CHECK(cd1.Merged() == Merged{{0, 1}, {1024, 2047}});

  const PredictedDistribution cd2 = PredictCD2(f, 5);
  CHECK(cd2.k == 11);
  CHECK(cd2.Merged() == Merged{{0, 1}, {960, 24}, {1024, 2015}, {1216, 8}});
  for (const auto& e : cd2.entries) CHECK(e.label != "w2");
}

TEST_CASE("predicted distributions at larger parameters") {
  // Frozen from tests/oracles/brute_force.py.
  const Field f24 = Field::Make(2, 4);
  CHECK(PredictCD(f24, 1).Merged() ==
        Merged{{0, 1}, {15360, 136}, {16384, 65279}, {17408, 120}});
  CHECK_FALSE(PredictCD(f24, 1).WeightsDistinctAndPositive());
  CHECK(PredictCD2(f24, 1).Merged() ==
        Merged{{0, 1}, {15360, 64}, {16384, 32639}, {17408, 64}});
  const Field f25 = Field::Make(2, 5);
  CHECK(PredictCD(f25, -11).Merged() ==
        Merged{{0, 1}, {250880, 341}, {262144, 1047551}, {267264, 682}, {349184, 1}});
  CHECK(PredictCD2(f25, -11).Merged() ==
        Merged{{0, 1}, {250880, 160}, {262144, 523775}, {267264, 352}});
  const Field f33 = Field::Make(3, 3);
  CHECK(PredictCD(f33, -16).Merged() ==
        Merged{{0, 1}, {112266, 208}, {118098, 529982}, {118827, 1248}, {151632, 2}});
  CHECK(PredictCD2(f33, -16).Merged() ==
        Merged{{0, 1}, {112266, 54}, {118098, 176660}, {118827, 432}});
}

TEST_CASE("inexact four-weight frequencies are rejected") {
  const Field f33 = Field::Make(3, 3);
  try {
    PredictCD(f33, -15);
    FAIL("expected NonIntegralFrequency");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kNonIntegralFrequency);
  }
}

TEST_CASE("four-weight prediction satisfies both Pless moments for the computed S") {
  for (auto [p, t] : {std::pair{2u, 3u}, {2u, 4u}, {2u, 5u}, {3u, 3u}}) {
    const Field f = Field::Make(p, t);
    const int64_t s = ComputeS(f, BuildSubsets(f)).value;
    const PredictedDistribution pd = PredictCD(f, s);
    WeightDistribution d = MakeDist(p, pd.k, BuildDefiningSet(f).size(), {});
    for (const auto& [w, fr] : pd.Merged()) d.entries[w] = fr;
    CHECK(PlessCheck(d, 0));
  }
}

TEST_CASE("pair classification and N(a, b)") {
  const Field f = Field::Make(2, 3);
  const SubsetTables tables = BuildSubsets(f);
  CHECK(ClassifyPair(f, tables, f.alpha(), f.zero()) == PairClass::kANotUnit);
  CHECK(PredictN(PairClass::kANotUnit, f, 5) == 1023);
  CHECK(ClassifyPair(f, tables, f.one(), f.zero()) == PairClass::kBZero);
  CHECK(PredictN(PairClass::kBZero, f, 5) == 1599);
  CHECK_THROWS_AS(ClassifyPair(f, tables, f.zero(), f.zero()), Error);
}

TEST_CASE("N(a, b) matches the empirical table on every pair at p=2, t=3") {
  const Field f = Field::Make(2, 3);
  const SubsetTables tables = BuildSubsets(f);
  const DefiningSet d = BuildDefiningSet(f);
  const WeightTable table = WeightTableFull(f, d);
  std::map<PairClass, int> seen;
  for (uint32_t a = 0; a < f.q(); ++a) {
    for (uint32_t b = 0; b < f.q(); ++b) {
      if (a == 0 && b == 0) continue;
      const PairClass c = ClassifyPair(f, tables, Elem{a}, Elem{b});
      ++seen[c];
      REQUIRE(table.weight(Elem{a}, Elem{b}) ==
              static_cast<int64_t>(d.size()) - PredictN(c, f, 5));
    }
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("N(a, b) on sampled pairs at p=3, t=3") {
  const Field f = Field::Make(3, 3);
  const SubsetTables tables = BuildSubsets(f);
  const DefiningSet d = BuildDefiningSet(f);
  std::mt19937 rng(4);
  for (int i = 0; i < 300; ++i) {
    // Bias towards a in F_p^* so every class is exercised.
    const Elem a = i % 2 ? Elem{1 + rng() % 2} : Elem{rng() % f.q()};
    const Elem b{rng() % f.q()};
    if (a.is_zero() && b.is_zero()) continue;
    const PairClass c = ClassifyPair(f, tables, a, b);
    CHECK(NaiveWeight(f, a, b, d) ==
          static_cast<int64_t>(d.size()) - PredictN(c, f, -16));
  }
}

TEST_CASE("Pless moments") {
  const WeightDistribution ex32 = MakeDist(
      2, 12, 2047, {{0, 1}, {448, 1}, {960, 49}, {1024, 4031}, {1216, 14}});
  CHECK(PlessCheck(ex32, 0));
  CHECK_FALSE(PlessCheck(ex32, 1));
  const WeightDistribution ex36 =
      MakeDist(2, 11, 2047, {{0, 1}, {960, 24}, {1024, 2015}, {1216, 8}});
  CHECK(PlessCheck(ex36, 0));
  // The zero code of length 5: every coordinate is zero, so A_1 of the
  // dual is (p - 1) n and the second moment is 0.
  CHECK(PlessCheck(MakeDist(2, 0, 5, {{0, 1}}), 5));
  CHECK_FALSE(PlessCheck(MakeDist(2, 12, 2047, {{0, 1}, {448, 4095}}), 0));
}

TEST_CASE("magnitude bounds") {
  const Field f = Field::Make(2, 3);
  const BoundItem s = SBound(f, 5);
  CHECK(s.pass);
  CHECK(s.bound == doctest::Approx(5.656854249));
  CHECK_FALSE(SBound(f, 6).pass);
  const Field small = Field::MakeDegree(2, 3);
  const std::vector<BoundItem> items = KloostermanBounds(small);
  CHECK(items.size() == 7);  // a = 0 excluded
  for (const BoundItem& b : items) CHECK(b.pass);
  CHECK(items[0].value == doctest::Approx(5.0));
}

TEST_CASE("minimality ratio") {
  CHECK(AshikhminBarg(
      MakeDist(2, 11, 2047, {{0, 1}, {960, 24}, {1024, 2015}, {1216, 8}})));
  CHECK(AshikhminBarg(MakeDist(2, 11, 2047, {{0, 1}, {1024, 2047}})));
  CHECK_FALSE(AshikhminBarg(MakeDist(2, 2, 6, {{0, 1}, {2, 2}, {5, 1}})));
  // Equality is not enough.
  CHECK_FALSE(AshikhminBarg(MakeDist(2, 2, 6, {{0, 1}, {2, 2}, {4, 1}})));
  CHECK_FALSE(AshikhminBarg(
      MakeDist(2, 12, 2047, {{0, 1}, {448, 1}, {960, 49}, {1024, 4031}, {1216, 14}})));
  CHECK_THROWS_AS(AshikhminBarg(MakeDist(2, 0, 5, {{0, 1}})), Error);
}

TEST_CASE("compare") {
  const Field f = Field::Make(2, 3);
  const WeightDistribution ex32 = MakeDist(
      2, 12, 2047, {{0, 1}, {448, 1}, {960, 49}, {1024, 4031}, {1216, 14}});
  const ComparisonVerdict ok = Compare(ex32, PredictCD(f, 5));
  CHECK(ok.pass);
  CHECK(ok.diff.empty());
  CHECK(ok.rows.size() == 5);

  // S = 6 makes the /p frequencies inexact at p = 2; 7 is the nearest
  // perturbation with integral frequencies.
  CHECK_THROWS_AS(PredictCD(f, 6), Error);
  const ComparisonVerdict bad = Compare(ex32, PredictCD(f, 7));
  CHECK_FALSE(bad.pass);
  CHECK(bad.diff.find("--- predicted") != std::string::npos);
  CHECK(bad.diff.find("+++ empirical") != std::string::npos);
  CHECK(bad.diff.find("@@ weight 448 @@") != std::string::npos);
}

}  // namespace
}  // namespace fwl
