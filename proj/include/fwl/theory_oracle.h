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

#ifndef FWL_THEORY_ORACLE_H_
#define FWL_THEORY_ORACLE_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fwl/code_lab.h"
#include "fwl/cyclotomic.h"
#include "fwl/finite_field.h"

namespace fwl {

struct PredictedEntry {
  std::string label;  // w0 .. w4
  int64_t weight = 0;
  int64_t frequency = 0;
};

// Closed-form weight distribution of one family at one (p, t).
struct PredictedDistribution {
  FamilyKind family = FamilyKind::kCD;
  uint32_t p = 0;
  uint32_t t = 0;
  uint32_t k = 0;
  int64_t s = 0;
  std::vector<PredictedEntry> entries;

  // Weight -> frequency with equal weights summed and zero frequencies
  // dropped. Two labelled weights can coincide (w2 == w3 when S = p - 1).
  std::map<int64_t, int64_t> Merged() const;
  // Whether the labelled nonzero weights are positive and pairwise distinct.
  bool WeightsDistinctAndPositive() const;
};

PredictedDistribution PredictCD(const Field& field, int64_t s);
PredictedDistribution PredictCD1(const Field& field, uint32_t r);
PredictedDistribution PredictCD2(const Field& field, int64_t s);

enum class PairClass { kANotUnit, kBZero, kVbTraceZero, kVbTraceNonzero };

const char* PairClassName(PairClass c);

// Case split for N(a, b): a outside F_p^*; else b = 0; else on whether
// Tr(v_b^(p^t - 1)) vanishes. Throws kZeroPair for (0, 0).
PairClass ClassifyPair(const Field& field, const SubsetTables& tables, Elem a,
                       Elem b);

// #{(x, y) in D : Tr(ax + by) = 0} for a pair of the given class.
int64_t PredictN(PairClass c, const Field& field, int64_t s);

// First two power moments:
//   sum_j A_j = p^k,  sum_j j A_j = p^(k-1) (p n - n - A1_dual).
bool PlessCheck(const WeightDistribution& dist, uint64_t a1_dual);

struct BoundItem {
  std::string label;
  double value = 0;
  double bound = 0;
  bool pass = false;
};

inline constexpr double kBoundSlack = 1e-9;

// |K_l(a)| <= 2 sqrt(p^l) for every a in F_{p^l}^*, using `small` as the
// field of degree l.
std::vector<BoundItem> KloostermanBounds(const Field& small);
// |S| <= 2 (p - 1) sqrt(p^t).
BoundItem SBound(const Field& field, int64_t s);

// w_min / w_max > (p - 1) / p in exact integer arithmetic.
bool AshikhminBarg(const WeightDistribution& dist);

struct ComparisonRow {
  int64_t weight = 0;
  int64_t empirical = 0;
  int64_t predicted = 0;
  bool match() const { return empirical == predicted; }
};

struct ComparisonVerdict {
  bool pass = false;
  std::vector<ComparisonRow> rows;
  // Unified-style listing of mismatching rows; empty on pass.
  std::string diff;
};

ComparisonVerdict Compare(const WeightDistribution& empirical,
                          const PredictedDistribution& predicted);

}  // namespace fwl

#endif  // FWL_THEORY_ORACLE_H_
