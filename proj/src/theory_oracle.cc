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

#include <cmath>
#include <set>
#include <sstream>

#include "fwl/error.h"

namespace fwl {
namespace {

using Wide = __int128;

int64_t Narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(Errc::kOverflow, "closed-form value exceeds 64 bits");
  }
  return static_cast<int64_t>(v);
}

Wide Pow(uint32_t p, int e) {
  if (e < 0) throw Error(Errc::kInternal, "negative exponent");
  Wide r = 1;
  for (int i = 0; i < e; ++i) {
    r *= p;
    if (r > (Wide{1} << 100)) throw Error(Errc::kOverflow, "p^e too large");
  }
  return r;
}

int64_t ExactDiv(Wide num, Wide den, const char* what) {
  if (num % den != 0) {
    throw Error(Errc::kNonIntegralFrequency,
                std::string(what) + " is not an integer");
  }
  return Narrow(num / den);
}

// Weights shared by Tables 1 and 2.
struct Weights {
  Wide w1, w2, w3, w4;
};

Weights TableWeights(uint32_t p, int t, Wide s) {
  const int m = 2 * t;
  const Wide base = (Pow(p, 2 * m - 2) - Pow(p, m - 2)) * (p - 1);
  return {Pow(p, 2 * m - 2) * (p - 1),
          base - Pow(p, m - 2) * (Pow(p, t) - 1) * s,
          base - Pow(p, m - 2) * (Pow(p, t) * (p - 1) - s),
          base + Pow(p, m - 2) * (Pow(p, t) + s)};
}

}  // namespace

std::map<int64_t, int64_t> PredictedDistribution::Merged() const {
  std::map<int64_t, int64_t> out;
  for (const PredictedEntry& e : entries) {
    if (e.frequency != 0) out[e.weight] += e.frequency;
  }
  return out;
}

bool PredictedDistribution::WeightsDistinctAndPositive() const {
  std::set<int64_t> seen;
  for (const PredictedEntry& e : entries) {
    if (e.label == "w0") continue;
    if (e.weight <= 0 || !seen.insert(e.weight).second) return false;
  }
  return true;
}

PredictedDistribution PredictCD(const Field& field, int64_t s) {
  const uint32_t p = field.p();
  const int t = static_cast<int>(field.t());
  const int m = 2 * t;
  const Weights w = TableWeights(p, t, s);
  const Wide pm = Pow(p, m);
  const Wide c = Pow(p, t + 1) - Pow(p, t) - p + 1;

  PredictedDistribution d;
  d.family = FamilyKind::kCD;
  d.p = p;
  d.t = field.t();
  d.k = 2 * field.m();
  d.s = s;
  d.entries = {
      {"w0", 0, 1},
      {"w1", Narrow(w.w1), Narrow(pm * (pm - p + 1) - 1)},
      {"w2", Narrow(w.w2), static_cast<int64_t>(p) - 1},
      {"w3", Narrow(w.w3),
       ExactDiv((p - 1) * (pm - 1) + c * s, p, "A_w3")},
      {"w4", Narrow(w.w4),
       ExactDiv(Wide{p * p - 2 * p + 1} * (pm - 1) - c * s, p, "A_w4")},
  };
  return d;
}

PredictedDistribution PredictCD1(const Field& field, uint32_t r) {
  if (r < 1 || r + 1 > field.m()) {
    throw Error(Errc::kInvalidArgument, "r must satisfy 1 <= r <= m-1");
  }
  const uint32_t p = field.p();
  const int m = static_cast<int>(field.m());
  PredictedDistribution d;
  d.family = FamilyKind::kCD1;
  d.p = p;
  d.t = field.t();
  d.k = field.m() + r;
  d.entries = {
      {"w0", 0, 1},
      {"w1", Narrow(Pow(p, 2 * m - 2) * (p - 1)),
       Narrow(Pow(p, m + static_cast<int>(r)) - 1)},
  };
  return d;
}

PredictedDistribution PredictCD2(const Field& field, int64_t s) {
  const uint32_t p = field.p();
  const int t = static_cast<int>(field.t());
  const int m = 2 * t;
  const Weights w = TableWeights(p, t, s);
  const Wide pt = Pow(p, t);

  PredictedDistribution d;
  d.family = FamilyKind::kCD2;
  d.p = p;
  d.t = field.t();
  d.k = 2 * field.m() - 1;
  d.s = s;
  // p^(t-2) applied as p^t / p^2 so t < 2 is checked rather than truncated.
  d.entries = {
      {"w0", 0, 1},
      {"w1", Narrow(w.w1),
       Narrow(Pow(p, 2 * m - 1) - 1 - Pow(p, m - 1) * (p - 1))},
      {"w3", Narrow(w.w3),
       ExactDiv((p - 1) * (pt + s - p + 1) * pt, Wide{p} * p, "A_w3")},
      {"w4", Narrow(w.w4),
       ExactDiv((p - 1) * (Pow(p, t + 1) - pt + p - 1 - s) * pt, Wide{p} * p,
                "A_w4")},
  };
  return d;
}

const char* PairClassName(PairClass c) {
  switch (c) {
    case PairClass::kANotUnit: return "A_NOT_UNIT";
    case PairClass::kBZero: return "B_ZERO";
    case PairClass::kVbTraceZero: return "VB_TRACE_ZERO";
    case PairClass::kVbTraceNonzero: return "VB_TRACE_NONZERO";
  }
  return "?";
}

PairClass ClassifyPair(const Field& field, const SubsetTables& tables, Elem a,
                       Elem b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(Errc::kZeroPair, "(a, b) = (0, 0) has no class");
  }
  if (a.is_zero() || !field.in_prime_field(a)) return PairClass::kANotUnit;
  if (b.is_zero()) return PairClass::kBZero;
  const Elem v = FindV(field, tables, b);
  uint64_t pt = 1;
  for (uint32_t i = 0; i < field.t(); ++i) pt *= field.p();
  return field.abs_trace(field.pow(v, pt - 1)) == 0
             ? PairClass::kVbTraceZero
             : PairClass::kVbTraceNonzero;
}

int64_t PredictN(PairClass c, const Field& field, int64_t s) {
  const uint32_t p = field.p();
  const int t = static_cast<int>(field.t());
  const int m = 2 * t;
  const Wide base = Pow(p, 2 * m - 2) - 1;
  const Wide pm2 = Pow(p, m - 2);
  switch (c) {
    case PairClass::kANotUnit:
      return Narrow(base);
    case PairClass::kBZero:
      return Narrow(base + pm2 * (p - 1) + pm2 * (Pow(p, t) - 1) * s);
    case PairClass::kVbTraceZero:
      return Narrow(base + (pm2 + Pow(p, m + t - 2)) * (p - 1) - pm2 * s);
    case PairClass::kVbTraceNonzero:
      return Narrow(base + pm2 * (p - 1) - Pow(p, m + t - 2) - pm2 * s);
  }
  throw Error(Errc::kInternal, "unknown pair class");
}

bool PlessCheck(const WeightDistribution& dist, uint64_t a1_dual) {
  Wide count = 0, first = 0;
  for (const auto& [w, f] : dist.entries) {
    count += f;
    first += Wide{w} * f;
  }
  const Wide pk = Pow(dist.p, static_cast<int>(dist.k));
  const Wide n = dist.n;
  // Multiplied through by p so that k = 0 stays integral.
  return count == pk &&
         first * dist.p == pk * (dist.p * n - n - static_cast<Wide>(a1_dual));
}

std::vector<BoundItem> KloostermanBounds(const Field& small) {
  std::vector<BoundItem> items;
  const double bound = 2.0 * std::sqrt(static_cast<double>(small.q()));
  for (uint32_t idx = 1; idx < small.q(); ++idx) {
    const double value = std::abs(Kloosterman(small, Elem{idx}).to_complex());
    items.push_back({"|K_" + std::to_string(small.m()) + "(a=" +
                         std::to_string(idx) + ")|",
                     value, bound, value <= bound + kBoundSlack});
  }
  return items;
}

BoundItem SBound(const Field& field, int64_t s) {
  const double bound = 2.0 * (field.p() - 1) *
                       std::sqrt(std::pow(static_cast<double>(field.p()),
                                          static_cast<double>(field.t())));
  const double value = std::fabs(static_cast<double>(s));
  return {"|S|", value, bound, value <= bound + kBoundSlack};
}

bool AshikhminBarg(const WeightDistribution& dist) {
  const uint64_t wmin = dist.min_nonzero();
  if (wmin == 0) {
    throw Error(Errc::kInvalidArgument, "distribution has no nonzero weight");
  }
  return Wide{wmin} * dist.p > Wide{dist.max_weight()} * (dist.p - 1);
}

ComparisonVerdict Compare(const WeightDistribution& empirical,
                          const PredictedDistribution& predicted) {
  std::map<int64_t, ComparisonRow> rows;
  for (const auto& [w, f] : empirical.entries) {
    if (f == 0) continue;
    auto& row = rows[static_cast<int64_t>(w)];
    row.weight = static_cast<int64_t>(w);
    row.empirical = static_cast<int64_t>(f);
  }
  for (const auto& [w, f] : predicted.Merged()) {
    auto& row = rows[w];
    row.weight = w;
    row.predicted = f;
  }
  ComparisonVerdict verdict;
  verdict.pass = true;
  std::ostringstream diff;
  for (const auto& [w, row] : rows) {
    verdict.rows.push_back(row);
    if (row.match()) continue;
    if (verdict.pass) diff << "--- predicted\n+++ empirical\n";
    verdict.pass = false;
    diff << "@@ weight " << w << " @@\n"
         << "-" << w << " " << row.predicted << "\n"
         << "+" << w << " " << row.empirical << "\n";
  }
  verdict.diff = diff.str();
  return verdict;
}

}  // namespace fwl
