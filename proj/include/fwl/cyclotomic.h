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

#ifndef FWL_CYCLOTOMIC_H_
#define FWL_CYCLOTOMIC_H_

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "fwl/finite_field.h"

namespace fwl {

// Element of Z[zeta_p] as sum_j c_j zeta^j, kept in the canonical form
// c_{p-1} == 0 (subtract c_{p-1} everywhere, using 1 + zeta + ... = 0).
// Arithmetic is checked: overflow throws rather than wraps.
class CycInt {
 public:
  explicit CycInt(uint32_t p) : CycInt(p, 0) {}
  CycInt(uint32_t p, int64_t integer);
  // Canonicalizes `coeffs`, which must have length p.
  CycInt(uint32_t p, std::vector<int64_t> coeffs);

  // zeta^k.
  static CycInt ZetaPower(uint32_t p, uint64_t k);
  // sum_j histogram[j] zeta^j for a length-p trace-exponent histogram.
  static CycInt FromHistogram(uint32_t p, const std::vector<uint64_t>& hist);

  uint32_t p() const { return p_; }
  const std::vector<int64_t>& coeffs() const { return c_; }

  bool is_rational_integer() const;
  // Throws kInvalidArgument unless is_rational_integer().
  int64_t as_integer() const;
  // Value under zeta -> exp(2 pi i / p).
  std::complex<double> to_complex() const;
  std::string ToString() const;

  friend bool operator==(const CycInt&, const CycInt&) = default;

  CycInt& operator+=(const CycInt& other);
  CycInt& operator-=(const CycInt& other);
  CycInt operator-() const;
  friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
  friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
  friend CycInt operator*(const CycInt& a, const CycInt& b);

 private:
  void Canonicalize();

  uint32_t p_;
  std::vector<int64_t> c_;
};

CycInt CycScale(const CycInt& x, int64_t k);
CycInt CycPow(const CycInt& x, uint64_t e);

// chi(x) = zeta^Tr(x).
CycInt CharValue(const Field& field, Elem x);

// K_l(a) = sum_{x in F*} chi(a x + 1/x) over the field of degree l, by
// histogram of trace exponents.
CycInt Kloosterman(const Field& field, Elem a);
// Convenience: builds GF(p^l) from the registry/search first.
CycInt Kloosterman(uint32_t p, uint32_t l, Elem a);

// K_t(a) from K_1(a) for a in F_p^*:
//   -sum_{i <= t/2} (-1)^(t-i) * t/(t-i) * C(t-i, i) * p^i * K_1(a)^(t-2i).
CycInt KloostermanLift(uint32_t p, uint32_t t, const CycInt& k1);

// The integer t/(t-i) * C(t-i, i); throws kNonIntegerCoefficient if the
// division is inexact.
int64_t LiftCoefficient(uint32_t t, uint32_t i);

// sum_{x in delta} chi(a x).
CycInt CharSumOverDelta(const Field& field, const SubsetTables& tables, Elem a);

struct SValue {
  int64_t direct = 0;  // p * #{x in delta : Tr(x) = 0} - (p^t + 1)
  int64_t series = 0;  // sum_{z in F_p^*} -K_t(z^2) via KloostermanLift
  int64_t value = 0;
};

// Both routes to S; throws kInconsistentS when they disagree.
SValue ComputeS(const Field& field, const SubsetTables& tables);

}  // namespace fwl

#endif  // FWL_CYCLOTOMIC_H_
