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

#include "fwl/cyclotomic.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fwl/error.h"

namespace fwl {
namespace {

int64_t Add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(Errc::kOverflow, "cyclotomic integer addition overflow");
  }
  return r;
}

int64_t Mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(Errc::kOverflow, "cyclotomic integer multiplication overflow");
  }
  return r;
}

void RequireSameP(const CycInt& a, const CycInt& b) {
  if (a.p() != b.p()) {
    throw Error(Errc::kInvalidArgument, "mixing different cyclotomic rings");
  }
}

int64_t Binomial(int64_t n, int64_t k) {
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) r = Mul(r, n - k + i) / i;
  return r;
}

}  // namespace

CycInt::CycInt(uint32_t p, int64_t integer) : p_(p), c_(p, 0) {
  if (p < 2) throw Error(Errc::kInvalidArgument, "p must be at least 2");
  c_[0] = integer;
}

CycInt::CycInt(uint32_t p, std::vector<int64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  if (p < 2 || c_.size() != p) {
    throw Error(Errc::kInvalidArgument, "coefficient vector must have length p");
  }
  Canonicalize();
}

CycInt CycInt::ZetaPower(uint32_t p, uint64_t k) {
  std::vector<int64_t> c(p, 0);
  c[k % p] = 1;
  return CycInt(p, std::move(c));
}

CycInt CycInt::FromHistogram(uint32_t p, const std::vector<uint64_t>& hist) {
  std::vector<int64_t> c(p, 0);
  for (uint32_t j = 0; j < p && j < hist.size(); ++j) {
    c[j] = static_cast<int64_t>(hist[j]);
  }
  return CycInt(p, std::move(c));
}

void CycInt::Canonicalize() {
  const int64_t top = c_[p_ - 1];
  if (top == 0) return;
  for (auto& c : c_) c = Add(c, -top);
}

bool CycInt::is_rational_integer() const {
  for (uint32_t j = 1; j < p_; ++j) {
    if (c_[j] != 0) return false;
  }
  return true;
}

int64_t CycInt::as_integer() const {
  if (!is_rational_integer()) {
    throw Error(Errc::kInvalidArgument, ToString() + " is not a rational integer");
  }
  return c_[0];
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> sum = 0;
  for (uint32_t j = 0; j < p_; ++j) {
    sum += static_cast<double>(c_[j]) *
           std::polar(1.0, 2.0 * std::numbers::pi * j / p_);
  }
  return sum;
}

std::string CycInt::ToString() const {
  if (is_rational_integer()) return std::to_string(c_[0]);
  std::ostringstream out;
  bool first = true;
  for (uint32_t j = 0; j < p_; ++j) {
    const int64_t c = c_[j];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const int64_t mag = c < 0 ? -c : c;
    if (j == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << "z";
    if (j > 1) out << "^" << j;
  }
  return out.str();
}

CycInt& CycInt::operator+=(const CycInt& other) {
  RequireSameP(*this, other);
  for (uint32_t j = 0; j < p_; ++j) c_[j] = Add(c_[j], other.c_[j]);
  Canonicalize();
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
  RequireSameP(*this, other);
  for (uint32_t j = 0; j < p_; ++j) c_[j] = Add(c_[j], -other.c_[j]);
  Canonicalize();
  return *this;
}

CycInt CycInt::operator-() const { return CycScale(*this, -1); }

CycInt operator*(const CycInt& a, const CycInt& b) {
  RequireSameP(a, b);
  const uint32_t p = a.p();
  std::vector<int64_t> c(p, 0);
  for (uint32_t i = 0; i < p; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (uint32_t j = 0; j < p; ++j) {
      c[(i + j) % p] = Add(c[(i + j) % p], Mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return CycInt(p, std::move(c));
}

CycInt CycScale(const CycInt& x, int64_t k) {
  std::vector<int64_t> c = x.coeffs();
  for (auto& v : c) v = Mul(v, k);
  return CycInt(x.p(), std::move(c));
}

CycInt CycPow(const CycInt& x, uint64_t e) {
  CycInt result(x.p(), 1);
  CycInt base = x;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

CycInt CharValue(const Field& field, Elem x) {
  return CycInt::ZetaPower(field.p(), field.abs_trace(x));
}

CycInt Kloosterman(const Field& field, Elem a) {
  std::vector<uint64_t> hist(field.p(), 0);
  for (uint32_t idx = 1; idx < field.q(); ++idx) {
    const Elem x{idx};
    ++hist[field.abs_trace(field.add(field.mul(a, x), field.inv(x)))];
  }
  return CycInt::FromHistogram(field.p(), hist);
}

CycInt Kloosterman(uint32_t p, uint32_t l, Elem a) {
  const Field field = Field::MakeDegree(p, l);
  if (a.index >= field.q()) {
    throw Error(Errc::kInvalidArgument, "element index outside the field");
  }
  return Kloosterman(field, a);
}

int64_t LiftCoefficient(uint32_t t, uint32_t i) {
  const int64_t numerator = Mul(t, Binomial(t - i, i));
  if (numerator % (t - i) != 0) {
    throw Error(Errc::kNonIntegerCoefficient,
                "t/(t-i) * C(t-i, i) is not an integer for t = " +
                    std::to_string(t) + ", i = " + std::to_string(i));
  }
  return numerator / (t - i);
}

CycInt KloostermanLift(uint32_t p, uint32_t t, const CycInt& k1) {
  if (t == 0) throw Error(Errc::kInvalidArgument, "t must be positive");
  if (k1.p() != p) throw Error(Errc::kInvalidArgument, "K_1 ring mismatch");
  CycInt sum(p, 0);
  int64_t p_pow = 1;
  for (uint32_t i = 0; i <= t / 2; ++i) {
    const int64_t sign = (t - i) % 2 == 0 ? 1 : -1;
    const int64_t coef = Mul(Mul(sign, LiftCoefficient(t, i)), p_pow);
    sum += CycScale(CycPow(k1, t - 2 * i), coef);
    p_pow = Mul(p_pow, p);
  }
  return -sum;
}

CycInt CharSumOverDelta(const Field& field, const SubsetTables& tables,
                        Elem a) {
  std::vector<uint64_t> hist(field.p(), 0);
  for (Elem x : tables.delta) ++hist[field.abs_trace(field.mul(a, x))];
  return CycInt::FromHistogram(field.p(), hist);
}

SValue ComputeS(const Field& field, const SubsetTables& tables) {
  const uint32_t p = field.p();
  const int64_t delta_size = static_cast<int64_t>(tables.delta.size());
  int64_t trace_zero = 0;
  for (Elem x : tables.delta) trace_zero += field.abs_trace(x) == 0;

  SValue s;
  s.direct = static_cast<int64_t>(p) * trace_zero - delta_size;

  const Field prime = Field::MakeDegree(p, 1);
  CycInt series(p, 0);
  for (uint32_t z = 1; z < p; ++z) {
    const Elem z2 = prime.from_int(int64_t{z} * z);
    series -= KloostermanLift(p, field.t(), Kloosterman(prime, z2));
  }
  if (!series.is_rational_integer()) {
    throw Error(Errc::kInconsistentS,
                "Kloosterman series for S is not rational: " + series.ToString());
  }
  s.series = series.as_integer();
  if (s.direct != s.series) {
    throw Error(Errc::kInconsistentS,
                "direct count gives " + std::to_string(s.direct) +
                    ", Kloosterman series gives " + std::to_string(s.series));
  }
  s.value = s.direct;
  return s;
}

}  // namespace fwl
