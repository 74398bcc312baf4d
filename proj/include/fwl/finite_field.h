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

#ifndef FWL_FINITE_FIELD_H_
#define FWL_FINITE_FIELD_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fwl {

// An element of GF(p^m) in the polynomial basis {1, a, ..., a^(m-1)}.
// `index` is the coordinate vector read as a base-p number with the
// coefficient of a^0 least significant, so equality of indices is equality
// of elements and iteration by index is the canonical element order.
struct Elem {
  uint32_t index = 0;

  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
  bool is_zero() const { return index == 0; }
};

// Coefficients low-to-high, monic: poly[m] == 1.
using Polynomial = std::vector<uint32_t>;

std::string PolynomialToString(const Polynomial& poly);

bool IsPrime(uint64_t n);

// Plain-text registry of primitive polynomials, one "p m c_0 ... c_m" line
// per entry. '#' starts a comment.
class PolyRegistry {
 public:
  PolyRegistry() = default;
  PolyRegistry(const PolyRegistry& other);
  PolyRegistry& operator=(const PolyRegistry& other);

  // Seeded with x^6 + x + 1 over F_2.
  static PolyRegistry WithDefaults();
  static PolyRegistry Parse(std::istream& in);
  static PolyRegistry Load(const std::string& path);

  std::optional<Polynomial> Find(uint32_t p, uint32_t m) const;
  void Insert(uint32_t p, uint32_t m, Polynomial poly);
  std::string Serialize() const;

 private:
  mutable std::mutex mu_;
  std::map<std::pair<uint32_t, uint32_t>, Polynomial> entries_;
};

// Process-wide registry used when no explicit registry is supplied.
PolyRegistry& DefaultRegistry();

struct FieldSpec {
  uint32_t p = 0;
  uint32_t m = 0;
  // Half degree; 0 when m is odd (only the Kloosterman subfields use odd m).
  uint32_t t = 0;
  uint64_t q = 0;
  Polynomial poly;
  uint64_t alpha_order = 0;
};

struct FieldOptions {
  // The code constructions assume t > 2; smaller t needs an explicit opt-in.
  bool allow_small_t = false;
  PolyRegistry* registry = nullptr;
};

// GF(p^m) defined by a primitive polynomial. Immutable after construction;
// arithmetic runs on log/antilog tables built by repeated multiplication by
// the root a of the polynomial.
class Field {
 public:
  // The main field of the code constructions: m = 2t.
  static Field Make(uint32_t p, uint32_t t,
                    std::optional<Polynomial> poly = std::nullopt,
                    const FieldOptions& options = {});
  // Any degree m >= 1. Used for the standalone fields of Kloosterman sums.
  static Field MakeDegree(uint32_t p, uint32_t m,
                          std::optional<Polynomial> poly = std::nullopt,
                          PolyRegistry* registry = nullptr);

  const FieldSpec& spec() const { return spec_; }
  uint32_t p() const { return spec_.p; }
  uint32_t m() const { return spec_.m; }
  uint32_t t() const { return spec_.t; }
  uint32_t q() const { return static_cast<uint32_t>(spec_.q); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  Elem zero() const { return Elem{0}; }
  Elem one() const { return Elem{1}; }
  Elem alpha() const { return exp_[1]; }
  // Embedding of the residue c mod p into the prime subfield.
  Elem from_int(int64_t c) const;
  bool in_prime_field(Elem x) const { return x.index < spec_.p; }

  Elem from_coords(std::span<const uint32_t> coords) const;
  std::vector<uint32_t> coords(Elem x) const;

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const;
  Elem pow(Elem x, uint64_t e) const;
  // Discrete log base a; x must be nonzero.
  uint32_t log(Elem x) const;
  // a^e.
  Elem exp(uint64_t e) const { return exp_[e % (spec_.q - 1)]; }

  // x^(p^k).
  Elem frobenius(Elem x, uint32_t k) const;

  // Absolute trace Tr_1^m as a residue in [0, p). Table lookup; the table is
  // built from abs_trace_direct on the basis and extended linearly.
  uint32_t abs_trace(Elem x) const { return trace_[x.index]; }
  // sum_{i<m} x^(p^i) evaluated in the field, checked to lie in F_p.
  uint32_t abs_trace_direct(Elem x) const;

  // x + x^(p^t), the trace from F_{p^{2t}} down to F_{p^t}. Requires m even.
  Elem rel_trace_t(Elem x) const;
  bool in_half_subfield(Elem x) const;

  // (Tr(a * a^0), ..., Tr(a * a^(m-1))). dot(dual_coords(a), coords(x)) is
  // Tr(a x) mod p, and the map is a bijection of F_q onto Z_p^m.
  std::vector<uint32_t> dual_coords(Elem a) const;
  // dual_coords(a) as a base-p index.
  uint32_t dual_index(Elem a) const { return dual_index_[a.index]; }

 private:
  Field() = default;
  void BuildTables();

  FieldSpec spec_;
  std::vector<uint32_t> pow_p_;  // p^i for i <= m
  std::vector<Elem> exp_;        // a^e for e in [0, q-1)
  std::vector<uint32_t> log_;    // log_[0] unused
  std::vector<uint32_t> trace_;
  std::vector<uint32_t> dual_index_;
  std::vector<std::string> warnings_;
};

// Structural subsets of F_q^* for q = p^(2t), with a the field generator:
// delta = <a^(p^t - 1)> of order p^t + 1, gamma = {a^j : 0 <= j <= p^t}
// (coset representatives of F_{p^t}^*), subfield_star = <a^(p^t + 1)>.
struct SubsetTables {
  std::vector<Elem> delta;
  std::vector<Elem> gamma;
  std::vector<Elem> subfield_star;
};

SubsetTables BuildSubsets(const Field& field);

// The unique x = u * v with u in F_{p^t}^* and v in gamma.
std::pair<Elem, Elem> UvDecompose(const Field& field, Elem x);

// The unique v in gamma with rel_trace_t(b * v) == 0. Scans all of gamma
// and throws kInternal unless exactly one candidate exists.
Elem FindV(const Field& field, const SubsetTables& tables, Elem b);

// Field isomorphism from `small` onto the subfield of `big` of the same
// order, as a table indexed by small element index. small.m must divide
// big.m.
std::vector<Elem> EmbedSubfield(const Field& small, const Field& big);

}  // namespace fwl

#endif  // FWL_FINITE_FIELD_H_
