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

#ifndef FWL_CODE_LAB_H_
#define FWL_CODE_LAB_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fwl/finite_field.h"
#include "fwl/spectral_transform.h"

namespace fwl {

struct Pair {
  Elem x;
  Elem y;
  friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

// D = {(x, y) != (0, 0) : Tr(x + y^(p^t - 1)) = 0}, with 0^(p^t - 1) = 0.
// Pairs are ordered by (index of y, index of x). The bitmap is indexed by
// x.index + q * y.index, i.e. the point (coords(x), coords(y)) of Z_p^(2m).
struct DefiningSet {
  std::vector<Pair> pairs;
  std::vector<uint8_t> bitmap;
  uint32_t q = 0;

  size_t size() const { return pairs.size(); }
  bool contains(Pair xy) const {
    return bitmap[xy.x.index + uint64_t{q} * xy.y.index] != 0;
  }
  // Bitmap indices of the pairs, in pair order.
  std::vector<uint32_t> support() const;
};

DefiningSet BuildDefiningSet(const Field& field);

enum class FamilyKind { kCD, kCD1, kCD2 };

const char* FamilyName(FamilyKind kind);
std::optional<FamilyKind> ParseFamily(const std::string& name);

// Which (a, b) index the codewords c(a, b) = (Tr(ax + by))_{(x,y) in D}.
//   CD:  all of F_q x F_q.
//   CD1: a in T (an F_p-span with T n F_p = {0}), b arbitrary.
//   CD2: a and b agree in their a^0 coordinate.
class CodeFamily {
 public:
  static CodeFamily CD() { return CodeFamily(FamilyKind::kCD); }
  static CodeFamily CD2() { return CodeFamily(FamilyKind::kCD2); }
  // Enumerates span(t_basis); throws kInvalidArgument for a dependent basis
  // or r outside [1, m-1], kIntersectionNotTrivial if T meets F_p^*.
  static CodeFamily CD1(const Field& field, std::vector<Elem> t_basis);

  FamilyKind kind() const { return kind_; }
  const std::vector<Elem>& t_basis() const { return t_basis_; }
  uint32_t r() const { return static_cast<uint32_t>(t_basis_.size()); }
  uint32_t dimension(const Field& field) const;

  bool contains(const Field& field, Elem a, Elem b) const;
  // A spanning set of the (a, b) pairs of the family.
  std::vector<Pair> generators(const Field& field) const;

 private:
  explicit CodeFamily(FamilyKind kind) : kind_(kind) {}

  FamilyKind kind_;
  std::vector<Elem> t_basis_;
  std::vector<uint8_t> t_member_;
};

// {a, a^2, ..., a^r}; asserts T n F_p = {0}.
std::vector<Elem> DefaultT(const Field& field, uint32_t r);

std::vector<uint32_t> Codeword(const Field& field, Elem a, Elem b,
                               const DefiningSet& d);
// Hamming weight of c(a, b) by direct count over D.
uint64_t NaiveWeight(const Field& field, Elem a, Elem b, const DefiningSet& d);

// Weights of all p^(2m) codewords c(a, b), indexed by a.index + q * b.index.
struct WeightTable {
  uint32_t q = 0;
  uint64_t n = 0;
  std::vector<uint32_t> weights;
  // Whether every transform histogram summed to |D|; true for loaded caches
  // only if it held when the table was built.
  bool bin_sums_conserved = true;

  uint32_t weight(Elem a, Elem b) const {
    return weights[a.index + uint64_t{q} * b.index];
  }
};

// One pass of the character-count transform over the indicator of D; the
// weight of c(a, b) is |D| minus the zero bin at (dual(a), dual(b)).
WeightTable WeightTableFull(const Field& field, const DefiningSet& d,
                            const TransformOptions& options = {});

struct WeightDistribution {
  uint32_t p = 0;
  uint32_t k = 0;
  uint64_t n = 0;
  std::map<uint64_t, uint64_t> entries;

  uint64_t total() const;
  // Smallest and largest nonzero weights; 0 if there are none.
  uint64_t min_nonzero() const;
  uint64_t max_weight() const;
  size_t nonzero_weight_count() const;
};

// Aggregates the family's rows of the table. Throws kDimensionMismatch if
// the frequencies do not total p^k or a nonzero (a, b) has weight 0.
WeightDistribution ComputeWeightDistribution(const Field& field,
                                             const CodeFamily& family,
                                             const WeightTable& table);

// Positions of D at which every generator of the family vanishes.
uint64_t CountZeroCoordinates(const Field& field, const CodeFamily& family,
                              std::span<const Pair> positions);
bool CheckNoZeroCoordinate(const Field& field, const CodeFamily& family,
                           std::span<const Pair> positions);

struct DualDistance {
  uint32_t value = 0;
  // "duplicate", "triple", "exhaustive", or "hamming-bound".
  std::string method;
};

// Minimum distance of the dual of C_D, capped at 4. Searches for
// proportional columns, then for three dependent columns; if neither exists
// the value 4 is confirmed by a meet-in-the-middle search when there are at
// most `exhaustive_limit` columns and by the Hamming bound otherwise. Throws
// kBoundViolated when neither confirms it.
DualDistance DualMinDistanceUpTo4(const Field& field, const DefiningSet& d,
                                  uint64_t exhaustive_limit = 4096);

struct MinimalityResult {
  bool minimal = true;
  // (covering, covered) codeword indices when not minimal.
  std::optional<std::pair<Pair, Pair>> counterexample;
};

inline constexpr uint64_t kMinimalityGuard = uint64_t{1} << 13;

// Pairwise support containment scan over all nonzero codewords. Throws
// kTooLarge if the family has more than `guard` codewords.
MinimalityResult IsMinimalExhaustive(const Field& field,
                                     const CodeFamily& family,
                                     const DefiningSet& d,
                                     uint64_t guard = kMinimalityGuard);

}  // namespace fwl

#endif  // FWL_CODE_LAB_H_
