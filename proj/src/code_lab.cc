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

#include "fwl/code_lab.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "fwl/error.h"

namespace fwl {
namespace {

uint64_t IntPow(uint64_t base, uint32_t e) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

// Column arithmetic in Z_p^len on base-p indices.
class ColumnSpace {
 public:
  ColumnSpace(uint32_t p, uint32_t len) : p_(p), len_(len) {}

  uint32_t Combine(uint32_t u, uint32_t lu, uint32_t v, uint32_t lv) const {
    if (p_ == 2) return (lu ? u : 0) ^ (lv ? v : 0);
    uint32_t out = 0, scale = 1;
    for (uint32_t i = 0; i < len_; ++i, u /= p_, v /= p_, scale *= p_) {
      out += ((u % p_) * lu + (v % p_) * lv) % p_ * scale;
    }
    return out;
  }

  uint32_t Scale(uint32_t u, uint32_t lambda) const {
    return Combine(u, lambda, 0, 0);
  }

  // Representative of the projective class: lowest nonzero digit is 1.
  uint32_t Normalize(uint32_t u) const {
    if (p_ == 2 || u == 0) return u;
    uint32_t lead = 0;
    for (uint32_t r = u; r != 0; r /= p_) {
      if (r % p_ != 0) {
        lead = r % p_;
        break;
      }
    }
    uint32_t inv = 1;
    while ((inv * lead) % p_ != 1) ++inv;
    return Scale(u, inv);
  }

 private:
  uint32_t p_;
  uint32_t len_;
};

bool HammingBoundForbidsDistance5(uint64_t columns, uint32_t p,
                                  uint32_t redundancy) {
  // A code of length N and redundancy r with distance >= 5 needs
  // 1 + N(p-1) + C(N,2)(p-1)^2 <= p^r.
  const long double n = static_cast<long double>(columns);
  const long double pm1 = p - 1;
  const long double ball = 1 + n * pm1 + n * (n - 1) / 2 * pm1 * pm1;
  return ball > std::pow(static_cast<long double>(p), redundancy);
}

}  // namespace

std::vector<uint32_t> DefiningSet::support() const {
  std::vector<uint32_t> out;
  out.reserve(pairs.size());
  for (const Pair& xy : pairs) out.push_back(xy.x.index + q * xy.y.index);
  return out;
}

DefiningSet BuildDefiningSet(const Field& field) {
  if (field.t() == 0) throw Error(Errc::kInvalidArgument, "need m = 2t");
  const uint32_t p = field.p(), q = field.q();
  const uint64_t e = IntPow(p, field.t()) - 1;
  DefiningSet d;
  d.q = q;
  d.bitmap.assign(uint64_t{q} * q, 0);
  d.pairs.reserve(uint64_t{q} * q / p);
  for (uint32_t yi = 0; yi < q; ++yi) {
    const Elem y{yi};
    const uint32_t ty = y.is_zero() ? 0 : field.abs_trace(field.pow(y, e));
    for (uint32_t xi = 0; xi < q; ++xi) {
      if (xi == 0 && yi == 0) continue;
      if ((field.abs_trace(Elem{xi}) + ty) % p != 0) continue;
      d.pairs.push_back({Elem{xi}, y});
      d.bitmap[xi + uint64_t{q} * yi] = 1;
    }
  }
  return d;
}

const char* FamilyName(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kCD: return "cd";
    case FamilyKind::kCD1: return "cd1";
    case FamilyKind::kCD2: return "cd2";
  }
  return "?";
}

std::optional<FamilyKind> ParseFamily(const std::string& name) {
  if (name == "cd") return FamilyKind::kCD;
  if (name == "cd1") return FamilyKind::kCD1;
  if (name == "cd2") return FamilyKind::kCD2;
  return std::nullopt;
}

CodeFamily CodeFamily::CD1(const Field& field, std::vector<Elem> t_basis) {
  const uint32_t r = static_cast<uint32_t>(t_basis.size());
  if (r < 1 || r + 1 > field.m()) {
    throw Error(Errc::kInvalidArgument,
                "T must have rank r with 1 <= r <= m-1, got " +
                    std::to_string(r));
  }
  CodeFamily fam(FamilyKind::kCD1);
  fam.t_member_.assign(field.q(), 0);
  fam.t_member_[0] = 1;
  uint64_t size = 1;
  std::vector<Elem> span{field.zero()};
  for (Elem g : t_basis) {
    if (g.index >= field.q()) {
      throw Error(Errc::kInvalidArgument, "T basis element outside the field");
    }
    const size_t old = span.size();
    for (uint32_t c = 1; c < field.p(); ++c) {
      const Elem cg = field.mul(field.from_int(c), g);
      for (size_t i = 0; i < old; ++i) {
        const Elem e = field.add(span[i], cg);
        if (fam.t_member_[e.index]) {
          throw Error(Errc::kInvalidArgument, "T basis is linearly dependent");
        }
        fam.t_member_[e.index] = 1;
        span.push_back(e);
      }
    }
    size *= field.p();
  }
  if (span.size() != size) throw Error(Errc::kInternal, "span size mismatch");
  for (uint32_t c = 1; c < field.p(); ++c) {
    if (fam.t_member_[c]) {
      throw Error(Errc::kIntersectionNotTrivial,
                  "T contains the nonzero constant " + std::to_string(c));
    }
  }
  fam.t_basis_ = std::move(t_basis);
  return fam;
}

uint32_t CodeFamily::dimension(const Field& field) const {
  switch (kind_) {
    case FamilyKind::kCD: return 2 * field.m();
    case FamilyKind::kCD1: return field.m() + r();
    case FamilyKind::kCD2: return 2 * field.m() - 1;
  }
  return 0;
}

bool CodeFamily::contains(const Field& field, Elem a, Elem b) const {
  switch (kind_) {
    case FamilyKind::kCD: return true;
    case FamilyKind::kCD1: return t_member_[a.index] != 0;
    case FamilyKind::kCD2: return a.index % field.p() == b.index % field.p();
  }
  return false;
}

std::vector<Pair> CodeFamily::generators(const Field& field) const {
  std::vector<Pair> gens;
  const uint32_t m = field.m();
  switch (kind_) {
    case FamilyKind::kCD:
      for (uint32_t i = 0; i < m; ++i) gens.push_back({field.exp(i), field.zero()});
      for (uint32_t i = 0; i < m; ++i) gens.push_back({field.zero(), field.exp(i)});
      break;
    case FamilyKind::kCD1:
      for (Elem g : t_basis_) gens.push_back({g, field.zero()});
      for (uint32_t i = 0; i < m; ++i) gens.push_back({field.zero(), field.exp(i)});
      break;
    case FamilyKind::kCD2:
      for (uint32_t i = 1; i < m; ++i) gens.push_back({field.exp(i), field.zero()});
      for (uint32_t i = 1; i < m; ++i) gens.push_back({field.zero(), field.exp(i)});
      gens.push_back({field.one(), field.one()});
      break;
  }
  return gens;
}

std::vector<Elem> DefaultT(const Field& field, uint32_t r) {
  if (r < 1 || r + 1 > field.m()) {
    throw Error(Errc::kInvalidArgument, "r must satisfy 1 <= r <= m-1");
  }
  std::vector<Elem> basis;
  for (uint32_t i = 1; i <= r; ++i) basis.push_back(field.exp(i));
  // Validates T n F_p = {0} by enumeration.
  (void)CodeFamily::CD1(field, basis);
  return basis;
}

std::vector<uint32_t> Codeword(const Field& field, Elem a, Elem b,
                               const DefiningSet& d) {
  std::vector<uint32_t> c;
  c.reserve(d.size());
  for (const Pair& xy : d.pairs) {
    c.push_back((field.abs_trace(field.mul(a, xy.x)) +
                 field.abs_trace(field.mul(b, xy.y))) %
                field.p());
  }
  return c;
}

uint64_t NaiveWeight(const Field& field, Elem a, Elem b, const DefiningSet& d) {
  uint64_t w = 0;
  for (const Pair& xy : d.pairs) {
    w += (field.abs_trace(field.mul(a, xy.x)) +
          field.abs_trace(field.mul(b, xy.y))) %
             field.p() !=
         0;
  }
  return w;
}

WeightTable WeightTableFull(const Field& field, const DefiningSet& d,
                            const TransformOptions& options) {
  const std::vector<uint32_t> support = d.support();
  const CountSpectrum spectrum =
      CharCountTransform(field.p(), 2 * field.m(), support, options);
  WeightTable table;
  table.q = field.q();
  table.n = d.size();
  table.bin_sums_conserved = BinSumsConserved(spectrum, d.size());
  table.weights.assign(uint64_t{table.q} * table.q, 0);
  for (uint32_t bi = 0; bi < table.q; ++bi) {
    const uint64_t ub = uint64_t{field.dual_index(Elem{bi})} * table.q;
    for (uint32_t ai = 0; ai < table.q; ++ai) {
      const uint64_t u = field.dual_index(Elem{ai}) + ub;
      table.weights[ai + uint64_t{table.q} * bi] =
          static_cast<uint32_t>(d.size() - spectrum.count(u, 0));
    }
  }
  return table;
}

uint64_t WeightDistribution::total() const {
  uint64_t s = 0;
  for (const auto& [w, f] : entries) s += f;
  return s;
}

uint64_t WeightDistribution::min_nonzero() const {
  for (const auto& [w, f] : entries) {
    if (w != 0 && f != 0) return w;
  }
  return 0;
}

uint64_t WeightDistribution::max_weight() const {
  return entries.empty() ? 0 : entries.rbegin()->first;
}

size_t WeightDistribution::nonzero_weight_count() const {
  return static_cast<size_t>(std::count_if(
      entries.begin(), entries.end(),
      [](const auto& e) { return e.first != 0 && e.second != 0; }));
}

WeightDistribution ComputeWeightDistribution(const Field& field,
                                             const CodeFamily& family,
                                             const WeightTable& table) {
  WeightDistribution dist;
  dist.p = field.p();
  dist.k = family.dimension(field);
  dist.n = table.n;
  for (uint32_t bi = 0; bi < table.q; ++bi) {
    for (uint32_t ai = 0; ai < table.q; ++ai) {
      if (!family.contains(field, Elem{ai}, Elem{bi})) continue;
      ++dist.entries[table.weight(Elem{ai}, Elem{bi})];
    }
  }
  const uint64_t expected = IntPow(field.p(), dist.k);
  if (dist.total() != expected) {
    throw Error(Errc::kDimensionMismatch,
                "family has " + std::to_string(dist.total()) +
                    " codewords, expected p^k = " + std::to_string(expected));
  }
  if (dist.entries[0] != 1) {
    throw Error(Errc::kDimensionMismatch,
                std::to_string(dist.entries[0] - 1) +
                    " nonzero (a, b) give the zero codeword");
  }
  return dist;
}

uint64_t CountZeroCoordinates(const Field& field, const CodeFamily& family,
                              std::span<const Pair> positions) {
  const std::vector<Pair> gens = family.generators(field);
  uint64_t zeros = 0;
  for (const Pair& xy : positions) {
    const bool all_vanish = std::all_of(gens.begin(), gens.end(), [&](Pair g) {
      return (field.abs_trace(field.mul(g.x, xy.x)) +
              field.abs_trace(field.mul(g.y, xy.y))) %
                 field.p() ==
             0;
    });
    zeros += all_vanish;
  }
  return zeros;
}

bool CheckNoZeroCoordinate(const Field& field, const CodeFamily& family,
                           std::span<const Pair> positions) {
  return CountZeroCoordinates(field, family, positions) == 0;
}

DualDistance DualMinDistanceUpTo4(const Field& field, const DefiningSet& d,
                                  uint64_t exhaustive_limit) {
  const uint32_t p = field.p(), q = field.q();
  const ColumnSpace space(p, 2 * field.m());
  const uint64_t universe = uint64_t{q} * q;

  // The column at (x, y) is dual_coords(x) followed by dual_coords(y).
  std::vector<uint32_t> cols;
  cols.reserve(d.size());
  std::vector<uint8_t> present(universe, 0);
  for (const Pair& xy : d.pairs) {
    const uint32_t c = field.dual_index(xy.x) + q * field.dual_index(xy.y);
    cols.push_back(c);
    present[c] = 1;
  }

  for (uint32_t c : cols) {
    for (uint32_t lambda = 2; lambda < p; ++lambda) {
      if (present[space.Scale(c, lambda)]) return {2, "duplicate"};
    }
  }

  for (size_t i = 0; i < cols.size(); ++i) {
    for (size_t j = i + 1; j < cols.size(); ++j) {
      for (uint32_t lambda = 1; lambda < p; ++lambda) {
        const uint32_t w = space.Combine(cols[i], 1, cols[j], lambda);
        for (uint32_t mu = 1; mu < p; ++mu) {
          if (w != 0 && present[space.Scale(w, mu)]) return {3, "triple"};
        }
      }
    }
  }

  if (cols.size() <= exhaustive_limit) {
    // No dependency of size <= 3 exists, so two distinct column pairs with
    // proportional combinations give exactly four dependent columns.
    std::vector<uint8_t> seen(universe, 0);
    for (size_t i = 0; i < cols.size(); ++i) {
      for (size_t j = i + 1; j < cols.size(); ++j) {
        for (uint32_t lambda = 1; lambda < p; ++lambda) {
          const uint32_t w =
              space.Normalize(space.Combine(cols[i], 1, cols[j], lambda));
          if (seen[w]) return {4, "exhaustive"};
          seen[w] = 1;
        }
      }
    }
    throw Error(Errc::kBoundViolated,
                "no four dependent columns: dual distance exceeds 4");
  }
  if (HammingBoundForbidsDistance5(cols.size(), p, 2 * field.m())) {
    return {4, "hamming-bound"};
  }
  throw Error(Errc::kBoundViolated,
              "dual distance 4 neither found nor implied by the Hamming bound");
}

MinimalityResult IsMinimalExhaustive(const Field& field,
                                     const CodeFamily& family,
                                     const DefiningSet& d, uint64_t guard) {
  const uint64_t codewords = IntPow(field.p(), family.dimension(field));
  if (codewords > guard) {
    throw Error(Errc::kTooLarge,
                std::to_string(codewords) +
                    " codewords exceed the exhaustive minimality guard of " +
                    std::to_string(guard));
  }
  const size_t words = (d.size() + 63) / 64;
  struct Support {
    Pair ab;
    uint64_t weight;
    std::vector<uint64_t> bits;
  };
  std::vector<Support> supports;
  for (uint32_t bi = 0; bi < field.q(); ++bi) {
    for (uint32_t ai = 0; ai < field.q(); ++ai) {
      const Elem a{ai}, b{bi};
      if ((ai == 0 && bi == 0) || !family.contains(field, a, b)) continue;
      Support s{{a, b}, 0, std::vector<uint64_t>(words, 0)};
      const std::vector<uint32_t> c = Codeword(field, a, b, d);
      for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) s.bits[i / 64] |= uint64_t{1} << (i % 64);
      }
      for (uint64_t w : s.bits) s.weight += std::popcount(w);
      supports.push_back(std::move(s));
    }
  }
  std::stable_sort(supports.begin(), supports.end(),
                   [](const Support& l, const Support& r) {
                     return l.weight < r.weight;
                   });
  for (size_t small = 0; small < supports.size(); ++small) {
    const Support& covered = supports[small];
    for (size_t big = supports.size(); big-- > small + 1;) {
      const Support& covering = supports[big];
      // A proper subset is strictly lighter.
      if (covering.weight <= covered.weight) break;
      bool subset = true;
      for (size_t w = 0; w < words && subset; ++w) {
        subset = (covered.bits[w] & ~covering.bits[w]) == 0;
      }
      if (subset) return {false, std::make_pair(covering.ab, covered.ab)};
    }
  }
  return {true, std::nullopt};
}

}  // namespace fwl
