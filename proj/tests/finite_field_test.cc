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

#include "fwl/finite_field.h"

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "fwl/error.h"

namespace fwl {
namespace {

const Polynomial kDefaultPoly = {1, 1, 0, 0, 0, 0, 1};  // x^6 + x + 1

Field Gf64() { return Field::Make(2, 3, kDefaultPoly); }

// Independent order computation by plain polynomial multiplication mod f,
// without tables.
uint64_t OrderOfX(uint32_t p, const Polynomial& f) {
  const size_t m = f.size() - 1;
  std::vector<uint32_t> cur(m, 0);
  cur[0] = 1;
  uint64_t q = 1;
  for (size_t i = 0; i < m; ++i) q *= p;
  for (uint64_t k = 1; k <= q; ++k) {
    std::vector<uint32_t> next(m + 1, 0);
    for (size_t i = 0; i < m; ++i) next[i + 1] = cur[i];
    for (size_t i = 0; i < m; ++i) {
      next[i] = (next[i] + p * p - (next[m] * f[i]) % p) % p;
    }
    next.resize(m);
    cur = next;
    bool one = cur[0] == 1;
    for (size_t i = 1; i < m; ++i) one = one && cur[i] == 0;
    if (one) return k;
  }
  return 0;
}

TEST_CASE("make_field accepts x^6+x+1 over F_2") {
  const Field f = Gf64();
  CHECK(f.q() == 64);
  CHECK(f.m() == 6);
  CHECK(f.t() == 3);
  CHECK(f.spec().alpha_order == 63);
  CHECK(f.warnings().empty());
}

TEST_CASE("make_field rejects x^6 and composite p") {
  CHECK_THROWS_WITH_AS(Field::Make(2, 3, Polynomial{0, 0, 0, 0, 0, 0, 1}),
                       doctest::Contains("NotPrimitive"), Error);
  try {
    Field::Make(4, 3);
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kNotPrime);
  }
  // Irreducible but not primitive: x^6 + x^3 + 1 has root of order 9.
  CHECK_THROWS_AS(Field::Make(2, 3, Polynomial{1, 0, 0, 1, 0, 0, 1}), Error);
}

TEST_CASE("small t needs the override and warns") {
  try {
    Field::Make(2, 2);
    FAIL("expected SmallT");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kSmallT);
  }
  FieldOptions opts;
  opts.allow_small_t = true;
  const Field f = Field::Make(2, 2, std::nullopt, opts);
  REQUIRE(f.warnings().size() == 1);
  CHECK(f.warnings()[0].find("t>2") != std::string::npos);
}

TEST_CASE("polynomial search returns the smallest primitive polynomial") {
  PolyRegistry reg;  // empty: forces a search
  const Field f = Field::MakeDegree(3, 6, std::nullopt, &reg);
  // Frozen from tests/oracles/brute_force.py.
  CHECK(f.spec().poly == Polynomial{2, 1, 0, 0, 0, 0, 1});
  CHECK(OrderOfX(3, f.spec().poly) == 728);
  // Every smaller candidate fails the independent order computation.
  for (uint32_t rank = 0; rank < 2 + 1 * 3; ++rank) {
    Polynomial cand(7, 0);
    uint32_t r = rank;
    for (int i = 0; i < 6; ++i, r /= 3) cand[i] = r % 3;
    cand[6] = 1;
    if (cand == f.spec().poly) break;
    CHECK(OrderOfX(3, cand) != 728);
  }
  // The search result is cached in the registry.
  CHECK(reg.Find(3, 6) == f.spec().poly);

  PolyRegistry empty;
  CHECK(Field::MakeDegree(2, 6, std::nullopt, &empty).spec().poly == kDefaultPoly);
  CHECK(Field::MakeDegree(2, 8, std::nullopt, &empty).spec().poly ==
        Polynomial{1, 0, 1, 1, 1, 0, 0, 0, 1});
}

TEST_CASE("registry text format") {
  std::istringstream in("# comment\n2 6 1 1 0 0 0 0 1\n\n3 1 1 1  # x + 1\n");
  const PolyRegistry reg = PolyRegistry::Parse(in);
  CHECK(reg.Find(2, 6) == kDefaultPoly);
  CHECK(reg.Find(3, 1) == Polynomial{1, 1});
  CHECK_FALSE(reg.Find(5, 2).has_value());
  CHECK(reg.Serialize() == "2 6 1 1 0 0 0 0 1\n3 1 1 1\n");

  std::istringstream bad("2 6 1 1 0\n");
  CHECK_THROWS_AS(PolyRegistry::Parse(bad), Error);
}

TEST_CASE("arithmetic in GF(2^6)") {
  const Field f = Gf64();
  const Elem a = f.alpha();
  CHECK(a.index == 2);
  // a^6 = a + 1.
  CHECK(f.mul(f.pow(a, 5), a) == f.add(a, f.one()));
  CHECK(f.mul(f.pow(a, 5), a).index == 3);
  CHECK(f.pow(a, 63) == f.one());
  for (uint32_t i = 1; i < 64; ++i) {
    CHECK(f.mul(Elem{i}, f.inv(Elem{i})) == f.one());
  }
  CHECK_THROWS_AS(f.inv(f.zero()), Error);
  CHECK(f.pow(f.zero(), 0) == f.one());
  CHECK(f.pow(f.zero(), 5) == f.zero());
}

TEST_CASE("field axioms on random elements") {
  for (auto [p, t] : {std::pair{2u, 3u}, {3u, 3u}, {5u, 1u}}) {
    FieldOptions opts;
    opts.allow_small_t = true;
    const Field f = Field::Make(p, t, std::nullopt, opts);
    std::mt19937 rng(7 * p + t);
    std::uniform_int_distribution<uint32_t> pick(0, f.q() - 1);
    for (int it = 0; it < 500; ++it) {
      const Elem x{pick(rng)}, y{pick(rng)}, z{pick(rng)};
      CHECK(f.add(x, y) == f.add(y, x));
      CHECK(f.mul(x, y) == f.mul(y, x));
      CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
      CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
      CHECK(f.add(x, f.neg(x)) == f.zero());
      CHECK(f.sub(f.add(x, y), y) == x);
      CHECK(f.from_coords(f.coords(x)) == x);
    }
  }
}

TEST_CASE("absolute trace") {
  const Field f = Gf64();
  CHECK(f.abs_trace(f.zero()) == 0);
  CHECK(f.abs_trace(f.one()) == 0);  // 6 mod 2
  // Frozen from tests/oracles/brute_force.py.
  CHECK(f.abs_trace(f.alpha()) == 0);
  for (uint32_t i = 0; i < f.q(); ++i) {
    CHECK(f.abs_trace(Elem{i}) == f.abs_trace_direct(Elem{i}));
  }
}

TEST_CASE("trace is linear, Frobenius invariant and balanced") {
  for (auto [p, t] : {std::pair{2u, 3u}, {3u, 3u}, {2u, 4u}}) {
    const Field f = Field::Make(p, t);
    std::vector<uint64_t> counts(p, 0);
    for (uint32_t i = 0; i < f.q(); ++i) {
      const Elem x{i};
      ++counts[f.abs_trace(x)];
      CHECK(f.abs_trace(f.pow(x, p)) == f.abs_trace(x));
      const Elem y{(i * 37 + 11) % f.q()};
      CHECK(f.abs_trace(f.add(x, y)) == (f.abs_trace(x) + f.abs_trace(y)) % p);
    }
    for (uint64_t c : counts) CHECK(c == f.q() / p);
  }
}

TEST_CASE("relative trace") {
  const Field f = Gf64();
  CHECK(f.rel_trace_t(f.zero()) == f.zero());
  // a + a^8 = a + a^2 + a^3 with a^6 = a + 1.
  CHECK(f.rel_trace_t(f.alpha()).index == 14);
  for (uint32_t i = 0; i < f.q(); ++i) {
    const Elem x{i};
    CHECK(f.in_half_subfield(f.rel_trace_t(x)));
  }
  const Field g = Field::Make(3, 3);
  for (uint32_t i = 0; i < g.q(); ++i) {
    const Elem x{i};
    if (g.in_half_subfield(x)) CHECK(g.rel_trace_t(x) == g.add(x, x));
  }
}

TEST_CASE("trace transitivity through F_{p^t}") {
  const Field f = Gf64();
  for (uint32_t i = 0; i < f.q(); ++i) {
    const Elem z = f.rel_trace_t(Elem{i});
    // Tr_1^t(z) = z + z^p + ... + z^(p^(t-1)) computed inside F_q.
    Elem s = f.zero();
    for (uint32_t k = 0; k < f.t(); ++k) s = f.add(s, f.frobenius(z, k));
    REQUIRE(f.in_prime_field(s));
    CHECK(s.index == f.abs_trace(Elem{i}));
  }
}

TEST_CASE("subset tables") {
  const Field f = Gf64();
  const SubsetTables tables = BuildSubsets(f);
  CHECK(tables.delta.size() == 9);
  CHECK(tables.gamma.size() == 9);
  CHECK(tables.subfield_star.size() == 7);
  CHECK(std::set<Elem>(tables.gamma.begin(), tables.gamma.end()).size() == 9);
  for (Elem x : tables.delta) CHECK(f.pow(x, 9) == f.one());
  for (Elem u : tables.subfield_star) CHECK(f.in_half_subfield(u));

  // Delta n F_{p^t}^* has order dividing gcd(p^t + 1, p^t - 1).
  auto intersection = [](const SubsetTables& s) {
    std::set<Elem> sub(s.subfield_star.begin(), s.subfield_star.end());
    std::set<Elem> out;
    for (Elem x : s.delta) {
      if (sub.count(x)) out.insert(x);
    }
    return out;
  };
  CHECK(intersection(tables) == std::set<Elem>{f.one()});
  const Field g = Field::Make(3, 3);
  CHECK(intersection(BuildSubsets(g)) ==
        std::set<Elem>{g.one(), g.from_int(2)});
}

TEST_CASE("uv decomposition is a bijection") {
  for (auto [p, t] : {std::pair{2u, 3u}, {3u, 3u}}) {
    const Field f = Field::Make(p, t);
    const SubsetTables tables = BuildSubsets(f);
    const std::set<Elem> gamma(tables.gamma.begin(), tables.gamma.end());
    std::set<std::pair<Elem, Elem>> seen;
    for (uint32_t i = 1; i < f.q(); ++i) {
      const auto [u, v] = UvDecompose(f, Elem{i});
      CHECK(f.mul(u, v) == Elem{i});
      CHECK(f.in_half_subfield(u));
      CHECK(gamma.count(v) == 1);
      seen.insert({u, v});
    }
    CHECK(seen.size() == f.q() - 1);
    CHECK(seen.size() == tables.subfield_star.size() * tables.gamma.size());
  }
  const Field f = Gf64();
  CHECK(UvDecompose(f, f.alpha()) == std::pair{f.one(), f.alpha()});
  const Elem sub = BuildSubsets(f).subfield_star[3];
  CHECK(UvDecompose(f, sub) == std::pair{sub, f.one()});
  CHECK_THROWS_AS(UvDecompose(f, f.zero()), Error);
}

TEST_CASE("find_v") {
  const Field f = Gf64();
  const SubsetTables tables = BuildSubsets(f);
  // Brute force over gamma = {1, a, ..., a^8}: index 12 is a^8.
  CHECK(FindV(f, tables, f.alpha()).index == 12);
  for (uint32_t i = 1; i < f.q(); ++i) {
    const Elem b{i};
    const Elem v = FindV(f, tables, b);
    CHECK(f.rel_trace_t(f.mul(b, v)).is_zero());
    if (f.rel_trace_t(b).is_zero()) CHECK(v == f.one());
  }
  const Field g = Field::Make(3, 3);
  const SubsetTables gt = BuildSubsets(g);
  for (uint32_t i = 1; i < g.q(); ++i) CHECK_NOTHROW(FindV(g, gt, Elem{i}));
  CHECK_THROWS_AS(FindV(f, tables, f.zero()), Error);
}

TEST_CASE("dual coordinates pair with the trace form") {
  for (auto [p, t] : {std::pair{2u, 3u}, {3u, 3u}}) {
    const Field f = Field::Make(p, t);
    CHECK(f.dual_index(f.zero()) == 0);
    std::set<uint32_t> images;
    for (uint32_t i = 0; i < f.q(); ++i) images.insert(f.dual_index(Elem{i}));
    CHECK(images.size() == f.q());
    std::mt19937 rng(3);
    for (int it = 0; it < 300; ++it) {
      const Elem a{rng() % f.q()}, x{rng() % f.q()};
      const auto da = f.dual_coords(a);
      const auto cx = f.coords(x);
      uint32_t dot = 0;
      for (uint32_t i = 0; i < f.m(); ++i) dot += da[i] * cx[i];
      CHECK(dot % p == f.abs_trace(f.mul(a, x)));
    }
  }
}

TEST_CASE("subfield embedding is a ring isomorphism") {
  const Field big = Field::Make(3, 3);
  const Field small = Field::MakeDegree(3, 3);
  const std::vector<Elem> phi = EmbedSubfield(small, big);
  std::set<Elem> image(phi.begin(), phi.end());
  CHECK(image.size() == small.q());
  for (uint32_t i = 0; i < small.q(); ++i) {
    CHECK(big.in_half_subfield(phi[i]));
    for (uint32_t j = 0; j < small.q(); j += 5) {
      CHECK(phi[small.mul(Elem{i}, Elem{j}).index] == big.mul(phi[i], phi[j]));
      CHECK(phi[small.add(Elem{i}, Elem{j}).index] == big.add(phi[i], phi[j]));
    }
  }
}

}  // namespace
}  // namespace fwl
