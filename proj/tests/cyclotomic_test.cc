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
#include <complex>

#include "doctest.h"
#include "fwl/error.h"
#include "fwl/finite_field.h"

namespace fwl {
namespace {

TEST_CASE("cyclotomic integers reduce to canonical form") {
  const CycInt z1 = CycInt::ZetaPower(3, 1);
  const CycInt z2 = CycInt::ZetaPower(3, 2);
  CHECK(z1 + z2 == CycInt(3, -1));
  CHECK((z1 + z2).is_rational_integer());
  CHECK((z1 + z2).as_integer() == -1);
  CHECK(z1 * z2 == CycInt(3, 1));
  CHECK(CycPow(z1, 3) == CycInt(3, 1));
  CHECK(CycInt::ZetaPower(5, 7) == CycInt::ZetaPower(5, 2));
  CHECK_FALSE(z1.is_rational_integer());
  CHECK_THROWS_AS(z1.as_integer(), Error);
  // z^2 = -1 - z.
  CHECK((CycInt(3, 1) + CycScale(z2, 2)).ToString() == "-1 - 2*z");
  CHECK(CycInt(2, -3).ToString() == "-3");

  // Histogram [h0, h1, h2] maps to h0 + h1 z + h2 z^2.
  CHECK(CycInt::FromHistogram(3, {4, 4, 4}) == CycInt(3, 0));
  CHECK(CycInt::FromHistogram(3, {0, 1, 1}) == CycInt(3, -1));

  const std::complex<double> c = (z1 - z2).to_complex();
  CHECK(c.real() == doctest::Approx(0.0));
  CHECK(c.imag() == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("character values") {
  const Field f = Field::Make(2, 3);
  CHECK(CharValue(f, f.zero()) == CycInt(2, 1));
  CHECK(CharValue(f, f.alpha()) == CycInt(2, 1));  // Tr(a) = 0
  CycInt total(2);
  for (uint32_t i = 0; i < f.q(); ++i) total += CharValue(f, Elem{i});
  CHECK(total == CycInt(2, 0));
}

TEST_CASE("kloosterman sums over small fields") {
  // Frozen from tests/oracles/brute_force.py.
  CHECK(Kloosterman(2, 1, Elem{1}) == CycInt(2, 1));
  CHECK(Kloosterman(2, 3, Elem{1}) == CycInt(2, -5));
  CHECK(Kloosterman(3, 1, Elem{1}) == CycInt(3, -1));
  CHECK(Kloosterman(2, 3, Elem{0}) == CycInt(2, -1));
}

TEST_CASE("lift coefficients") {
  CHECK(LiftCoefficient(3, 0) == 1);
  CHECK(LiftCoefficient(3, 1) == 3);
  CHECK(LiftCoefficient(4, 2) == 2);
  CHECK(LiftCoefficient(5, 2) == 5);
  CHECK(LiftCoefficient(6, 3) == 2);
  CHECK(LiftCoefficient(7, 3) == 7);
}

TEST_CASE("lifted sums match direct sums over F_{p^t}") {
  CHECK(KloostermanLift(2, 3, CycInt(2, 1)) == CycInt(2, -5));
  for (auto [p, t] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {2u, 6u},
                      {3u, 2u}, {3u, 3u}, {3u, 4u}, {5u, 2u}, {5u, 3u}}) {
    for (uint32_t a = 1; a < p; ++a) {
      const CycInt k1 = Kloosterman(p, 1, Elem{a});
      const CycInt kt = Kloosterman(p, t, Elem{a});
      CAPTURE(p);
      CAPTURE(t);
      CAPTURE(a);
      CHECK(KloostermanLift(p, t, k1) == kt);
    }
  }
}

TEST_CASE("kloosterman sums are Frobenius invariant and real") {
  const Field f = Field::MakeDegree(3, 4);
  for (uint32_t i = 1; i < f.q(); ++i) {
    const Elem a{i};
    const CycInt k = Kloosterman(f, a);
    CHECK(Kloosterman(f, f.pow(a, 3)) == k);
    CHECK(k.to_complex().imag() == doctest::Approx(0.0).epsilon(1e-9));
  }
}

// K_t computed inside F_{p^2t} through an embedded copy of F_{p^t} and the
// tower trace agrees with K_t computed in the small field.
TEST_CASE("kloosterman sums through the subfield embedding") {
  for (auto [p, t] : {std::pair{2u, 3u}, {3u, 3u}}) {
    const Field big = Field::Make(p, t);
    const Field small = Field::MakeDegree(p, t);
    const std::vector<Elem> phi = EmbedSubfield(small, big);
    for (uint32_t ai = 1; ai < small.q(); ++ai) {
      std::vector<uint64_t> hist(p, 0);
      for (uint32_t xi = 1; xi < small.q(); ++xi) {
        const Elem x = phi[xi];
        const Elem y = big.add(x, big.mul(phi[ai], big.inv(x)));
        Elem tr = big.zero();
        for (uint32_t k = 0; k < t; ++k) tr = big.add(tr, big.frobenius(y, k));
        REQUIRE(big.in_prime_field(tr));
        ++hist[tr.index];
      }
      CHECK(CycInt::FromHistogram(p, hist) == Kloosterman(small, Elem{ai}));
    }
  }
}

TEST_CASE("character sum over delta equals minus K_t(a^2) on the subfield") {
  for (auto [p, t] : {std::pair{2u, 3u}, {3u, 3u}, {2u, 4u}}) {
    const Field big = Field::Make(p, t);
    const SubsetTables tables = BuildSubsets(big);
    const Field small = Field::MakeDegree(p, t);
    const std::vector<Elem> phi = EmbedSubfield(small, big);
    for (uint32_t ai = 1; ai < small.q(); ++ai) {
      const Elem a2 = small.mul(Elem{ai}, Elem{ai});
      CHECK(CharSumOverDelta(big, tables, phi[ai]) ==
            -Kloosterman(small, a2));
    }
  }
}

TEST_CASE("S from the direct count and from the lifted series") {
  struct Case {
    uint32_t p, t;
    int64_t s;
  };
  // Frozen from tests/oracles/brute_force.py.
  for (const Case& c : {Case{2, 3, 5}, Case{2, 4, 1}, Case{2, 5, -11},
                        Case{3, 3, -16}}) {
    const Field f = Field::Make(c.p, c.t);
    const SValue s = ComputeS(f, BuildSubsets(f));
    CHECK(s.direct == c.s);
    CHECK(s.series == c.s);
    CHECK(s.value == c.s);
  }
}

}  // namespace
}  // namespace fwl
