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

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "fwl/error.h"

namespace fwl {

const char* ErrcName(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kNotPrime: return "NotPrime";
    case Errc::kNotPrimitive: return "NotPrimitive";
    case Errc::kSmallT: return "SmallT";
    case Errc::kDivisionByZero: return "DivisionByZero";
    case Errc::kZeroInput: return "ZeroInput";
    case Errc::kInternal: return "InternalError";
    case Errc::kOverflow: return "Overflow";
    case Errc::kNonIntegerCoefficient: return "NonIntegerCoefficient";
    case Errc::kInconsistentS: return "InconsistentS";
    case Errc::kDimensionTooLarge: return "DimensionTooLarge";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kIntersectionNotTrivial: return "IntersectionNotTrivial";
    case Errc::kBoundViolated: return "BoundViolated";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kNonIntegralFrequency: return "NonIntegralFrequency";
    case Errc::kZeroPair: return "ZeroPair";
    case Errc::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

// Field tables are dense in q; keep them well inside memory.
constexpr uint64_t kMaxFieldSize = uint64_t{1} << 24;

uint64_t CheckedPow(uint64_t base, uint32_t e, uint64_t limit) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < e; ++i) {
    if (r > limit / base) {
      throw Error(Errc::kTooLarge, "p^m exceeds the supported field size");
    }
    r *= base;
  }
  return r;
}

// Walks a^0, a^1, ... in F_p[x]/(poly) and reports the order of a when it
// equals p^m - 1, i.e. when poly is primitive. Returns 0 otherwise.
uint64_t FullOrderOrZero(uint32_t p, uint32_t m, const Polynomial& poly,
                         uint64_t q, std::vector<Elem>* powers) {
  std::vector<uint32_t> cur(m, 0);
  cur[0] = 1;
  if (powers != nullptr) powers->assign(q - 1, Elem{});
  for (uint64_t e = 0; e + 1 < q; ++e) {
    uint32_t idx = 0;
    for (uint32_t i = m; i-- > 0;) idx = idx * p + cur[i];
    if (e > 0 && idx == 1) return 0;
    if (idx == 0) return 0;
    if (powers != nullptr) (*powers)[e] = Elem{idx};
    // cur *= a, with a^m = -sum_{i<m} poly[i] a^i.
    const uint32_t top = cur[m - 1];
    for (uint32_t i = m - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0) {
      for (uint32_t i = 0; i < m; ++i) {
        cur[i] = (cur[i] + (p - (top * poly[i]) % p)) % p;
      }
    }
  }
  const bool back_to_one =
      cur[0] == 1 && std::all_of(cur.begin() + 1, cur.end(),
                                 [](uint32_t c) { return c == 0; });
  return back_to_one ? q - 1 : 0;
}

}  // namespace

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string PolynomialToString(const Polynomial& poly) {
  std::ostringstream out;
  bool first = true;
  for (size_t i = poly.size(); i-- > 0;) {
    if (poly[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (poly[i] != 1 || i == 0) out << poly[i];
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
  }
  if (first) out << "0";
  return out.str();
}

PolyRegistry::PolyRegistry(const PolyRegistry& other) {
  std::lock_guard lock(other.mu_);
  entries_ = other.entries_;
}

PolyRegistry& PolyRegistry::operator=(const PolyRegistry& other) {
  if (this == &other) return *this;
  std::scoped_lock lock(mu_, other.mu_);
  entries_ = other.entries_;
  return *this;
}

PolyRegistry PolyRegistry::WithDefaults() {
  PolyRegistry reg;
  reg.Insert(2, 6, {1, 1, 0, 0, 0, 0, 1});
  return reg;
}

PolyRegistry PolyRegistry::Parse(std::istream& in) {
  PolyRegistry reg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream fields(line);
    uint64_t p = 0, m = 0;
    if (!(fields >> p)) continue;
    if (!(fields >> m) || m == 0) {
      throw Error(Errc::kInvalidArgument,
                  "registry line " + std::to_string(lineno) + ": missing m");
    }
    Polynomial poly;
    uint64_t c = 0;
    while (fields >> c) poly.push_back(static_cast<uint32_t>(c));
    if (!fields.eof() || poly.size() != m + 1) {
      throw Error(Errc::kInvalidArgument,
                  "registry line " + std::to_string(lineno) +
                      ": expected m+1 coefficients");
    }
    reg.Insert(static_cast<uint32_t>(p), static_cast<uint32_t>(m),
               std::move(poly));
  }
  return reg;
}

PolyRegistry PolyRegistry::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot open registry " + path);
  return Parse(in);
}

std::optional<Polynomial> PolyRegistry::Find(uint32_t p, uint32_t m) const {
  std::lock_guard lock(mu_);
  auto it = entries_.find({p, m});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void PolyRegistry::Insert(uint32_t p, uint32_t m, Polynomial poly) {
  std::lock_guard lock(mu_);
  entries_[{p, m}] = std::move(poly);
}

std::string PolyRegistry::Serialize() const {
  std::lock_guard lock(mu_);
  std::ostringstream out;
  for (const auto& [key, poly] : entries_) {
    out << key.first << ' ' << key.second;
    for (uint32_t c : poly) out << ' ' << c;
    out << '\n';
  }
  return out.str();
}

PolyRegistry& DefaultRegistry() {
  static PolyRegistry reg = PolyRegistry::WithDefaults();
  return reg;
}

Field Field::Make(uint32_t p, uint32_t t, std::optional<Polynomial> poly,
                  const FieldOptions& options) {
  if (!IsPrime(p)) {
    throw Error(Errc::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (t == 0) throw Error(Errc::kInvalidArgument, "t must be positive");
  if (t < 3 && !options.allow_small_t) {
    throw Error(Errc::kSmallT,
                "t = " + std::to_string(t) +
                    " is below 3; the constructions assume t > 2 "
                    "(pass allow_small_t to override)");
  }
  Field f = MakeDegree(p, 2 * t, std::move(poly), options.registry);
  if (t < 3) {
    f.warnings_.push_back("closed forms assume t>2; results for t = " +
                          std::to_string(t) + " are experimental");
  }
  return f;
}

Field Field::MakeDegree(uint32_t p, uint32_t m, std::optional<Polynomial> poly,
                        PolyRegistry* registry) {
  if (!IsPrime(p)) {
    throw Error(Errc::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (m == 0) throw Error(Errc::kInvalidArgument, "degree must be positive");
  const uint64_t q = CheckedPow(p, m, kMaxFieldSize);
  PolyRegistry& reg = registry != nullptr ? *registry : DefaultRegistry();

  Field f;
  f.spec_.p = p;
  f.spec_.m = m;
  f.spec_.t = m % 2 == 0 ? m / 2 : 0;
  f.spec_.q = q;

  if (!poly) poly = reg.Find(p, m);
  if (poly) {
    if (poly->size() != m + 1 || poly->back() != 1) {
      throw Error(Errc::kInvalidArgument,
                  "polynomial must be monic of degree " + std::to_string(m));
    }
    for (uint32_t c : *poly) {
      if (c >= p) {
        throw Error(Errc::kInvalidArgument,
                    "polynomial coefficient out of range for p = " +
                        std::to_string(p));
      }
    }
    if (FullOrderOrZero(p, m, *poly, q, &f.exp_) == 0) {
      throw Error(Errc::kNotPrimitive, PolynomialToString(*poly) +
                                           " is not primitive over F_" +
                                           std::to_string(p));
    }
    f.spec_.poly = *poly;
  } else {
    // Candidates in increasing base-p order of (c_0, ..., c_{m-1}).
    for (uint64_t rank = 0; rank < q && f.spec_.poly.empty(); ++rank) {
      Polynomial cand(m + 1, 0);
      uint64_t r = rank;
      for (uint32_t i = 0; i < m; ++i, r /= p) cand[i] = r % p;
      cand[m] = 1;
      if (FullOrderOrZero(p, m, cand, q, &f.exp_) != 0) f.spec_.poly = cand;
    }
    if (f.spec_.poly.empty()) {
      throw Error(Errc::kInternal, "no primitive polynomial found");
    }
    reg.Insert(p, m, f.spec_.poly);
  }
  f.spec_.alpha_order = q - 1;
  f.BuildTables();
  return f;
}

void Field::BuildTables() {
  const uint32_t p = spec_.p, m = spec_.m;
  const uint64_t q = spec_.q;
  pow_p_.resize(m + 1);
  pow_p_[0] = 1;
  for (uint32_t i = 1; i <= m; ++i) pow_p_[i] = pow_p_[i - 1] * p;

  log_.assign(q, 0);
  for (uint64_t e = 0; e + 1 < q; ++e) log_[exp_[e].index] = e;

  std::vector<uint32_t> basis_trace(m);
  for (uint32_t i = 0; i < m; ++i) basis_trace[i] = abs_trace_direct(exp(i));
  trace_.assign(q, 0);
  for (uint64_t idx = 0; idx < q; ++idx) {
    uint64_t r = idx, acc = 0;
    for (uint32_t i = 0; i < m; ++i, r /= p) acc += (r % p) * basis_trace[i];
    trace_[idx] = acc % p;
  }

  dual_index_.assign(q, 0);
  for (uint64_t idx = 0; idx < q; ++idx) {
    const Elem a{static_cast<uint32_t>(idx)};
    uint32_t d = 0;
    for (uint32_t i = 0; i < m; ++i) d += abs_trace(mul(a, exp(i))) * pow_p_[i];
    dual_index_[idx] = d;
  }
}

Elem Field::from_int(int64_t c) const {
  const int64_t p = spec_.p;
  return Elem{static_cast<uint32_t>(((c % p) + p) % p)};
}

Elem Field::from_coords(std::span<const uint32_t> coords) const {
  if (coords.size() != spec_.m) {
    throw Error(Errc::kInvalidArgument, "coordinate vector has wrong length");
  }
  uint32_t idx = 0;
  for (size_t i = coords.size(); i-- > 0;) {
    if (coords[i] >= spec_.p) {
      throw Error(Errc::kInvalidArgument, "coordinate out of range");
    }
    idx = idx * spec_.p + coords[i];
  }
  return Elem{idx};
}

std::vector<uint32_t> Field::coords(Elem x) const {
  std::vector<uint32_t> out(spec_.m);
  uint32_t r = x.index;
  for (uint32_t i = 0; i < spec_.m; ++i, r /= spec_.p) out[i] = r % spec_.p;
  return out;
}

Elem Field::add(Elem x, Elem y) const {
  const uint32_t p = spec_.p;
  if (p == 2) return Elem{x.index ^ y.index};
  uint32_t out = 0, a = x.index, b = y.index;
  for (uint32_t i = 0; i < spec_.m; ++i, a /= p, b /= p) {
    out += ((a % p + b % p) % p) * pow_p_[i];
  }
  return Elem{out};
}

Elem Field::neg(Elem x) const {
  const uint32_t p = spec_.p;
  if (p == 2) return x;
  uint32_t out = 0, a = x.index;
  for (uint32_t i = 0; i < spec_.m; ++i, a /= p) {
    out += ((p - a % p) % p) * pow_p_[i];
  }
  return Elem{out};
}

Elem Field::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem Field::mul(Elem x, Elem y) const {
  if (x.is_zero() || y.is_zero()) return zero();
  return exp(uint64_t{log_[x.index]} + log_[y.index]);
}

Elem Field::inv(Elem x) const {
  if (x.is_zero()) throw Error(Errc::kDivisionByZero, "inverse of zero");
  return exp(spec_.q - 1 - log_[x.index]);
}

Elem Field::pow(Elem x, uint64_t e) const {
  if (x.is_zero()) return e == 0 ? one() : zero();
  const uint64_t order = spec_.q - 1;
  const unsigned __int128 le =
      static_cast<unsigned __int128>(log_[x.index]) * (e % order);
  return exp(static_cast<uint64_t>(le % order));
}

uint32_t Field::log(Elem x) const {
  if (x.is_zero()) throw Error(Errc::kZeroInput, "log of zero");
  return log_[x.index];
}

Elem Field::frobenius(Elem x, uint32_t k) const {
  uint64_t e = 1;
  const uint64_t order = spec_.q - 1;
  for (uint32_t i = 0; i < k; ++i) e = (e * spec_.p) % order;
  if (order == 1) e = 1;
  return pow(x, e);
}

uint32_t Field::abs_trace_direct(Elem x) const {
  Elem sum = zero(), y = x;
  for (uint32_t i = 0; i < spec_.m; ++i) {
    sum = add(sum, y);
    y = pow(y, spec_.p);
  }
  if (!in_prime_field(sum)) {
    throw Error(Errc::kInternal, "trace left the prime field");
  }
  return sum.index;
}

Elem Field::rel_trace_t(Elem x) const {
  if (spec_.t == 0) {
    throw Error(Errc::kInvalidArgument, "relative trace needs even degree");
  }
  return add(x, frobenius(x, spec_.t));
}

bool Field::in_half_subfield(Elem x) const {
  if (spec_.t == 0) {
    throw Error(Errc::kInvalidArgument, "half subfield needs even degree");
  }
  return frobenius(x, spec_.t) == x;
}

std::vector<uint32_t> Field::dual_coords(Elem a) const {
  std::vector<uint32_t> out(spec_.m);
  for (uint32_t i = 0; i < spec_.m; ++i) out[i] = abs_trace(mul(a, exp(i)));
  return out;
}

SubsetTables BuildSubsets(const Field& field) {
  if (field.t() == 0) {
    throw Error(Errc::kInvalidArgument, "subset tables need m = 2t");
  }
  uint64_t pt = 1;
  for (uint32_t i = 0; i < field.t(); ++i) pt *= field.p();

  SubsetTables tables;
  const Elem beta = field.exp(pt - 1);
  for (uint64_t j = 0; j <= pt; ++j) {
    tables.delta.push_back(field.pow(beta, j));
    tables.gamma.push_back(field.exp(j));
  }
  for (uint64_t k = 0; k + 1 < pt; ++k) {
    tables.subfield_star.push_back(field.exp((pt + 1) * k));
  }

  std::set<Elem> delta(tables.delta.begin(), tables.delta.end());
  std::set<Elem> image;
  for (Elem v : tables.gamma) image.insert(field.pow(v, pt - 1));
  if (delta.size() != pt + 1 || image != delta) {
    throw Error(Errc::kInternal, "delta is not the (p^t-1)-th power of gamma");
  }
  return tables;
}

std::pair<Elem, Elem> UvDecompose(const Field& field, Elem x) {
  if (x.is_zero()) throw Error(Errc::kZeroInput, "cannot decompose zero");
  uint64_t pt = 1;
  for (uint32_t i = 0; i < field.t(); ++i) pt *= field.p();
  const uint64_t e = field.log(x);
  const uint64_t j = e % (pt + 1);
  return {field.exp(e - j), field.exp(j)};
}

Elem FindV(const Field& field, const SubsetTables& tables, Elem b) {
  if (b.is_zero()) throw Error(Errc::kZeroInput, "find_v of zero");
  std::optional<Elem> found;
  for (Elem v : tables.gamma) {
    if (!field.rel_trace_t(field.mul(b, v)).is_zero()) continue;
    if (found) {
      throw Error(Errc::kInternal, "several v in gamma with Tr_t(bv) = 0");
    }
    found = v;
  }
  if (!found) throw Error(Errc::kInternal, "no v in gamma with Tr_t(bv) = 0");
  return *found;
}

std::vector<Elem> EmbedSubfield(const Field& small, const Field& big) {
  if (small.p() != big.p() || big.m() % small.m() != 0) {
    throw Error(Errc::kInvalidArgument, "no subfield of that order");
  }
  const Polynomial& poly = small.spec().poly;
  std::optional<Elem> root;
  for (uint32_t idx = 0; idx < big.q() && !root; ++idx) {
    const Elem r{idx};
    Elem acc = big.zero();
    for (size_t i = poly.size(); i-- > 0;) {
      acc = big.add(big.mul(acc, r), big.from_int(poly[i]));
    }
    if (acc.is_zero()) root = r;
  }
  if (!root) throw Error(Errc::kInternal, "defining polynomial has no root");

  std::vector<Elem> phi(small.q());
  for (uint64_t k = 0; k + 1 < small.q(); ++k) {
    phi[small.exp(k).index] = big.pow(*root, k);
  }
  return phi;
}

}  // namespace fwl
