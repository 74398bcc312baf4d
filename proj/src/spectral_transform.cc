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

#include "fwl/spectral_transform.h"

#include <algorithm>
#include <thread>

#include "fwl/error.h"

namespace fwl {
namespace {

// Splits [0, count) into contiguous chunks, one per worker, and joins.
template <typename Fn>
void ParallelFor(uint64_t count, unsigned threads, Fn&& fn) {
  const uint64_t workers = std::max<uint64_t>(
      1, std::min<uint64_t>(threads, count / 4096 + 1));
  if (workers == 1) {
    fn(uint64_t{0}, count);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const uint64_t chunk = (count + workers - 1) / workers;
  for (uint64_t w = 0; w < workers; ++w) {
    const uint64_t lo = w * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
}

}  // namespace

uint64_t SpectrumSize(uint32_t p, uint32_t n, uint64_t budget) {
  if (p < 2) throw Error(Errc::kInvalidArgument, "p must be at least 2");
  uint64_t size = 1;
  for (uint32_t i = 0; i < n; ++i) {
    if (size > budget / p) {
      throw Error(Errc::kDimensionTooLarge,
                  std::to_string(p) + "^" + std::to_string(n) +
                      " entries exceed the budget of " +
                      std::to_string(budget));
    }
    size *= p;
  }
  return size;
}

CountSpectrum CharCountTransform(uint32_t p, uint32_t n,
                                 std::span<const uint32_t> support,
                                 const TransformOptions& options) {
  const uint64_t size = SpectrumSize(p, n, options.budget);
  CountSpectrum spectrum(p, n, size);
  std::vector<uint32_t>& data = spectrum.raw();
  for (uint32_t v : support) {
    if (v >= size) throw Error(Errc::kInvalidArgument, "support point out of range");
    ++data[uint64_t{v} * p];
  }

  const unsigned threads = options.threads != 0
                               ? options.threads
                               : std::max(1u, std::thread::hardware_concurrency());
  const uint64_t blocks = size / p;
  uint64_t stride = 1;
  for (uint32_t round = 0; round < n; ++round, stride *= p) {
    ParallelFor(blocks, threads, [&](uint64_t lo, uint64_t hi) {
      std::vector<uint32_t> in(uint64_t{p} * p);
      for (uint64_t b = lo; b < hi; ++b) {
        const uint64_t base = (b / stride) * stride * p + b % stride;
        for (uint32_t i = 0; i < p; ++i) {
          std::copy_n(data.begin() + (base + i * stride) * p, p,
                      in.begin() + i * p);
        }
        // out[j][c] = sum_i in[i][c - j*i].
        for (uint32_t j = 0; j < p; ++j) {
          uint32_t* out = data.data() + (base + j * stride) * p;
          std::fill_n(out, p, 0u);
          for (uint32_t i = 0; i < p; ++i) {
            const uint32_t shift = (j * i) % p;
            const uint32_t* src = in.data() + i * p;
            for (uint32_t c = 0; c < p; ++c) {
              out[c] += src[(c + p - shift) % p];
            }
          }
        }
      }
    });
  }
  return spectrum;
}

std::vector<uint64_t> NaiveCount(uint32_t p, uint32_t n,
                                 std::span<const uint32_t> support,
                                 uint64_t u) {
  std::vector<uint32_t> ucoords(n);
  for (uint32_t k = 0; k < n; ++k, u /= p) ucoords[k] = u % p;
  std::vector<uint64_t> hist(p, 0);
  for (uint32_t v : support) {
    uint64_t dot = 0;
    for (uint32_t k = 0; k < n; ++k, v /= p) dot += ucoords[k] * (v % p);
    ++hist[dot % p];
  }
  return hist;
}

bool BinSumsConserved(const CountSpectrum& spectrum, uint64_t support_size) {
  for (uint64_t u = 0; u < spectrum.size(); ++u) {
    uint64_t sum = 0;
    for (uint32_t c : spectrum.hist(u)) sum += c;
    if (sum != support_size) return false;
  }
  return true;
}

uint64_t ZeroBinTotal(const CountSpectrum& spectrum) {
  uint64_t total = 0;
  for (uint64_t u = 0; u < spectrum.size(); ++u) total += spectrum.count(u, 0);
  return total;
}

uint64_t ExpectedZeroBinTotal(uint32_t p, uint32_t n, uint64_t support_size,
                              bool contains_zero) {
  uint64_t pn1 = 1;
  for (uint32_t i = 0; i + 1 < n; ++i) pn1 *= p;
  const uint64_t pn = n == 0 ? 1 : pn1 * p;
  if (n == 0) return support_size;
  return support_size * pn1 + (contains_zero ? pn - pn1 : 0);
}

}  // namespace fwl
