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

#ifndef FWL_SPECTRAL_TRANSFORM_H_
#define FWL_SPECTRAL_TRANSFORM_H_

#include <cstdint>
#include <span>
#include <vector>

namespace fwl {

inline constexpr uint64_t kDefaultBudget = uint64_t{1} << 26;

// Points of Z_p^n are addressed by index = sum_k coord_k * p^k, coordinate 0
// least significant.
class CountSpectrum {
 public:
  CountSpectrum(uint32_t p, uint32_t n, uint64_t size)
      : p_(p), n_(n), size_(size), data_(size * p, 0) {}

  uint32_t p() const { return p_; }
  uint32_t n() const { return n_; }
  uint64_t size() const { return size_; }

  // Histogram over c of #{v in support : u . v == c mod p}.
  std::span<const uint32_t> hist(uint64_t u) const {
    return {data_.data() + u * p_, p_};
  }
  uint32_t count(uint64_t u, uint32_t c) const { return data_[u * p_ + c]; }

  std::vector<uint32_t>& raw() { return data_; }
  const std::vector<uint32_t>& raw() const { return data_; }

 private:
  uint32_t p_;
  uint32_t n_;
  uint64_t size_;
  std::vector<uint32_t> data_;
};

struct TransformOptions {
  // Maximum number of spectrum entries p^n.
  uint64_t budget = kDefaultBudget;
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

// p^n, or throws kDimensionTooLarge when it exceeds `budget`.
uint64_t SpectrumSize(uint32_t p, uint32_t n, uint64_t budget);

// Radix-p butterfly over trace-exponent histograms. Round k folds coordinate
// k of the index from "point" to "frequency"; after n rounds entry u holds
// the exact dot-product histogram of u against the support. Output does not
// depend on the thread count.
CountSpectrum CharCountTransform(uint32_t p, uint32_t n,
                                 std::span<const uint32_t> support,
                                 const TransformOptions& options = {});

// Direct loop over the support. Independent of the butterfly.
std::vector<uint64_t> NaiveCount(uint32_t p, uint32_t n,
                                 std::span<const uint32_t> support, uint64_t u);

// Every histogram sums to `support_size`.
bool BinSumsConserved(const CountSpectrum& spectrum, uint64_t support_size);

// sum_u spectrum[u][0], which must equal
// |S| p^(n-1) + [0 in S] (p^n - p^(n-1)).
uint64_t ZeroBinTotal(const CountSpectrum& spectrum);
uint64_t ExpectedZeroBinTotal(uint32_t p, uint32_t n, uint64_t support_size,
                              bool contains_zero);

}  // namespace fwl

#endif  // FWL_SPECTRAL_TRANSFORM_H_
