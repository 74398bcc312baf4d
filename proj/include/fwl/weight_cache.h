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

#ifndef FWL_WEIGHT_CACHE_H_
#define FWL_WEIGHT_CACHE_H_

#include <cstdint>
#include <optional>
#include <string>

#include "fwl/code_lab.h"
#include "fwl/finite_field.h"

namespace fwl {

// Binary weight-table file, all integers little-endian:
//   8 bytes   magic "FWLWTAB1"
//   u32       p
//   u32       t
//   u32 x 2t+1  polynomial coefficients c_0 .. c_2t
//   u32 x p^(4t)  weights in canonical (a.index + q * b.index) order
inline constexpr char kWeightCacheMagic[8] = {'F', 'W', 'L', 'W',
                                              'T', 'A', 'B', '1'};

// FNV-1a over the coefficient list.
uint64_t PolyHash(const Polynomial& poly);

// <dir>/weights_p<p>_t<t>_<hash>.bin
std::string WeightCachePath(const std::string& dir, const FieldSpec& spec);

// Writes to a temporary sibling and renames it into place.
void WriteWeightTable(const std::string& path, const FieldSpec& spec,
                      const WeightTable& table);

// nullopt if the file is absent or was written for a different field.
// Throws kIo on a truncated or corrupt file.
std::optional<WeightTable> ReadWeightTable(const std::string& path,
                                           const FieldSpec& spec, uint64_t n);

}  // namespace fwl

#endif  // FWL_WEIGHT_CACHE_H_
