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

#include "fwl/weight_cache.h"

#include <array>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>

#include "fwl/error.h"

namespace fwl {
namespace {

void PutU32(std::ostream& out, uint32_t v) {
  const std::array<char, 4> b = {
      static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
      static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b.data(), b.size());
}

bool GetU32(std::istream& in, uint32_t* v) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), b.size())) return false;
  *v = uint32_t{b[0]} | uint32_t{b[1]} << 8 | uint32_t{b[2]} << 16 |
       uint32_t{b[3]} << 24;
  return true;
}

}  // namespace

uint64_t PolyHash(const Polynomial& poly) {
  uint64_t h = 1469598103934665603ull;
  for (uint32_t c : poly) {
    for (int i = 0; i < 4; ++i) {
      h ^= (c >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

std::string WeightCachePath(const std::string& dir, const FieldSpec& spec) {
  std::ostringstream name;
  name << "weights_p" << spec.p << "_t" << spec.t << "_" << std::hex
       << std::setw(16) << std::setfill('0') << PolyHash(spec.poly) << ".bin";
  return (std::filesystem::path(dir) / name.str()).string();
}

void WriteWeightTable(const std::string& path, const FieldSpec& spec,
                      const WeightTable& table) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  std::random_device rd;
  const fs::path tmp =
      target.string() + ".tmp" + std::to_string(rd() & 0xffffff);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::kIo, "cannot write " + tmp.string());
    out.write(kWeightCacheMagic, sizeof(kWeightCacheMagic));
    PutU32(out, spec.p);
    PutU32(out, spec.t);
    for (uint32_t c : spec.poly) PutU32(out, c);
    for (uint32_t w : table.weights) PutU32(out, w);
    if (!out) throw Error(Errc::kIo, "short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::optional<WeightTable> ReadWeightTable(const std::string& path,
                                           const FieldSpec& spec, uint64_t n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[sizeof(kWeightCacheMagic)];
  if (!in.read(magic, sizeof(magic)) ||
      std::memcmp(magic, kWeightCacheMagic, sizeof(magic)) != 0) {
    throw Error(Errc::kIo, path + " is not a weight table");
  }
  uint32_t p = 0, t = 0;
  if (!GetU32(in, &p) || !GetU32(in, &t)) {
    throw Error(Errc::kIo, path + ": truncated header");
  }
  if (p != spec.p || t != spec.t) return std::nullopt;
  for (uint32_t c : spec.poly) {
    uint32_t stored = 0;
    if (!GetU32(in, &stored)) throw Error(Errc::kIo, path + ": truncated header");
    if (stored != c) return std::nullopt;
  }
  WeightTable table;
  table.q = static_cast<uint32_t>(spec.q);
  table.n = n;
  table.weights.resize(spec.q * spec.q);
  for (uint32_t& w : table.weights) {
    if (!GetU32(in, &w)) throw Error(Errc::kIo, path + ": truncated weights");
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error(Errc::kIo, path + ": trailing bytes");
  }
  return table;
}

}  // namespace fwl
