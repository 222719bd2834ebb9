// Copyright 2026-present the tierq authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace tierq {

using int128_t = __int128;
using uint128_t = unsigned __int128;

static_assert(std::endian::native == std::endian::little,
              "tierq assumes a little-endian host");

enum class Errc {
  PoolExhausted,
  CorruptLayout,
  MalformedBatch,
  SchemaMismatch,
  NotTcf,
  CorruptFooter,
  UnknownColumn,
  CorruptRowGroup,
  IoError,
  ReservationImpossible,
  ReservationExceeded,
  NoEligibleVictims,
  OutOfMemoryUnsplittable,
  CorruptFrame,
  PeerDisconnected,
  InvalidPlan,
  WorkerFailure,
  Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void throw_error(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

inline void check(bool ok, Errc code, const std::string& msg) {
  if (!ok) throw_error(code, msg);
}

// --- little-endian byte buffer helpers -------------------------------------

inline void put_bytes(std::vector<uint8_t>& out, const void* p, size_t n) {
  const auto* b = static_cast<const uint8_t*>(p);
  out.insert(out.end(), b, b + n);
}

template <typename T>
inline void put_le(std::vector<uint8_t>& out, T v) {
  static_assert(std::is_trivially_copyable_v<T>);
  put_bytes(out, &v, sizeof(T));
}

// Bounds-checked sequential reader over a byte span.
class ByteReader {
 public:
  ByteReader(std::span<const uint8_t> data, Errc on_truncated)
      : data_(data), on_truncated_(on_truncated) {}

  template <typename T>
  T get_le() {
    T v;
    std::memcpy(&v, take(sizeof(T)), sizeof(T));
    return v;
  }

  const uint8_t* take(size_t n) {
    check(pos_ + n <= data_.size(), on_truncated_, "truncated input");
    const uint8_t* p = data_.data() + pos_;
    pos_ += n;
    return p;
  }

  std::string get_string(size_t n) {
    const uint8_t* p = take(n);
    return std::string(reinterpret_cast<const char*>(p), n);
  }

  size_t remaining() const { return data_.size() - pos_; }
  size_t pos() const { return pos_; }
  void expect_end(const std::string& what) {
    check(remaining() == 0, on_truncated_, "trailing bytes after " + what);
  }

 private:
  std::span<const uint8_t> data_;
  Errc on_truncated_;
  size_t pos_ = 0;
};

// --- hashing / deterministic rng --------------------------------------------

// FNV-1a 64-bit; the engine-wide partitioning hash. Seeded so tests can vary it.
inline uint64_t fnv1a64(std::span<const uint8_t> bytes, uint64_t seed = 0xcbf29ce484222325ULL) {
  uint64_t h = seed;
  for (uint8_t b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// SplitMix64: small deterministic generator for data generation and tests.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound)
  uint64_t next_below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  // Uniform in [0, 1)
  double next_unit() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

 private:
  uint64_t state_;
};

// --- misc -------------------------------------------------------------------

constexpr uint64_t kKiB = 1024;
constexpr uint64_t kMiB = 1024 * 1024;

inline uint64_t ceil_div(uint64_t a, uint64_t b) { return b == 0 ? 0 : (a + b - 1) / b; }

}  // namespace tierq
