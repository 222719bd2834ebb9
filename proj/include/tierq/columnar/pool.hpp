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

#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "tierq/common.hpp"

namespace tierq::columnar {

// Pool of fixed-size buffers allocated once at construction. Acquisition is
// all-or-nothing: either n free buffers exist or the pool is left untouched.
// There is no fragmentation failure mode by construction.
class FixedBufferPool {
 public:
  FixedBufferPool(size_t buffer_size, size_t capacity);

  FixedBufferPool(const FixedBufferPool&) = delete;
  FixedBufferPool& operator=(const FixedBufferPool&) = delete;

  // nullopt signals PoolExhausted; the caller (Memory Executor) reacts by
  // spilling host-tier batches.
  std::optional<std::vector<uint32_t>> acquire(size_t n);
  void release(std::span<const uint32_t> ids);

  std::span<uint8_t> buffer(uint32_t id);
  std::span<const uint8_t> buffer(uint32_t id) const;

  size_t buffer_size() const { return buffer_size_; }
  size_t capacity() const { return capacity_; }
  size_t free_count() const;
  uint64_t total_bytes() const { return uint64_t(buffer_size_) * capacity_; }

 private:
  size_t buffer_size_;
  size_t capacity_;
  std::vector<uint8_t> arena_;
  mutable std::mutex mu_;
  std::vector<uint32_t> free_list_;
  std::vector<bool> in_use_;
};

}  // namespace tierq::columnar
