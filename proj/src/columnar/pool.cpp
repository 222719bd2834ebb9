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

#include "tierq/columnar/pool.hpp"

#include <numeric>

namespace tierq::columnar {

FixedBufferPool::FixedBufferPool(size_t buffer_size, size_t capacity)
    : buffer_size_(buffer_size),
      capacity_(capacity),
      arena_(buffer_size * capacity),
      free_list_(capacity),
      in_use_(capacity, false) {
  check(buffer_size > 0, Errc::Internal, "buffer_size must be positive");
  // Hand out low ids first.
  std::iota(free_list_.rbegin(), free_list_.rend(), 0u);
}

std::optional<std::vector<uint32_t>> FixedBufferPool::acquire(size_t n) {
  check(n >= 1, Errc::Internal, "acquire of zero buffers");
  std::lock_guard lock(mu_);
  if (free_list_.size() < n) return std::nullopt;
  std::vector<uint32_t> ids;
  ids.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    uint32_t id = free_list_.back();
    free_list_.pop_back();
    in_use_[id] = true;
    ids.push_back(id);
  }
  return ids;
}

void FixedBufferPool::release(std::span<const uint32_t> ids) {
  std::lock_guard lock(mu_);
  for (uint32_t id : ids) {
    check(id < capacity_, Errc::Internal, "release of unknown buffer id");
    check(in_use_[id], Errc::Internal, "double release of buffer");
    in_use_[id] = false;
    free_list_.push_back(id);
  }
}

std::span<uint8_t> FixedBufferPool::buffer(uint32_t id) {
  return std::span<uint8_t>(arena_.data() + size_t(id) * buffer_size_, buffer_size_);
}

std::span<const uint8_t> FixedBufferPool::buffer(uint32_t id) const {
  return std::span<const uint8_t>(arena_.data() + size_t(id) * buffer_size_, buffer_size_);
}

size_t FixedBufferPool::free_count() const {
  std::lock_guard lock(mu_);
  return free_list_.size();
}

}  // namespace tierq::columnar
