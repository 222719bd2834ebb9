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

#include "tierq/columnar/pool.hpp"
#include "tierq/columnar/types.hpp"

namespace tierq::columnar {

struct Segment {
  uint32_t buffer_id;
  uint32_t offset;
  uint32_t length;
};

struct SectionLayout {
  uint64_t length = 0;
  std::vector<Segment> segments;  // empty when length == 0
};

// A batch laid out across fixed-size pool buffers. Sections follow the
// canonical order (per column: values, validity, offsets) end-to-end, so a
// single section may span multiple buffers and only the final buffer carries
// an unused tail.
struct ChunkedBatch {
  Schema schema;
  uint64_t rows = 0;
  std::vector<SectionLayout> sections;  // 3 per column
  std::vector<uint32_t> buffers;        // in layout order
  uint64_t total_bytes = 0;
  uint64_t unused_tail_bytes = 0;
};

// nullopt signals PoolExhausted; the pool is left unchanged.
std::optional<ChunkedBatch> encode_chunked(const ColumnBatch& batch, FixedBufferPool& pool);

// Reconstructs the batch; buffers stay live until released explicitly.
// Throws CorruptLayout if segment lengths disagree with schema-derived sizes.
ColumnBatch decode_chunked(const ChunkedBatch& cb, const FixedBufferPool& pool);

void release_chunked(ChunkedBatch& cb, FixedBufferPool& pool);

}  // namespace tierq::columnar
