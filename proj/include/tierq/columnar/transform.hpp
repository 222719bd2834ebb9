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

#include "tierq/columnar/types.hpp"

namespace tierq::columnar {

// Row slice [start, start + len), copying. Offsets are rebased, validity
// re-packed.
ColumnBatch slice(const ColumnBatch& batch, uint64_t start, uint64_t len);

// Row-wise concatenation. Throws SchemaMismatch.
ColumnBatch concat(std::span<const ColumnBatch> batches);

// Gather the given row indices (may repeat / reorder) into a new batch.
ColumnBatch take(const ColumnBatch& batch, std::span<const uint64_t> row_ids);

// Re-slices a stream of same-schema batches so every output except possibly
// the last lands in [target_bytes / 2, 2 * target_bytes]. The concatenated
// rows are preserved exactly. Throws SchemaMismatch.
std::vector<ColumnBatch> rebatch(std::span<const ColumnBatch> batches, uint64_t target_bytes);

}  // namespace tierq::columnar
