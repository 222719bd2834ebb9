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

#include "tierq/columnar/transform.hpp"

#include <algorithm>

namespace tierq::columnar {

ColumnBatch slice(const ColumnBatch& batch, uint64_t start, uint64_t len) {
  check(start + len <= batch.rows(), Errc::Internal, "slice out of range");
  std::vector<Column> cols;
  cols.reserve(batch.columns().size());
  for (const auto& src : batch.columns()) {
    Column col;
    col.dtype = src.dtype;
    if (src.dtype.is_fixed_width()) {
      size_t w = src.dtype.width();
      col.values.assign(src.values.begin() + start * w, src.values.begin() + (start + len) * w);
    } else {
      const auto& off = *src.offsets;
      col.offsets.emplace();
      col.offsets->reserve(len + 1);
      for (uint64_t i = 0; i <= len; ++i)
        col.offsets->push_back(off[start + i] - off[start]);
      col.values.assign(src.values.begin() + off[start], src.values.begin() + off[start + len]);
    }
    if (src.validity && len > 0) {
      std::vector<uint8_t> bm(bitmap_bytes(len), 0);
      for (uint64_t i = 0; i < len; ++i) bit_set(bm, i, bit_get(*src.validity, start + i));
      col.validity = std::move(bm);
    }
    cols.push_back(std::move(col));
  }
  return ColumnBatch(batch.schema(), len, std::move(cols));
}

ColumnBatch concat(std::span<const ColumnBatch> batches) {
  check(!batches.empty(), Errc::Internal, "concat of nothing");
  const Schema& schema = batches[0].schema();
  uint64_t rows = 0;
  for (const auto& b : batches) {
    check(b.schema() == schema, Errc::SchemaMismatch, "concat over differing schemas");
    rows += b.rows();
  }

  std::vector<Column> cols;
  cols.reserve(schema.fields.size());
  for (size_t c = 0; c < schema.fields.size(); ++c) {
    Column col;
    col.dtype = schema.fields[c].dtype;
    bool has_validity = false;
    for (const auto& b : batches)
      if (b.column(c).validity) has_validity = true;

    if (col.dtype.kind == TypeKind::Utf8) col.offsets.emplace(1, 0);
    if (has_validity && rows > 0) col.validity.emplace(bitmap_bytes(rows), 0);

    uint64_t row_cursor = 0;
    for (const auto& b : batches) {
      const Column& src = b.column(c);
      if (col.dtype.kind == TypeKind::Utf8) {
        int32_t base = col.offsets->back();
        const auto& off = *src.offsets;
        for (uint64_t i = 1; i <= b.rows(); ++i) col.offsets->push_back(base + off[i]);
      }
      put_bytes(col.values, src.values.data(), src.values.size());
      if (col.validity) {
        for (uint64_t i = 0; i < b.rows(); ++i)
          bit_set(*col.validity, row_cursor + i, src.valid_at(i));
      }
      row_cursor += b.rows();
    }
    cols.push_back(std::move(col));
  }
  return ColumnBatch(schema, rows, std::move(cols));
}

ColumnBatch take(const ColumnBatch& batch, std::span<const uint64_t> row_ids) {
  std::vector<Column> cols;
  cols.reserve(batch.columns().size());
  uint64_t n = row_ids.size();
  for (const auto& src : batch.columns()) {
    Column col;
    col.dtype = src.dtype;
    if (src.dtype.is_fixed_width()) {
      size_t w = src.dtype.width();
      col.values.resize(n * w);
      for (uint64_t i = 0; i < n; ++i)
        std::memcpy(col.values.data() + i * w, src.values.data() + row_ids[i] * w, w);
    } else {
      col.offsets.emplace();
      col.offsets->reserve(n + 1);
      col.offsets->push_back(0);
      for (uint64_t i = 0; i < n; ++i) {
        auto sv = src.utf8_at(row_ids[i]);
        put_bytes(col.values, sv.data(), sv.size());
        col.offsets->push_back(int32_t(col.values.size()));
      }
    }
    if (src.validity && n > 0) {
      std::vector<uint8_t> bm(bitmap_bytes(n), 0);
      for (uint64_t i = 0; i < n; ++i) bit_set(bm, i, src.valid_at(row_ids[i]));
      col.validity = std::move(bm);
    }
    cols.push_back(std::move(col));
  }
  return ColumnBatch(batch.schema(), n, std::move(cols));
}

std::vector<ColumnBatch> rebatch(std::span<const ColumnBatch> batches, uint64_t target_bytes) {
  check(target_bytes > 0, Errc::Internal, "rebatch target must be positive");
  if (batches.empty()) return {};
  ColumnBatch all = batches.size() == 1 ? batches[0] : concat(batches);
  uint64_t rows = all.rows();
  uint64_t total = batch_size_bytes(all);
  if (rows == 0 || total <= target_bytes * 2) return {std::move(all)};

  // Cut greedily at the first row where the accumulated size reaches the
  // target; per-row cost is estimated from fixed widths plus utf8 payload.
  std::vector<ColumnBatch> out;
  uint64_t fixed_per_row = 0;
  for (const auto& f : all.schema().fields) {
    fixed_per_row += f.dtype.width();
    fixed_per_row += 1;  // validity + offsets amortization, coarse
  }
  uint64_t start = 0;
  uint64_t acc = 0;
  for (uint64_t r = 0; r < rows; ++r) {
    uint64_t row_bytes = fixed_per_row;
    for (const auto& col : all.columns())
      if (col.dtype.kind == TypeKind::Utf8)
        row_bytes += uint64_t((*col.offsets)[r + 1] - (*col.offsets)[r]);
    acc += row_bytes;
    if (acc >= target_bytes && r + 1 < rows) {
      out.push_back(slice(all, start, r + 1 - start));
      start = r + 1;
      acc = 0;
    }
  }
  if (start < rows) out.push_back(slice(all, start, rows - start));
  return out;
}

}  // namespace tierq::columnar
