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

#include "tierq/columnar/chunked.hpp"

namespace tierq::columnar {

std::optional<ChunkedBatch> encode_chunked(const ColumnBatch& batch, FixedBufferPool& pool) {
  auto sections = batch_sections(batch);
  uint64_t total = 0;
  for (const auto& s : sections) total += s.bytes.size();

  const uint64_t bufsz = pool.buffer_size();
  uint64_t nbuf = ceil_div(total, bufsz);

  ChunkedBatch cb;
  cb.schema = batch.schema();
  cb.rows = batch.rows();
  cb.total_bytes = total;
  cb.unused_tail_bytes = nbuf * bufsz - total;
  cb.sections.resize(sections.size());

  if (nbuf > 0) {
    auto ids = pool.acquire(nbuf);
    if (!ids) return std::nullopt;  // pool unchanged, nothing leaked
    cb.buffers = std::move(*ids);
  }

  uint64_t cursor = 0;  // global offset across the buffer run
  for (size_t i = 0; i < sections.size(); ++i) {
    auto src = sections[i].bytes;
    cb.sections[i].length = src.size();
    uint64_t copied = 0;
    while (copied < src.size()) {
      uint32_t buf = cb.buffers[cursor / bufsz];
      uint64_t in_buf = cursor % bufsz;
      uint64_t take = std::min<uint64_t>(bufsz - in_buf, src.size() - copied);
      std::memcpy(pool.buffer(buf).data() + in_buf, src.data() + copied, take);
      cb.sections[i].segments.push_back({buf, uint32_t(in_buf), uint32_t(take)});
      copied += take;
      cursor += take;
    }
  }
  return cb;
}

namespace {

std::vector<uint8_t> gather(const SectionLayout& sec, const FixedBufferPool& pool) {
  std::vector<uint8_t> out;
  out.reserve(sec.length);
  for (const auto& seg : sec.segments) {
    auto buf = pool.buffer(seg.buffer_id);
    check(uint64_t(seg.offset) + seg.length <= buf.size(), Errc::CorruptLayout,
          "segment exceeds buffer bounds");
    out.insert(out.end(), buf.begin() + seg.offset, buf.begin() + seg.offset + seg.length);
  }
  check(out.size() == sec.length, Errc::CorruptLayout,
        "segment lengths disagree with section length");
  return out;
}

}  // namespace

ColumnBatch decode_chunked(const ChunkedBatch& cb, const FixedBufferPool& pool) {
  check(cb.sections.size() == cb.schema.fields.size() * 3, Errc::CorruptLayout,
        "section count disagrees with schema");
  std::vector<Column> cols;
  cols.reserve(cb.schema.fields.size());
  for (size_t c = 0; c < cb.schema.fields.size(); ++c) {
    const auto& field = cb.schema.fields[c];
    const auto& val_sec = cb.sections[c * 3 + 0];
    const auto& bm_sec = cb.sections[c * 3 + 1];
    const auto& off_sec = cb.sections[c * 3 + 2];

    bool has_validity = bm_sec.length > 0;
    for (int part : {1, 2}) {
      auto expect = section_fixed_length(field.dtype, has_validity, cb.rows, part);
      uint64_t got = (part == 1) ? bm_sec.length : off_sec.length;
      check(expect.has_value() && *expect == got, Errc::CorruptLayout,
            "section length disagrees with schema for field " + field.name);
    }

    Column col;
    col.dtype = field.dtype;
    col.values = gather(val_sec, pool);
    if (field.dtype.kind == TypeKind::Utf8) {
      auto raw = gather(off_sec, pool);
      std::vector<int32_t> off(raw.size() / 4);
      std::memcpy(off.data(), raw.data(), raw.size());
      check(!off.empty() && uint64_t(off.back()) == val_sec.length, Errc::CorruptLayout,
            "utf8 values length disagrees with offsets");
      col.offsets = std::move(off);
    } else {
      auto expect = section_fixed_length(field.dtype, has_validity, cb.rows, 0);
      check(expect.has_value() && *expect == val_sec.length, Errc::CorruptLayout,
            "values length disagrees with schema for field " + field.name);
    }
    if (has_validity) col.validity = gather(bm_sec, pool);
    cols.push_back(std::move(col));
  }
  try {
    return ColumnBatch(cb.schema, cb.rows, std::move(cols));
  } catch (const Error& e) {
    throw_error(Errc::CorruptLayout, e.what());
  }
}

void release_chunked(ChunkedBatch& cb, FixedBufferPool& pool) {
  if (!cb.buffers.empty()) pool.release(cb.buffers);
  cb.buffers.clear();
  cb.sections.clear();
}

}  // namespace tierq::columnar
