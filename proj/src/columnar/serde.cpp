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

#include "tierq/columnar/serde.hpp"

namespace tierq::columnar {

namespace {
constexpr char kMagic[4] = {'T', 'B', 'A', 'T'};
constexpr uint16_t kVersion = 1;
}  // namespace

void serialize_schema(std::vector<uint8_t>& out, const Schema& schema) {
  put_le<uint32_t>(out, uint32_t(schema.fields.size()));
  for (const auto& f : schema.fields) {
    put_le<uint32_t>(out, uint32_t(f.name.size()));
    put_bytes(out, f.name.data(), f.name.size());
    put_le<uint8_t>(out, uint8_t(f.dtype.kind));
    put_le<uint8_t>(out, f.dtype.precision);
    put_le<uint8_t>(out, f.dtype.scale);
    put_le<uint8_t>(out, f.nullable ? 1 : 0);
  }
}

Schema deserialize_schema(ByteReader& r) {
  Schema schema;
  uint32_t nfields = r.get_le<uint32_t>();
  for (uint32_t i = 0; i < nfields; ++i) {
    Field f;
    uint32_t name_len = r.get_le<uint32_t>();
    f.name = r.get_string(name_len);
    uint8_t kind = r.get_le<uint8_t>();
    check(kind <= uint8_t(TypeKind::Decimal), Errc::MalformedBatch, "unknown type kind");
    f.dtype.kind = TypeKind(kind);
    f.dtype.precision = r.get_le<uint8_t>();
    f.dtype.scale = r.get_le<uint8_t>();
    f.nullable = r.get_le<uint8_t>() != 0;
    schema.fields.push_back(std::move(f));
  }
  return schema;
}

std::vector<uint8_t> serialize_batch(const ColumnBatch& batch) {
  std::vector<uint8_t> out;
  out.reserve(64 + batch_size_bytes(batch));
  put_bytes(out, kMagic, 4);
  put_le<uint16_t>(out, kVersion);
  serialize_schema(out, batch.schema());
  put_le<uint64_t>(out, batch.rows());
  for (const auto& sec : batch_sections(batch)) {
    put_le<uint64_t>(out, sec.bytes.size());
    put_bytes(out, sec.bytes.data(), sec.bytes.size());
  }
  return out;
}

ColumnBatch deserialize_batch(std::span<const uint8_t> bytes) {
  ByteReader r(bytes, Errc::MalformedBatch);
  check(std::memcmp(r.take(4), kMagic, 4) == 0, Errc::MalformedBatch, "bad magic");
  uint16_t version = r.get_le<uint16_t>();
  check(version == kVersion, Errc::MalformedBatch, "unsupported version");
  Schema schema = deserialize_schema(r);
  uint64_t rows = r.get_le<uint64_t>();

  std::vector<Column> cols;
  cols.reserve(schema.fields.size());
  for (const auto& field : schema.fields) {
    Column col;
    col.dtype = field.dtype;
    uint64_t val_len = r.get_le<uint64_t>();
    const uint8_t* vals = r.take(val_len);
    col.values.assign(vals, vals + val_len);
    uint64_t bm_len = r.get_le<uint64_t>();
    if (bm_len > 0) {
      const uint8_t* bm = r.take(bm_len);
      col.validity.emplace(bm, bm + bm_len);
    }
    uint64_t off_len = r.get_le<uint64_t>();
    if (off_len > 0) {
      check(off_len % 4 == 0, Errc::MalformedBatch, "offsets section not 4-byte aligned");
      const uint8_t* off = r.take(off_len);
      std::vector<int32_t> offsets(off_len / 4);
      std::memcpy(offsets.data(), off, off_len);
      col.offsets = std::move(offsets);
    }
    cols.push_back(std::move(col));
  }
  r.expect_end("batch");
  return ColumnBatch(std::move(schema), rows, std::move(cols));
}

}  // namespace tierq::columnar
