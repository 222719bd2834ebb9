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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tierq/common.hpp"

namespace tierq::columnar {

enum class TypeKind : uint8_t {
  Int64 = 0,
  Float64 = 1,
  Bool = 2,
  Utf8 = 3,
  Decimal = 4,
};

// Decimal values are stored as scaled 128-bit integers; precision/scale are
// metadata. Bool uses one byte per row; the validity bitmap is the only
// bit-packed buffer.
struct DataType {
  TypeKind kind = TypeKind::Int64;
  uint8_t precision = 0;  // Decimal only
  uint8_t scale = 0;      // Decimal only

  static DataType int64() { return {TypeKind::Int64, 0, 0}; }
  static DataType float64() { return {TypeKind::Float64, 0, 0}; }
  static DataType boolean() { return {TypeKind::Bool, 0, 0}; }
  static DataType utf8() { return {TypeKind::Utf8, 0, 0}; }
  static DataType decimal(uint8_t precision, uint8_t scale) {
    return {TypeKind::Decimal, precision, scale};
  }

  bool is_fixed_width() const { return kind != TypeKind::Utf8; }

  size_t width() const {
    switch (kind) {
      case TypeKind::Int64: return 8;
      case TypeKind::Float64: return 8;
      case TypeKind::Bool: return 1;
      case TypeKind::Decimal: return 16;
      case TypeKind::Utf8: return 0;
    }
    return 0;
  }

  bool operator==(const DataType&) const = default;

  std::string to_string() const;
  static DataType parse(const std::string& s);  // throws InvalidPlan
};

struct Field {
  std::string name;
  DataType dtype;
  bool nullable = true;

  bool operator==(const Field&) const = default;
};

struct Schema {
  std::vector<Field> fields;

  size_t num_fields() const { return fields.size(); }
  std::optional<size_t> index_of(const std::string& name) const;
  void validate() const;  // throws MalformedBatch: unique names, non-empty

  bool operator==(const Schema&) const = default;
};

// --- validity bitmap helpers (LSB-first, padded to whole bytes) -------------

inline size_t bitmap_bytes(uint64_t rows) { return (rows + 7) / 8; }

inline bool bit_get(std::span<const uint8_t> bm, uint64_t i) {
  return (bm[i >> 3] >> (i & 7)) & 1;
}

inline void bit_set(std::span<uint8_t> bm, uint64_t i, bool v) {
  if (v)
    bm[i >> 3] |= uint8_t(1u << (i & 7));
  else
    bm[i >> 3] &= uint8_t(~(1u << (i & 7)));
}

// --- Column / ColumnBatch ----------------------------------------------------

struct Column {
  DataType dtype;
  std::vector<uint8_t> values;
  // Absent validity means all rows are valid. Padding bits are always zero and
  // a zero-row column never carries a bitmap, so equality can compare bytes.
  std::optional<std::vector<uint8_t>> validity;
  std::optional<std::vector<int32_t>> offsets;  // Utf8 only, rows + 1 entries

  bool valid_at(uint64_t row) const {
    return !validity || bit_get(*validity, row);
  }

  int64_t i64_at(uint64_t row) const;
  double f64_at(uint64_t row) const;
  bool bool_at(uint64_t row) const;
  int128_t dec_at(uint64_t row) const;
  std::string_view utf8_at(uint64_t row) const;

  bool operator==(const Column&) const = default;
};

class ColumnBatch {
 public:
  ColumnBatch() = default;
  // Validates invariants and canonicalizes (drops zero-row validity bitmaps,
  // zeroes bitmap padding). Throws MalformedBatch.
  ColumnBatch(Schema schema, uint64_t rows, std::vector<Column> columns);

  const Schema& schema() const { return schema_; }
  uint64_t rows() const { return rows_; }
  const std::vector<Column>& columns() const { return columns_; }
  const Column& column(size_t i) const { return columns_[i]; }

  bool operator==(const ColumnBatch&) const = default;

 private:
  Schema schema_;
  uint64_t rows_ = 0;
  std::vector<Column> columns_;
};

// Every batch decomposes into 3 sections per column in a canonical order:
// values, validity, offsets. Absent sections have length zero. Chunked
// encoding, serialization and sizing all share this enumeration.
struct SectionRef {
  size_t column;
  int part;  // 0 = values, 1 = validity, 2 = offsets
  std::span<const uint8_t> bytes;
};

std::vector<SectionRef> batch_sections(const ColumnBatch& batch);

// Sum of all section byte lengths.
uint64_t batch_size_bytes(const ColumnBatch& batch);

// Derives the expected byte length of each section from the schema and row
// count. Utf8 values sections are variable and reported as nullopt.
std::optional<uint64_t> section_fixed_length(const DataType& dtype, bool has_validity,
                                             uint64_t rows, int part);

// --- builder helpers ---------------------------------------------------------

Column make_i64_column(std::span<const int64_t> vals,
                       const std::vector<bool>* valid = nullptr);
Column make_f64_column(std::span<const double> vals,
                       const std::vector<bool>* valid = nullptr);
Column make_bool_column(const std::vector<bool>& vals,
                        const std::vector<bool>* valid = nullptr);
Column make_dec_column(std::span<const int128_t> vals, uint8_t precision, uint8_t scale,
                       const std::vector<bool>* valid = nullptr);
Column make_utf8_column(std::span<const std::string> vals,
                        const std::vector<bool>* valid = nullptr);

}  // namespace tierq::columnar
