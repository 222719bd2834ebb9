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

#include "tierq/columnar/types.hpp"

#include <algorithm>
#include <unordered_set>

namespace tierq::columnar {

std::string DataType::to_string() const {
  switch (kind) {
    case TypeKind::Int64: return "int64";
    case TypeKind::Float64: return "float64";
    case TypeKind::Bool: return "bool";
    case TypeKind::Utf8: return "utf8";
    case TypeKind::Decimal:
      return "decimal(" + std::to_string(precision) + "," + std::to_string(scale) + ")";
  }
  return "?";
}

DataType DataType::parse(const std::string& s) {
  if (s == "int64") return int64();
  if (s == "float64") return float64();
  if (s == "bool") return boolean();
  if (s == "utf8") return utf8();
  if (s.rfind("decimal(", 0) == 0 && s.back() == ')') {
    auto body = s.substr(8, s.size() - 9);
    auto comma = body.find(',');
    check(comma != std::string::npos, Errc::InvalidPlan, "bad decimal type: " + s);
    int p = std::stoi(body.substr(0, comma));
    int sc = std::stoi(body.substr(comma + 1));
    check(p > 0 && p <= 38 && sc >= 0 && sc <= p, Errc::InvalidPlan, "bad decimal type: " + s);
    return decimal(uint8_t(p), uint8_t(sc));
  }
  throw_error(Errc::InvalidPlan, "unknown type: " + s);
}

std::optional<size_t> Schema::index_of(const std::string& name) const {
  for (size_t i = 0; i < fields.size(); ++i)
    if (fields[i].name == name) return i;
  return std::nullopt;
}

void Schema::validate() const {
  check(!fields.empty(), Errc::MalformedBatch, "schema has no fields");
  std::unordered_set<std::string> names;
  for (const auto& f : fields) {
    check(!f.name.empty(), Errc::MalformedBatch, "empty field name");
    check(names.insert(f.name).second, Errc::MalformedBatch, "duplicate field: " + f.name);
  }
}

int64_t Column::i64_at(uint64_t row) const {
  int64_t v;
  std::memcpy(&v, values.data() + row * 8, 8);
  return v;
}

double Column::f64_at(uint64_t row) const {
  double v;
  std::memcpy(&v, values.data() + row * 8, 8);
  return v;
}

bool Column::bool_at(uint64_t row) const { return values[row] != 0; }

int128_t Column::dec_at(uint64_t row) const {
  int128_t v;
  std::memcpy(&v, values.data() + row * 16, 16);
  return v;
}

std::string_view Column::utf8_at(uint64_t row) const {
  const auto& off = *offsets;
  return std::string_view(reinterpret_cast<const char*>(values.data()) + off[row],
                          size_t(off[row + 1] - off[row]));
}

namespace {

void validate_column(const Field& field, const Column& col, uint64_t rows) {
  check(col.dtype == field.dtype, Errc::MalformedBatch,
        "column dtype mismatch for field " + field.name);
  if (field.dtype.kind == TypeKind::Utf8) {
    check(col.offsets.has_value(), Errc::MalformedBatch, "utf8 column missing offsets");
    const auto& off = *col.offsets;
    check(off.size() == rows + 1, Errc::MalformedBatch, "utf8 offsets length");
    check(off[0] == 0, Errc::MalformedBatch, "utf8 offsets must start at 0");
    for (size_t i = 0; i < rows; ++i)
      check(off[i] <= off[i + 1], Errc::MalformedBatch, "utf8 offsets must be non-decreasing");
    check(uint64_t(off[rows]) == col.values.size(), Errc::MalformedBatch,
          "utf8 values length disagrees with offsets");
  } else {
    check(!col.offsets.has_value(), Errc::MalformedBatch, "offsets on fixed-width column");
    check(col.values.size() == rows * field.dtype.width(), Errc::MalformedBatch,
          "values length mismatch for field " + field.name);
    if (field.dtype.kind == TypeKind::Bool) {
      for (uint8_t b : col.values)
        check(b <= 1, Errc::MalformedBatch, "bool value out of range");
    }
  }
  if (col.validity) {
    check(col.validity->size() == bitmap_bytes(rows), Errc::MalformedBatch,
          "validity bitmap length");
  }
}

// Zero the padding bits of the final bitmap byte so byte equality is logical
// equality.
void canonicalize(Column& col, uint64_t rows) {
  if (!col.validity) return;
  if (rows == 0) {
    col.validity.reset();
    return;
  }
  uint64_t tail_bits = rows % 8;
  if (tail_bits != 0) col.validity->back() &= uint8_t((1u << tail_bits) - 1);
}

}  // namespace

ColumnBatch::ColumnBatch(Schema schema, uint64_t rows, std::vector<Column> columns)
    : schema_(std::move(schema)), rows_(rows), columns_(std::move(columns)) {
  schema_.validate();
  check(columns_.size() == schema_.fields.size(), Errc::MalformedBatch,
        "column count disagrees with schema");
  for (size_t i = 0; i < columns_.size(); ++i) {
    validate_column(schema_.fields[i], columns_[i], rows_);
    canonicalize(columns_[i], rows_);
  }
}

std::vector<SectionRef> batch_sections(const ColumnBatch& batch) {
  std::vector<SectionRef> out;
  out.reserve(batch.columns().size() * 3);
  for (size_t c = 0; c < batch.columns().size(); ++c) {
    const Column& col = batch.column(c);
    out.push_back({c, 0, std::span<const uint8_t>(col.values)});
    if (col.validity)
      out.push_back({c, 1, std::span<const uint8_t>(*col.validity)});
    else
      out.push_back({c, 1, {}});
    if (col.offsets) {
      const auto* p = reinterpret_cast<const uint8_t*>(col.offsets->data());
      out.push_back({c, 2, std::span<const uint8_t>(p, col.offsets->size() * 4)});
    } else {
      out.push_back({c, 2, {}});
    }
  }
  return out;
}

uint64_t batch_size_bytes(const ColumnBatch& batch) {
  uint64_t total = 0;
  for (const auto& s : batch_sections(batch)) total += s.bytes.size();
  return total;
}

std::optional<uint64_t> section_fixed_length(const DataType& dtype, bool has_validity,
                                             uint64_t rows, int part) {
  switch (part) {
    case 0:
      if (dtype.is_fixed_width()) return rows * dtype.width();
      return std::nullopt;  // Utf8 values: variable
    case 1:
      return has_validity ? bitmap_bytes(rows) : 0;
    case 2:
      return dtype.kind == TypeKind::Utf8 ? (rows + 1) * 4 : 0;
  }
  return std::nullopt;
}

namespace {

std::optional<std::vector<uint8_t>> build_validity(const std::vector<bool>* valid,
                                                   uint64_t rows) {
  if (!valid) return std::nullopt;
  std::vector<uint8_t> bm(bitmap_bytes(rows), 0);
  for (uint64_t i = 0; i < rows; ++i) bit_set(bm, i, (*valid)[i]);
  return bm;
}

}  // namespace

Column make_i64_column(std::span<const int64_t> vals, const std::vector<bool>* valid) {
  Column col;
  col.dtype = DataType::int64();
  col.values.resize(vals.size() * 8);
  std::memcpy(col.values.data(), vals.data(), col.values.size());
  col.validity = build_validity(valid, vals.size());
  return col;
}

Column make_f64_column(std::span<const double> vals, const std::vector<bool>* valid) {
  Column col;
  col.dtype = DataType::float64();
  col.values.resize(vals.size() * 8);
  std::memcpy(col.values.data(), vals.data(), col.values.size());
  col.validity = build_validity(valid, vals.size());
  return col;
}

Column make_bool_column(const std::vector<bool>& vals, const std::vector<bool>* valid) {
  Column col;
  col.dtype = DataType::boolean();
  col.values.resize(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) col.values[i] = vals[i] ? 1 : 0;
  col.validity = build_validity(valid, vals.size());
  return col;
}

Column make_dec_column(std::span<const int128_t> vals, uint8_t precision, uint8_t scale,
                       const std::vector<bool>* valid) {
  Column col;
  col.dtype = DataType::decimal(precision, scale);
  col.values.resize(vals.size() * 16);
  std::memcpy(col.values.data(), vals.data(), col.values.size());
  col.validity = build_validity(valid, vals.size());
  return col;
}

Column make_utf8_column(std::span<const std::string> vals, const std::vector<bool>* valid) {
  Column col;
  col.dtype = DataType::utf8();
  col.offsets.emplace();
  col.offsets->reserve(vals.size() + 1);
  col.offsets->push_back(0);
  for (const auto& s : vals) {
    put_bytes(col.values, s.data(), s.size());
    col.offsets->push_back(int32_t(col.values.size()));
  }
  col.validity = build_validity(valid, vals.size());
  return col;
}

}  // namespace tierq::columnar
