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

// Self-describing batch wire/spill format, little-endian:
//   magic "TBAT" | version u16 | field_count u32
//   per field: name_len u32, name bytes, kind u8, precision u8, scale u8, nullable u8
//   row_count u64
//   per section (3 per column, canonical order): length u64, bytes
// deserialize(serialize(b)) == b bit-exactly.
std::vector<uint8_t> serialize_batch(const ColumnBatch& batch);
ColumnBatch deserialize_batch(std::span<const uint8_t> bytes);  // throws MalformedBatch

void serialize_schema(std::vector<uint8_t>& out, const Schema& schema);
Schema deserialize_schema(ByteReader& reader);

}  // namespace tierq::columnar
