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

#include "tierq/common.hpp"

namespace tierq {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::PoolExhausted: return "PoolExhausted";
    case Errc::CorruptLayout: return "CorruptLayout";
    case Errc::MalformedBatch: return "MalformedBatch";
    case Errc::SchemaMismatch: return "SchemaMismatch";
    case Errc::NotTcf: return "NotTcf";
    case Errc::CorruptFooter: return "CorruptFooter";
    case Errc::UnknownColumn: return "UnknownColumn";
    case Errc::CorruptRowGroup: return "CorruptRowGroup";
    case Errc::IoError: return "IoError";
    case Errc::ReservationImpossible: return "ReservationImpossible";
    case Errc::ReservationExceeded: return "ReservationExceeded";
    case Errc::NoEligibleVictims: return "NoEligibleVictims";
    case Errc::OutOfMemoryUnsplittable: return "OutOfMemoryUnsplittable";
    case Errc::CorruptFrame: return "CorruptFrame";
    case Errc::PeerDisconnected: return "PeerDisconnected";
    case Errc::InvalidPlan: return "InvalidPlan";
    case Errc::WorkerFailure: return "WorkerFailure";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace tierq
