// Copyright 2026 The tdbound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tdbound/bounds/gate_set.hpp"

#include <stdexcept>

namespace tdb {

std::string_view to_string(GateSetKind kind) {
  switch (kind) {
    case GateSetKind::Plain:
      return "plain";
    case GateSetKind::Symmetric:
      return "symmetric";
    case GateSetKind::BeamsplitterLifted:
      return "beamsplitter";
  }
  return "unknown";
}

GateSetKind parse_gate_set_kind(std::string_view text) {
  if (text == "plain") return GateSetKind::Plain;
  if (text == "symmetric") return GateSetKind::Symmetric;
  if (text == "beamsplitter") return GateSetKind::BeamsplitterLifted;
  throw std::invalid_argument("unknown gate-set kind '" + std::string(text) +
                              "'");
}

void validate_size(GateSetKind kind, long size) {
  if (size < 1) throw std::invalid_argument("gate-set size must be >= 1");
  if (kind == GateSetKind::Symmetric && size % 2 != 0)
    throw std::invalid_argument(
        "symmetric gate-set size counts inverses and must be even");
}

}  // namespace tdb
