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

#ifndef TDBOUND_BOUNDS_GATE_SET_HPP_
#define TDBOUND_BOUNDS_GATE_SET_HPP_

#include <string>
#include <string_view>

namespace tdb {

// How a random gate-set is built. Sizes always count every element, so a
// Symmetric set of size S holds S/2 Haar draws and their inverses.
enum class GateSetKind { Plain, Symmetric, BeamsplitterLifted };

std::string_view to_string(GateSetKind kind);
// Accepts "plain", "symmetric", "beamsplitter". Throws std::invalid_argument.
GateSetKind parse_gate_set_kind(std::string_view text);

// Throws std::invalid_argument if size is not admissible for the kind.
void validate_size(GateSetKind kind, long size);

}  // namespace tdb

#endif  // TDBOUND_BOUNDS_GATE_SET_HPP_
