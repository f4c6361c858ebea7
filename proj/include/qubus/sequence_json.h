// Copyright 2026 The Qubus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUBUS_SEQUENCE_JSON_H
#define QUBUS_SEQUENCE_JSON_H

#include <stdexcept>

#include "json.hpp"
#include "qubus/gate_sequence.h"

namespace qubus {

class SequenceFormatError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// {version: 1, num_qubits, strategy, instructions: [...], counts: {bus, local}}.
nlohmann::json sequence_to_json(const GateSequence &seq);

/// Parses and validates; the declared counts must match the instruction list.
GateSequence sequence_from_json(const nlohmann::json &j);

}  // namespace qubus

#endif
