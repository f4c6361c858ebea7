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

#ifndef QUBUS_EXECUTOR_H
#define QUBUS_EXECUTOR_H

#include <string>
#include <vector>

#include "qubus/gate_sequence.h"
#include "qubus/hybrid_state.h"

namespace qubus {

struct ExecutionReport {
    /// One entry per Local that ran while its qubit was still coupled to the bus.
    std::vector<std::string> diagnostics;
};

HybridState execute(const GateSequence &seq, HybridState input, ExecutionReport *report = nullptr);

inline constexpr int kMaxEffectiveUnitaryQubits = 10;

/// Register unitary implemented by a sequence, built column by column from basis inputs.
/// Throws EntangledBus if any column leaves the bus entangled or the bus amplitude
/// depends on the input.
CMatrix effective_unitary(const GateSequence &seq, double tol = 1e-9);

}  // namespace qubus

#endif
