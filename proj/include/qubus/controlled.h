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

#ifndef QUBUS_CONTROLLED_H
#define QUBUS_CONTROLLED_H

#include <vector>

#include "qubus/uzz.h"

namespace qubus {

enum class CnotForm {
    /// 4 bus operations + 2 target locals. Implements CNOT * exp(i*polarity*pi/4 Z_control);
    /// the control-side phase cancels when two CNOTs of opposite polarity share a control.
    PhaseDeferred,
    /// Adds the control-side correction as a third local; exact CNOT up to global phase.
    Exact,
};

/// CNOT realised through exp(i*polarity*pi/4 Z_c Z_t) on the bus with Hadamards on the target.
/// polarity must be +1 or -1.
GateSequence build_cnot(
    int num_qubits, int control, int target, CnotForm form = CnotForm::PhaseDeferred, int polarity = 1);

/// Controlled exp(i sum_{m<l} V_ml/2 P_m P_l) with P the chosen axis. System qubits are
/// 0..N-1; the ancilla index must be >= N and sets the register size to ancilla+1.
GateSequence make_controlled(const CouplingMatrix &v, int ancilla, Axis axis);

/// Controlled (u_0 (x) u_1 (x) ...), system qubits 0..N-1. Uses two CNOT fan-outs from
/// the ancilla; SU(2) inputs cost exactly 8N+4 operations, other unitaries add one
/// ancilla phase local.
GateSequence make_controlled_locals(const std::vector<Mat2> &us, int ancilla);

/// Splits u = e^{i phase} basis^dagger exp(i angle Z) basis.
struct Su2Decomposition {
    double phase;
    double angle;
    Mat2 basis;
};
Su2Decomposition decompose_single_qubit(const Mat2 &u);

}  // namespace qubus

#endif
