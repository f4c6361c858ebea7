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

#ifndef QUBUS_QFT_H
#define QUBUS_QFT_H

#include "qubus/gate_sequence.h"

namespace qubus {

struct QftMode {
    enum class Completion {
        /// Drops the diagonal corrections that would follow each Hadamard; outcome
        /// statistics of a Z measurement are unchanged.
        MeasurementReady,
        FullUnitary,
    };
    enum class Direction { Forward, Inverse };

    Completion completion = Completion::MeasurementReady;
    Direction direction = Direction::Forward;
};

/// Quantum Fourier transform on k qubits sharing one bus. Controlled rotations are
/// generated by shifting qubits from the momentum to the position quadrature, so the
/// whole transform uses 4k-4 bus operations. No swap network: the output register is
/// bit-reversed relative to the textbook ordering.
GateSequence build_qft(int k, QftMode mode = {});

/// Textbook (I)DFT matrix with entries exp(+-2 pi i x y / 2^k) / sqrt(2^k).
CMatrix dft_matrix(int k, QftMode::Direction direction);

}  // namespace qubus

#endif
