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

#ifndef QUBUS_TROTTER_H
#define QUBUS_TROTTER_H

#include <optional>

#include "qubus/bcs_model.h"
#include "qubus/gate_sequence.h"
#include "qubus/uzz.h"

namespace qubus {

/// One Trotter step approximating exp(-i H tau).
///   order 1: Uyy(tau), then Uxx(tau), then U0(tau) in application order.
///   order 2: U0(tau/2) Uxx(tau/2) Uyy(tau) Uxx(tau/2) U0(tau/2).
/// With an ancilla the step is controlled on it; the system occupies qubits 0..N-1 and the
/// register has max(N, ancilla + 1) qubits. The controlled form has a fixed schedule and
/// ignores the strategy.
GateSequence build_trotter_step(const BCSModel &m, double tau, int order, std::optional<int> ancilla = std::nullopt,
                                const Strategy &strategy = strategy::Carryover{}, const ScheduleOptions &opts = {});

/// Closed-form operation count of a dense controlled second-order step.
int64_t controlled_step_count(int n);

enum class Ramp { Linear, Cosine };

Ramp parse_ramp(const std::string &name);

/// c(j/S) in (0, 1]; reaches 1 at j = S.
double ramp_value(Ramp ramp, int j, int steps);

/// S first-order steps of H0 + c_j H1 with duration tau each.
GateSequence build_adiabatic_init(const BCSModel &m, int steps, double tau, Ramp ramp = Ramp::Linear,
                                  const Strategy &strategy = strategy::Carryover{}, const ScheduleOptions &opts = {});

/// round(ratio * pi / delta).
int64_t adiabatic_step_count(double delta, double spacing_ratio = 1.0);

/// Basis state with the n occupied pairs on the modes of largest eps: the ground state of
/// the uncoupled Hamiltonian within the sector.
uint64_t adiabatic_initial_basis(const BCSModel &m);

/// Dense product of exact factor exponentials in the same order as build_trotter_step.
CMatrix dense_trotter_step(const BCSModel &m, double tau, int order);

/// Spectral distance (up to global phase) between the given number of compiled steps of length t/steps
/// and exp(-i H t).
double trotter_error(const BCSModel &m, double t, int steps, int order,
                     const Strategy &strategy = strategy::Carryover{});

}  // namespace qubus

#endif
