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

#ifndef QUBUS_BCS_MODEL_H
#define QUBUS_BCS_MODEL_H

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qubus/gate_sequence.h"
#include "qubus/linalg.h"

namespace qubus {

class SectorUnavailable : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxDenseModes = 14;
inline constexpr int kMaxEvolutionModes = 10;

/// Pairing Hamiltonian in qubit form:
///   H = sum_m eps_m/2 Z_m + sum_{m<l} V_ml/2 (X_m X_l + r Y_m Y_l).
/// A qubit in |1> is an occupied pair.
struct BCSModel {
    int n_modes = 0;
    int n_excitations = 0;
    RVector eps;
    CouplingMatrix v{1};
    double r = 1.0;

    BCSModel() = default;
    BCSModel(int n_modes, int n_excitations, RVector eps, CouplingMatrix v, double r = 1.0);

    /// Validates shapes and finiteness; throws std::invalid_argument.
    void validate() const;

    nlohmann::json to_json() const;
    static BCSModel from_json(const nlohmann::json &j);
};

struct SpectrumResult {
    RVector eigenvalues;
    RMatrix eigenvectors;
    std::optional<int> sector;
    /// Basis indices spanned by the eigenvector rows (the full register when no sector).
    std::vector<uint64_t> basis;
};

RMatrix hamiltonian_matrix(const BCSModel &m);

/// Basis states with exactly n qubits in |1>, ascending.
std::vector<uint64_t> sector_basis(int n_modes, int n);

SpectrumResult exact_spectrum(const BCSModel &m, std::optional<int> sector = std::nullopt);

double energy_gap(const BCSModel &m, std::optional<int> sector = std::nullopt);

/// exp(-i H t).
CMatrix exact_evolution(const BCSModel &m, double t);

std::string spectrum_csv(const SpectrumResult &s);

}  // namespace qubus

#endif
