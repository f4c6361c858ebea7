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

#ifndef QUBUS_PHASE_ESTIMATION_H
#define QUBUS_PHASE_ESTIMATION_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "qubus/bcs_model.h"
#include "qubus/gate_sequence.h"
#include "qubus/trotter.h"

namespace qubus {

class UnresolvedPeaks : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class VerificationFailure : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxPeaQubits = 12;

enum class PeaInit { ExactSuperposition, AdiabaticSequence };

struct AdiabaticParams {
    int steps = 100;
    double tau = 0.1;
    Ramp ramp = Ramp::Linear;
};

struct PEAConfig {
    int k = 4;
    /// Base interval; chosen automatically so the relevant spectrum maps into one phase turn.
    std::optional<double> tau;
    int trotter_order = 2;
    /// Trotter steps per base interval; chosen automatically from the Trotter error when unset.
    std::optional<int> trotter_substeps;
    int64_t shots = 0;
    uint64_t seed = 1;
    PeaInit init = PeaInit::ExactSuperposition;
    AdiabaticParams adiabatic;
    /// Simulate every compiled instruction on the hybrid register instead of substituting
    /// verified controlled-step matrices.
    bool full_simulation = false;
};

struct Peak {
    /// Outcome in phase order (readout already bit-reversed).
    uint64_t outcome;
    /// In (-pi, pi].
    double phase;
    /// Probability mass within one bin of the outcome.
    double weight;
};

struct PEAResult {
    int k = 0;
    double tau = 0;
    int substeps = 0;
    /// Indexed by outcome x; the eigenphase estimate is 2 pi x / 2^k.
    std::vector<double> distribution;
    std::vector<int64_t> counts;
    std::vector<Peak> phases;
    std::optional<double> gap;
    /// 2 pi / 2^k.
    double resolution = 0;
    /// Largest deviation seen when verifying the substituted controlled step.
    double verification_distance = 0;
};

struct PeaCircuit {
    int k = 0;
    int n_system = 0;
    double tau = 0;
    int substeps = 0;
    /// Ancillas are qubits 0..k-1 (ancilla 0 is the most significant outcome bit); the
    /// system follows.
    GateSequence prep{1};
    /// controlled_evolution[i] holds the steps controlled by ancilla i.
    std::vector<GateSequence> controlled_evolution;
    GateSequence inverse_qft{1};
    /// The measured ancilla string is bit-reversed relative to the outcome.
    bool readout_bit_reversed = true;

    GateSequence flattened() const;
    int64_t controlled_evolution_ops() const;
};

/// Eigenvalues whose phases must fit in one turn: the excitation sector when r = 1,
/// otherwise the full spectrum.
SpectrumResult pea_spectrum(const BCSModel &m);

/// pi (1 - 2^(1-k)) / max |E|.
double auto_tau(const BCSModel &m, int k);

/// Smallest substep count (capped at 256) whose Trotter error over tau stays below a
/// quarter of the phase resolution.
int auto_substeps(const BCSModel &m, double tau, int k, int order);

/// Fills in tau and substeps; validates phase range and sizes.
PEAConfig resolve_config(const BCSModel &m, PEAConfig cfg);

PeaCircuit build_pea(const BCSModel &m, const PEAConfig &cfg);

/// Initial system state for the configured init mode.
CVector pea_initial_state(const BCSModel &m, const PEAConfig &cfg);

/// Phase estimation of a dense unitary u on input psi, using the compiled inverse QFT.
std::vector<double> pea_distribution(const CMatrix &u, int k, const CVector &psi);

PEAResult run_pea(const BCSModel &m, const PEAConfig &cfg, std::optional<CVector> input = std::nullopt);

/// Two peaks separated by more than one bin; throws UnresolvedPeaks otherwise.
std::vector<Peak> extract_peaks(const std::vector<double> &distribution, int k);

/// |phase_1 - phase_2| / tau.
double estimate_gap(const PEAResult &res);

std::string outcome_bits(uint64_t x, int k);

nlohmann::json pea_result_json(const PEAResult &res);

}  // namespace qubus

#endif
