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

#ifndef QUBUS_HYBRID_STATE_H
#define QUBUS_HYBRID_STATE_H

#include <span>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qubus/linalg.h"

namespace qubus {

/// Default tolerance under which two coherent amplitudes are treated as equal.
inline constexpr double kMergeTolerance = 1e-12;

/// One term c |basis> (x) |alpha> of a qubit register entangled with the bus.
struct BranchTerm {
    uint64_t basis;
    Complex bus_alpha;
    Complex coeff;
};

/// <a|b> for coherent states.
Complex coherent_overlap(Complex a, Complex b);

/// Exact state of N qubits coupled to one bus mode held in coherent states.
///
/// The state is kept as a weighted sum of product terms |b>|alpha_b>. Controlled
/// displacements keep the number of terms fixed; a local unitary may split each
/// term in two, after which terms with the same basis string and matching bus
/// amplitude are merged again.
class HybridState {
   public:
    HybridState(int num_qubits, std::vector<BranchTerm> branches, double merge_tol = kMergeTolerance);

    /// Basis state |bits> with the bus in vacuum.
    static HybridState basis_state(int num_qubits, std::string_view bits);
    static HybridState basis_state(int num_qubits, uint64_t basis);
    /// Arbitrary register state with the bus in vacuum.
    static HybridState from_qubit_vector(int num_qubits, const CVector &amplitudes);

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<BranchTerm> &branches() const {
        return branches_;
    }
    double merge_tolerance() const {
        return merge_tol_;
    }

    /// Applies exp(beta Z_q a^dagger - beta^* Z_q a). Real beta moves the position
    /// quadrature, imaginary beta the momentum quadrature.
    void apply_displacement(int qubit, Complex beta);

    void apply_local(int qubit, const Mat2 &u);

    /// Sums terms sharing a basis string and a bus amplitude (within tol); drops zero terms.
    void merge(double tol);

    /// sqrt(<psi|psi>) including coherent-state overlaps.
    double norm() const;

    bool is_bus_disentangled(double tol) const;

    /// Register amplitudes with the common bus factor divided out. The global phase is
    /// fixed so the largest amplitude is real and positive; the vector is normalized.
    CVector extract_qubit_vector(double tol = 1e-9) const;

    /// Raw register amplitudes (no phase fixing, no normalization). Used where relative
    /// phases between separately simulated inputs matter.
    CVector raw_qubit_vector(double tol = 1e-9) const;

    /// Common bus amplitude; requires a disentangled bus.
    Complex common_alpha(double tol = 1e-9) const;

    nlohmann::json to_json() const;

   private:
    void check_qubit(int qubit) const;

    int num_qubits_;
    std::vector<BranchTerm> branches_;
    double merge_tol_;
};

Complex inner_product(const HybridState &lhs, const HybridState &rhs);

HybridState merge_branches(HybridState s, double tol);

/// A controlled displacement of the bus conditioned on one qubit's Z value.
struct DisplacementOp {
    int qubit;
    Complex beta;
};

/// Closed-form action of a displacement-only sequence on every basis state.
struct DiagonalEffect {
    int num_qubits;
    /// Indexed by basis; accumulated geometric phase in radians.
    std::vector<double> phase_per_basis;
    /// Indexed by basis; net bus displacement left behind.
    std::vector<Complex> residual_alpha_per_basis;
};

/// Composes the displacements pairwise with D(a)D(b) = exp((a b^* - a^* b)/2) D(a+b)
/// (a applied after b), giving for each basis string the accumulated phase and the
/// residual bus amplitude.
DiagonalEffect diagonal_fast_path(std::span<const DisplacementOp> ops, int num_qubits);

}  // namespace qubus

#endif
