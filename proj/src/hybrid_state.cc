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

#include "qubus/hybrid_state.h"

#include <algorithm>
#include <cmath>
#include <map>

namespace qubus {

namespace {

constexpr double kZeroCoefficient = 1e-14;

}  // namespace

Complex coherent_overlap(Complex a, Complex b) {
    return std::exp(-0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b);
}

HybridState::HybridState(int num_qubits, std::vector<BranchTerm> branches, double merge_tol)
    : num_qubits_(num_qubits), branches_(std::move(branches)), merge_tol_(merge_tol) {
    if (num_qubits <= 0 || num_qubits > 62) {
        throw std::invalid_argument("num_qubits must be in [1, 62]");
    }
    for (const auto &b : branches_) {
        if (b.basis >> num_qubits) {
            throw std::invalid_argument("branch basis exceeds register size");
        }
    }
}

HybridState HybridState::basis_state(int num_qubits, std::string_view bits) {
    if (static_cast<int>(bits.size()) != num_qubits) {
        throw std::invalid_argument(
            "basis string length " + std::to_string(bits.size()) + " does not match " + std::to_string(num_qubits) +
            " qubits");
    }
    return basis_state(num_qubits, parse_bits(bits));
}

HybridState HybridState::basis_state(int num_qubits, uint64_t basis) {
    return HybridState(num_qubits, {BranchTerm{basis, Complex{0.0}, Complex{1.0}}});
}

HybridState HybridState::from_qubit_vector(int num_qubits, const CVector &amplitudes) {
    if (amplitudes.size() != (int64_t{1} << num_qubits)) {
        throw std::invalid_argument("amplitude vector has wrong dimension");
    }
    std::vector<BranchTerm> branches;
    for (int64_t i = 0; i < amplitudes.size(); i++) {
        if (std::abs(amplitudes(i)) > kZeroCoefficient) {
            branches.push_back({static_cast<uint64_t>(i), Complex{0.0}, amplitudes(i)});
        }
    }
    return HybridState(num_qubits, std::move(branches));
}

void HybridState::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw std::out_of_range(
            "qubit index " + std::to_string(qubit) + " out of range for " + std::to_string(num_qubits_) + " qubits");
    }
}

void HybridState::apply_displacement(int qubit, Complex beta) {
    check_qubit(qubit);
    if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
        throw std::invalid_argument("displacement amplitude must be finite");
    }
    for (auto &b : branches_) {
        Complex g = static_cast<double>(z_sign(b.basis, qubit, num_qubits_)) * beta;
        // D(g)|alpha> = exp((g alpha^* - g^* alpha)/2) |alpha + g>; the exponent is i Im(g alpha^*).
        b.coeff *= std::exp(kI * std::imag(g * std::conj(b.bus_alpha)));
        b.bus_alpha += g;
    }
}

void HybridState::apply_local(int qubit, const Mat2 &u) {
    check_qubit(qubit);
    if (!is_unitary(u, 1e-12)) {
        throw std::invalid_argument("local operation is not unitary within 1e-12");
    }
    std::vector<BranchTerm> next;
    next.reserve(branches_.size() * 2);
    for (const auto &b : branches_) {
        int in = bit_of(b.basis, qubit, num_qubits_);
        uint64_t zero = in ? flip_bit(b.basis, qubit, num_qubits_) : b.basis;
        uint64_t one = flip_bit(zero, qubit, num_qubits_);
        if (u(0, in) != Complex{0.0}) {
            next.push_back({zero, b.bus_alpha, b.coeff * u(0, in)});
        }
        if (u(1, in) != Complex{0.0}) {
            next.push_back({one, b.bus_alpha, b.coeff * u(1, in)});
        }
    }
    branches_ = std::move(next);
    merge(merge_tol_);
}

void HybridState::merge(double tol) {
    std::map<uint64_t, std::vector<BranchTerm>> by_basis;
    for (const auto &b : branches_) {
        auto &bucket = by_basis[b.basis];
        bool merged = false;
        for (auto &existing : bucket) {
            if (std::abs(existing.bus_alpha - b.bus_alpha) <= tol) {
                existing.coeff += b.coeff;
                merged = true;
                break;
            }
        }
        if (!merged) {
            bucket.push_back(b);
        }
    }
    branches_.clear();
    for (auto &[basis, bucket] : by_basis) {
        for (auto &b : bucket) {
            if (std::abs(b.coeff) > kZeroCoefficient) {
                branches_.push_back(b);
            }
        }
    }
}

double HybridState::norm() const {
    return std::sqrt(std::max(0.0, inner_product(*this, *this).real()));
}

bool HybridState::is_bus_disentangled(double tol) const {
    if (branches_.empty()) {
        return true;
    }
    Complex ref = branches_.front().bus_alpha;
    return std::all_of(branches_.begin(), branches_.end(), [&](const BranchTerm &b) {
        return std::abs(b.bus_alpha - ref) <= tol;
    });
}

Complex HybridState::common_alpha(double tol) const {
    if (!is_bus_disentangled(tol)) {
        throw EntangledBus("bus is still entangled with the register");
    }
    return branches_.empty() ? Complex{0.0} : branches_.front().bus_alpha;
}

CVector HybridState::raw_qubit_vector(double tol) const {
    common_alpha(tol);
    CVector v = CVector::Zero(int64_t{1} << num_qubits_);
    for (const auto &b : branches_) {
        v(b.basis) += b.coeff;
    }
    return v;
}

CVector HybridState::extract_qubit_vector(double tol) const {
    CVector v = raw_qubit_vector(tol);
    double n = v.norm();
    if (n == 0) {
        throw std::runtime_error("cannot extract a zero state");
    }
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    Complex phase = std::conj(v(arg)) / std::abs(v(arg));
    return v * (phase / n);
}

nlohmann::json HybridState::to_json() const {
    nlohmann::json branches = nlohmann::json::array();
    for (const auto &b : branches_) {
        branches.push_back({
            {"basis", format_bits(b.basis, num_qubits_)},
            {"alpha", {b.bus_alpha.real(), b.bus_alpha.imag()}},
            {"coeff", {b.coeff.real(), b.coeff.imag()}},
        });
    }
    return {{"num_qubits", num_qubits_}, {"branches", branches}};
}

Complex inner_product(const HybridState &lhs, const HybridState &rhs) {
    if (lhs.num_qubits() != rhs.num_qubits()) {
        throw std::invalid_argument("inner product of states with different register sizes");
    }
    Complex total{0.0};
    for (const auto &a : lhs.branches()) {
        for (const auto &b : rhs.branches()) {
            if (a.basis == b.basis) {
                total += std::conj(a.coeff) * b.coeff * coherent_overlap(a.bus_alpha, b.bus_alpha);
            }
        }
    }
    return total;
}

HybridState merge_branches(HybridState s, double tol) {
    s.merge(tol);
    return s;
}

DiagonalEffect diagonal_fast_path(std::span<const DisplacementOp> ops, int num_qubits) {
    if (num_qubits <= 0 || num_qubits > 24) {
        throw std::invalid_argument("diagonal_fast_path supports 1..24 qubits");
    }
    for (const auto &op : ops) {
        if (op.qubit < 0 || op.qubit >= num_qubits) {
            throw std::out_of_range("displacement qubit out of range");
        }
    }
    const uint64_t dim = uint64_t{1} << num_qubits;
    DiagonalEffect out{num_qubits, std::vector<double>(dim, 0.0), std::vector<Complex>(dim, Complex{0.0})};
    for (uint64_t b = 0; b < dim; b++) {
        double phase = 0;
        Complex alpha{0.0};
        for (const auto &op : ops) {
            Complex g = static_cast<double>(z_sign(b, op.qubit, num_qubits)) * op.beta;
            phase += std::imag(g * std::conj(alpha));
            alpha += g;
        }
        out.phase_per_basis[b] = phase;
        out.residual_alpha_per_basis[b] = alpha;
    }
    return out;
}

}  // namespace qubus
