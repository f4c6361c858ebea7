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

#ifndef QUBUS_LINALG_H
#define QUBUS_LINALG_H

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qubus {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Mat2 = Eigen::Matrix2cd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

/// Register convention: qubit 0 is the most significant bit of a basis index.
inline int bit_of(uint64_t basis, int qubit, int num_qubits) {
    return static_cast<int>((basis >> (num_qubits - 1 - qubit)) & 1u);
}
inline uint64_t flip_bit(uint64_t basis, int qubit, int num_qubits) {
    return basis ^ (uint64_t{1} << (num_qubits - 1 - qubit));
}
/// Z eigenvalue of a qubit in a basis state: +1 for |0>, -1 for |1>.
inline int z_sign(uint64_t basis, int qubit, int num_qubits) {
    return bit_of(basis, qubit, num_qubits) ? -1 : 1;
}

uint64_t parse_bits(std::string_view bits);
std::string format_bits(uint64_t basis, int num_qubits);
uint64_t reverse_bits(uint64_t value, int width);

namespace gates {
Mat2 identity();
Mat2 hadamard();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 phase_s();
/// exp(i * angle * Z)
Mat2 z_phase(double angle);
}  // namespace gates

bool is_unitary(const CMatrix &u, double tol);

/// Kronecker product of a single-qubit operator placed on `qubit` in an n-qubit register.
CMatrix embed(const Mat2 &u, int qubit, int num_qubits);

/// Largest singular value of a - b.
double spectral_distance(const CMatrix &a, const CMatrix &b);

/// max |a_ij - e^{i phi} b_ij| minimized over the global phase (phase taken from tr(b^dagger a)).
double distance_up_to_global_phase(const CMatrix &a, const CMatrix &b);

/// Largest singular value of a - e^{i phi} b with the phase taken from tr(b^dagger a).
double spectral_distance_up_to_global_phase(const CMatrix &a, const CMatrix &b);

/// Same, for state vectors.
double state_distance_up_to_global_phase(const CVector &a, const CVector &b);

/// Matrix exponential exp(i * t * h) of a Hermitian matrix via eigendecomposition.
CMatrix expi_hermitian(const CMatrix &h, double t);

class EntangledBus : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class InfeasibleStrategy : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace qubus

#endif
