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

#include "qubus/linalg.h"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qubus {

uint64_t parse_bits(std::string_view bits) {
    if (bits.size() > 63) {
        throw std::invalid_argument("bit string too long");
    }
    uint64_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string may only contain '0' and '1': " + std::string(bits));
        }
        v = (v << 1) | static_cast<uint64_t>(c == '1');
    }
    return v;
}

std::string format_bits(uint64_t basis, int num_qubits) {
    std::string out(num_qubits, '0');
    for (int q = 0; q < num_qubits; q++) {
        out[q] = bit_of(basis, q, num_qubits) ? '1' : '0';
    }
    return out;
}

uint64_t reverse_bits(uint64_t value, int width) {
    uint64_t r = 0;
    for (int i = 0; i < width; i++) {
        r = (r << 1) | ((value >> i) & 1u);
    }
    return r;
}

namespace gates {
Mat2 identity() {
    return Mat2::Identity();
}
Mat2 hadamard() {
    Mat2 h;
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}
Mat2 pauli_x() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}
Mat2 pauli_y() {
    Mat2 m;
    m << 0, -kI, kI, 0;
    return m;
}
Mat2 pauli_z() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}
Mat2 phase_s() {
    Mat2 m;
    m << 1, 0, 0, kI;
    return m;
}
Mat2 z_phase(double angle) {
    Mat2 m;
    m << std::exp(kI * angle), 0, 0, std::exp(-kI * angle);
    return m;
}
}  // namespace gates

bool is_unitary(const CMatrix &u, double tol) {
    if (u.rows() != u.cols() || !u.allFinite()) {
        return false;
    }
    CMatrix d = u.adjoint() * u - CMatrix::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff() <= tol;
}

CMatrix embed(const Mat2 &u, int qubit, int num_qubits) {
    const int64_t dim = int64_t{1} << num_qubits;
    CMatrix out = CMatrix::Zero(dim, dim);
    for (int64_t col = 0; col < dim; col++) {
        int b = bit_of(col, qubit, num_qubits);
        uint64_t base = b ? flip_bit(col, qubit, num_qubits) : col;
        uint64_t one = flip_bit(base, qubit, num_qubits);
        out(base, col) += u(0, b);
        out(one, col) += u(1, b);
    }
    return out;
}

double spectral_distance(const CMatrix &a, const CMatrix &b) {
    Eigen::JacobiSVD<CMatrix> svd(a - b);
    return svd.singularValues()(0);
}

double distance_up_to_global_phase(const CMatrix &a, const CMatrix &b) {
    Complex t = (b.adjoint() * a).trace();
    Complex phase = std::abs(t) > 0 ? t / std::abs(t) : Complex{1.0};
    return (a - phase * b).cwiseAbs().maxCoeff();
}

double spectral_distance_up_to_global_phase(const CMatrix &a, const CMatrix &b) {
    Complex t = (b.adjoint() * a).trace();
    Complex phase = std::abs(t) > 0 ? t / std::abs(t) : Complex{1.0};
    return spectral_distance(a, phase * b);
}

double state_distance_up_to_global_phase(const CVector &a, const CVector &b) {
    Complex t = b.dot(a);
    Complex phase = std::abs(t) > 0 ? t / std::abs(t) : Complex{1.0};
    return (a - phase * b).cwiseAbs().maxCoeff();
}

CMatrix expi_hermitian(const CMatrix &h, double t) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    CVector phases = (kI * t * es.eigenvalues().cast<Complex>()).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace qubus
