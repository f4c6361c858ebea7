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

#include "qubus/controlled.h"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace qubus {

namespace {

// exp(i*polarity*pi/4 Z_c Z_t): anchor on position, partner on momentum, coefficient 2*a*b.
void emit_cz_core(GateSequence &seq, int control, const std::vector<int> &targets, int polarity) {
    const double a = 1.0;
    const double b = polarity * kPi / 8.0;
    seq.attach(control, Quadrature::Position, a);
    for (int t : targets) {
        seq.attach(t, Quadrature::Momentum, b);
    }
    seq.attach(control, Quadrature::Position, -a);
    for (int t : targets) {
        seq.attach(t, Quadrature::Momentum, -b);
    }
}

// Target-side correction turning the ZZ core into a controlled-Z (up to the control phase).
Mat2 target_correction(int polarity) {
    return gates::z_phase(-polarity * kPi / 4.0);
}

void check_polarity(int polarity) {
    if (polarity != 1 && polarity != -1) {
        throw std::invalid_argument("CNOT polarity must be +1 or -1");
    }
}

}  // namespace

GateSequence build_cnot(int num_qubits, int control, int target, CnotForm form, int polarity) {
    if (control == target) {
        throw std::invalid_argument("CNOT needs distinct control and target");
    }
    check_polarity(polarity);
    GateSequence seq(num_qubits, "cnot");
    seq.local(target, gates::hadamard(), "H");
    emit_cz_core(seq, control, {target}, polarity);
    seq.local(target, gates::hadamard() * target_correction(polarity), "H.corr");
    if (form == CnotForm::Exact) {
        seq.local(control, gates::z_phase(-polarity * kPi / 4.0), "corr");
    }
    return seq;
}

GateSequence make_controlled(const CouplingMatrix &v, int ancilla, Axis axis) {
    const int n = v.n();
    if (ancilla < n) {
        throw std::invalid_argument(
            "ancilla index " + std::to_string(ancilla) + " overlaps the system qubits 0.." + std::to_string(n - 1));
    }
    const int width = ancilla + 1;
    GateSequence body(width, "controlled");
    // Cycle m: U_m = exp(i Z_m sum_l V_ml/2 Z_l) = W^2 with W the half-angle star.
    // W, CNOT(anc->m), W^dagger, CNOT(anc->m) gives I on ancilla |0> and W^2 on |1>.
    for (int m = 0; m < n - 1; m++) {
        std::vector<std::pair<int, double>> partners;
        for (int l = m + 1; l < n; l++) {
            if (!v.is_zero(m, l)) {
                // coefficient 2*a*b = V/4 with a = 1
                partners.emplace_back(l, v(m, l) / 8.0);
            }
        }
        if (partners.empty()) {
            continue;
        }
        auto star = [&](double sign) {
            body.attach(m, Quadrature::Position, 1.0);
            for (auto [l, b] : partners) {
                body.attach(l, Quadrature::Momentum, sign * b);
            }
            body.attach(m, Quadrature::Position, -1.0);
            for (auto [l, b] : partners) {
                body.attach(l, Quadrature::Momentum, -sign * b);
            }
        };
        star(1.0);
        body.append(build_cnot(width, ancilla, m, CnotForm::PhaseDeferred, 1));
        star(-1.0);
        body.append(build_cnot(width, ancilla, m, CnotForm::PhaseDeferred, -1));
        body.barrier("cycle " + std::to_string(m + 1));
    }
    if (axis == Axis::Z) {
        return body;
    }
    std::vector<int> system(n);
    for (int q = 0; q < n; q++) {
        system[q] = q;
    }
    return conjugate_to_axis(body, axis, system);
}

Su2Decomposition decompose_single_qubit(const Mat2 &u) {
    Complex det = u.determinant();
    double phase = std::arg(det) / 2.0;
    Mat2 r = u * std::exp(-kI * phase);
    // r is in SU(2): eigenvalues e^{+-i angle}.
    if ((r - Complex(r(0, 0)) * Mat2::Identity()).cwiseAbs().maxCoeff() < 1e-13) {
        return {phase, std::arg(r(0, 0)), Mat2::Identity()};
    }
    Eigen::ComplexEigenSolver<Mat2> es(r);
    int hi = std::arg(es.eigenvalues()(0)) >= std::arg(es.eigenvalues()(1)) ? 0 : 1;
    Eigen::Vector2cd v0 = es.eigenvectors().col(hi).normalized();
    // Orthogonal complement; eigenvectors of a normal matrix with distinct eigenvalues.
    Eigen::Vector2cd v1(-std::conj(v0(1)), std::conj(v0(0)));
    Mat2 basis;
    basis.row(0) = v0.adjoint();
    basis.row(1) = v1.adjoint();
    double angle = std::arg(es.eigenvalues()(hi));
    return {phase, angle, basis};
}

GateSequence make_controlled_locals(const std::vector<Mat2> &us, int ancilla) {
    const int n = static_cast<int>(us.size());
    if (ancilla < n) {
        throw std::invalid_argument("ancilla index overlaps the system qubits");
    }
    const int width = ancilla + 1;
    GateSequence seq(width, "controlled-locals");
    std::vector<Su2Decomposition> parts;
    std::vector<int> targets;
    double total_phase = 0;
    for (int q = 0; q < n; q++) {
        if (!is_unitary(us[q], 1e-12)) {
            throw std::invalid_argument("controlled local " + std::to_string(q) + " is not unitary");
        }
        parts.push_back(decompose_single_qubit(us[q]));
        total_phase += parts.back().phase;
        targets.push_back(q);
    }
    const Mat2 h = gates::hadamard();
    // Per qubit: W, V, [CNOT+], V^dagger, [CNOT-], W^dagger with V = exp(i angle/2 Z).
    // On ancilla |1> the CNOTs contribute X, and X V^dagger X = V.
    for (int q = 0; q < n; q++) {
        Mat2 v = gates::z_phase(parts[q].angle / 2.0);
        seq.local(q, h * v * parts[q].basis, "H.V.W");
    }
    emit_cz_core(seq, ancilla, targets, 1);
    for (int q = 0; q < n; q++) {
        Mat2 v = gates::z_phase(parts[q].angle / 2.0);
        seq.local(q, v.adjoint() * h * target_correction(1), "Vdag.H.corr");
    }
    for (int q = 0; q < n; q++) {
        seq.local(q, h, "H");
    }
    emit_cz_core(seq, ancilla, targets, -1);
    for (int q = 0; q < n; q++) {
        seq.local(q, parts[q].basis.adjoint() * h * target_correction(-1), "Wdag.H.corr");
    }
    double wrapped = std::remainder(total_phase, 2 * kPi);
    if (std::abs(wrapped) > 1e-15) {
        Mat2 ph;
        ph << 1, 0, 0, std::exp(kI * total_phase);
        seq.local(ancilla, ph, "controlled-phase");
    }
    return seq;
}

}  // namespace qubus
