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

#include "qubus/bcs_model.h"

#include <gtest/gtest.h>

#include <sstream>

#include <algorithm>
#include <numeric>

#include "test_util.h"

namespace qubus {
namespace {

using testutil::Rng;

/// Pauli string on n qubits via explicit Kronecker products.
CMatrix pauli_on(const std::vector<std::pair<int, Mat2>> &factors, int n) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int q = 0; q < n; q++) {
        Mat2 f = Mat2::Identity();
        for (const auto &[qq, m] : factors) {
            if (qq == q) {
                f = m;
            }
        }
        out = testutil::kron(out, f);
    }
    return out;
}

CMatrix kron_hamiltonian(const BCSModel &m) {
    const int n = m.n_modes;
    Mat2 x, y, z;
    x << 0, 1, 1, 0;
    y << 0, -kI, kI, 0;
    z << 1, 0, 0, -1;
    CMatrix h = CMatrix::Zero(int64_t{1} << n, int64_t{1} << n);
    for (int a = 0; a < n; a++) {
        h += m.eps(a) / 2.0 * pauli_on({{a, z}}, n);
        for (int b = a + 1; b < n; b++) {
            h += m.v(a, b) / 2.0 * (pauli_on({{a, x}, {b, x}}, n) + m.r * pauli_on({{a, y}, {b, y}}, n));
        }
    }
    return h;
}

BCSModel random_model(Rng &rng, int n, double r = 1.0) {
    RVector eps(n);
    for (int i = 0; i < n; i++) {
        eps(i) = testutil::uniform(rng, -2, 2);
    }
    return BCSModel(n, n / 2, eps, testutil::random_dense_couplings(rng, n), r);
}

BCSModel pair_model(double e, double v) {
    RVector eps(2);
    eps << e, e;
    CouplingMatrix c(2);
    c.set(0, 1, v);
    return BCSModel(2, 1, eps, c, 1.0);
}

TEST(Hamiltonian, SingleMode) {
    RVector eps(1);
    eps << 2.0;
    BCSModel m(1, 0, eps, CouplingMatrix(1));
    RMatrix h = hamiltonian_matrix(m);
    EXPECT_DOUBLE_EQ(h(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(h(1, 1), -1.0);
    EXPECT_DOUBLE_EQ(h(0, 1), 0.0);
}

TEST(Hamiltonian, MatchesKroneckerAssembly) {
    Rng rng(1);
    for (double r : {1.0, 0.3, -0.5}) {
        for (int n = 2; n <= 4; n++) {
            BCSModel m = random_model(rng, n, r);
            CMatrix h = hamiltonian_matrix(m).cast<Complex>();
            EXPECT_LT((h - kron_hamiltonian(m)).cwiseAbs().maxCoeff(), 1e-12);
            EXPECT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

TEST(Hamiltonian, PairSpectrum) {
    SpectrumResult s = exact_spectrum(pair_model(0.8, 0.3));
    std::vector<double> ev(s.eigenvalues.data(), s.eigenvalues.data() + 4);
    std::vector<double> expected = {-0.8, -0.3, 0.3, 0.8};
    for (int i = 0; i < 4; i++) {
        EXPECT_NEAR(ev[i], expected[i], 1e-12);
    }
}

TEST(Hamiltonian, ExcitationNumberConservedOnlyForIsotropicCoupling) {
    Rng rng(2);
    for (int n = 2; n <= 4; n++) {
        RMatrix nz = RMatrix::Zero(int64_t{1} << n, int64_t{1} << n);
        for (int q = 0; q < n; q++) {
            nz += pauli_on({{q, gates::pauli_z()}}, n).real();
        }
        RMatrix h1 = hamiltonian_matrix(random_model(rng, n, 1.0));
        EXPECT_LT((h1 * nz - nz * h1).cwiseAbs().maxCoeff(), 1e-12);
        RMatrix h2 = hamiltonian_matrix(random_model(rng, n, 0.4));
        EXPECT_GT((h2 * nz - nz * h2).cwiseAbs().maxCoeff(), 1e-3);
    }
}

TEST(Hamiltonian, SizeLimit) {
    BCSModel m(15, 1, RVector::Ones(15), CouplingMatrix(15));
    EXPECT_THROW(hamiltonian_matrix(m), std::invalid_argument);
}

TEST(Model, ValidationAndJson) {
    EXPECT_THROW(BCSModel(2, 3, RVector::Ones(2), CouplingMatrix(2)), std::invalid_argument);
    EXPECT_THROW(BCSModel(2, 1, RVector::Ones(3), CouplingMatrix(2)), std::invalid_argument);
    BCSModel m = pair_model(1.0, 0.5);
    nlohmann::json j = m.to_json();
    EXPECT_EQ(j["N"], 2);
    EXPECT_EQ(j["n"], 1);
    EXPECT_EQ(j["V"][0][1], 0.5);
    EXPECT_EQ(j["r"], 1.0);
    BCSModel back = BCSModel::from_json(j);
    EXPECT_EQ(back.v(0, 1), 0.5);
    EXPECT_EQ(back.eps(1), 1.0);
    j["V"][1][0] = 0.7;
    EXPECT_THROW(BCSModel::from_json(j), std::invalid_argument);
}

TEST(Spectrum, SectorOfPairModel) {
    SpectrumResult s = exact_spectrum(pair_model(1.3, 0.4), 1);
    ASSERT_EQ(s.eigenvalues.size(), 2);
    EXPECT_NEAR(s.eigenvalues(0), -0.4, 1e-12);
    EXPECT_NEAR(s.eigenvalues(1), 0.4, 1e-12);
    EXPECT_EQ(s.basis, (std::vector<uint64_t>{1, 2}));
    EXPECT_NEAR(energy_gap(pair_model(1.3, 0.4), 1), 0.8, 1e-12);
}

TEST(Spectrum, SectorNeedsIsotropicCoupling) {
    Rng rng(3);
    EXPECT_THROW(exact_spectrum(random_model(rng, 3, 0.5), 1), SectorUnavailable);
    EXPECT_THROW(exact_spectrum(random_model(rng, 3), 4), std::invalid_argument);
}

TEST(Spectrum, UncoupledLevelsAreHalfSums) {
    RVector eps(3);
    eps << 1.0, 0.4, -2.2;
    BCSModel m(3, 1, eps, CouplingMatrix(3));
    SpectrumResult s = exact_spectrum(m);
    std::vector<double> expected;
    for (int b = 0; b < 8; b++) {
        double e = 0;
        for (int q = 0; q < 3; q++) {
            e += ((b >> (2 - q)) & 1 ? -1 : 1) * eps(q) / 2;
        }
        expected.push_back(e);
    }
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < 8; i++) {
        EXPECT_NEAR(s.eigenvalues(i), expected[i], 1e-12);
    }
}

TEST(Spectrum, EigenvectorResiduals) {
    Rng rng(4);
    BCSModel m = random_model(rng, 3);
    RMatrix h = hamiltonian_matrix(m);
    SpectrumResult s = exact_spectrum(m);
    for (int i = 0; i < s.eigenvalues.size(); i++) {
        RVector v = s.eigenvectors.col(i);
        EXPECT_LT((h * v - s.eigenvalues(i) * v).norm(), 1e-9);
    }
    EXPECT_LT((s.eigenvectors.transpose() * s.eigenvectors - RMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Gap, DegenerateAndSelfConsistent) {
    EXPECT_NEAR(energy_gap(pair_model(1.0, 0.0), 1), 0.0, 1e-14);
    Rng rng(5);
    BCSModel m = random_model(rng, 4);
    SpectrumResult s = exact_spectrum(m);
    EXPECT_NEAR(energy_gap(m), s.eigenvalues(1) - s.eigenvalues(0), 1e-14);
    EXPECT_GE(energy_gap(m), 0.0);
}

TEST(Evolution, IdentityCompositionAndTaylor) {
    Rng rng(6);
    BCSModel m = random_model(rng, 3);
    EXPECT_LT((exact_evolution(m, 0.0) - CMatrix::Identity(8, 8)).cwiseAbs().maxCoeff(), 1e-12);
    CMatrix u = exact_evolution(m, 0.3) * exact_evolution(m, 0.45);
    EXPECT_LT((u - exact_evolution(m, 0.75)).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_TRUE(is_unitary(exact_evolution(m, 1.7), 1e-10));
    BCSModel p = pair_model(0.9, 0.35);
    CMatrix h = hamiltonian_matrix(p).cast<Complex>();
    for (double t : {1e-2, 1e-3}) {
        CMatrix first = CMatrix::Identity(4, 4) - kI * t * h;
        EXPECT_LT((exact_evolution(p, t) - first).cwiseAbs().maxCoeff(), t * t);
    }
    EXPECT_LT((exact_evolution(m, 0.6) - testutil::expm_i(kron_hamiltonian(m), -0.6)).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Spectrum, CsvFormat) {
    std::string csv = spectrum_csv(exact_spectrum(pair_model(1.0, 0.5), 1));
    EXPECT_EQ(csv.substr(0, 16), "index,eigenvalue");
    std::istringstream in(csv.substr(17));
    std::vector<double> values;
    std::string line;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        EXPECT_EQ(std::stoi(line.substr(0, comma)), static_cast<int>(values.size()));
        values.push_back(std::stod(line.substr(comma + 1)));
    }
    ASSERT_EQ(values.size(), 2u);
    EXPECT_NEAR(values[1] - values[0], 1.0, 1e-12);
}

// Relabelling the modes leaves the spectrum unchanged.
TEST(BcsProperty, PermutationInvariance) {
    Rng rng(7);
    for (int trial = 0; trial < 10; trial++) {
        const int n = 2 + trial % 3;
        BCSModel m = random_model(rng, n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        RVector eps(n);
        CouplingMatrix v(n);
        for (int a = 0; a < n; a++) {
            eps(a) = m.eps(perm[a]);
            for (int b = a + 1; b < n; b++) {
                v.set(a, b, m.v(perm[a], perm[b]));
            }
        }
        BCSModel pm(n, m.n_excitations, eps, v);
        EXPECT_LT((exact_spectrum(m).eigenvalues - exact_spectrum(pm).eigenvalues).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_NEAR(energy_gap(m, m.n_excitations), energy_gap(pm, m.n_excitations), 1e-10);
    }
}

TEST(BcsProperty, GapContinuity) {
    Rng rng(8);
    for (int trial = 0; trial < 10; trial++) {
        BCSModel m = random_model(rng, 3);
        if (energy_gap(m, 1) < 1e-2) {
            continue;
        }
        BCSModel p = m;
        p.v.set(0, 1, m.v(0, 1) + 1e-6);
        EXPECT_LT(std::abs(energy_gap(p, 1) - energy_gap(m, 1)), 1e-4);
    }
}

}  // namespace
}  // namespace qubus
