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

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace qubus {

BCSModel::BCSModel(int n_modes_, int n_excitations_, RVector eps_, CouplingMatrix v_, double r_)
    : n_modes(n_modes_), n_excitations(n_excitations_), eps(std::move(eps_)), v(std::move(v_)), r(r_) {
    validate();
}

void BCSModel::validate() const {
    if (n_modes < 1) {
        throw std::invalid_argument("model needs at least one mode");
    }
    if (n_excitations < 0 || n_excitations > n_modes) {
        throw std::invalid_argument("excitation number must lie in [0, N]");
    }
    if (eps.size() != n_modes || v.n() != n_modes) {
        throw std::invalid_argument("eps and V must match the mode count");
    }
    if (!eps.allFinite() || !v.matrix().allFinite() || !std::isfinite(r)) {
        throw std::invalid_argument("model parameters must be finite");
    }
}

nlohmann::json BCSModel::to_json() const {
    std::vector<double> e(eps.data(), eps.data() + eps.size());
    std::vector<std::vector<double>> vm(n_modes, std::vector<double>(n_modes));
    for (int i = 0; i < n_modes; i++) {
        for (int j = 0; j < n_modes; j++) {
            vm[i][j] = v(i, j);
        }
    }
    return {{"N", n_modes}, {"n", n_excitations}, {"eps", e}, {"V", vm}, {"r", r}};
}

BCSModel BCSModel::from_json(const nlohmann::json &j) {
    int n = j.at("N").get<int>();
    int ne = j.value("n", 0);
    auto e = j.at("eps").get<std::vector<double>>();
    auto vm = j.at("V").get<std::vector<std::vector<double>>>();
    if (n < 1 || static_cast<int>(e.size()) != n || static_cast<int>(vm.size()) != n) {
        throw std::invalid_argument("model JSON: eps and V must have N entries");
    }
    RVector eps = Eigen::Map<const RVector>(e.data(), n);
    RMatrix v(n, n);
    for (int i = 0; i < n; i++) {
        if (static_cast<int>(vm[i].size()) != n) {
            throw std::invalid_argument("model JSON: V must be N x N");
        }
        for (int k = 0; k < n; k++) {
            v(i, k) = vm[i][k];
        }
    }
    return BCSModel(n, ne, eps, CouplingMatrix(v), j.value("r", 1.0));
}

RMatrix hamiltonian_matrix(const BCSModel &m) {
    m.validate();
    const int n = m.n_modes;
    if (n > kMaxDenseModes) {
        throw std::invalid_argument("dense Hamiltonian limited to 14 modes");
    }
    const int64_t dim = int64_t{1} << n;
    RMatrix h = RMatrix::Zero(dim, dim);
    for (int64_t b = 0; b < dim; b++) {
        for (int q = 0; q < n; q++) {
            h(b, b) += m.eps(q) / 2.0 * z_sign(b, q, n);
        }
        for (int q = 0; q < n; q++) {
            for (int l = q + 1; l < n; l++) {
                if (m.v(q, l) == 0.0) {
                    continue;
                }
                // XX + r YY flips both bits; YY contributes -1 on equal bits and +1 on unequal.
                int64_t c = flip_bit(flip_bit(b, q, n), l, n);
                double amp = bit_of(b, q, n) == bit_of(b, l, n) ? 1.0 - m.r : 1.0 + m.r;
                h(c, b) += m.v(q, l) / 2.0 * amp;
            }
        }
    }
    return h;
}

std::vector<uint64_t> sector_basis(int n_modes, int n) {
    std::vector<uint64_t> out;
    for (uint64_t b = 0; b < (uint64_t{1} << n_modes); b++) {
        if (std::popcount(b) == n) {
            out.push_back(b);
        }
    }
    return out;
}

SpectrumResult exact_spectrum(const BCSModel &m, std::optional<int> sector) {
    RMatrix h = hamiltonian_matrix(m);
    SpectrumResult res;
    res.sector = sector;
    if (sector) {
        if (m.r != 1.0) {
            throw SectorUnavailable("excitation sectors exist only for r = 1");
        }
        if (*sector < 0 || *sector > m.n_modes) {
            throw std::invalid_argument("sector must lie in [0, N]");
        }
        res.basis = sector_basis(m.n_modes, *sector);
        const auto d = static_cast<int64_t>(res.basis.size());
        RMatrix hs(d, d);
        for (int64_t i = 0; i < d; i++) {
            for (int64_t j = 0; j < d; j++) {
                hs(i, j) = h(res.basis[i], res.basis[j]);
            }
        }
        h = std::move(hs);
    } else {
        for (uint64_t b = 0; b < static_cast<uint64_t>(h.rows()); b++) {
            res.basis.push_back(b);
        }
    }
    Eigen::SelfAdjointEigenSolver<RMatrix> es(h);
    res.eigenvalues = es.eigenvalues();
    res.eigenvectors = es.eigenvectors();
    return res;
}

double energy_gap(const BCSModel &m, std::optional<int> sector) {
    SpectrumResult s = exact_spectrum(m, sector);
    if (s.eigenvalues.size() < 2) {
        return 0.0;
    }
    return std::max(0.0, s.eigenvalues(1) - s.eigenvalues(0));
}

CMatrix exact_evolution(const BCSModel &m, double t) {
    if (m.n_modes > kMaxEvolutionModes) {
        throw std::invalid_argument("exact evolution limited to 10 modes");
    }
    Eigen::SelfAdjointEigenSolver<RMatrix> es(hamiltonian_matrix(m));
    CVector phases = (es.eigenvalues() * (-t)).unaryExpr([](double x) { return std::exp(kI * x); });
    CMatrix vecs = es.eigenvectors().cast<Complex>();
    return vecs * phases.asDiagonal() * vecs.adjoint();
}

std::string spectrum_csv(const SpectrumResult &s) {
    std::ostringstream out;
    out << "index,eigenvalue\n" << std::setprecision(17);
    for (Eigen::Index i = 0; i < s.eigenvalues.size(); i++) {
        out << i << "," << s.eigenvalues(i) << "\n";
    }
    return out.str();
}

}  // namespace qubus
