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

#include "qubus/phase_estimation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qubus/executor.h"
#include "qubus/qft.h"

namespace qubus {

namespace {

double wrap_phase(double phi) {
    phi = std::remainder(phi, 2.0 * kPi);
    return phi <= -kPi ? phi + 2.0 * kPi : phi;
}

double outcome_phase(uint64_t x, int k) {
    return wrap_phase(2.0 * kPi * static_cast<double>(x) / std::ldexp(1.0, k));
}

uint64_t circular_distance(uint64_t a, uint64_t b, uint64_t bins) {
    uint64_t d = a > b ? a - b : b - a;
    return std::min(d, bins - d);
}

double neighbourhood_mass(const std::vector<double> &p, uint64_t x) {
    const uint64_t bins = p.size();
    double mass = p[x];
    if (bins > 1) {
        mass += p[(x + 1) % bins];
    }
    if (bins > 2) {
        mass += p[(x + bins - 1) % bins];
    }
    return mass;
}

double max_abs_energy(const BCSModel &m) {
    return pea_spectrum(m).eigenvalues.cwiseAbs().maxCoeff();
}

CMatrix controlled_reference(const CMatrix &t) {
    const auto d = t.rows();
    CMatrix full = CMatrix::Zero(2 * d, 2 * d);
    for (Eigen::Index a = 0; a < d; a++) {
        full(2 * a, 2 * a) = 1.0;
        for (Eigen::Index b = 0; b < d; b++) {
            full(2 * a + 1, 2 * b + 1) = t(a, b);
        }
    }
    return full;
}

}  // namespace

GateSequence PeaCircuit::flattened() const {
    GateSequence out(k + n_system, "pea");
    out.append(prep);
    for (const auto &seq : controlled_evolution) {
        out.append(seq);
    }
    out.append(inverse_qft);
    return out;
}

int64_t PeaCircuit::controlled_evolution_ops() const {
    int64_t total = 0;
    for (const auto &seq : controlled_evolution) {
        total += count_ops(seq).total;
    }
    return total;
}

SpectrumResult pea_spectrum(const BCSModel &m) {
    if (m.r == 1.0) {
        return exact_spectrum(m, m.n_excitations);
    }
    return exact_spectrum(m);
}

double auto_tau(const BCSModel &m, int k) {
    const double emax = max_abs_energy(m);
    if (emax == 0.0) {
        return 1.0;
    }
    return kPi * (1.0 - std::ldexp(1.0, 1 - k)) / emax;
}

int auto_substeps(const BCSModel &m, double tau, int k, int order) {
    constexpr int kMaxSubsteps = 256;
    const double target = 2.0 * kPi / std::ldexp(1.0, k) / 4.0;
    const double e1 = trotter_error(m, tau, 1, order);
    if (e1 < target) {
        return 1;
    }
    int s = static_cast<int>(std::ceil(std::pow(e1 / target, 1.0 / order)));
    s = std::clamp(s, 2, kMaxSubsteps);
    while (s < kMaxSubsteps && trotter_error(m, tau, s, order) >= target) {
        s++;
    }
    return s;
}

PEAConfig resolve_config(const BCSModel &m, PEAConfig cfg) {
    m.validate();
    if (cfg.k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    if (m.n_modes + cfg.k > kMaxPeaQubits) {
        throw std::invalid_argument("phase estimation limited to N + k <= 12 qubits");
    }
    if (cfg.trotter_order != 1 && cfg.trotter_order != 2) {
        throw std::invalid_argument("Trotter order must be 1 or 2");
    }
    if (!cfg.tau) {
        cfg.tau = auto_tau(m, cfg.k);
    }
    if (!(*cfg.tau > 0)) {
        throw std::invalid_argument("tau must be positive");
    }
    if (max_abs_energy(m) * *cfg.tau > kPi) {
        throw DomainError("tau wraps eigenphases outside (-pi, pi]");
    }
    if (!cfg.trotter_substeps) {
        cfg.trotter_substeps = auto_substeps(m, *cfg.tau, cfg.k, cfg.trotter_order);
    }
    if (*cfg.trotter_substeps < 1) {
        throw std::invalid_argument("substeps must be positive");
    }
    return cfg;
}

PeaCircuit build_pea(const BCSModel &m, const PEAConfig &config) {
    const PEAConfig cfg = resolve_config(m, config);
    const int k = cfg.k;
    const int n = m.n_modes;
    const int width = k + n;
    PeaCircuit c;
    c.k = k;
    c.n_system = n;
    c.tau = *cfg.tau;
    c.substeps = *cfg.trotter_substeps;
    c.prep = GateSequence(width, "pea-prep");
    for (int a = 0; a < k; a++) {
        c.prep.local(a, gates::hadamard(), "H");
    }
    const GateSequence step = build_trotter_step(m, c.tau / c.substeps, cfg.trotter_order, n);
    std::vector<int> mapping(n + 1);
    for (int i = 0; i < n; i++) {
        mapping[i] = k + i;
    }
    for (int a = 0; a < k; a++) {
        mapping[n] = a;
        const GateSequence mapped = step.remapped(width, mapping);
        GateSequence layer(width, "controlled-evolution");
        const int64_t reps = (int64_t{1} << (k - 1 - a)) * c.substeps;
        for (int64_t r = 0; r < reps; r++) {
            layer.append(mapped);
        }
        c.controlled_evolution.push_back(std::move(layer));
    }
    std::vector<int> anc(k);
    std::iota(anc.begin(), anc.end(), 0);
    c.inverse_qft = build_qft(k, {QftMode::Completion::MeasurementReady, QftMode::Direction::Inverse})
                        .remapped(width, anc);
    return c;
}

CVector pea_initial_state(const BCSModel &m, const PEAConfig &cfg) {
    const int64_t dim = int64_t{1} << m.n_modes;
    if (cfg.init == PeaInit::ExactSuperposition) {
        SpectrumResult s = pea_spectrum(m);
        if (s.eigenvalues.size() < 2) {
            throw std::invalid_argument("superposition init needs at least two levels");
        }
        CVector psi = CVector::Zero(dim);
        for (size_t i = 0; i < s.basis.size(); i++) {
            psi(s.basis[i]) = (s.eigenvectors(i, 0) + s.eigenvectors(i, 1)) / std::sqrt(2.0);
        }
        return psi;
    }
    const auto &ad = cfg.adiabatic;
    GateSequence init = build_adiabatic_init(m, ad.steps, ad.tau, ad.ramp);
    HybridState out = execute(init, HybridState::basis_state(m.n_modes, adiabatic_initial_basis(m)));
    CVector psi = out.raw_qubit_vector();
    return psi / psi.norm();
}

std::vector<double> pea_distribution(const CMatrix &u, int k, const CVector &psi) {
    if (k < 1 || k > kMaxEffectiveUnitaryQubits) {
        throw std::invalid_argument("k must lie in 1..10");
    }
    if (u.rows() != u.cols() || u.rows() != psi.size()) {
        throw std::invalid_argument("unitary and state dimensions differ");
    }
    const int64_t bins = int64_t{1} << k;
    CMatrix amps(bins, psi.size());
    CVector cur = psi / psi.norm();
    for (int64_t y = 0; y < bins; y++) {
        amps.row(y) = cur.transpose() / std::sqrt(static_cast<double>(bins));
        cur = u * cur;
    }
    const CMatrix qft =
        effective_unitary(build_qft(k, {QftMode::Completion::MeasurementReady, QftMode::Direction::Inverse}));
    const CMatrix out = qft * amps;
    std::vector<double> dist(bins);
    for (int64_t z = 0; z < bins; z++) {
        dist[reverse_bits(z, k)] = out.row(z).squaredNorm();
    }
    return dist;
}

PEAResult run_pea(const BCSModel &m, const PEAConfig &config, std::optional<CVector> input) {
    const PEAConfig cfg = resolve_config(m, config);
    const int k = cfg.k;
    const int n = m.n_modes;
    const int64_t bins = int64_t{1} << k;
    CVector psi = input ? *input : pea_initial_state(m, cfg);
    if (psi.size() != (int64_t{1} << n)) {
        throw std::invalid_argument("input state has the wrong dimension");
    }
    psi /= psi.norm();

    PEAResult res;
    res.k = k;
    res.tau = *cfg.tau;
    res.substeps = *cfg.trotter_substeps;
    res.resolution = 2.0 * kPi / static_cast<double>(bins);

    if (!cfg.full_simulation) {
        const double dt = res.tau / res.substeps;
        const CMatrix step = effective_unitary(build_trotter_step(m, dt, cfg.trotter_order, n));
        const CMatrix ref = dense_trotter_step(m, dt, cfg.trotter_order);
        res.verification_distance = distance_up_to_global_phase(step, controlled_reference(ref));
        if (res.verification_distance > 1e-9) {
            throw VerificationFailure("controlled step does not match its reference");
        }
        Complex trace{0.0, 0.0};
        const auto d = ref.rows();
        CMatrix t(d, d);
        for (Eigen::Index a = 0; a < d; a++) {
            trace += step(2 * a, 2 * a);
            for (Eigen::Index b = 0; b < d; b++) {
                t(a, b) = step(2 * a + 1, 2 * b + 1);
            }
        }
        t *= std::conj(trace) / std::abs(trace);
        CMatrix u = CMatrix::Identity(d, d);
        for (int s = 0; s < res.substeps; s++) {
            u = t * u;
        }
        res.distribution = pea_distribution(u, k, psi);
    } else {
        const GateSequence circuit = build_pea(m, cfg).flattened();
        const int64_t sys_dim = int64_t{1} << n;
        CVector full = CVector::Zero(bins * sys_dim);
        full.head(sys_dim) = psi;
        HybridState out = execute(circuit, HybridState::from_qubit_vector(k + n, full));
        const CVector amps = out.raw_qubit_vector();
        res.distribution.assign(bins, 0.0);
        for (int64_t z = 0; z < bins; z++) {
            res.distribution[reverse_bits(z, k)] = amps.segment(z * sys_dim, sys_dim).squaredNorm();
        }
        const double total = std::accumulate(res.distribution.begin(), res.distribution.end(), 0.0);
        for (double &p : res.distribution) {
            p /= total;
        }
    }

    if (cfg.shots > 0) {
        std::mt19937_64 rng(cfg.seed);
        std::discrete_distribution<int64_t> pick(res.distribution.begin(), res.distribution.end());
        res.counts.assign(bins, 0);
        for (int64_t s = 0; s < cfg.shots; s++) {
            res.counts[pick(rng)]++;
        }
    }

    try {
        res.phases = extract_peaks(res.distribution, k);
        res.gap = estimate_gap(res);
    } catch (const UnresolvedPeaks &) {
        auto top = std::max_element(res.distribution.begin(), res.distribution.end()) - res.distribution.begin();
        res.phases = {{static_cast<uint64_t>(top), outcome_phase(top, k), neighbourhood_mass(res.distribution, top)}};
    }
    return res;
}

std::vector<Peak> extract_peaks(const std::vector<double> &p, int k) {
    const uint64_t bins = uint64_t{1} << k;
    if (p.size() != bins) {
        throw std::invalid_argument("distribution size must be 2^k");
    }
    const uint64_t top = std::max_element(p.begin(), p.end()) - p.begin();
    std::optional<uint64_t> second;
    for (uint64_t x = 0; x < bins; x++) {
        if (circular_distance(x, top, bins) <= 1 || p[x] < 0.1 * p[top]) {
            continue;
        }
        if (p[x] < p[(x + 1) % bins] || p[x] < p[(x + bins - 1) % bins]) {
            continue;
        }
        if (!second) {
            second = x;
            continue;
        }
        const double diff = p[x] - p[*second];
        if (diff > 1e-12 ||
            (std::abs(diff) <= 1e-12 && circular_distance(x, top, bins) > circular_distance(*second, top, bins))) {
            second = x;
        }
    }
    if (!second) {
        throw UnresolvedPeaks("no second peak separated from the main peak by more than one bin");
    }
    return {
        {top, outcome_phase(top, k), neighbourhood_mass(p, top)},
        {*second, outcome_phase(*second, k), neighbourhood_mass(p, *second)},
    };
}

double estimate_gap(const PEAResult &res) {
    if (res.phases.size() < 2) {
        throw UnresolvedPeaks("fewer than two resolved peaks");
    }
    return std::abs(res.phases[0].phase - res.phases[1].phase) / res.tau;
}

std::string outcome_bits(uint64_t x, int k) {
    return format_bits(x, k);
}

nlohmann::json pea_result_json(const PEAResult &res) {
    nlohmann::json dist = nlohmann::json::object();
    for (size_t x = 0; x < res.distribution.size(); x++) {
        dist[outcome_bits(x, res.k)] = res.distribution[x];
    }
    nlohmann::json phases = nlohmann::json::array();
    for (const auto &pk : res.phases) {
        phases.push_back({{"phase", pk.phase}, {"weight", pk.weight}, {"outcome", outcome_bits(pk.outcome, res.k)}});
    }
    nlohmann::json j = {
        {"k", res.k},
        {"tau", res.tau},
        {"substeps", res.substeps},
        {"distribution", dist},
        {"phases", phases},
        {"gap", res.gap ? nlohmann::json(*res.gap) : nlohmann::json(nullptr)},
        {"resolution", res.resolution},
    };
    if (res.gap) {
        j["gap_uncertainty"] = res.resolution / res.tau;
    }
    if (!res.counts.empty()) {
        nlohmann::json counts = nlohmann::json::object();
        for (size_t x = 0; x < res.counts.size(); x++) {
            if (res.counts[x] > 0) {
                counts[outcome_bits(x, res.k)] = res.counts[x];
            }
        }
        j["counts"] = counts;
    }
    return j;
}

}  // namespace qubus
