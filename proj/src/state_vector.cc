// Copyright 2026 The anyonkit Authors
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

#include "anyon/state_vector.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "anyon/errors.h"

namespace anyon {

namespace {

constexpr std::complex<double> kI{0, 1};

std::complex<double> phase_factor(const PauliString &p) {
    // Units of pi/2 for qubits.
    static constexpr std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[p.phase() % 4];
}

void require_qubits(const PauliString &p, size_t n) {
    if (p.d() != 2) {
        throw InputError("the dense backend only handles qubits (d = 2)");
    }
    if (p.size() != n) {
        throw InputError("Pauli string acts on " + std::to_string(p.size()) + " qubits, state has " + std::to_string(n));
    }
}

bool is_hermitian(const PauliString &p) {
    return p.adjoint() == p;
}

}  // namespace

StateVector::StateVector(size_t qubits, size_t cap) : qubits_(qubits) {
    if (qubits > cap) {
        throw ResourceError(
            "dense state on " + std::to_string(qubits) + " qubits exceeds the cap of " + std::to_string(cap));
    }
    amps_.assign(size_t{1} << qubits, 0);
    amps_[0] = 1;
}

std::vector<std::complex<double>> StateVector::applied(const PauliString &p) const {
    require_qubits(p, qubits_);
    uint64_t xmask = 0;
    uint64_t zmask = 0;
    for (size_t q = 0; q < qubits_; q++) {
        xmask |= uint64_t(p.x(q)) << q;
        zmask |= uint64_t(p.z(q)) << q;
    }
    std::complex<double> c = phase_factor(p);
    std::vector<std::complex<double>> out(amps_.size());
    // X^x Z^z |b> = (-1)^{z.b} |b ^ x>
    for (uint64_t b = 0; b < amps_.size(); b++) {
        double sign = std::popcount(b & zmask) & 1 ? -1.0 : 1.0;
        out[b ^ xmask] = c * sign * amps_[b];
    }
    return out;
}

void StateVector::apply(const PauliString &p) {
    amps_ = applied(p);
}

void StateVector::project_plus(const PauliString &p) {
    auto pp = applied(p);
    for (size_t i = 0; i < amps_.size(); i++) {
        amps_[i] = 0.5 * (amps_[i] + pp[i]);
    }
}

void StateVector::apply_rotation(const PauliString &p, double theta) {
    if (!is_hermitian(p)) {
        throw InputError("rotation generator must be a Hermitian Pauli string");
    }
    auto pp = applied(p);
    double c = std::cos(theta);
    std::complex<double> s = -kI * std::sin(theta);
    for (size_t i = 0; i < amps_.size(); i++) {
        amps_[i] = c * amps_[i] + s * pp[i];
    }
}

void StateVector::apply_global_phase(double phi) {
    std::complex<double> c = std::polar(1.0, phi);
    for (auto &a : amps_) {
        a *= c;
    }
}

std::complex<double> StateVector::expectation(const PauliString &p) const {
    auto pp = applied(p);
    std::complex<double> sum = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        sum += std::conj(amps_[i]) * pp[i];
    }
    return sum;
}

double StateVector::norm() const {
    double sum = 0;
    for (auto a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

void StateVector::normalize() {
    double n = norm();
    if (n == 0) {
        throw NumericError("cannot normalize the zero vector");
    }
    for (auto &a : amps_) {
        a /= n;
    }
}

StateVector ground_state(const TorusLattice &lat, size_t cap) {
    StateVector psi(lat.edge_count(), cap);
    Stabilizers stab = build_stabilizers(lat, 2);
    for (const auto &b : stab.faces) {
        psi.project_plus(b);
    }
    psi.normalize();
    return psi;
}

double interferometer_run(const TorusLattice &lat, bool braid, double beta, const InterferometerSetup &setup) {
    lat.check_edge(setup.splitter_edge);
    auto [f1, f2] = lat.edge_faces(setup.splitter_edge);
    std::vector<int> region = setup.loop_faces;
    if (region.empty()) {
        region.push_back(f1);
    }
    std::sort(region.begin(), region.end());
    if (std::adjacent_find(region.begin(), region.end()) != region.end()) {
        throw InputError("loop region lists a face twice");
    }
    int enclosed = 0;
    for (int f : region) {
        lat.check_vertex(f);
        enclosed += (f == f1) + (f == f2);
    }
    if (enclosed != 1) {
        throw InputError(
            "protocol geometry: the braiding loop encloses " + std::to_string(enclosed) +
            " of the two fluxes, expected exactly 1");
    }

    size_t n = lat.edge_count();
    Stabilizers stab = build_stabilizers(lat, 2);
    PauliString loop(n, 2);
    for (int f : region) {
        loop *= stab.faces[f];
    }
    PauliString z_split(n, 2);
    z_split.set_z(setup.splitter_edge, 1);

    StateVector psi = ground_state(lat);
    if (!braid) {
        psi.apply(loop);
    }
    psi.apply_rotation(z_split, std::numbers::pi / 4);
    // Dwell: exp(i tau J sum_f B_f). The flux branch has two faces flipped, so its phase
    // lags by 4 tau J; tau J = -beta / 4 puts it ahead by e^{i beta}.
    double tau_j = -beta / 4;
    for (const auto &b : stab.faces) {
        psi.apply_rotation(b, -tau_j);
    }
    if (braid) {
        psi.apply(loop);
    }
    psi.apply_rotation(z_split, -std::numbers::pi / 4);
    return psi.expectation(z_split).real();
}

InterferometerReading interferometer_phase(const TorusLattice &lat, double beta, const InterferometerSetup &setup) {
    InterferometerReading out;
    out.no_braid = interferometer_run(lat, false, beta, setup);
    out.braid = interferometer_run(lat, true, beta, setup);
    double no_braid_q = interferometer_run(lat, false, beta + std::numbers::pi / 2, setup);
    double braid_q = interferometer_run(lat, true, beta + std::numbers::pi / 2, setup);
    // <Z> = sin(beta + phi) at beta and cos(beta + phi) at beta + pi/2.
    double with = std::atan2(out.braid, braid_q);
    double without = std::atan2(out.no_braid, no_braid_q);
    out.phase = std::remainder(with - without, 2 * std::numbers::pi);
    if (out.phase <= -std::numbers::pi + 1e-12) {
        out.phase += 2 * std::numbers::pi;
    }
    return out;
}

}  // namespace anyon
