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

#ifndef ANYON_STATE_VECTOR_H
#define ANYON_STATE_VECTOR_H

#include <complex>
#include <cstdint>
#include <vector>

#include "anyon/surface_code.h"

namespace anyon {

inline constexpr size_t kDefaultQubitCap = 20;

/// Dense qubit state. Qubit q is bit q of the basis index.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(size_t qubits, size_t cap = kDefaultQubitCap);

    size_t qubits() const {
        return qubits_;
    }
    const std::vector<std::complex<double>> &amplitudes() const {
        return amps_;
    }

    /// psi <- P psi for a d = 2 Pauli string.
    void apply(const PauliString &p);
    /// psi <- (1 + P) / 2 psi.
    void project_plus(const PauliString &p);
    /// psi <- exp(-i theta P) psi for a Hermitian Pauli string.
    void apply_rotation(const PauliString &p, double theta);
    /// psi <- e^{i phi} psi.
    void apply_global_phase(double phi);

    std::complex<double> expectation(const PauliString &p) const;
    double norm() const;
    void normalize();

   private:
    std::vector<std::complex<double>> applied(const PauliString &p) const;

    size_t qubits_;
    std::vector<std::complex<double>> amps_;
};

/// Stabilizer ground state: prod_f (1 + B_f)/2 applied to |0...0>, normalized. Qubits only.
StateVector ground_state(const TorusLattice &lat, size_t cap = kDefaultQubitCap);

struct InterferometerSetup {
    /// Edge whose Z operator splits vacuum into vacuum plus a flux pair.
    int splitter_edge = 0;
    /// Faces whose boundary forms the braiding charge loop. Empty picks the first face
    /// bordering the splitter edge. Must enclose exactly one of the two fluxes.
    std::vector<int> loop_faces;
};

/// Runs the interferometer and returns <Z> on the splitter edge. Without braiding the
/// loop is applied to the ground state before the splitter.
double interferometer_run(const TorusLattice &lat, bool braid, double beta, const InterferometerSetup &setup = {});

struct InterferometerReading {
    double no_braid;
    double braid;
    /// Statistical phase recovered from runs at beta and beta + pi/2, in (-pi, pi].
    double phase;
};

InterferometerReading interferometer_phase(const TorusLattice &lat, double beta, const InterferometerSetup &setup = {});

}  // namespace anyon

#endif
