// Copyright 2026 The eprverify Authors
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

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "eprverify/bell_algebra.hpp"
#include "eprverify/bitstring.hpp"
#include "eprverify/rng.hpp"
#include "eprverify/transcript.hpp"

namespace eprverify {

using cdouble = std::complex<double>;

/// Default qubit cap. Keeps every exhaustive enumeration in the check suites
/// under a second per case.
inline constexpr size_t kDefaultMaxQubits = 12;

/// Brute-force complex-amplitude state of a small system: the live Bell
/// pairs' qubits followed by an optional ancilla register.
///
/// Qubit layout: pair slot k owns qubits 2k (Alice) and 2k+1 (Bob); ancilla
/// qubits come last. Amplitude indexing is big-endian: qubit 0 is the most
/// significant bit of the basis-state index.
class DenseState {
  public:
    DenseState() = default;
    DenseState(std::vector<cdouble> amps, std::vector<size_t> pair_ids, size_t n_ancilla);

    size_t n_pairs() const {
        return pair_ids_.size();
    }
    size_t n_ancilla() const {
        return n_ancilla_;
    }
    size_t n_qubits() const {
        return 2 * pair_ids_.size() + n_ancilla_;
    }
    const std::vector<size_t>& pair_ids() const {
        return pair_ids_;
    }
    const std::vector<cdouble>& amplitudes() const {
        return amps_;
    }
    std::vector<cdouble>& amplitudes() {
        return amps_;
    }

    bool has_pair(size_t id) const;
    /// Qubit indices (Alice, Bob) of a live pair.
    std::pair<size_t, size_t> qubits_of(size_t id) const;

    double norm() const;

  private:
    std::vector<cdouble> amps_;
    std::vector<size_t> pair_ids_;
    size_t n_ancilla_ = 0;
    size_t slot_of(size_t id) const;
};

/// Tensor product of the given Bell states (times the string's global
/// phase), with `n_ancilla` ancilla qubits initialized to |0..0>.
/// Throws std::invalid_argument above the qubit cap.
DenseState prepare_bell_product(const BellString& labels, size_t n_ancilla = 0,
                                size_t max_qubits = kDefaultMaxQubits);

/// Apply one gate of the set as its exact unitary (Bx, By: bilateral pi/2
/// rotations; SigmaX: -iX on Alice's qubit; Bxor: CNOT@CNOT).
DenseState apply_unitary(const DenseState& state, const Gate& g);

DenseState apply_unitaries(const DenseState& state, const std::vector<Gate>& gates);

/// Amplitudes in the Bell-product basis of the live pairs (ancilla stays
/// computational): index bits run (p0, a0, p1, a1, ..., ancilla bits).
std::vector<cdouble> bell_basis_amplitudes(const DenseState& state);

/// Inverse of bell_basis_amplitudes: build the computational-basis state
/// whose Bell-product amplitudes are the given vector (normalized here).
DenseState state_from_bell_amplitudes(std::vector<cdouble> bell_amps,
                                      std::vector<size_t> pair_ids, size_t n_ancilla);

/// Computational-basis components (uu, ud, du, dd) of one Bell state.
const std::array<double, 4>& bell_state_vector(uint8_t label_code);

/// One branch of a complete von Neumann measurement along the N-Bell basis.
struct PremeasureBranch {
    BellString labels;
    double probability;
    DenseState collapsed;
};

/// Complete projective measurement of all live pairs onto the Bell basis
/// (ancilla untouched). Only branches with nonzero probability are returned;
/// probabilities sum to 1.
std::vector<PremeasureBranch> bell_premeasure(const DenseState& state);

/// Squared overlap of the state's pair subsystem with the reference Bell
/// product, the ancilla traced out.
double residual_fidelity(const DenseState& state, const BellString& reference);

/// Fine-outcome probabilities (uu, ud, du, dd) of measuring both members of
/// a pair along z.
std::array<double, 4> pair_z_probabilities(const DenseState& state, size_t pair_id);

/// Collapse a pair onto a fine z outcome and remove its two qubits.
DenseState collapse_pair(const DenseState& state, size_t pair_id, FineOutcome outcome);

enum class Axis : uint8_t { X = 0, Y = 1, Z = 2 };

/// Fine-outcome probabilities of measuring both members of a pair along a
/// common axis.
std::array<double, 4> pair_axis_probabilities(const DenseState& state, size_t pair_id, Axis axis);

/// Collapse onto a fine outcome of a common-axis measurement and drop the pair.
DenseState collapse_pair_axis(const DenseState& state, size_t pair_id, Axis axis,
                              FineOutcome outcome);

/// P(qubit = 1) for one qubit measured along z.
double qubit_one_probability(const DenseState& state, size_t qubit);

/// Apply an arbitrary 2x2 matrix (row-major) to one qubit.
DenseState apply_qubit_matrix(const DenseState& state, size_t qubit,
                              const std::array<cdouble, 4>& u);

/// Bell measurement of two arbitrary qubits (used by the entanglement
/// swapping check): outcome probabilities indexed by label code.
struct BellMeasureBranch {
    BellLabel outcome;
    double probability;
    DenseState collapsed;  // measured qubits removed
};
std::vector<BellMeasureBranch> measure_bell_on_qubits(const DenseState& state, size_t q1,
                                                      size_t q2);

struct DenseRunResult {
    Transcript transcript;
    DenseState residual;
};

/// Run the verification rounds for a fixed subset sequence on amplitudes:
/// the same planned circuits as the label simulation, but with genuine
/// Born-rule fine-grained measurements of each destination pair. Stops at the
/// first failed parity.
DenseRunResult run_protocol_dense(const DenseState& state, const std::vector<BitString>& subsets,
                                  Rng& rng);

}  // namespace eprverify
