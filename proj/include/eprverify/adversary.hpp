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
#include <string>
#include <vector>

#include "eprverify/bell_algebra.hpp"
#include "eprverify/bitstring.hpp"
#include "eprverify/dense_sim.hpp"
#include "eprverify/rng.hpp"

namespace eprverify {

/// All singlets except one substituted label. The flaw must differ from the
/// singlet (otherwise it is not a cheat) and the position must be in range.
BellString single_flaw(size_t n_pairs, size_t position, BellLabel flaw);

/// A classical mixture of Bell-product states: Eve commits to a distribution
/// over 2N-bit label strings and one string is sampled per protocol run.
struct BellMixture {
    std::vector<std::pair<BellString, double>> components;

    /// Throws std::invalid_argument if weights are negative or do not sum
    /// to 1 within 1e-9.
    void validate() const;
    BellString sample(Rng& rng) const;
};

/// One term of an explicit pure-state specification: amplitude on
/// |label string> (x) |ancilla basis state j>.
struct AmplitudeTerm {
    BitString labels;  // 2N bits
    size_t ancilla_index = 0;
    cdouble amplitude;
};

/// Eve's general strategy: an arbitrary normalized pure state over the N
/// pairs plus an ancilla she keeps. Throws above the qubit cap or if the
/// terms have zero norm (the state is normalized from the given amplitudes).
DenseState general_pure(size_t n_pairs, size_t ancilla_qubits,
                        const std::vector<AmplitudeTerm>& terms,
                        size_t max_qubits = kDefaultMaxQubits);

/// Haar-like random strategy: i.i.d. complex Gaussian amplitudes over the
/// full pairs-plus-ancilla space, normalized.
DenseState general_pure_random(size_t n_pairs, size_t ancilla_qubits, Rng& rng,
                               size_t max_qubits = kDefaultMaxQubits);

/// The subset-foreknowledge cheat: given the subsets that will be asked (in
/// order) and a target key bit, construct the state that passes every round
/// with certainty and forces every surviving key bit to the target value.
///
/// Built by writing down the desired final state (the honest labels on every
/// destination pair, the z-product encoding the key on every survivor) and
/// applying the inverse of the full protocol unitary. Throws if the subset
/// list leaves no surviving pair or exceeds the qubit cap.
DenseState foreknowledge_cheat(size_t n_pairs, const std::vector<BitString>& subsets,
                               uint8_t target_key_bit, size_t max_qubits = kDefaultMaxQubits);

/// Label-level sample of the Bell-premeasured mixture of the foreknowledge
/// cheat state, usable at any N. Premeasuring the cheat state sends each
/// survivor to Psi+ or Psi- with probability 1/2 (the z-product states have
/// no Phi component) and every destination pair to its honest label; the
/// sampled final string is then pulled back through the inverse label
/// circuit. By the reduction property this reproduces the cheat's coarse
/// statistics exactly.
BellString foreknowledge_cheat_premeasured(size_t n_pairs, const std::vector<BitString>& subsets,
                                           Rng& rng);

/// Poissonian photon source going into a lossy channel with threshold
/// detectors.
struct PhotonSourceModel {
    double mean_photon_number = 0.1;   // mu > 0
    double channel_transmittance = 1;  // eta in (0, 1]
    double detector_efficiency = 1;    // in (0, 1]

    void validate() const;
};

/// Beamsplitter attack analysis. Eve measures the photon number of each
/// pulse, keeps single-photon pulses, splits one photon off multiphoton
/// pulses and forwards the rest over a lossless channel. The attack is fully
/// feasible when the multiphoton rate covers Bob's expected detection rate,
/// modeled as 1 - exp(-mu * eta * detector_efficiency).
struct BeamsplitterReport {
    double multiphoton_rate = 0;    // P(n >= 2) under Poisson(mu)
    double detection_rate = 0;      // Bob's expected click rate, honest channel
    double fraction_tapped = 0;     // share of Bob's detections Eve can cover
    double eve_information_fraction = 0;  // 1 when feasible
    bool feasible = false;
    std::string model_note;  // records the detection-rate modeling choice
};

BeamsplitterReport beamsplitter_attack(const PhotonSourceModel& model);

}  // namespace eprverify
