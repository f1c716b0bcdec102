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

#include "eprverify/adversary.hpp"

#include <cmath>
#include <stdexcept>

#include "eprverify/verification.hpp"

namespace eprverify {

BellString single_flaw(size_t n_pairs, size_t position, BellLabel flaw) {
    if (position >= n_pairs) {
        throw std::out_of_range("flaw position out of range");
    }
    if (flaw == kSinglet) {
        throw std::invalid_argument("a singlet flaw is not a cheat");
    }
    BellString s = BellString::singlets(n_pairs);
    s.set_label(position, flaw);
    return s;
}

void BellMixture::validate() const {
    double total = 0;
    for (const auto& [state, weight] : components) {
        (void)state;
        if (weight < 0) {
            throw std::invalid_argument("mixture weights must be nonnegative");
        }
        total += weight;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("mixture weights must sum to 1");
    }
}

BellString BellMixture::sample(Rng& rng) const {
    validate();
    double u = rng.uniform01();
    double acc = 0;
    for (const auto& [state, weight] : components) {
        acc += weight;
        if (u < acc) {
            return state;
        }
    }
    return components.back().first;
}

DenseState general_pure(size_t n_pairs, size_t ancilla_qubits,
                        const std::vector<AmplitudeTerm>& terms, size_t max_qubits) {
    size_t n = 2 * n_pairs + ancilla_qubits;
    if (n > max_qubits) {
        throw std::invalid_argument("state exceeds the dense qubit cap");
    }
    size_t anc_dim = size_t{1} << ancilla_qubits;
    std::vector<cdouble> bell(size_t{1} << n, cdouble(0, 0));
    for (const AmplitudeTerm& t : terms) {
        if (t.labels.size() != 2 * n_pairs) {
            throw std::invalid_argument("label string width must be 2 * n_pairs");
        }
        if (t.ancilla_index >= anc_dim) {
            throw std::invalid_argument("ancilla index out of range");
        }
        size_t w = 0;
        for (size_t i = 0; i < t.labels.size(); i++) {
            w = (w << 1) | t.labels.get(i);
        }
        bell[w * anc_dim + t.ancilla_index] += t.amplitude;
    }
    double norm = 0;
    for (const cdouble& a : bell) {
        norm += std::norm(a);
    }
    if (norm < 1e-12) {
        throw std::invalid_argument("amplitude specification has zero norm");
    }
    double inv = 1.0 / std::sqrt(norm);
    for (cdouble& a : bell) {
        a *= inv;
    }
    std::vector<size_t> ids(n_pairs);
    for (size_t i = 0; i < n_pairs; i++) {
        ids[i] = i;
    }
    return state_from_bell_amplitudes(std::move(bell), std::move(ids), ancilla_qubits);
}

DenseState general_pure_random(size_t n_pairs, size_t ancilla_qubits, Rng& rng,
                               size_t max_qubits) {
    size_t n = 2 * n_pairs + ancilla_qubits;
    if (n > max_qubits) {
        throw std::invalid_argument("state exceeds the dense qubit cap");
    }
    std::vector<cdouble> amps(size_t{1} << n);
    double norm = 0;
    for (cdouble& a : amps) {
        a = cdouble(rng.normal(), rng.normal());
        norm += std::norm(a);
    }
    double inv = 1.0 / std::sqrt(norm);
    for (cdouble& a : amps) {
        a *= inv;
    }
    std::vector<size_t> ids(n_pairs);
    for (size_t i = 0; i < n_pairs; i++) {
        ids[i] = i;
    }
    return DenseState(std::move(amps), std::move(ids), ancilla_qubits);
}

namespace {

std::vector<Gate> full_protocol_gates(const ProtocolPlan& plan) {
    std::vector<Gate> gates;
    for (const PlannedRound& r : plan.rounds) {
        gates.insert(gates.end(), r.gates.begin(), r.gates.end());
    }
    gates.insert(gates.end(), plan.realignment.begin(), plan.realignment.end());
    return gates;
}

}  // namespace

DenseState foreknowledge_cheat(size_t n_pairs, const std::vector<BitString>& subsets,
                               uint8_t target_key_bit, size_t max_qubits) {
    if (2 * n_pairs > max_qubits) {
        throw std::invalid_argument("state exceeds the dense qubit cap");
    }
    ProtocolPlan plan = plan_protocol(n_pairs, subsets);  // throws if no survivor remains

    // Desired final state: every destination pair carries exactly the label
    // the honest reference would show, every survivor is the z-product state
    // encoding the target key bit (|up down> for 0, |down up> for 1).
    std::vector<int> survivor(n_pairs, 0);
    std::vector<BellLabel> dest_label(n_pairs);
    for (size_t id : plan.survivor_ids) {
        survivor[id] = 1;
    }
    for (const PlannedRound& r : plan.rounds) {
        dest_label[r.destination] = r.reference_destination_label;
    }

    std::vector<cdouble> amps{cdouble(1, 0)};
    for (size_t id = 0; id < n_pairs; id++) {
        std::array<double, 4> pair_vec{0, 0, 0, 0};
        if (survivor[id]) {
            pair_vec[target_key_bit ? 2 : 1] = 1.0;  // |10> or |01>
        } else {
            pair_vec = bell_state_vector(dest_label[id].code());
        }
        std::vector<cdouble> next(amps.size() * 4);
        for (size_t i = 0; i < amps.size(); i++) {
            for (int b = 0; b < 4; b++) {
                next[i * 4 + b] = amps[i] * pair_vec[b];
            }
        }
        amps = std::move(next);
    }
    std::vector<size_t> ids(n_pairs);
    for (size_t i = 0; i < n_pairs; i++) {
        ids[i] = i;
    }
    DenseState desired(std::move(amps), std::move(ids), 0);
    return apply_unitaries(desired, inverse_gates(full_protocol_gates(plan)));
}

BellString foreknowledge_cheat_premeasured(size_t n_pairs, const std::vector<BitString>& subsets,
                                           Rng& rng) {
    ProtocolPlan plan = plan_protocol(n_pairs, subsets);
    std::vector<int> survivor(n_pairs, 0);
    std::vector<BellLabel> final_label(n_pairs);
    for (size_t id : plan.survivor_ids) {
        survivor[id] = 1;
    }
    for (const PlannedRound& r : plan.rounds) {
        final_label[r.destination] = r.reference_destination_label;
    }
    // Premeasuring the cheat's final state: each survivor's z-product state
    // has equal weight on psi+ and psi- and none on phi.
    for (size_t id = 0; id < n_pairs; id++) {
        if (survivor[id]) {
            final_label[id] = BellLabel{rng.bit(), 1};
        }
    }
    BellString final_string(final_label);
    return apply_gates(final_string, inverse_gates(full_protocol_gates(plan)));
}

void PhotonSourceModel::validate() const {
    if (!(mean_photon_number > 0)) {
        throw std::invalid_argument("mean photon number must be positive");
    }
    if (!(channel_transmittance > 0) || channel_transmittance > 1) {
        throw std::invalid_argument("channel transmittance must lie in (0, 1]");
    }
    if (!(detector_efficiency > 0) || detector_efficiency > 1) {
        throw std::invalid_argument("detector efficiency must lie in (0, 1]");
    }
}

BeamsplitterReport beamsplitter_attack(const PhotonSourceModel& model) {
    model.validate();
    double mu = model.mean_photon_number;
    BeamsplitterReport report;
    // Poisson: P(n >= 2) = 1 - e^-mu - mu e^-mu.
    report.multiphoton_rate = -std::expm1(-mu) - mu * std::exp(-mu);
    report.detection_rate =
        -std::expm1(-mu * model.channel_transmittance * model.detector_efficiency);
    double ratio = report.multiphoton_rate / report.detection_rate;
    report.feasible = report.multiphoton_rate >= report.detection_rate;
    report.fraction_tapped = std::min(1.0, ratio);
    report.eve_information_fraction = report.feasible ? 1.0 : ratio;
    report.model_note =
        "detection model: P(click) = 1 - exp(-mu*eta*detector_efficiency), threshold "
        "detectors, lossless resend channel (modeling choice)";
    return report;
}

}  // namespace eprverify
