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

#include "eprverify/bell_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace eprverify {

// ---------------------------------------------------------------------------
// BitString

BitString BitString::from_string(const std::string& s) {
    BitString out(s.size());
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] == '1') {
            out.bits_[i] = 1;
        } else if (s[i] != '0') {
            throw std::invalid_argument("bit string may contain only '0' and '1'");
        }
    }
    return out;
}

bool BitString::any() const {
    return std::any_of(bits_.begin(), bits_.end(), [](uint8_t b) { return b != 0; });
}

size_t BitString::weight() const {
    size_t w = 0;
    for (uint8_t b : bits_) {
        w += b;
    }
    return w;
}

BitString BitString::operator^(const BitString& other) const {
    if (size() != other.size()) {
        throw std::invalid_argument("bit string length mismatch");
    }
    BitString out(size());
    for (size_t i = 0; i < size(); i++) {
        out.bits_[i] = bits_[i] ^ other.bits_[i];
    }
    return out;
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(size());
    for (uint8_t b : bits_) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

std::string BitString::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (size_t i = 0; i < size(); i += 4) {
        int d = 0;
        for (size_t j = 0; j < 4; j++) {
            d <<= 1;
            if (i + j < size()) {
                d |= bits_[i + j];
            }
        }
        s.push_back(digits[d]);
    }
    return s;
}

uint8_t subset_parity(const BitString& x, const BitString& s) {
    if (x.size() != s.size()) {
        throw std::invalid_argument("subset_parity: length mismatch");
    }
    uint8_t p = 0;
    for (size_t i = 0; i < x.size(); i++) {
        p ^= static_cast<uint8_t>(x.get(i) & s.get(i));
    }
    return p;
}

// ---------------------------------------------------------------------------
// BellLabel / Phase

BellLabel BellLabel::from_name(const std::string& name) {
    if (name == "phi+") return kPhiPlus;
    if (name == "psi+") return kPsiPlus;
    if (name == "phi-") return kPhiMinus;
    if (name == "psi-") return kSinglet;
    if (name.size() == 2 && (name[0] == '0' || name[0] == '1') &&
        (name[1] == '0' || name[1] == '1')) {
        return BellLabel{static_cast<uint8_t>(name[0] - '0'), static_cast<uint8_t>(name[1] - '0')};
    }
    throw std::invalid_argument("unknown Bell label: " + name);
}

std::string BellLabel::name() const {
    switch (code()) {
        case 0:
            return "phi+";
        case 1:
            return "psi+";
        case 2:
            return "phi-";
        default:
            return "psi-";
    }
}

std::complex<double> Phase::value() const {
    switch (i_pow & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

// ---------------------------------------------------------------------------
// BellString

BellString::BellString(std::vector<BellLabel> labels, Phase phase)
    : labels_(std::move(labels)), phase_(phase) {
    pair_ids_.resize(labels_.size());
    for (size_t i = 0; i < pair_ids_.size(); i++) {
        pair_ids_[i] = i;
    }
}

BellString BellString::singlets(size_t n) {
    return BellString(std::vector<BellLabel>(n, kSinglet));
}

BellString BellString::from_bits(const BitString& bits) {
    if (bits.size() % 2 != 0) {
        throw std::invalid_argument("label bit string must have even length");
    }
    std::vector<BellLabel> labels(bits.size() / 2);
    for (size_t k = 0; k < labels.size(); k++) {
        labels[k] = BellLabel{bits.get(2 * k), bits.get(2 * k + 1)};
    }
    return BellString(std::move(labels));
}

size_t BellString::index_of(size_t id) const {
    for (size_t i = 0; i < pair_ids_.size(); i++) {
        if (pair_ids_[i] == id) {
            return i;
        }
    }
    throw std::out_of_range("pair id not live");
}

bool BellString::has_pair(size_t id) const {
    return std::find(pair_ids_.begin(), pair_ids_.end(), id) != pair_ids_.end();
}

const BellLabel& BellString::label_of(size_t id) const {
    return labels_[index_of(id)];
}

BitString BellString::to_bits() const {
    BitString out(2 * labels_.size());
    for (size_t k = 0; k < labels_.size(); k++) {
        out.set(2 * k, labels_[k].phase_bit);
        out.set(2 * k + 1, labels_[k].amplitude_bit);
    }
    return out;
}

uint8_t BellString::live_parity(const BitString& s) const {
    uint8_t p = 0;
    for (size_t i = 0; i < pair_ids_.size(); i++) {
        size_t id = pair_ids_[i];
        p ^= static_cast<uint8_t>(s.get(2 * id) & labels_[i].phase_bit);
        p ^= static_cast<uint8_t>(s.get(2 * id + 1) & labels_[i].amplitude_bit);
    }
    return p;
}

void BellString::set_label(size_t id, BellLabel l) {
    labels_[index_of(id)] = l;
}

void BellString::erase_pair(size_t id) {
    size_t i = index_of(id);
    labels_.erase(labels_.begin() + static_cast<ptrdiff_t>(i));
    pair_ids_.erase(pair_ids_.begin() + static_cast<ptrdiff_t>(i));
}

std::string BellString::to_string() const {
    std::string s;
    for (size_t i = 0; i < labels_.size(); i++) {
        if (i) {
            s.push_back(',');
        }
        s += labels_[i].name();
    }
    return s;
}

// ---------------------------------------------------------------------------
// Gate action tables
//
// Frozen from the dense simulator (check_gate_tables regenerates and
// compares). In bit form, with (p, a) the phase and amplitude bits:
//
//   Bx:     (p, a) -> (p, a ^ p ^ 1)      phase -i when p = 0, +1 when p = 1
//   By:     (p, a) -> (a, p)              phase -1 for psi+ -> phi-, else +1
//   SigmaX: (p, a) -> (p, a ^ 1)          phase -i when p = 0, +i when p = 1
//   Bxor:   (ps, as), (pt, at) -> (ps ^ pt, as), (pt, as ^ at)   phase +1

namespace {

constexpr GateActionTable make_gate_table() {
    GateActionTable t{};
    for (uint8_t c = 0; c < 4; c++) {
        uint8_t p = (c >> 1) & 1;
        uint8_t a = c & 1;
        t.bx[c] = SingleGateAction{BellLabel{p, static_cast<uint8_t>(a ^ p ^ 1)},
                                   p ? kPhasePlusOne : kPhaseMinusI};
        t.by[c] = SingleGateAction{BellLabel{a, p},
                                   (p == 0 && a == 1) ? kPhaseMinusOne : kPhasePlusOne};
        t.sigma_x[c] = SingleGateAction{BellLabel{p, static_cast<uint8_t>(a ^ 1)},
                                        p ? kPhasePlusI : kPhaseMinusI};
    }
    for (uint8_t s = 0; s < 4; s++) {
        for (uint8_t u = 0; u < 4; u++) {
            uint8_t ps = (s >> 1) & 1, as = s & 1;
            uint8_t pt = (u >> 1) & 1, at = u & 1;
            t.bxor[s * 4 + u] = BxorAction{BellLabel{static_cast<uint8_t>(ps ^ pt), as},
                                           BellLabel{pt, static_cast<uint8_t>(as ^ at)},
                                           kPhasePlusOne};
        }
    }
    return t;
}

constexpr GateActionTable kGateTable = make_gate_table();

}  // namespace

const GateActionTable& gate_action_table() {
    return kGateTable;
}

BellString apply_gate(const BellString& state, const Gate& g) {
    BellString out = state;
    const GateActionTable& t = gate_action_table();
    switch (g.kind) {
        case GateKind::Bx: {
            const auto& e = t.bx[state.label_of(g.source_pair).code()];
            out.set_label(g.source_pair, e.out);
            out.multiply_phase(e.phase);
            break;
        }
        case GateKind::By: {
            const auto& e = t.by[state.label_of(g.source_pair).code()];
            out.set_label(g.source_pair, e.out);
            out.multiply_phase(e.phase);
            break;
        }
        case GateKind::SigmaX: {
            const auto& e = t.sigma_x[state.label_of(g.source_pair).code()];
            out.set_label(g.source_pair, e.out);
            out.multiply_phase(e.phase);
            break;
        }
        case GateKind::Bxor: {
            if (g.source_pair == g.target_pair) {
                throw std::invalid_argument("Bxor requires two distinct pairs");
            }
            const auto& e = t.bxor[state.label_of(g.source_pair).code() * 4 +
                                   state.label_of(g.target_pair).code()];
            out.set_label(g.source_pair, e.out_source);
            out.set_label(g.target_pair, e.out_target);
            out.multiply_phase(e.phase);
            break;
        }
    }
    return out;
}

BellString apply_gates(const BellString& state, const std::vector<Gate>& gates) {
    BellString out = state;
    for (const Gate& g : gates) {
        out = apply_gate(out, g);
    }
    return out;
}

std::vector<Gate> inverse_gates(const std::vector<Gate>& gates) {
    std::vector<Gate> inv;
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (it->kind == GateKind::Bxor) {
            inv.push_back(*it);
        } else {
            inv.push_back(*it);
            inv.push_back(*it);
            inv.push_back(*it);
        }
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Circuit synthesis

ParityCircuit build_parity_circuit(const BitString& s, const std::vector<size_t>& live_pairs) {
    std::vector<size_t> touched;
    for (size_t id : live_pairs) {
        if (2 * id + 1 >= s.size()) {
            throw std::out_of_range("live pair outside subset width");
        }
        if (s.get(2 * id) || s.get(2 * id + 1)) {
            touched.push_back(id);
        }
    }
    if (touched.empty()) {
        throw std::invalid_argument("subset selects no live bits: not a question");
    }
    std::sort(touched.begin(), touched.end());
    size_t destination = touched.front();

    ParityCircuit circuit;
    circuit.destination = destination;
    for (size_t id : touched) {
        uint8_t ask_phase = s.get(2 * id);
        uint8_t ask_amp = s.get(2 * id + 1);
        if (ask_phase && ask_amp) {
            // amplitude <- p ^ a
            circuit.gates.push_back(Gate::bx(id));
            circuit.gates.push_back(Gate::sigma_x(id));
        } else if (ask_phase) {
            // amplitude <- p
            circuit.gates.push_back(Gate::by(id));
        }
        // amplitude-only questions need no rotation
    }
    for (size_t id : touched) {
        if (id != destination) {
            circuit.gates.push_back(Gate::bxor(id, destination));
        }
    }
    return circuit;
}

std::string fine_outcome_name(FineOutcome f) {
    switch (f) {
        case FineOutcome::UpUp:
            return "uu";
        case FineOutcome::UpDown:
            return "ud";
        case FineOutcome::DownUp:
            return "du";
        default:
            return "dd";
    }
}

MeasuredPair measure_pair(const BellString& state, size_t pair_id, Rng& rng) {
    const BellLabel& label = state.label_of(pair_id);  // throws if not live
    uint8_t flip = rng.bit();
    FineOutcome fine;
    CoarseOutcome coarse;
    if (label.amplitude_bit) {
        coarse = CoarseOutcome::Antiparallel;
        fine = flip ? FineOutcome::DownUp : FineOutcome::UpDown;
    } else {
        coarse = CoarseOutcome::Parallel;
        fine = flip ? FineOutcome::DownDown : FineOutcome::UpUp;
    }
    BellString residual = state;
    residual.erase_pair(pair_id);
    return MeasuredPair{coarse, fine, residual};
}

PlannedRound plan_round_against_reference(const BitString& s, BellString& reference) {
    ParityCircuit circuit = build_parity_circuit(s, reference.pair_ids());
    reference = apply_gates(reference, circuit.gates);
    PlannedRound round{std::move(circuit.gates), circuit.destination, BellLabel{}};
    if (reference.label_of(round.destination).amplitude_bit == 0) {
        // The honest answer would be "parallel"; flip the destination so the
        // expected parity is always 1. A public deterministic step, part of
        // the announced round.
        Gate flip = Gate::sigma_x(round.destination);
        round.gates.push_back(flip);
        reference = apply_gate(reference, flip);
    }
    round.reference_destination_label = reference.label_of(round.destination);
    reference.erase_pair(round.destination);
    return round;
}

std::vector<Gate> realignment_gates(BellString& reference) {
    std::vector<Gate> gates;
    for (size_t id : reference.pair_ids()) {
        BellLabel l = reference.label_of(id);
        if (l.amplitude_bit == 0) {
            gates.push_back(Gate::sigma_x(id));
            l.amplitude_bit = 1;
        }
        if (l.phase_bit == 0) {
            gates.push_back(Gate::by(id));
            gates.push_back(Gate::sigma_x(id));
        }
    }
    reference = apply_gates(reference, gates);
    return gates;
}

}  // namespace eprverify
