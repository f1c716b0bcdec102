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

#include "eprverify/dense_sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eprverify/verification.hpp"

namespace eprverify {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

// Bell basis vectors in computational order (uu, ud, du, dd), indexed by
// label code.
constexpr double kBellVec[4][4] = {
    {kInvSqrt2, 0, 0, kInvSqrt2},    // phi+
    {0, kInvSqrt2, kInvSqrt2, 0},    // psi+
    {kInvSqrt2, 0, 0, -kInvSqrt2},   // phi-
    {0, kInvSqrt2, -kInvSqrt2, 0},   // psi-
};

size_t bit_position(size_t n_qubits, size_t qubit) {
    return n_qubits - 1 - qubit;  // qubit 0 is the most significant index bit
}

void apply_1q(std::vector<cdouble>& amps, size_t n_qubits, size_t qubit,
              const std::array<cdouble, 4>& u) {
    size_t stride = size_t{1} << bit_position(n_qubits, qubit);
    for (size_t base = 0; base < amps.size(); base += 2 * stride) {
        for (size_t i = base; i < base + stride; i++) {
            cdouble a0 = amps[i];
            cdouble a1 = amps[i + stride];
            amps[i] = u[0] * a0 + u[1] * a1;
            amps[i + stride] = u[2] * a0 + u[3] * a1;
        }
    }
}

void apply_cnot(std::vector<cdouble>& amps, size_t n_qubits, size_t control, size_t target) {
    size_t cbit = size_t{1} << bit_position(n_qubits, control);
    size_t tbit = size_t{1} << bit_position(n_qubits, target);
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(amps[i], amps[i | tbit]);
        }
    }
}

// Apply a 4x4 matrix to the (q1, q2) qubit pair; row/column index is
// (bit of q1) * 2 + (bit of q2).
void apply_2q(std::vector<cdouble>& amps, size_t n_qubits, size_t q1, size_t q2,
              const double m[4][4]) {
    size_t b1 = size_t{1} << bit_position(n_qubits, q1);
    size_t b2 = size_t{1} << bit_position(n_qubits, q2);
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i & b1) || (i & b2)) {
            continue;  // visit each group once, at its 00 member
        }
        size_t idx[4] = {i, i | b2, i | b1, i | b1 | b2};
        cdouble in[4];
        for (int k = 0; k < 4; k++) {
            in[k] = amps[idx[k]];
        }
        for (int r = 0; r < 4; r++) {
            cdouble acc = 0;
            for (int c = 0; c < 4; c++) {
                acc += m[r][c] * in[c];
            }
            amps[idx[r]] = acc;
        }
    }
}

// B maps label-code basis vectors to Bell states; B^T is its inverse.
constexpr double kBellMatrix[4][4] = {
    {kInvSqrt2, 0, kInvSqrt2, 0},
    {0, kInvSqrt2, 0, kInvSqrt2},
    {0, kInvSqrt2, 0, -kInvSqrt2},
    {kInvSqrt2, 0, -kInvSqrt2, 0},
};
constexpr double kBellMatrixT[4][4] = {
    {kInvSqrt2, 0, 0, kInvSqrt2},
    {0, kInvSqrt2, kInvSqrt2, 0},
    {kInvSqrt2, 0, 0, -kInvSqrt2},
    {0, kInvSqrt2, -kInvSqrt2, 0},
};

const std::array<cdouble, 4> kRxHalfPi = {cdouble(kInvSqrt2, 0), cdouble(0, -kInvSqrt2),
                                          cdouble(0, -kInvSqrt2), cdouble(kInvSqrt2, 0)};
const std::array<cdouble, 4> kRyHalfPi = {cdouble(kInvSqrt2, 0), cdouble(-kInvSqrt2, 0),
                                          cdouble(kInvSqrt2, 0), cdouble(kInvSqrt2, 0)};
const std::array<cdouble, 4> kRxPi = {cdouble(0, 0), cdouble(0, -1), cdouble(0, -1),
                                      cdouble(0, 0)};

}  // namespace

// ---------------------------------------------------------------------------
// DenseState

DenseState::DenseState(std::vector<cdouble> amps, std::vector<size_t> pair_ids, size_t n_ancilla)
    : amps_(std::move(amps)), pair_ids_(std::move(pair_ids)), n_ancilla_(n_ancilla) {
    size_t n = 2 * pair_ids_.size() + n_ancilla_;
    if (amps_.size() != (size_t{1} << n)) {
        throw std::invalid_argument("amplitude vector size does not match qubit count");
    }
    double nm = norm();
    if (std::abs(nm - 1.0) > 1e-6) {
        throw std::invalid_argument("state is not normalized");
    }
    // keep the invariant tight against drift from long gate sequences
    double inv = 1.0 / std::sqrt(nm);
    for (cdouble& a : amps_) {
        a *= inv;
    }
}

double DenseState::norm() const {
    double s = 0;
    for (const cdouble& a : amps_) {
        s += std::norm(a);
    }
    return s;
}

size_t DenseState::slot_of(size_t id) const {
    for (size_t i = 0; i < pair_ids_.size(); i++) {
        if (pair_ids_[i] == id) {
            return i;
        }
    }
    throw std::out_of_range("pair id not live");
}

bool DenseState::has_pair(size_t id) const {
    return std::find(pair_ids_.begin(), pair_ids_.end(), id) != pair_ids_.end();
}

std::pair<size_t, size_t> DenseState::qubits_of(size_t id) const {
    size_t slot = slot_of(id);
    return {2 * slot, 2 * slot + 1};
}

// ---------------------------------------------------------------------------

DenseState prepare_bell_product(const BellString& labels, size_t n_ancilla, size_t max_qubits) {
    size_t n = 2 * labels.n_pairs() + n_ancilla;
    if (n > max_qubits) {
        throw std::invalid_argument("state exceeds the dense qubit cap");
    }
    std::vector<cdouble> amps{labels.phase().value()};
    for (const BellLabel& l : labels.labels()) {
        std::vector<cdouble> next(amps.size() * 4);
        for (size_t i = 0; i < amps.size(); i++) {
            for (int b = 0; b < 4; b++) {
                next[i * 4 + b] = amps[i] * kBellVec[l.code()][b];
            }
        }
        amps = std::move(next);
    }
    amps.resize(amps.size() << n_ancilla);  // ancilla |0..0>: new entries are zero
    // The resize appends zeros at the high end of each block; with the
    // ancilla last (least significant), the |0..0> component of each block is
    // its first entry, so amplitudes must be spread out instead.
    if (n_ancilla > 0) {
        size_t block = size_t{1} << n_ancilla;
        for (size_t i = amps.size() / block; i-- > 0;) {
            cdouble v = amps[i];
            amps[i] = 0;
            amps[i * block] = v;
        }
    }
    return DenseState(std::move(amps), labels.pair_ids(), n_ancilla);
}

DenseState apply_unitary(const DenseState& state, const Gate& g) {
    DenseState out = state;
    auto& amps = out.amplitudes();
    size_t n = state.n_qubits();
    switch (g.kind) {
        case GateKind::Bx: {
            auto [qa, qb] = state.qubits_of(g.source_pair);
            apply_1q(amps, n, qa, kRxHalfPi);
            apply_1q(amps, n, qb, kRxHalfPi);
            break;
        }
        case GateKind::By: {
            auto [qa, qb] = state.qubits_of(g.source_pair);
            apply_1q(amps, n, qa, kRyHalfPi);
            apply_1q(amps, n, qb, kRyHalfPi);
            break;
        }
        case GateKind::SigmaX: {
            auto [qa, qb] = state.qubits_of(g.source_pair);
            (void)qb;
            apply_1q(amps, n, qa, kRxPi);
            break;
        }
        case GateKind::Bxor: {
            auto [sa, sb] = state.qubits_of(g.source_pair);
            auto [ta, tb] = state.qubits_of(g.target_pair);
            apply_cnot(amps, n, sa, ta);
            apply_cnot(amps, n, sb, tb);
            break;
        }
    }
    return out;
}

DenseState apply_unitaries(const DenseState& state, const std::vector<Gate>& gates) {
    DenseState out = state;
    for (const Gate& g : gates) {
        out = apply_unitary(out, g);
    }
    return out;
}

std::vector<cdouble> bell_basis_amplitudes(const DenseState& state) {
    std::vector<cdouble> amps = state.amplitudes();
    size_t n = state.n_qubits();
    for (size_t slot = 0; slot < state.n_pairs(); slot++) {
        apply_2q(amps, n, 2 * slot, 2 * slot + 1, kBellMatrixT);
    }
    return amps;
}

DenseState state_from_bell_amplitudes(std::vector<cdouble> bell_amps,
                                      std::vector<size_t> pair_ids, size_t n_ancilla) {
    size_t n = 2 * pair_ids.size() + n_ancilla;
    if (bell_amps.size() != (size_t{1} << n)) {
        throw std::invalid_argument("bell amplitude vector size mismatch");
    }
    for (size_t slot = 0; slot < pair_ids.size(); slot++) {
        apply_2q(bell_amps, n, 2 * slot, 2 * slot + 1, kBellMatrix);
    }
    return DenseState(std::move(bell_amps), std::move(pair_ids), n_ancilla);
}

const std::array<double, 4>& bell_state_vector(uint8_t label_code) {
    static const std::array<std::array<double, 4>, 4> vecs = {{
        {kInvSqrt2, 0, 0, kInvSqrt2},
        {0, kInvSqrt2, kInvSqrt2, 0},
        {kInvSqrt2, 0, 0, -kInvSqrt2},
        {0, kInvSqrt2, -kInvSqrt2, 0},
    }};
    return vecs[label_code & 3];
}

std::vector<PremeasureBranch> bell_premeasure(const DenseState& state) {
    std::vector<cdouble> bell = bell_basis_amplitudes(state);
    size_t n_pairs = state.n_pairs();
    size_t anc_dim = size_t{1} << state.n_ancilla();
    size_t label_count = size_t{1} << (2 * n_pairs);

    std::vector<PremeasureBranch> branches;
    for (size_t w = 0; w < label_count; w++) {
        double prob = 0;
        for (size_t j = 0; j < anc_dim; j++) {
            prob += std::norm(bell[w * anc_dim + j]);
        }
        if (prob < 1e-14) {
            continue;
        }
        std::vector<cdouble> collapsed(bell.size(), 0);
        double inv = 1.0 / std::sqrt(prob);
        for (size_t j = 0; j < anc_dim; j++) {
            collapsed[w * anc_dim + j] = bell[w * anc_dim + j] * inv;
        }
        std::vector<BellLabel> labels(n_pairs);
        for (size_t k = 0; k < n_pairs; k++) {
            uint8_t code = static_cast<uint8_t>((w >> (2 * (n_pairs - 1 - k))) & 3);
            labels[k] = BellLabel::from_code(code);
        }
        BellString label_string(std::move(labels));
        branches.push_back(PremeasureBranch{
            std::move(label_string), prob,
            state_from_bell_amplitudes(std::move(collapsed), state.pair_ids(),
                                       state.n_ancilla())});
    }
    return branches;
}

double residual_fidelity(const DenseState& state, const BellString& reference) {
    if (reference.n_pairs() != state.n_pairs()) {
        throw std::invalid_argument("reference pair count mismatch");
    }
    std::vector<cdouble> bell = bell_basis_amplitudes(state);
    size_t anc_dim = size_t{1} << state.n_ancilla();
    size_t w = 0;
    for (const BellLabel& l : reference.labels()) {
        w = (w << 2) | l.code();
    }
    double fid = 0;
    for (size_t j = 0; j < anc_dim; j++) {
        fid += std::norm(bell[w * anc_dim + j]);
    }
    return fid;
}

std::array<double, 4> pair_z_probabilities(const DenseState& state, size_t pair_id) {
    auto [qa, qb] = state.qubits_of(pair_id);
    size_t n = state.n_qubits();
    size_t ba = size_t{1} << bit_position(n, qa);
    size_t bb = size_t{1} << bit_position(n, qb);
    std::array<double, 4> probs{0, 0, 0, 0};
    const auto& amps = state.amplitudes();
    for (size_t i = 0; i < amps.size(); i++) {
        int o = (((i & ba) ? 1 : 0) << 1) | ((i & bb) ? 1 : 0);
        probs[static_cast<size_t>(o)] += std::norm(amps[i]);
    }
    return probs;
}

DenseState collapse_pair(const DenseState& state, size_t pair_id, FineOutcome outcome) {
    auto [qa, qb] = state.qubits_of(pair_id);
    size_t n = state.n_qubits();
    size_t pa = bit_position(n, qa);
    size_t pb = bit_position(n, qb);
    size_t ba = size_t{1} << pa;
    size_t bb = size_t{1} << pb;
    uint8_t o = static_cast<uint8_t>(outcome);
    size_t want = ((o >> 1) ? ba : 0) | ((o & 1) ? bb : 0);
    size_t mask = ba | bb;

    double prob = 0;
    const auto& amps = state.amplitudes();
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i & mask) == want) {
            prob += std::norm(amps[i]);
        }
    }
    if (prob < 1e-14) {
        throw std::invalid_argument("collapse onto a zero-probability outcome");
    }
    double inv = 1.0 / std::sqrt(prob);

    std::vector<cdouble> next(amps.size() >> 2);
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i & mask) != want) {
            continue;
        }
        // delete the two measured bits from the index
        size_t hi = pa > pb ? pa : pb;
        size_t lo = pa > pb ? pb : pa;
        size_t j = i;
        j = ((j >> (hi + 1)) << hi) | (j & ((size_t{1} << hi) - 1));
        j = ((j >> (lo + 1)) << lo) | (j & ((size_t{1} << lo) - 1));
        next[j] = amps[i] * inv;
    }
    std::vector<size_t> ids = state.pair_ids();
    ids.erase(std::find(ids.begin(), ids.end(), pair_id));
    return DenseState(std::move(next), std::move(ids), state.n_ancilla());
}

namespace {

// Basis change sending the axis eigenbasis to the computational one.
const std::array<cdouble, 4> kToZFromX = {cdouble(kInvSqrt2, 0), cdouble(kInvSqrt2, 0),
                                          cdouble(kInvSqrt2, 0), cdouble(-kInvSqrt2, 0)};
const std::array<cdouble, 4> kToZFromY = {cdouble(kInvSqrt2, 0), cdouble(0, -kInvSqrt2),
                                          cdouble(kInvSqrt2, 0), cdouble(0, kInvSqrt2)};

DenseState rotate_pair_to_axis(const DenseState& state, size_t pair_id, Axis axis) {
    if (axis == Axis::Z) {
        return state;
    }
    DenseState out = state;
    auto [qa, qb] = state.qubits_of(pair_id);
    const auto& u = axis == Axis::X ? kToZFromX : kToZFromY;
    apply_1q(out.amplitudes(), out.n_qubits(), qa, u);
    apply_1q(out.amplitudes(), out.n_qubits(), qb, u);
    return out;
}

}  // namespace

std::array<double, 4> pair_axis_probabilities(const DenseState& state, size_t pair_id, Axis axis) {
    return pair_z_probabilities(rotate_pair_to_axis(state, pair_id, axis), pair_id);
}

DenseState collapse_pair_axis(const DenseState& state, size_t pair_id, Axis axis,
                              FineOutcome outcome) {
    return collapse_pair(rotate_pair_to_axis(state, pair_id, axis), pair_id, outcome);
}

DenseState apply_qubit_matrix(const DenseState& state, size_t qubit,
                              const std::array<cdouble, 4>& u) {
    DenseState out = state;
    apply_1q(out.amplitudes(), out.n_qubits(), qubit, u);
    return out;
}

double qubit_one_probability(const DenseState& state, size_t qubit) {
    size_t b = size_t{1} << bit_position(state.n_qubits(), qubit);
    double p = 0;
    const auto& amps = state.amplitudes();
    for (size_t i = 0; i < amps.size(); i++) {
        if (i & b) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

std::vector<BellMeasureBranch> measure_bell_on_qubits(const DenseState& state, size_t q1,
                                                      size_t q2) {
    if (state.n_ancilla() != 0) {
        throw std::invalid_argument("bell measurement on arbitrary qubits expects no ancilla");
    }
    size_t n = state.n_qubits();
    std::vector<cdouble> amps = state.amplitudes();
    apply_2q(amps, n, q1, q2, kBellMatrixT);

    size_t p1 = bit_position(n, q1);
    size_t p2 = bit_position(n, q2);
    size_t b1 = size_t{1} << p1;
    size_t b2 = size_t{1} << p2;

    std::vector<BellMeasureBranch> branches;
    for (uint8_t code = 0; code < 4; code++) {
        size_t want = ((code >> 1) ? b1 : 0) | ((code & 1) ? b2 : 0);
        double prob = 0;
        for (size_t i = 0; i < amps.size(); i++) {
            if ((i & (b1 | b2)) == want) {
                prob += std::norm(amps[i]);
            }
        }
        if (prob < 1e-14) {
            continue;
        }
        double inv = 1.0 / std::sqrt(prob);
        std::vector<cdouble> next(amps.size() >> 2);
        size_t hi = p1 > p2 ? p1 : p2;
        size_t lo = p1 > p2 ? p2 : p1;
        for (size_t i = 0; i < amps.size(); i++) {
            if ((i & (b1 | b2)) != want) {
                continue;
            }
            size_t j = i;
            j = ((j >> (hi + 1)) << hi) | (j & ((size_t{1} << hi) - 1));
            j = ((j >> (lo + 1)) << lo) | (j & ((size_t{1} << lo) - 1));
            next[j] = amps[i] * inv;
        }
        size_t remaining = n - 2;
        if (remaining % 2 != 0) {
            throw std::invalid_argument("remaining qubits do not form pairs");
        }
        std::vector<size_t> fresh_ids(remaining / 2);
        for (size_t k = 0; k < fresh_ids.size(); k++) {
            fresh_ids[k] = k;
        }
        branches.push_back(BellMeasureBranch{BellLabel::from_code(code), prob,
                                             DenseState(std::move(next), std::move(fresh_ids), 0)});
    }
    return branches;
}

DenseRunResult run_protocol_dense(const DenseState& state, const std::vector<BitString>& subsets,
                                  Rng& rng) {
    for (size_t i = 0; i < state.pair_ids().size(); i++) {
        if (state.pair_ids()[i] != i) {
            throw std::invalid_argument("protocol input must have fresh pair ids 0..N-1");
        }
    }
    ProtocolPlan plan = plan_protocol(state.n_pairs(), subsets);

    DenseState current = state;
    Transcript transcript;
    for (size_t r = 0; r < plan.rounds.size(); r++) {
        const PlannedRound& round = plan.rounds[r];
        current = apply_unitaries(current, round.gates);
        std::array<double, 4> probs = pair_z_probabilities(current, round.destination);
        double u = rng.uniform01();
        uint8_t fine = 3;
        double acc = 0;
        for (uint8_t o = 0; o < 4; o++) {
            acc += probs[o];
            if (u < acc) {
                fine = o;
                break;
            }
        }
        FineOutcome f = static_cast<FineOutcome>(fine);
        current = collapse_pair(current, round.destination, f);
        transcript.rounds.push_back(
            TranscriptRound{subsets[r], round.destination, f, coarsen(f)});
        if (coarsen(f) != CoarseOutcome::Antiparallel) {
            transcript.accepted = false;
            return DenseRunResult{std::move(transcript), std::move(current)};
        }
    }
    current = apply_unitaries(current, plan.realignment);
    transcript.accepted = true;
    return DenseRunResult{std::move(transcript), std::move(current)};
}

}  // namespace eprverify
