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

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "eprverify/bitstring.hpp"
#include "eprverify/rng.hpp"

namespace eprverify {

/// One Bell state as two classical bits:
///
///   Phi+ = 00,  Psi+ = 01,  Phi- = 10,  Psi- = 11
///
/// The first bit records the sign (+/-), the second whether the two members
/// are correlated (Phi) or anticorrelated (Psi) along z.
struct BellLabel {
    uint8_t phase_bit = 0;
    uint8_t amplitude_bit = 0;

    uint8_t code() const {
        return static_cast<uint8_t>((phase_bit << 1) | amplitude_bit);
    }
    static BellLabel from_code(uint8_t c) {
        return BellLabel{static_cast<uint8_t>((c >> 1) & 1), static_cast<uint8_t>(c & 1)};
    }
    /// Parse "phi+", "psi-", ... or the two-bit form "10".
    static BellLabel from_name(const std::string& name);
    std::string name() const;

    bool operator==(const BellLabel&) const = default;
};

inline constexpr BellLabel kPhiPlus{0, 0};
inline constexpr BellLabel kPsiPlus{0, 1};
inline constexpr BellLabel kPhiMinus{1, 0};
inline constexpr BellLabel kSinglet{1, 1};

/// Global phase restricted to {+1, -1, +i, -i}, stored as the exponent of i.
/// Physically unobservable; tracked only so label evolution can be compared
/// amplitude-exactly against the dense simulator.
struct Phase {
    uint8_t i_pow = 0;  // value() == i^i_pow

    Phase operator*(Phase other) const {
        return Phase{static_cast<uint8_t>((i_pow + other.i_pow) & 3)};
    }
    std::complex<double> value() const;
    bool operator==(const Phase&) const = default;
};

inline constexpr Phase kPhasePlusOne{0};
inline constexpr Phase kPhasePlusI{1};
inline constexpr Phase kPhaseMinusOne{2};
inline constexpr Phase kPhaseMinusI{3};

/// The local-operation gate set of the hashing protocol. Bx and By are
/// bilateral pi/2 rotations (both members of a pair), SigmaX is a unilateral
/// pi rotation of Alice's member, Bxor is a bilateral controlled-NOT from
/// source_pair onto target_pair.
enum class GateKind : uint8_t { Bx, By, SigmaX, Bxor };

struct Gate {
    GateKind kind;
    size_t source_pair = 0;
    size_t target_pair = 0;  // Bxor only

    static Gate bx(size_t pair) {
        return Gate{GateKind::Bx, pair, 0};
    }
    static Gate by(size_t pair) {
        return Gate{GateKind::By, pair, 0};
    }
    static Gate sigma_x(size_t pair) {
        return Gate{GateKind::SigmaX, pair, 0};
    }
    static Gate bxor(size_t source, size_t target) {
        return Gate{GateKind::Bxor, source, target};
    }
};

/// N ordered Bell pairs as a list of labels plus one global phase.
///
/// Pairs keep their original identity in `pair_ids` as destination pairs are
/// measured and dropped, so gates, subsets and transcripts can always address
/// pairs by the index they had at creation.
class BellString {
  public:
    BellString() = default;
    BellString(std::vector<BellLabel> labels, Phase phase = kPhasePlusOne);

    /// N perfect singlets: the 2N-bit string of all 1s.
    static BellString singlets(size_t n);

    /// Build from a 2N-bit string (pair k at bits 2k, 2k+1), phase +1.
    static BellString from_bits(const BitString& bits);

    size_t n_pairs() const {
        return labels_.size();
    }
    const std::vector<BellLabel>& labels() const {
        return labels_;
    }
    const std::vector<size_t>& pair_ids() const {
        return pair_ids_;
    }
    Phase phase() const {
        return phase_;
    }

    bool has_pair(size_t id) const;
    const BellLabel& label_of(size_t id) const;

    /// 2L-bit view of the L live pairs, in pair_ids order.
    BitString to_bits() const;

    /// Parity of subset s (full original width) over the live pairs; bits of
    /// dropped pairs are ignored.
    uint8_t live_parity(const BitString& s) const;

    void set_label(size_t id, BellLabel l);
    void multiply_phase(Phase p) {
        phase_ = phase_ * p;
    }
    void erase_pair(size_t id);

    bool labels_equal(const BellString& other) const {
        return labels_ == other.labels_ && pair_ids_ == other.pair_ids_;
    }
    bool operator==(const BellString& other) const {
        return labels_equal(other) && phase_ == other.phase_;
    }

    std::string to_string() const;

  private:
    std::vector<BellLabel> labels_;
    std::vector<size_t> pair_ids_;
    Phase phase_;
    size_t index_of(size_t id) const;
};

/// Action of a single-pair gate on one Bell label.
struct SingleGateAction {
    BellLabel out;
    Phase phase;
};

/// Action of the bilateral CNOT on a (source, target) label pair.
struct BxorAction {
    BellLabel out_source;
    BellLabel out_target;
    Phase phase;
};

/// The complete label-action tables for the gate set: 4 entries per
/// single-pair gate and 16 for Bxor, each with its phase factor.
///
/// The tables were generated from the dense two- and four-qubit simulator and
/// are frozen here as constants; the test suite regenerates them from the
/// simulator and fails on any mismatch.
struct GateActionTable {
    std::array<SingleGateAction, 4> bx;
    std::array<SingleGateAction, 4> by;
    std::array<SingleGateAction, 4> sigma_x;
    std::array<BxorAction, 16> bxor;  // index = source.code() * 4 + target.code()
};

const GateActionTable& gate_action_table();

/// Apply one gate: permutes labels per the action table and multiplies the
/// global phase. A bijection on label strings. Throws std::out_of_range for
/// a pair id that is not live.
BellString apply_gate(const BellString& state, const Gate& g);

BellString apply_gates(const BellString& state, const std::vector<Gate>& gates);

/// Inverse of a gate sequence, staying inside the gate set: Bxor is its own
/// inverse and the single-pair rotations have order four, so each is inverted
/// by applying it three times. Exact at both label and amplitude level.
std::vector<Gate> inverse_gates(const std::vector<Gate>& gates);

/// A synthesized parity-collection circuit.
struct ParityCircuit {
    std::vector<Gate> gates;
    size_t destination;  // pair id whose amplitude bit ends up holding s.x
};

/// Synthesize the gate sequence that collects the subset parity s.x of the
/// current label string x into the amplitude bit of one destination pair,
/// for every basis string x.
///
/// Per touched pair the questioned bit combination is rotated into amplitude
/// position (nothing for the amplitude bit, By for the phase bit, Bx then
/// SigmaX for both), then each touched pair is Bxor-ed into the destination,
/// which is the lowest-index live pair touched by s.
///
/// Throws std::invalid_argument if s selects no live bits.
ParityCircuit build_parity_circuit(const BitString& s, const std::vector<size_t>& live_pairs);

enum class CoarseOutcome : uint8_t { Parallel = 0, Antiparallel = 1 };

enum class FineOutcome : uint8_t { UpUp = 0, UpDown = 1, DownUp = 2, DownDown = 3 };

inline CoarseOutcome coarsen(FineOutcome f) {
    return (f == FineOutcome::UpDown || f == FineOutcome::DownUp) ? CoarseOutcome::Antiparallel
                                                                  : CoarseOutcome::Parallel;
}

/// Parity bit convention: antiparallel = 1, parallel = 0. The all-singlets
/// string is all 1s and a singlet measured along z is always antiparallel.
inline uint8_t parity_bit(CoarseOutcome c) {
    return static_cast<uint8_t>(c);
}

std::string fine_outcome_name(FineOutcome f);

struct MeasuredPair {
    CoarseOutcome coarse;
    FineOutcome fine;
    BellString residual;
};

/// Measure both members of a pair along z and drop the pair. The coarse
/// outcome is determined by the amplitude bit (1 = antiparallel); the fine
/// outcome is uniform over the two outcomes consistent with it.
MeasuredPair measure_pair(const BellString& state, size_t pair_id, Rng& rng);

/// One verification round planned against the evolving all-singlets
/// reference: the parity circuit for s, plus a trailing SigmaX on the
/// destination whenever the reference would answer "parallel", so the honest
/// answer is always antiparallel (parity 1).
struct PlannedRound {
    std::vector<Gate> gates;
    size_t destination;
    /// Label the all-singlets reference holds on the destination when it is
    /// measured (amplitude bit always 1 after normalization).
    BellLabel reference_destination_label;
};

/// Plan one round and advance `reference` through it (gates applied,
/// destination dropped).
PlannedRound plan_round_against_reference(const BitString& s, BellString& reference);

/// Local corrections returning every live pair of `reference` to the singlet
/// label, applied to `reference` as they are emitted. Run after the last
/// round so honest survivors are plain singlets again.
std::vector<Gate> realignment_gates(BellString& reference);

}  // namespace eprverify
