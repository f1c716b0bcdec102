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

#include <cstdint>
#include <vector>

#include "eprverify/bell_algebra.hpp"
#include "eprverify/bitstring.hpp"
#include "eprverify/dense_sim.hpp"
#include "eprverify/rng.hpp"
#include "eprverify/transcript.hpp"

namespace eprverify {

struct ProtocolParams {
    size_t n_pairs = 0;   // N
    size_t n_rounds = 0;  // m, pairs sacrificed; requires 0 < m < N

    void validate() const;  // throws std::invalid_argument
};

/// Draw the m verification subsets: each uniform over the nonzero bit
/// patterns on the pairs still live at that round (full original width,
/// zero on dropped pairs). The live set is tracked by evolving the
/// all-singlets reference, so drawing can happen before any measurement.
std::vector<BitString> draw_subsets(size_t n_pairs, size_t m, Rng& rng);

/// The full plan for a fixed subset sequence: per-round circuits (with the
/// honest answer normalized to antiparallel), the realignment returning
/// survivors to singlet form, and the surviving pair ids.
struct ProtocolPlan {
    std::vector<PlannedRound> rounds;
    std::vector<Gate> realignment;
    std::vector<size_t> survivor_ids;
};

ProtocolPlan plan_protocol(size_t n_pairs, const std::vector<BitString>& subsets);

struct LabelRunResult {
    Transcript transcript;
    BellString survivors;  // empty on reject
};

/// Label-level protocol run for a fixed subset sequence.
LabelRunResult run_protocol_labels(const BellString& source, const std::vector<BitString>& subsets,
                                   Rng& rng);

/// The verification protocol: m rounds of random subset parities, each
/// collected into a destination pair that is measured and dropped; reject on
/// the first parity that is not 1 (antiparallel). On accept the N-m
/// survivors are realigned to singlet form and returned.
///
/// Subsets are drawn from `rng` only after the source state has been
/// supplied.
LabelRunResult run_verification(const BellString& source, const ProtocolParams& params, Rng& rng);

DenseRunResult run_verification(const DenseState& source, const ProtocolParams& params, Rng& rng);

enum class QuestionPolicy : uint8_t {
    SingleDigit,  // "is the kth bit 1?", k uniform per question
    RandomParity  // "what is the parity of this random subset?"
};

/// The classical locked-box game: Eve commits an N-bit string x; m questions
/// are drawn after the commitment; accept iff every answer matches the
/// all-1s hypothesis. Random-parity subsets are uniform over all strings, so
/// any x != 1..1 is accepted with probability exactly 2^-m.
bool classical_game(const BitString& x, size_t m, QuestionPolicy policy, Rng& rng);

/// Direct testing: measure m distinct randomly chosen pairs along z and
/// accept iff every tested pair is antiparallel. Misses a flawed pair with
/// probability (N-m)/N, which is why hashing verification exists.
bool direct_test(const BellString& state, size_t m, Rng& rng);

struct KeyPair {
    std::vector<uint8_t> alice;
    std::vector<uint8_t> bob;
};

/// Measure every surviving pair along z; up = 0, down = 1; Bob flips his bits
/// so that true singlets give alice == bob. Throws on an empty survivor set.
KeyPair generate_key(const BellString& survivors, Rng& rng);

struct DenseKeyResult {
    KeyPair key;
    DenseState residual;
};

DenseKeyResult generate_key(const DenseState& survivors, Rng& rng);

}  // namespace eprverify
