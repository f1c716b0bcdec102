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

#include "eprverify/verification.hpp"

#include <sstream>
#include <stdexcept>

namespace eprverify {

void ProtocolParams::validate() const {
    if (n_pairs == 0) {
        throw std::invalid_argument("n_pairs must be positive");
    }
    if (n_rounds == 0) {
        throw std::invalid_argument("n_rounds must be at least 1");
    }
    if (n_rounds >= n_pairs) {
        throw std::invalid_argument("n_rounds must be smaller than n_pairs");
    }
}

std::string Transcript::serialize() const {
    std::ostringstream out;
    for (size_t i = 0; i < rounds.size(); i++) {
        const TranscriptRound& r = rounds[i];
        out << "round=" << i << " subset=" << r.subset.to_hex() << " dest=" << r.destination
            << " fine=" << fine_outcome_name(r.fine)
            << " parity=" << static_cast<int>(parity_bit(r.coarse)) << "\n";
    }
    out << "verdict=" << (accepted ? "accept" : "reject") << "\n";
    return out.str();
}

namespace {

// Uniform nonzero bit pattern on the live pairs, zero elsewhere.
BitString draw_live_subset(size_t n_pairs, const std::vector<size_t>& live, Rng& rng) {
    BitString s(2 * n_pairs);
    while (true) {
        bool any = false;
        for (size_t id : live) {
            uint8_t b0 = rng.bit();
            uint8_t b1 = rng.bit();
            s.set(2 * id, b0);
            s.set(2 * id + 1, b1);
            any = any || b0 || b1;
        }
        if (any) {
            return s;
        }
    }
}

}  // namespace

std::vector<BitString> draw_subsets(size_t n_pairs, size_t m, Rng& rng) {
    BellString reference = BellString::singlets(n_pairs);
    std::vector<BitString> subsets;
    subsets.reserve(m);
    for (size_t r = 0; r < m; r++) {
        BitString s = draw_live_subset(n_pairs, reference.pair_ids(), rng);
        plan_round_against_reference(s, reference);
        subsets.push_back(std::move(s));
    }
    return subsets;
}

ProtocolPlan plan_protocol(size_t n_pairs, const std::vector<BitString>& subsets) {
    if (subsets.size() >= n_pairs) {
        throw std::invalid_argument("subset sequence leaves no surviving pair");
    }
    BellString reference = BellString::singlets(n_pairs);
    ProtocolPlan plan;
    for (const BitString& s : subsets) {
        plan.rounds.push_back(plan_round_against_reference(s, reference));
    }
    plan.realignment = realignment_gates(reference);
    plan.survivor_ids = reference.pair_ids();
    return plan;
}

LabelRunResult run_protocol_labels(const BellString& source, const std::vector<BitString>& subsets,
                                   Rng& rng) {
    ProtocolPlan plan = plan_protocol(source.n_pairs(), subsets);
    BellString current = source;
    Transcript transcript;
    for (size_t r = 0; r < plan.rounds.size(); r++) {
        const PlannedRound& round = plan.rounds[r];
        current = apply_gates(current, round.gates);
        MeasuredPair measured = measure_pair(current, round.destination, rng);
        current = std::move(measured.residual);
        transcript.rounds.push_back(
            TranscriptRound{subsets[r], round.destination, measured.fine, measured.coarse});
        if (measured.coarse != CoarseOutcome::Antiparallel) {
            transcript.accepted = false;
            return LabelRunResult{std::move(transcript), BellString{}};
        }
    }
    transcript.accepted = true;
    current = apply_gates(current, plan.realignment);
    return LabelRunResult{std::move(transcript), std::move(current)};
}

LabelRunResult run_verification(const BellString& source, const ProtocolParams& params, Rng& rng) {
    params.validate();
    if (source.n_pairs() != params.n_pairs) {
        throw std::invalid_argument("source does not match n_pairs");
    }
    std::vector<BitString> subsets = draw_subsets(params.n_pairs, params.n_rounds, rng);
    return run_protocol_labels(source, subsets, rng);
}

DenseRunResult run_verification(const DenseState& source, const ProtocolParams& params, Rng& rng) {
    params.validate();
    if (source.n_pairs() != params.n_pairs) {
        throw std::invalid_argument("source does not match n_pairs");
    }
    std::vector<BitString> subsets = draw_subsets(params.n_pairs, params.n_rounds, rng);
    return run_protocol_dense(source, subsets, rng);
}

bool classical_game(const BitString& x, size_t m, QuestionPolicy policy, Rng& rng) {
    if (x.size() == 0) {
        throw std::invalid_argument("the committed string must be non-empty");
    }
    for (size_t q = 0; q < m; q++) {
        if (policy == QuestionPolicy::SingleDigit) {
            size_t k = static_cast<size_t>(rng.uniform_below(x.size()));
            if (x.get(k) != 1) {
                return false;
            }
        } else {
            // Subsets uniform over all strings; the all-1s hypothesis predicts
            // the subset's weight parity. (The zero subset is a wasted but
            // harmless question.)
            BitString s(x.size());
            for (size_t i = 0; i < x.size(); i++) {
                s.set(i, rng.bit());
            }
            uint8_t expected = static_cast<uint8_t>(s.weight() & 1);
            if (subset_parity(x, s) != expected) {
                return false;
            }
        }
    }
    return true;
}

bool direct_test(const BellString& state, size_t m, Rng& rng) {
    size_t n = state.n_pairs();
    if (m > n) {
        throw std::invalid_argument("cannot test more pairs than exist");
    }
    // Partial Fisher-Yates for m distinct pairs.
    std::vector<size_t> ids = state.pair_ids();
    for (size_t i = 0; i < m; i++) {
        size_t j = i + static_cast<size_t>(rng.uniform_below(n - i));
        std::swap(ids[i], ids[j]);
        if (state.label_of(ids[i]).amplitude_bit != 1) {
            return false;
        }
    }
    return true;
}

KeyPair generate_key(const BellString& survivors, Rng& rng) {
    if (survivors.n_pairs() == 0) {
        throw std::invalid_argument("no surviving pairs to measure");
    }
    KeyPair key;
    for (const BellLabel& l : survivors.labels()) {
        uint8_t alice = rng.bit();
        uint8_t bob_physical = l.amplitude_bit ? static_cast<uint8_t>(alice ^ 1) : alice;
        key.alice.push_back(alice);
        key.bob.push_back(static_cast<uint8_t>(bob_physical ^ 1));
    }
    return key;
}

DenseKeyResult generate_key(const DenseState& survivors, Rng& rng) {
    if (survivors.n_pairs() == 0) {
        throw std::invalid_argument("no surviving pairs to measure");
    }
    DenseState current = survivors;
    KeyPair key;
    std::vector<size_t> ids = current.pair_ids();
    for (size_t id : ids) {
        std::array<double, 4> probs = pair_z_probabilities(current, id);
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
        uint8_t alice = (fine >> 1) & 1;
        uint8_t bob_physical = fine & 1;
        key.alice.push_back(alice);
        key.bob.push_back(static_cast<uint8_t>(bob_physical ^ 1));
        current = collapse_pair(current, id, static_cast<FineOutcome>(fine));
    }
    return DenseKeyResult{std::move(key), std::move(current)};
}

}  // namespace eprverify
