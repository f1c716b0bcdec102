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
#include "eprverify/rng.hpp"

namespace eprverify {

// Channel, purification and repeater-chain model, all at the Werner-scalar
// level: a pair is summarized by its singlet fidelity f, with a twirl assumed
// between steps so the scalar recurrences are exact. The purification and
// swapping formulas are verified against the dense two-pair simulation in the
// oracle check suite.

/// Singlet fidelity of a Werner-twirled pair, in [0, 1]. Purification works
/// above 1/2 and 1/2 itself is a fixed point of the recurrence.
using WernerFidelity = double;

/// Label-level depolarizing channel: with probability 1-p the label is
/// unchanged, with probability p it is replaced uniformly (a singlet comes
/// out with fidelity 1 - 3p/4).
BellLabel depolarize(BellLabel label, double p, Rng& rng);

/// Scalar form of the same channel on a Werner pair's singlet fidelity.
WernerFidelity depolarize_fidelity(WernerFidelity f, double p);

/// Sample a label from the Werner distribution with singlet fidelity f.
BellLabel sample_werner(WernerFidelity f, Rng& rng);

struct PurifyResult {
    WernerFidelity fidelity;     // kept pair's singlet fidelity after the step
    double success_probability;  // chance the step keeps the pair
};

/// One recurrence step of entanglement purification: two Werner pairs of
/// fidelity f are consumed; on success one pair of higher fidelity remains.
/// f = 1 and f = 1/2 are fixed points; 1/2 is the threshold below which
/// purification cannot help.
PurifyResult purify_step(WernerFidelity f);

/// Compose two Werner pairs by entanglement swapping (teleportation through
/// the middle station). Symmetric; connect(1, f) = f; never exceeds
/// min(f1, f2).
WernerFidelity connect(WernerFidelity f1, WernerFidelity f2);

struct ChainSpec {
    std::vector<WernerFidelity> segment_fidelities;
    double target_fidelity = 0.95;
    /// Purification rounds applied per segment before connecting. Empty
    /// means: search the smallest uniform schedule reaching the target.
    std::vector<int> purification_rounds;
};

struct ChainResult {
    bool feasible = false;  // false if any segment is at or below 1/2, or no
                            // schedule reaches the target
    WernerFidelity final_fidelity = 0;
    double pairs_consumed_per_delivered = 0;  // expected raw pairs per delivered pair
    std::vector<int> rounds_per_segment;
    int total_rounds = 0;
};

/// Purify each segment per schedule, then connect all segments. Cost
/// accounting: each purification round doubles the expected pair consumption
/// and divides it by the step's success probability.
ChainResult simulate_chain(const ChainSpec& spec);

struct FtqcParams {
    double epsilon = 0;    // per-gate error rate
    double epsilon0 = 0;   // threshold, > 0
    int levels = 0;        // concatenation levels L >= 0
};

/// Effective error rate after L levels of concatenated coding:
/// epsilon0 * (epsilon/epsilon0)^(2^L), computed by repeated squaring so the
/// one-level recursion holds step by step.
double ftqc_error_rate(const FtqcParams& params);

}  // namespace eprverify
