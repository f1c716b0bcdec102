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

#include "eprverify/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace eprverify {

BellLabel depolarize(BellLabel label, double p, Rng& rng) {
    if (p < 0 || p > 1) {
        throw std::invalid_argument("depolarizing probability must lie in [0, 1]");
    }
    if (rng.uniform01() < p) {
        return BellLabel::from_code(static_cast<uint8_t>(rng.uniform_below(4)));
    }
    return label;
}

WernerFidelity depolarize_fidelity(WernerFidelity f, double p) {
    return (1.0 - p) * f + p * 0.25;
}

BellLabel sample_werner(WernerFidelity f, Rng& rng) {
    double u = rng.uniform01();
    if (u < f) {
        return kSinglet;
    }
    double e = (1.0 - f) / 3.0;
    if (u < f + e) {
        return kPhiPlus;
    }
    if (u < f + 2 * e) {
        return kPsiPlus;
    }
    return kPhiMinus;
}

PurifyResult purify_step(WernerFidelity f) {
    if (f < 0 || f > 1) {
        throw std::invalid_argument("fidelity must lie in [0, 1]");
    }
    double e = (1.0 - f) / 3.0;
    // Two Werner pairs, bilateral XOR after rotating the singlet into the
    // phi+ frame, keep the source when the target measures parallel.
    double success = (f + e) * (f + e) + 4.0 * e * e;
    double kept = (f * f + e * e) / success;
    return PurifyResult{kept, success};
}

WernerFidelity connect(WernerFidelity f1, WernerFidelity f2) {
    if (f1 < 0 || f1 > 1 || f2 < 0 || f2 > 1) {
        throw std::invalid_argument("fidelity must lie in [0, 1]");
    }
    // Werner parameter multiplies under swapping: p = (4f - 1) / 3.
    double p1 = (4.0 * f1 - 1.0) / 3.0;
    double p2 = (4.0 * f2 - 1.0) / 3.0;
    return 0.25 + 0.75 * p1 * p2;
}

namespace {

constexpr int kMaxAutoRounds = 64;

struct SegmentOutcome {
    double fidelity;
    double cost;  // expected raw pairs per purified pair
    int rounds;
};

SegmentOutcome purify_segment(double f, int rounds) {
    SegmentOutcome out{f, 1.0, rounds};
    for (int r = 0; r < rounds; r++) {
        PurifyResult step = purify_step(out.fidelity);
        out.cost = 2.0 * out.cost / step.success_probability;
        out.fidelity = step.fidelity;
    }
    return out;
}

}  // namespace

ChainResult simulate_chain(const ChainSpec& spec) {
    if (spec.segment_fidelities.empty()) {
        throw std::invalid_argument("chain needs at least one segment");
    }
    if (!spec.purification_rounds.empty() &&
        spec.purification_rounds.size() != spec.segment_fidelities.size()) {
        throw std::invalid_argument("schedule length must match segment count");
    }
    ChainResult result;
    for (double f : spec.segment_fidelities) {
        if (f <= 0.5) {
            // At or below threshold: purification cannot escape the fixed
            // point, report infeasible rather than loop.
            result.feasible = false;
            result.final_fidelity = f;
            return result;
        }
    }

    bool auto_schedule = spec.purification_rounds.empty();
    std::vector<int> rounds = spec.purification_rounds;
    if (auto_schedule) {
        rounds.assign(spec.segment_fidelities.size(), 0);
    }

    for (int attempt = 0;; attempt++) {
        double composed = 0;
        double cost = 0;
        bool first = true;
        result.rounds_per_segment.clear();
        result.total_rounds = 0;
        for (size_t i = 0; i < spec.segment_fidelities.size(); i++) {
            SegmentOutcome seg = purify_segment(spec.segment_fidelities[i], rounds[i]);
            result.rounds_per_segment.push_back(seg.rounds);
            result.total_rounds += seg.rounds;
            if (first) {
                composed = seg.fidelity;
                cost = seg.cost;
                first = false;
            } else {
                composed = connect(composed, seg.fidelity);
                cost += seg.cost;
            }
        }
        result.final_fidelity = composed;
        result.pairs_consumed_per_delivered = cost;
        if (composed >= spec.target_fidelity) {
            result.feasible = true;
            return result;
        }
        if (!auto_schedule || attempt >= kMaxAutoRounds) {
            result.feasible = false;
            return result;
        }
        for (int& r : rounds) {
            r++;
        }
    }
}

double ftqc_error_rate(const FtqcParams& params) {
    if (!(params.epsilon0 > 0)) {
        throw std::invalid_argument("threshold must be positive");
    }
    if (params.epsilon < 0) {
        throw std::invalid_argument("error rate must be nonnegative");
    }
    if (params.levels < 0) {
        throw std::invalid_argument("levels must be nonnegative");
    }
    double r = params.epsilon / params.epsilon0;
    for (int l = 0; l < params.levels; l++) {
        r = r * r;
    }
    return params.epsilon0 * r;
}

}  // namespace eprverify
