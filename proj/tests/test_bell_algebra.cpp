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

#include <cmath>
#include <set>

#include "doctest.h"
#include "eprverify/oracle_checks.hpp"

using namespace eprverify;

TEST_CASE("subset parity") {
    BitString x = BitString::from_string("1101");
    BitString s = BitString::from_string("0110");
    CHECK(subset_parity(x, s) == 1);

    CHECK(subset_parity(x, BitString::from_string("0000")) == 0);

    // all-ones string, even-weight subset
    BitString ones = BitString::from_string("111111");
    CHECK(subset_parity(ones, BitString::from_string("110011")) == 0);
    CHECK(subset_parity(ones, BitString::from_string("100011")) == 1);

    CHECK_THROWS_AS(subset_parity(x, BitString::from_string("01")), std::invalid_argument);
}

TEST_CASE("bit string rendering") {
    BitString s = BitString::from_string("001101");
    CHECK(s.to_string() == "001101");
    CHECK(s.to_hex() == "34");  // 0011 | 01(00)
    CHECK(s.weight() == 3);
    CHECK(s.any());
    CHECK_FALSE(BitString(4).any());
    CHECK_THROWS_AS(BitString::from_string("01x"), std::invalid_argument);
}

TEST_CASE("label encoding round trip") {
    CHECK(kPhiPlus.code() == 0);
    CHECK(kPsiPlus.code() == 1);
    CHECK(kPhiMinus.code() == 2);
    CHECK(kSinglet.code() == 3);
    for (uint8_t c = 0; c < 4; c++) {
        BellLabel l = BellLabel::from_code(c);
        CHECK(l.code() == c);
        CHECK(BellLabel::from_name(l.name()) == l);
    }
    CHECK(BellLabel::from_name("10") == kPhiMinus);
    CHECK_THROWS_AS(BellLabel::from_name("sigma"), std::invalid_argument);
}

TEST_CASE("gate action table matches the dense simulator") {
    CheckResult r = check_gate_tables();
    CHECK_MESSAGE(r.pass, r.detail);

    const GateActionTable& t = gate_action_table();
    // The singlet is invariant under both bilateral rotations.
    CHECK(t.bx[kSinglet.code()].out == kSinglet);
    CHECK(t.bx[kSinglet.code()].phase == kPhasePlusOne);
    CHECK(t.by[kSinglet.code()].out == kSinglet);
    // Bxor fixes phi+ (x) phi+ with no phase.
    const BxorAction& e = t.bxor[kPhiPlus.code() * 4 + kPhiPlus.code()];
    CHECK(e.out_source == kPhiPlus);
    CHECK(e.out_target == kPhiPlus);
    CHECK(e.phase == kPhasePlusOne);
    // Two singlets become psi+ (x) phi-.
    const BxorAction& ss = t.bxor[kSinglet.code() * 4 + kSinglet.code()];
    CHECK(ss.out_source == kPsiPlus);
    CHECK(ss.out_target == kPhiMinus);
}

TEST_CASE("gates invert exactly, phase included") {
    Rng rng(11);
    for (int trial = 0; trial < 50; trial++) {
        std::vector<BellLabel> labels(3);
        for (auto& l : labels) {
            l = BellLabel::from_code(static_cast<uint8_t>(rng.uniform_below(4)));
        }
        BellString state(labels, Phase{static_cast<uint8_t>(rng.uniform_below(4))});
        for (Gate g : {Gate::bx(1), Gate::by(0), Gate::sigma_x(2), Gate::bxor(2, 0)}) {
            BellString back = apply_gates(apply_gate(state, g), inverse_gates({g}));
            CHECK(back == state);
        }
    }
}

TEST_CASE("every gate is a bijection on two-pair label strings") {
    for (Gate g : {Gate::bx(0), Gate::bx(1), Gate::by(0), Gate::by(1), Gate::sigma_x(0),
                   Gate::sigma_x(1), Gate::bxor(0, 1), Gate::bxor(1, 0)}) {
        std::set<std::string> images;
        for (size_t mask = 0; mask < 16; mask++) {
            BitString bits(4);
            for (size_t b = 0; b < 4; b++) {
                bits.set(b, (mask >> b) & 1);
            }
            images.insert(apply_gate(BellString::from_bits(bits), g).to_bits().to_string());
        }
        CHECK(images.size() == 16);
    }
}

TEST_CASE("two-round composite reproduces the three-pair example") {
    // s1 = 001101 collects into pair 1, s2 = 1001 on the survivors (pairs 0
    // and 2) into pair 0; the unitary description maps 111111 to 101111 up
    // to phase.
    CheckResult r = check_parity_composite();
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("parity circuit postcondition, exhaustive for small N") {
    CheckResult r = check_circuit_synthesis(3);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("single amplitude-bit question needs no Bxor") {
    BitString s(6);
    s.set(2 * 1 + 1, 1);  // amplitude bit of pair 1
    ParityCircuit c = build_parity_circuit(s, {0, 1, 2});
    CHECK(c.destination == 1);
    CHECK(c.gates.empty());
}

TEST_CASE("all-zero subset is rejected as a question") {
    CHECK_THROWS_AS(build_parity_circuit(BitString(6), {0, 1, 2}), std::invalid_argument);
    // nonzero only on a dead pair
    BitString s(6);
    s.set(0, 1);
    CHECK_THROWS_AS(build_parity_circuit(s, {1, 2}), std::invalid_argument);
}

TEST_CASE("measure_pair coarse outcome follows the amplitude bit") {
    Rng rng(5);
    BellString state({kSinglet, kPhiPlus, kPsiPlus, kPhiMinus});
    CHECK(measure_pair(state, 0, rng).coarse == CoarseOutcome::Antiparallel);
    CHECK(measure_pair(state, 1, rng).coarse == CoarseOutcome::Parallel);
    CHECK(measure_pair(state, 2, rng).coarse == CoarseOutcome::Antiparallel);
    CHECK(measure_pair(state, 3, rng).coarse == CoarseOutcome::Parallel);

    MeasuredPair m = measure_pair(state, 2, rng);
    CHECK(m.residual.n_pairs() == 3);
    CHECK_FALSE(m.residual.has_pair(2));
    CHECK_THROWS_AS(measure_pair(state, 7, rng), std::out_of_range);
}

TEST_CASE("fine outcomes are uniform within the coarse class") {
    Rng rng(17);
    BellString singlet({kSinglet});
    int up_down = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; t++) {
        MeasuredPair m = measure_pair(singlet, 0, rng);
        CHECK(m.coarse == CoarseOutcome::Antiparallel);
        up_down += m.fine == FineOutcome::UpDown;
    }
    double rate = static_cast<double>(up_down) / trials;
    CHECK(std::abs(rate - 0.5) < 3.0 * std::sqrt(0.25 / trials));
}

TEST_CASE("planned rounds always expect antiparallel on the reference") {
    Rng rng(23);
    for (int trial = 0; trial < 200; trial++) {
        BellString reference = BellString::singlets(4);
        for (int round = 0; round < 3; round++) {
            BitString s(8);
            bool any = false;
            for (size_t id : reference.pair_ids()) {
                uint8_t b0 = rng.bit(), b1 = rng.bit();
                s.set(2 * id, b0);
                s.set(2 * id + 1, b1);
                any = any || b0 || b1;
            }
            if (!any) {
                continue;
            }
            BellString before = reference;
            PlannedRound planned = plan_round_against_reference(s, reference);
            BellString evolved = apply_gates(before, planned.gates);
            CHECK(evolved.label_of(planned.destination).amplitude_bit == 1);
            CHECK(planned.reference_destination_label.amplitude_bit == 1);
        }
    }
}

TEST_CASE("realignment returns any reference to singlets") {
    Rng rng(29);
    for (int trial = 0; trial < 50; trial++) {
        std::vector<BellLabel> labels(4);
        for (auto& l : labels) {
            l = BellLabel::from_code(static_cast<uint8_t>(rng.uniform_below(4)));
        }
        BellString reference(labels);
        realignment_gates(reference);
        for (const BellLabel& l : reference.labels()) {
            CHECK(l == kSinglet);
        }
    }
}
