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

#include <cmath>

#include "doctest.h"
#include "eprverify/adversary.hpp"
#include "eprverify/oracle_checks.hpp"
#include "eprverify/verification.hpp"

using namespace eprverify;

namespace {

double amp_diff(const DenseState& a, const DenseState& b) {
    double d = 0;
    for (size_t i = 0; i < a.amplitudes().size(); i++) {
        d = std::max(d, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    }
    return d;
}

}  // namespace

TEST_CASE("bell product amplitudes") {
    DenseState singlet = prepare_bell_product(BellString({kSinglet}));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(singlet.amplitudes()[0]) < 1e-12);
    CHECK(std::abs(singlet.amplitudes()[1] - cdouble(r, 0)) < 1e-12);
    CHECK(std::abs(singlet.amplitudes()[2] - cdouble(-r, 0)) < 1e-12);
    CHECK(std::abs(singlet.amplitudes()[3]) < 1e-12);

    DenseState phi = prepare_bell_product(BellString({kPhiPlus}));
    CHECK(std::abs(phi.amplitudes()[0] - cdouble(r, 0)) < 1e-12);
    CHECK(std::abs(phi.amplitudes()[3] - cdouble(r, 0)) < 1e-12);

    // Two singlets are the tensor square of one.
    DenseState two = prepare_bell_product(BellString::singlets(2));
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            CHECK(std::abs(two.amplitudes()[i * 4 + j] -
                           singlet.amplitudes()[i] * singlet.amplitudes()[j]) < 1e-12);
        }
    }

    CHECK_THROWS_AS(prepare_bell_product(BellString::singlets(7)), std::invalid_argument);
    CHECK_THROWS_AS(prepare_bell_product(BellString::singlets(3), 7), std::invalid_argument);
}

TEST_CASE("unitarity and exact inverses") {
    Rng rng(3);
    DenseState state = general_pure_random(2, 1, rng);
    for (Gate g : {Gate::bx(0), Gate::by(1), Gate::sigma_x(0), Gate::bxor(0, 1)}) {
        DenseState evolved = apply_unitary(state, g);
        CHECK(std::abs(evolved.norm() - 1.0) < 1e-10);
        DenseState back = apply_unitaries(evolved, inverse_gates({g}));
        CHECK(amp_diff(back, state) < 1e-10);
    }
}

TEST_CASE("Bxor leaves phi+ (x) phi+ invariant") {
    DenseState state = prepare_bell_product(BellString({kPhiPlus, kPhiPlus}));
    DenseState evolved = apply_unitary(state, Gate::bxor(0, 1));
    CHECK(amp_diff(evolved, state) < 1e-12);
}

TEST_CASE("bilateral rotations fix the singlet up to phase") {
    DenseState singlet = prepare_bell_product(BellString({kSinglet}));
    for (Gate g : {Gate::bx(0), Gate::by(0)}) {
        DenseState evolved = apply_unitary(singlet, g);
        CHECK(std::abs(residual_fidelity(evolved, BellString({kSinglet})) - 1.0) < 1e-12);
    }
}

TEST_CASE("bell premeasurement of exact and superposed products") {
    auto branches = bell_premeasure(prepare_bell_product(BellString::singlets(2)));
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(branches[0].labels.to_bits().to_string() == "1111");

    // (psi- psi- + phi+ phi+) / sqrt(2): two equal branches.
    std::vector<AmplitudeTerm> terms = {
        {BitString::from_string("1111"), 0, cdouble(1, 0)},
        {BitString::from_string("0000"), 0, cdouble(1, 0)},
    };
    auto super = bell_premeasure(general_pure(2, 0, terms));
    REQUIRE(super.size() == 2);
    CHECK(super[0].probability == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(super[1].probability == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("premeasure probabilities marginalize the ancilla") {
    // alpha_{w,j}: weight 0.36 on (1111, j=0), 0.28 on (1111, j=1),
    // 0.36 on (0101, j=1); P(1111) = 0.64, P(0101) = 0.36.
    std::vector<AmplitudeTerm> terms = {
        {BitString::from_string("1111"), 0, cdouble(0.6, 0)},
        {BitString::from_string("1111"), 1, cdouble(0, std::sqrt(0.28))},
        {BitString::from_string("0101"), 1, cdouble(-0.6, 0)},
    };
    auto branches = bell_premeasure(general_pure(2, 1, terms));
    REQUIRE(branches.size() == 2);
    double p1111 = 0, p0101 = 0;
    for (const auto& b : branches) {
        if (b.labels.to_bits().to_string() == "1111") {
            p1111 = b.probability;
        } else if (b.labels.to_bits().to_string() == "0101") {
            p0101 = b.probability;
        }
    }
    CHECK(p1111 == doctest::Approx(0.64).epsilon(1e-9));
    CHECK(p0101 == doctest::Approx(0.36).epsilon(1e-9));
}

TEST_CASE("residual fidelity") {
    DenseState state = prepare_bell_product(BellString({kSinglet, kPhiPlus}));
    CHECK(residual_fidelity(state, BellString({kSinglet, kPhiPlus})) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(residual_fidelity(state, BellString::singlets(2)) < 1e-12);

    // Premeasured ensemble recovers mixture weights.
    std::vector<AmplitudeTerm> terms = {
        {BitString::from_string("1111"), 0, cdouble(std::sqrt(0.7), 0)},
        {BitString::from_string("0011"), 0, cdouble(0, std::sqrt(0.3))},
    };
    DenseState mix = general_pure(2, 0, terms);
    CHECK(residual_fidelity(mix, BellString::singlets(2)) == doctest::Approx(0.7).epsilon(1e-9));
}

TEST_CASE("pair measurement probabilities are a distribution") {
    Rng rng(31);
    DenseState state = general_pure_random(3, 2, rng);
    for (size_t id : state.pair_ids()) {
        std::array<double, 4> p = pair_z_probabilities(state, id);
        double sum = p[0] + p[1] + p[2] + p[3];
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
        for (double v : p) {
            CHECK(v >= -1e-12);
        }
    }
}

TEST_CASE("protocol run accepts perfect singlets with certainty") {
    for (uint64_t seed = 0; seed < 10; seed++) {
        Rng rng(seed);
        DenseState state = prepare_bell_product(BellString::singlets(4));
        std::vector<BitString> subsets = draw_subsets(4, 2, rng);
        DenseRunResult run = run_protocol_dense(state, subsets, rng);
        CHECK(run.transcript.accepted);
        CHECK(run.residual.n_pairs() == 2);
        CHECK(residual_fidelity(run.residual, BellString::singlets(2)) ==
              doctest::Approx(1.0).epsilon(1e-9));
        for (const TranscriptRound& round : run.transcript.rounds) {
            CHECK(round.coarse == CoarseOutcome::Antiparallel);
        }
    }
}

TEST_CASE("label and dense simulations agree on Bell products") {
    CheckResult r = check_cross_simulator(1234, 25);
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("premeasurement does not change the protocol's joint statistics") {
    CheckResult r = check_reduction(4321, 12);
    CHECK_MESSAGE(r.pass, r.detail);

    // One explicit ancilla-entangled case.
    std::vector<AmplitudeTerm> terms = {
        {BitString::from_string("1111"), 0, cdouble(0.8, 0)},
        {BitString::from_string("0110"), 1, cdouble(0, 0.5)},
        {BitString::from_string("1001"), 1, cdouble(-0.2, 0.1)},
    };
    DenseState state = general_pure(2, 1, terms);
    Rng rng(8);
    std::vector<BitString> subsets = draw_subsets(2, 1, rng);
    auto direct = enumerate_joint(state, subsets);
    auto pre = enumerate_joint_premeasured(state, subsets);
    CHECK(total_variation_distance(direct, pre) < 1e-12);
}

TEST_CASE("bell measurement on halves of two singlets is uniform") {
    DenseState state = prepare_bell_product(BellString::singlets(2));
    auto branches = measure_bell_on_qubits(state, 1, 2);
    REQUIRE(branches.size() == 4);
    for (const auto& b : branches) {
        CHECK(b.probability == doctest::Approx(0.25).epsilon(1e-10));
        CHECK(b.collapsed.n_qubits() == 2);
    }
}
