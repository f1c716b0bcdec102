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

#include "eprverify/security.hpp"

#include <cmath>

#include "doctest.h"
#include "eprverify/oracle_checks.hpp"

using namespace eprverify;

TEST_CASE("entropy bound values and monotonicity") {
    CHECK(entropy_bound(0.0, 1) == 0.0);
    CHECK(entropy_bound(0.0, 128) == 0.0);

    double expected = 0.5 + 0.5 * std::log2(6.0);
    CHECK(entropy_bound(0.5, 1) == doctest::Approx(expected).epsilon(1e-12));

    // Monotone increasing in delta on [0, 1 - 2^-2R] and in R.
    double prev = 0;
    for (double delta = 0.01; delta <= 0.74; delta += 0.01) {
        double v = entropy_bound(delta, 1);
        CHECK(v > prev);
        prev = v;
    }
    for (size_t r = 1; r < 20; r++) {
        CHECK(entropy_bound(0.3, r + 1) > entropy_bound(0.3, r));
    }

    // Large R stays finite and sane.
    CHECK(entropy_bound(1e-6, 1000) > 0);
    CHECK(entropy_bound(1e-6, 1000) < 1.0);

    CHECK_THROWS_AS(entropy_bound(-0.1, 1), std::domain_error);
    CHECK_THROWS_AS(entropy_bound(1.0, 1), std::domain_error);
    CHECK_THROWS_AS(entropy_bound(0.1, 0), std::domain_error);
}

TEST_CASE("eve information bound") {
    CHECK(eve_info_bound(1.0, 10) == 0.0);

    double prev = eve_info_bound(0.9, 100);
    for (double f : {0.99, 0.999, 0.9999}) {
        double v = eve_info_bound(f, 100);
        CHECK(v < prev);
        prev = v;
    }

    // Near-perfect fidelity leaves Eve with a vanishing share of a long key.
    double tiny = eve_info_bound(1.0 - std::pow(2.0, -20), 100);
    CHECK(tiny > 0);
    CHECK(tiny < 1e-3);

    CHECK_THROWS_AS(eve_info_bound(0.0, 1), std::domain_error);
}

TEST_CASE("typical subspace bound") {
    CHECK(typical_subspace_bound(100, 0.0, 37.5) == 37.5);

    // N = 100, eps = 0.001: atypical term = eps * (2N - log2 eps).
    double v = typical_subspace_bound(100, 0.001, 0.0);
    double expected = 0.001 * (200.0 - std::log2(0.001));
    CHECK(v == doctest::Approx(expected).epsilon(1e-12));
    CHECK(v < 100.0);  // far below N

    double prev = 0;
    for (double eps = 0.01; eps < 0.5; eps += 0.01) {
        double b = typical_subspace_bound(10, eps, 0.0);
        CHECK(b > prev);
        prev = b;
    }
    CHECK_THROWS_AS(typical_subspace_bound(10, -0.2, 0.0), std::domain_error);
}

TEST_CASE("per-axis coarse outcomes of the Bell labels") {
    // singlet antiparallel on every axis, each triplet on exactly one
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
        CHECK(label_antiparallel_along(kSinglet, axis) == 1);
    }
    int triplet_counts = 0;
    for (BellLabel l : {kPhiPlus, kPsiPlus, kPhiMinus}) {
        int count = 0;
        for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            count += label_antiparallel_along(l, axis);
        }
        CHECK(count == 1);
        triplet_counts += count;
    }
    CHECK(triplet_counts == 3);

    CheckResult r = check_estimator_invariance();
    CHECK_MESSAGE(r.pass, r.detail);
}

TEST_CASE("estimator on pure populations") {
    Rng rng(19);
    BellString all_singlets = BellString::singlets(200);
    SampleReport perfect = estimate_singlet_fraction(all_singlets, 100, rng);
    CHECK(perfect.antiparallel_count == 100);
    CHECK(perfect.f_hat_raw == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(perfect.axes.size() == 100);

    // A fixed triplet population: k ~ m/3, f_hat ~ 0.
    std::vector<BellLabel> triplets(600, kPsiPlus);
    BellString triplet_pop(triplets);
    double sum = 0;
    const int reps = 200;
    for (int i = 0; i < reps; i++) {
        SampleReport r = estimate_singlet_fraction(triplet_pop, 300, rng);
        sum += r.f_hat_raw;
    }
    // stderr of the mean of f_hat ~ 1.5*sqrt(q(1-q)/m)/sqrt(reps) ~ 0.0029
    CHECK(std::abs(sum / reps) < 0.01);

    CHECK_THROWS_AS(estimate_singlet_fraction(all_singlets, 201, rng), std::invalid_argument);
    CHECK_THROWS_AS(estimate_singlet_fraction(all_singlets, 0, rng), std::invalid_argument);
}

TEST_CASE("estimator is unbiased on a half-singlet mixture") {
    Rng rng(20);
    std::vector<BellLabel> labels(400);
    for (size_t i = 0; i < labels.size(); i++) {
        labels[i] = i < 200 ? kSinglet : kPhiPlus;
    }
    BellString population(labels);
    double sum = 0;
    const int reps = 300;
    for (int i = 0; i < reps; i++) {
        sum += estimate_singlet_fraction(population, 200, rng).f_hat_raw;
    }
    double mean = sum / reps;
    // per-rep sd <= 1.5*sqrt(q(1-q)/m) ~ 0.053 (without-replacement is smaller)
    CHECK(std::abs(mean - 0.5) < 3 * 0.053 / std::sqrt(static_cast<double>(reps)));
}

TEST_CASE("confidence intervals cover the true fraction") {
    for (CiMethod method : {CiMethod::Normal, CiMethod::ExactBinomial}) {
        Rng rng(21);
        std::vector<BellLabel> labels(1000);
        for (size_t i = 0; i < labels.size(); i++) {
            labels[i] = i < 500 ? kSinglet : kPhiMinus;
        }
        BellString population(labels);
        int covered = 0;
        const int reps = 100;
        for (int i = 0; i < reps; i++) {
            SampleReport r = estimate_singlet_fraction(population, 500, rng, 0.99, method);
            covered += (r.ci_lo <= 0.5 && 0.5 <= r.ci_hi);
            CHECK(r.ci_lo <= r.f_hat_raw + 1e-12);
            CHECK(r.ci_hi >= r.f_hat_raw - 1e-12);
        }
        CHECK(covered >= 95);
    }
}

TEST_CASE("raw estimate is reported beside the clamped one") {
    Rng rng(22);
    // All phi+ pairs: k ~ m/3 so f_hat fluctuates around 0 and can go
    // negative; clamping must not hide that.
    std::vector<BellLabel> labels(300, kPhiPlus);
    BellString population(labels);
    bool saw_negative_raw = false;
    for (int i = 0; i < 200; i++) {
        SampleReport r = estimate_singlet_fraction(population, 150, rng);
        CHECK(r.f_hat_clamped >= 0.0);
        CHECK(r.f_hat_clamped <= 1.0);
        saw_negative_raw = saw_negative_raw || r.f_hat_raw < 0.0;
    }
    CHECK(saw_negative_raw);
}

TEST_CASE("dense estimator agrees with labels on definite states") {
    Rng rng(23);
    DenseState singlets = prepare_bell_product(BellString::singlets(3));
    SampleReport r = estimate_singlet_fraction(singlets, 3, rng);
    CHECK(r.antiparallel_count == 3);
    CHECK(r.f_hat_raw == doctest::Approx(1.0).epsilon(1e-12));

    DenseState triplet = prepare_bell_product(BellString({kPhiPlus, kPhiPlus}));
    int antiparallel = 0;
    const int reps = 3000;
    for (int i = 0; i < reps; i++) {
        antiparallel +=
            static_cast<int>(estimate_singlet_fraction(triplet, 1, rng).antiparallel_count);
    }
    double rate = static_cast<double>(antiparallel) / reps;
    CHECK(std::abs(rate - 1.0 / 3.0) < 3 * std::sqrt((1.0 / 3.0) * (2.0 / 3.0) / reps));
}
