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

// Acceptance suite: end-to-end checks of the protocol laboratory, one
// criterion per run, each printed as a single PASS/FAIL line. Exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "eprverify/adversary.hpp"
#include "eprverify/channel.hpp"
#include "eprverify/config.hpp"
#include "eprverify/experiments.hpp"
#include "eprverify/oracle_checks.hpp"
#include "eprverify/security.hpp"
#include "eprverify/verification.hpp"

using namespace eprverify;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    bool pass;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Single-flaw adversary against hashing verification, N=30, m=10, 1e5
//    trials: acceptance within 3 sigma of 2^-10, in under a minute.
Criterion criterion_cheat_bound() {
    auto t0 = Clock::now();
    const size_t n = 30, m = 10;
    const int trials = 100000;
    BellString flawed = single_flaw(n, n - 1, kPhiPlus);
    ProtocolParams params{n, m};
    int accepted = 0;
    for (int t = 0; t < trials; t++) {
        Rng rng(derive_seed(0x5eed0001, static_cast<uint64_t>(t)));
        accepted += run_verification(flawed, params, rng).transcript.accepted;
    }
    double rate = static_cast<double>(accepted) / trials;
    double expected = std::pow(2.0, -static_cast<double>(m));
    double sigma = std::sqrt(expected * (1.0 - expected) / trials);
    double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << "acceptance " << rate << " vs 2^-10 = " << expected << " (3 sigma = " << 3 * sigma
           << "), " << elapsed << " s";
    return Criterion{std::abs(rate - expected) <= 3 * sigma && elapsed < 60.0, detail.str()};
}

// 2. The same flaw against direct testing of m random pairs is missed with
//    probability (N-m)/N = 2/3.
Criterion criterion_direct_testing() {
    const size_t n = 30, m = 10;
    const int trials = 100000;
    BellString flawed = single_flaw(n, n - 1, kPhiPlus);
    int accepted = 0;
    for (int t = 0; t < trials; t++) {
        Rng rng(derive_seed(0x5eed0002, static_cast<uint64_t>(t)));
        accepted += direct_test(flawed, m, rng);
    }
    double rate = static_cast<double>(accepted) / trials;
    double expected = static_cast<double>(n - m) / static_cast<double>(n);
    double sigma = std::sqrt(expected * (1.0 - expected) / trials);
    std::ostringstream detail;
    detail << "acceptance " << rate << " vs (N-m)/N = " << expected << " (3 sigma = " << 3 * sigma
           << ")";
    return Criterion{std::abs(rate - expected) <= 3 * sigma, detail.str()};
}

// 3. Quantum-to-classical reduction: for 120 random entangled strategies the
//    exact joint distribution of (coarse transcript, singlet projector) is
//    unchanged by Bell premeasurement, TVD < 1e-9, in under five minutes.
Criterion criterion_reduction() {
    auto t0 = Clock::now();
    double max_tvd = 0;
    CheckResult r = check_reduction(0x5eed0003, 120, &max_tvd);
    double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << "120 strategies, max TVD " << max_tvd << ", " << elapsed << " s";
    return Criterion{r.pass && elapsed < 300.0, detail.str()};
}

// 4. All 12 single-pair and 16 Bxor label actions match the dense simulator
//    exactly, phases included.
Criterion criterion_gate_tables() {
    CheckResult r = check_gate_tables();
    return Criterion{r.pass, r.detail};
}

// 5. The s1 = 001101, s2 = 1001 composite maps 111111 to 101111 up to phase.
Criterion criterion_parity_composite() {
    CheckResult r = check_parity_composite();
    return Criterion{r.pass, r.detail};
}

// 6. The subset-foreknowledge cheat passes with probability exactly 1 and
//    forces key bit 0; against fresh subsets (N=30, m=10) it accepts at
//    about 2^-10.
Criterion criterion_foreknowledge() {
    std::vector<BitString> subsets = {BitString::from_string("001101"),
                                      BitString::from_string("100001")};
    DenseState cheat = foreknowledge_cheat(3, subsets, 0);
    AcceptanceAnalysis exact = analyze_acceptance(cheat, subsets);
    if (std::abs(exact.p_accept - 1.0) > 1e-12) {
        return Criterion{false, "exact acceptance " + std::to_string(exact.p_accept) + " != 1"};
    }
    for (uint64_t seed = 0; seed < 25; seed++) {
        Rng rng(seed);
        DenseRunResult run = run_protocol_dense(cheat, subsets, rng);
        if (!run.transcript.accepted) {
            return Criterion{false, "cheat rejected"};
        }
        DenseKeyResult key = generate_key(run.residual, rng);
        if (key.key.alice[0] != 0 || key.key.bob[0] != 0) {
            return Criterion{false, "cheat failed to force key bit 0"};
        }
    }

    const size_t n = 30, m = 10;
    const int trials = 100000;
    int accepted = 0;
    for (int t = 0; t < trials; t++) {
        Rng rng(derive_seed(0x5eed0006, static_cast<uint64_t>(t)));
        std::vector<BitString> foreknown = draw_subsets(n, m, rng);
        BellString premeasured = foreknowledge_cheat_premeasured(n, foreknown, rng);
        accepted += run_verification(premeasured, ProtocolParams{n, m}, rng).transcript.accepted;
    }
    double rate = static_cast<double>(accepted) / trials;
    double expected = std::pow(2.0, -10.0);
    double sigma = std::sqrt(expected * (1.0 - expected) / trials);
    std::ostringstream detail;
    detail << "exact pass probability 1, key forced to 0; fresh-subset acceptance " << rate
           << " vs 2^-10 = " << expected << " (3 sigma = " << 3 * sigma << ")";
    return Criterion{std::abs(rate - expected) <= 3 * sigma, detail.str()};
}

// 7. Singlet-fraction estimator: for populations at f in {0, 0.25, 0.5, 1},
//    m = 3000 samples, the 99% confidence interval covers f in at least 95%
//    of 200 repetitions.
Criterion criterion_estimator() {
    const size_t n = 6000, m = 3000;
    const int reps = 200;
    std::ostringstream detail;
    bool pass = true;
    uint64_t stream = 0;
    for (double f : {0.0, 0.25, 0.5, 1.0}) {
        size_t n_singlets = static_cast<size_t>(std::llround(f * static_cast<double>(n)));
        std::vector<BellLabel> labels(n);
        const BellLabel triplets[3] = {kPhiPlus, kPsiPlus, kPhiMinus};
        for (size_t i = 0; i < n; i++) {
            labels[i] = i < n_singlets ? kSinglet : triplets[i % 3];
        }
        BellString population(labels);
        int covered = 0;
        for (int r = 0; r < reps; r++) {
            Rng rng(derive_seed(0x5eed0007, stream++));
            SampleReport report = estimate_singlet_fraction(population, m, rng, 0.99);
            covered += (report.ci_lo <= f && f <= report.ci_hi);
        }
        double coverage = static_cast<double>(covered) / reps;
        detail << "f=" << f << " coverage " << coverage << "; ";
        pass = pass && coverage >= 0.95;
    }
    return Criterion{pass, detail.str()};
}

// 8. Entropy bound: exact zero at delta = 0; the delta = 0.5, R = 1 value to
//    1e-12; monotone in delta and R.
Criterion criterion_entropy_bound() {
    for (size_t r : {size_t{1}, size_t{10}, size_t{100}}) {
        if (entropy_bound(0.0, r) != 0.0) {
            return Criterion{false, "entropy_bound(0, R) != 0"};
        }
    }
    double v = entropy_bound(0.5, 1);
    double expected = 0.5 + 0.5 * std::log2(6.0);
    if (std::abs(v - expected) > 1e-12) {
        return Criterion{false, "entropy_bound(0.5, 1) off"};
    }
    double prev = 0;
    for (double delta = 0.01; delta <= 0.74; delta += 0.01) {
        double b = entropy_bound(delta, 1);
        if (b <= prev) {
            return Criterion{false, "not monotone in delta"};
        }
        prev = b;
    }
    for (size_t r = 1; r < 30; r++) {
        if (entropy_bound(0.25, r + 1) <= entropy_bound(0.25, r)) {
            return Criterion{false, "not monotone in R"};
        }
    }
    std::ostringstream detail;
    detail << "entropy_bound(0.5, 1) = " << v << " (0.5 + 0.5 log2 6), zero at delta=0, "
           << "monotone sweeps pass";
    return Criterion{true, detail.str()};
}

// 9. Purification: iterates from 0.51 exceed 0.99 in finitely many rounds;
//    0.5 is a fixed point to 1e-12; the step matches the dense two-pair
//    simulation to 1e-9 at f in {0.6, 0.8, 0.95}.
Criterion criterion_purification() {
    double f = 0.51;
    int rounds = 0;
    while (f < 0.99 && rounds < 200) {
        f = purify_step(f).fidelity;
        rounds++;
    }
    if (f <= 0.99) {
        return Criterion{false, "did not converge from 0.51"};
    }
    double stuck = 0.5;
    for (int i = 0; i < 64; i++) {
        stuck = purify_step(stuck).fidelity;
    }
    if (std::abs(stuck - 0.5) > 1e-12) {
        return Criterion{false, "threshold fixed point drifted"};
    }
    for (double probe : {0.6, 0.8, 0.95}) {
        PurifyResult scalar = purify_step(probe);
        PurifyResultRef dense = purify_step_dense(probe);
        if (std::abs(scalar.fidelity - dense.fidelity) > 1e-9 ||
            std::abs(scalar.success_probability - dense.success_probability) > 1e-9) {
            return Criterion{false, "scalar recurrence disagrees with dense oracle"};
        }
    }
    std::ostringstream detail;
    detail << "0.51 -> >0.99 in " << rounds << " rounds; 0.5 fixed to 1e-12; dense match at "
           << "f in {0.6, 0.8, 0.95}";
    return Criterion{true, detail.str()};
}

// 10. Concatenated-coding error recursion: eps(L+1) = eps(L)^2 / eps0 exactly
//     for L = 0..5, and doubly exponential suppression below threshold.
Criterion criterion_ftqc() {
    const double eps0 = 0.25, eps = 0.125;
    for (int l = 0; l <= 5; l++) {
        double here = ftqc_error_rate(FtqcParams{eps, eps0, l});
        double next = ftqc_error_rate(FtqcParams{eps, eps0, l + 1});
        if (next != here * here / eps0) {
            return Criterion{false, "one-level recursion not exact at L=" + std::to_string(l)};
        }
        double closed_form = eps0 * std::pow(eps / eps0, std::pow(2.0, l));
        if (std::abs(here - closed_form) > 1e-15 * closed_form + 1e-300) {
            return Criterion{false, "closed form mismatch at L=" + std::to_string(l)};
        }
    }
    if (ftqc_error_rate(FtqcParams{eps, eps0, 3}) != eps0 * std::pow(2.0, -8)) {
        return Criterion{false, "eps/eps0 = 1/2, L = 3 should give eps0 * 2^-8"};
    }
    for (int l = 0; l < 5; l++) {
        if (ftqc_error_rate(FtqcParams{eps, eps0, l + 1}) >=
            ftqc_error_rate(FtqcParams{eps, eps0, l})) {
            return Criterion{false, "not decreasing below threshold"};
        }
    }
    return Criterion{true, "recursion exact for L = 0..5; doubly exponential below threshold"};
}

// 11. Beamsplitter feasibility frontier: at mu = 0.1 the flag flips as eta
//     decreases, and the crossover matches 1 - e^(-mu eta d) = P(n >= 2) to
//     1e-6.
Criterion criterion_beamsplitter() {
    const double mu = 0.1, d = 1.0;
    auto feasible_at = [&](double eta) {
        return beamsplitter_attack(PhotonSourceModel{mu, eta, d}).feasible;
    };
    if (feasible_at(1.0) || !feasible_at(1e-3)) {
        return Criterion{false, "flag does not flip between eta = 1 and eta = 1e-3"};
    }
    double lo = 1e-3, hi = 1.0;
    for (int i = 0; i < 60; i++) {
        double mid = 0.5 * (lo + hi);
        (feasible_at(mid) ? lo : hi) = mid;
    }
    double crossover = 0.5 * (lo + hi);
    double p2 = 1.0 - std::exp(-mu) - mu * std::exp(-mu);
    double analytic = -std::log1p(-p2) / (mu * d);
    std::ostringstream detail;
    detail << "crossover eta " << crossover << " vs analytic " << analytic << " (|diff| = "
           << std::abs(crossover - analytic) << ")";
    return Criterion{std::abs(crossover - analytic) < 1e-6, detail.str()};
}

// 12. Determinism: the same config and seed produce byte-identical results
//     files.
Criterion criterion_determinism() {
    IniConfig cfg = IniConfig::parse_string(
        "[experiment]\n"
        "kind = verify-sim\n"
        "seed = 2026\n"
        "trials = 2000\n"
        "[verify-sim]\n"
        "n_pairs = 12\n"
        "n_rounds = 4\n"
        "source = single_flaw\n"
        "flaw_position = 11\n"
        "flaw_label = phi+\n");
    std::string a = run_experiment(cfg).serialize();
    std::string b = run_experiment(cfg).serialize();
    if (a != b) {
        return Criterion{false, "records differ between identical runs"};
    }
    std::string path_a = "acceptance_determinism_a.tmp";
    std::string path_b = "acceptance_determinism_b.tmp";
    run_experiment(cfg).write_file(path_a);
    run_experiment(cfg).write_file(path_b);
    std::ifstream fa(path_a, std::ios::binary), fb(path_b, std::ios::binary);
    std::string ca((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string cb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    std::remove(path_a.c_str());
    std::remove(path_b.c_str());
    if (ca != cb || ca.empty()) {
        return Criterion{false, "files differ between identical runs"};
    }
    return Criterion{true, "byte-identical records and files across repeated runs"};
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        std::function<Criterion()> run;
    };
    const std::vector<Entry> criteria = {
        {"cheat bound 2^-m under hashing verification", criterion_cheat_bound},
        {"direct testing misses the flaw at (N-m)/N", criterion_direct_testing},
        {"quantum-to-classical reduction (premeasurement invariance)", criterion_reduction},
        {"gate tables match the dense simulator", criterion_gate_tables},
        {"two-round parity composite on three pairs", criterion_parity_composite},
        {"subset-foreknowledge cheat", criterion_foreknowledge},
        {"singlet-fraction estimator coverage", criterion_estimator},
        {"entropy bound values and monotonicity", criterion_entropy_bound},
        {"purification threshold and dense agreement", criterion_purification},
        {"concatenated-coding error recursion", criterion_ftqc},
        {"beamsplitter feasibility frontier", criterion_beamsplitter},
        {"byte-identical reproducibility", criterion_determinism},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        Criterion result = criteria[i].run();
        failures += result.pass ? 0 : 1;
        std::printf("[%2zu] %s %s: %s\n", i + 1, result.pass ? "PASS" : "FAIL", criteria[i].name,
                    result.detail.c_str());
        std::fflush(stdout);
    }
    if (failures == 0) {
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
