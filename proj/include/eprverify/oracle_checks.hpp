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

#include <map>
#include <string>
#include <vector>

#include "eprverify/bell_algebra.hpp"
#include "eprverify/bitstring.hpp"
#include "eprverify/dense_sim.hpp"

namespace eprverify {

// Ground-truth comparisons between the label algebra and the dense
// simulator, shared by the test suites and the `oracle-check` subcommand.

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Regenerate every gate-table entry (12 single-pair cases, 16 Bxor cases)
/// from the dense simulator and compare with the frozen constants,
/// amplitude-exact including the phase.
CheckResult check_gate_tables();

/// Exhaustive circuit-synthesis postcondition for N <= max_pairs: for every
/// nonzero subset s and every basis string x, the destination amplitude bit
/// after the circuit equals s.x, at label level and on amplitudes.
CheckResult check_circuit_synthesis(size_t max_pairs);

/// The two-round composite on three pairs maps |111111> to |101111> up to
/// phase (subsets 001101 then 1001 on the survivors).
CheckResult check_parity_composite();

/// On Bell-product inputs the label and dense simulations produce identical
/// coarse outcomes round by round.
CheckResult check_cross_simulator(uint64_t seed, int cases);

/// The reduction property: for random entangled strategies the exact joint
/// distribution of (coarse transcript, final singlet-projector outcome) is
/// unchanged by a prior Bell-basis measurement. Reports the largest total
/// variation distance seen.
CheckResult check_reduction(uint64_t seed, int n_states, double* max_tvd_out = nullptr);

/// Scalar purification recurrence against the dense two-pair simulation.
CheckResult check_purify_dense();

/// Scalar swapping composition against dense entanglement swapping.
CheckResult check_connect_dense();

/// Per-axis coarse-outcome table of the four Bell states against the dense
/// simulator, and premeasurement invariance of the estimator's sampling
/// distribution.
CheckResult check_estimator_invariance();

/// All of the above with default parameters.
std::vector<CheckResult> run_all_oracle_checks(uint64_t seed, int reduction_states);

// --- exact enumeration helpers (also used by tests) ---

/// Exact joint distribution over (coarse outcome of round 1..m, R), where R
/// is the final all-singlets projector outcome on the survivors. All m
/// rounds are executed (no early stop); keys are the outcome bits
/// (c1, ..., cm, R).
std::map<std::vector<uint8_t>, double> enumerate_joint(const DenseState& state,
                                                       const std::vector<BitString>& subsets);

/// Same joint distribution computed after a Bell premeasurement.
std::map<std::vector<uint8_t>, double> enumerate_joint_premeasured(
    const DenseState& state, const std::vector<BitString>& subsets);

double total_variation_distance(const std::map<std::vector<uint8_t>, double>& a,
                                const std::map<std::vector<uint8_t>, double>& b);

/// Exact acceptance probability (reject-fast semantics) and the
/// accept-conditioned fidelity of the survivors as singlets.
struct AcceptanceAnalysis {
    double p_accept = 0;
    double fidelity_given_accept = 0;  // meaningful only when p_accept > 0
};
AcceptanceAnalysis analyze_acceptance(const DenseState& state,
                                      const std::vector<BitString>& subsets);

/// Exact label-level outcome probabilities, averaged over every possible
/// subset sequence (uniform nonzero on live pairs). Feasible for small N.
/// p_accept_clean is the probability of accepting with all survivors
/// singlets after realignment.
struct LabelAcceptance {
    double p_accept = 0;
    double p_accept_clean = 0;
};
LabelAcceptance exact_label_outcomes(const BellString& source, size_t m);

double exact_label_acceptance(const BellString& source, size_t m);

struct PurifyResultRef {
    double fidelity;
    double success_probability;
};

/// Dense reference for one purification step on two Werner pairs.
PurifyResultRef purify_step_dense(double f);

/// Dense reference for the swapped composition of two Werner pairs.
double connect_dense(double f1, double f2);

}  // namespace eprverify
