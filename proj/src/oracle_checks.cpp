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

#include "eprverify/oracle_checks.hpp"

#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "eprverify/adversary.hpp"
#include "eprverify/channel.hpp"
#include "eprverify/security.hpp"
#include "eprverify/verification.hpp"

namespace eprverify {

namespace {

double max_amp_diff(const DenseState& a, const DenseState& b) {
    double d = 0;
    for (size_t i = 0; i < a.amplitudes().size(); i++) {
        d = std::max(d, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    }
    return d;
}

// Identify the dense action of a gate on a Bell-product input as
// (output labels, phase), or return false if it is not of that form.
bool identify_action(const DenseState& evolved, const BellString& in_labels, BellString* out,
                     Phase* phase) {
    size_t n = in_labels.n_pairs();
    for (size_t code = 0; code < (size_t{1} << (2 * n)); code++) {
        std::vector<BellLabel> labels(n);
        for (size_t k = 0; k < n; k++) {
            labels[k] = BellLabel::from_code(static_cast<uint8_t>((code >> (2 * (n - 1 - k))) & 3));
        }
        for (uint8_t p = 0; p < 4; p++) {
            BellString candidate(labels, Phase{p});
            DenseState expected = prepare_bell_product(candidate);
            if (max_amp_diff(evolved, expected) < 1e-10) {
                *out = candidate;
                *phase = Phase{p};
                return true;
            }
        }
    }
    return false;
}

}  // namespace

CheckResult check_gate_tables() {
    const GateActionTable& table = gate_action_table();
    int checked = 0;
    std::ostringstream detail;

    auto check_single = [&](GateKind kind, const std::array<SingleGateAction, 4>& entries,
                            const char* name) {
        for (uint8_t c = 0; c < 4; c++) {
            BellString in({BellLabel::from_code(c)});
            Gate g{kind, 0, 0};
            DenseState evolved = apply_unitary(prepare_bell_product(in), g);
            BellString out;
            Phase phase;
            if (!identify_action(evolved, in, &out, &phase)) {
                detail << name << " on " << in.to_string() << ": not a labeled Bell state; ";
                return false;
            }
            if (!(out.labels()[0] == entries[c].out) || !(phase == entries[c].phase)) {
                detail << name << " on " << in.to_string() << ": table mismatch; ";
                return false;
            }
            checked++;
        }
        return true;
    };

    bool ok = check_single(GateKind::Bx, table.bx, "Bx") &&
              check_single(GateKind::By, table.by, "By") &&
              check_single(GateKind::SigmaX, table.sigma_x, "SigmaX");

    if (ok) {
        for (uint8_t s = 0; s < 4 && ok; s++) {
            for (uint8_t t = 0; t < 4 && ok; t++) {
                BellString in({BellLabel::from_code(s), BellLabel::from_code(t)});
                DenseState evolved = apply_unitary(prepare_bell_product(in), Gate::bxor(0, 1));
                BellString out;
                Phase phase;
                const BxorAction& e = table.bxor[s * 4 + t];
                if (!identify_action(evolved, in, &out, &phase) ||
                    !(out.labels()[0] == e.out_source) || !(out.labels()[1] == e.out_target) ||
                    !(phase == e.phase)) {
                    detail << "Bxor on " << in.to_string() << ": table mismatch; ";
                    ok = false;
                    break;
                }
                checked++;
            }
        }
    }

    if (ok) {
        detail << checked << " entries match the dense simulator exactly";
    }
    return CheckResult{"gate-tables", ok, detail.str()};
}

CheckResult check_circuit_synthesis(size_t max_pairs) {
    std::ostringstream detail;
    int label_checks = 0;
    int dense_checks = 0;
    for (size_t n = 1; n <= max_pairs; n++) {
        std::vector<size_t> live(n);
        for (size_t i = 0; i < n; i++) {
            live[i] = i;
        }
        for (size_t mask = 1; mask < (size_t{1} << (2 * n)); mask++) {
            BitString s(2 * n);
            for (size_t b = 0; b < 2 * n; b++) {
                s.set(b, (mask >> (2 * n - 1 - b)) & 1);
            }
            ParityCircuit circuit = build_parity_circuit(s, live);
            std::set<std::string> images;
            for (size_t xm = 0; xm < (size_t{1} << (2 * n)); xm++) {
                BitString x(2 * n);
                for (size_t b = 0; b < 2 * n; b++) {
                    x.set(b, (xm >> (2 * n - 1 - b)) & 1);
                }
                BellString in = BellString::from_bits(x);
                BellString out = apply_gates(in, circuit.gates);
                if (out.label_of(circuit.destination).amplitude_bit != subset_parity(x, s)) {
                    detail << "N=" << n << " s=" << s.to_string() << " x=" << x.to_string()
                           << ": destination amplitude != s.x";
                    return CheckResult{"circuit-synthesis", false, detail.str()};
                }
                images.insert(out.to_bits().to_string());
                label_checks++;
                // Dense cross-check: the evolved amplitudes must equal the
                // label-evolved Bell product exactly, phase included.
                if (n <= 2 || xm % 7 == 0) {
                    DenseState evolved =
                        apply_unitaries(prepare_bell_product(in), circuit.gates);
                    DenseState expected = prepare_bell_product(out);
                    if (max_amp_diff(evolved, expected) > 1e-10) {
                        detail << "N=" << n << " s=" << s.to_string() << " x=" << x.to_string()
                               << ": dense evolution disagrees with label evolution";
                        return CheckResult{"circuit-synthesis", false, detail.str()};
                    }
                    dense_checks++;
                }
            }
            if (images.size() != (size_t{1} << (2 * n))) {
                detail << "N=" << n << " s=" << s.to_string() << ": circuit is not a bijection";
                return CheckResult{"circuit-synthesis", false, detail.str()};
            }
        }
    }
    detail << label_checks << " label cases, " << dense_checks << " dense cross-checks";
    return CheckResult{"circuit-synthesis", true, detail.str()};
}

CheckResult check_parity_composite() {
    BellString state = BellString::singlets(3);
    ParityCircuit first = build_parity_circuit(BitString::from_string("001101"), {0, 1, 2});
    state = apply_gates(state, first.gates);
    ParityCircuit second = build_parity_circuit(BitString::from_string("100001"), {0, 2});
    state = apply_gates(state, second.gates);
    BitString expected = BitString::from_string("101111");
    bool ok = state.to_bits() == expected && first.destination == 1 && second.destination == 0;
    std::ostringstream detail;
    detail << "composite maps 111111 -> " << state.to_bits().to_string() << " (expected "
           << expected.to_string() << ", up to phase)";
    return CheckResult{"parity-composite", ok, detail.str()};
}

CheckResult check_cross_simulator(uint64_t seed, int cases) {
    Rng rng(seed);
    for (int c = 0; c < cases; c++) {
        size_t n = 2 + rng.uniform_below(2);
        size_t m = 1 + rng.uniform_below(n - 1);
        std::vector<BellLabel> labels(n);
        for (auto& l : labels) {
            l = BellLabel::from_code(static_cast<uint8_t>(rng.uniform_below(4)));
        }
        BellString source(labels);
        std::vector<BitString> subsets = draw_subsets(n, m, rng);

        Rng label_rng(derive_seed(seed, static_cast<uint64_t>(c) * 2));
        Rng dense_rng(derive_seed(seed, static_cast<uint64_t>(c) * 2 + 1));
        LabelRunResult label_run = run_protocol_labels(source, subsets, label_rng);
        DenseRunResult dense_run =
            run_protocol_dense(prepare_bell_product(source), subsets, dense_rng);

        if (label_run.transcript.rounds.size() != dense_run.transcript.rounds.size() ||
            label_run.transcript.accepted != dense_run.transcript.accepted) {
            return CheckResult{"cross-simulator", false, "verdicts disagree"};
        }
        for (size_t r = 0; r < label_run.transcript.rounds.size(); r++) {
            if (label_run.transcript.rounds[r].coarse != dense_run.transcript.rounds[r].coarse) {
                return CheckResult{"cross-simulator", false, "coarse outcomes disagree"};
            }
        }
        if (label_run.transcript.accepted) {
            double fid = residual_fidelity(dense_run.residual, label_run.survivors);
            if (std::abs(fid - 1.0) > 1e-9) {
                return CheckResult{"cross-simulator", false, "residual states disagree"};
            }
        }
    }
    return CheckResult{"cross-simulator", true,
                       std::to_string(cases) + " Bell-product runs agree coarse-exactly"};
}

// ---------------------------------------------------------------------------
// Exact enumeration

namespace {

void enumerate_rec(const DenseState& state, const ProtocolPlan& plan, size_t round_idx,
                   std::vector<uint8_t>& prefix, double weight,
                   std::map<std::vector<uint8_t>, double>& out) {
    if (round_idx == plan.rounds.size()) {
        DenseState final_state = apply_unitaries(state, plan.realignment);
        double fid = residual_fidelity(final_state, BellString::singlets(final_state.n_pairs()));
        prefix.push_back(1);
        out[prefix] += weight * fid;
        prefix.back() = 0;
        out[prefix] += weight * (1.0 - fid);
        prefix.pop_back();
        return;
    }
    const PlannedRound& round = plan.rounds[round_idx];
    DenseState evolved = apply_unitaries(state, round.gates);
    std::array<double, 4> probs = pair_z_probabilities(evolved, round.destination);
    for (uint8_t o = 0; o < 4; o++) {
        if (probs[o] < 1e-14) {
            continue;
        }
        FineOutcome f = static_cast<FineOutcome>(o);
        DenseState collapsed = collapse_pair(evolved, round.destination, f);
        prefix.push_back(parity_bit(coarsen(f)));
        enumerate_rec(collapsed, plan, round_idx + 1, prefix, weight * probs[o], out);
        prefix.pop_back();
    }
}

}  // namespace

std::map<std::vector<uint8_t>, double> enumerate_joint(const DenseState& state,
                                                       const std::vector<BitString>& subsets) {
    ProtocolPlan plan = plan_protocol(state.n_pairs(), subsets);
    std::map<std::vector<uint8_t>, double> out;
    std::vector<uint8_t> prefix;
    enumerate_rec(state, plan, 0, prefix, 1.0, out);
    return out;
}

std::map<std::vector<uint8_t>, double> enumerate_joint_premeasured(
    const DenseState& state, const std::vector<BitString>& subsets) {
    std::map<std::vector<uint8_t>, double> out;
    for (const PremeasureBranch& branch : bell_premeasure(state)) {
        std::map<std::vector<uint8_t>, double> partial = enumerate_joint(branch.collapsed, subsets);
        for (const auto& [key, p] : partial) {
            out[key] += branch.probability * p;
        }
    }
    return out;
}

double total_variation_distance(const std::map<std::vector<uint8_t>, double>& a,
                                const std::map<std::vector<uint8_t>, double>& b) {
    double d = 0;
    for (const auto& [key, pa] : a) {
        auto it = b.find(key);
        d += std::abs(pa - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto& [key, pb] : b) {
        if (a.find(key) == a.end()) {
            d += pb;
        }
    }
    return 0.5 * d;
}

AcceptanceAnalysis analyze_acceptance(const DenseState& state,
                                      const std::vector<BitString>& subsets) {
    ProtocolPlan plan = plan_protocol(state.n_pairs(), subsets);
    AcceptanceAnalysis analysis;
    double fid_mass = 0;

    std::function<void(const DenseState&, size_t, double)> rec = [&](const DenseState& current,
                                                                     size_t round_idx,
                                                                     double weight) {
        if (round_idx == plan.rounds.size()) {
            DenseState final_state = apply_unitaries(current, plan.realignment);
            double fid =
                residual_fidelity(final_state, BellString::singlets(final_state.n_pairs()));
            analysis.p_accept += weight;
            fid_mass += weight * fid;
            return;
        }
        const PlannedRound& round = plan.rounds[round_idx];
        DenseState evolved = apply_unitaries(current, round.gates);
        std::array<double, 4> probs = pair_z_probabilities(evolved, round.destination);
        for (uint8_t o = 0; o < 4; o++) {
            if (probs[o] < 1e-14) {
                continue;
            }
            FineOutcome f = static_cast<FineOutcome>(o);
            if (coarsen(f) != CoarseOutcome::Antiparallel) {
                continue;  // rejected branch
            }
            rec(collapse_pair(evolved, round.destination, f), round_idx + 1, weight * probs[o]);
        }
    };
    rec(state, 0, 1.0);
    analysis.fidelity_given_accept = analysis.p_accept > 0 ? fid_mass / analysis.p_accept : 0.0;
    return analysis;
}

LabelAcceptance exact_label_outcomes(const BellString& source, size_t m) {
    std::function<LabelAcceptance(const BellString&, const BellString&, size_t)> rec =
        [&](const BellString& reference, const BellString& actual,
            size_t rounds_left) -> LabelAcceptance {
        if (rounds_left == 0) {
            BellString ref_copy = reference;
            BellString survivors = apply_gates(actual, realignment_gates(ref_copy));
            bool clean = survivors.to_bits().weight() == 2 * survivors.n_pairs();
            return LabelAcceptance{1.0, clean ? 1.0 : 0.0};
        }
        const std::vector<size_t>& live = reference.pair_ids();
        size_t bits = 2 * live.size();
        size_t count = (size_t{1} << bits) - 1;
        LabelAcceptance total;
        for (size_t mask = 1; mask <= count; mask++) {
            BitString s(2 * source.n_pairs());
            for (size_t i = 0; i < live.size(); i++) {
                s.set(2 * live[i], (mask >> (2 * i)) & 1);
                s.set(2 * live[i] + 1, (mask >> (2 * i + 1)) & 1);
            }
            BellString ref_copy = reference;
            PlannedRound round = plan_round_against_reference(s, ref_copy);
            BellString evolved = apply_gates(actual, round.gates);
            if (evolved.label_of(round.destination).amplitude_bit == 1) {
                BellString residual = evolved;
                residual.erase_pair(round.destination);
                LabelAcceptance sub = rec(ref_copy, residual, rounds_left - 1);
                total.p_accept += sub.p_accept;
                total.p_accept_clean += sub.p_accept_clean;
            }
        }
        total.p_accept /= static_cast<double>(count);
        total.p_accept_clean /= static_cast<double>(count);
        return total;
    };
    return rec(BellString::singlets(source.n_pairs()), source, m);
}

double exact_label_acceptance(const BellString& source, size_t m) {
    return exact_label_outcomes(source, m).p_accept;
}

CheckResult check_reduction(uint64_t seed, int n_states, double* max_tvd_out) {
    Rng rng(seed);
    double max_tvd = 0;
    for (int c = 0; c < n_states; c++) {
        size_t n = 2 + rng.uniform_below(2);
        size_t ancilla = rng.uniform_below(5);
        size_t m = 1 + rng.uniform_below(n - 1);
        DenseState state = general_pure_random(n, ancilla, rng);
        std::vector<BitString> subsets = draw_subsets(n, m, rng);
        auto direct = enumerate_joint(state, subsets);
        auto premeasured = enumerate_joint_premeasured(state, subsets);
        max_tvd = std::max(max_tvd, total_variation_distance(direct, premeasured));
    }
    if (max_tvd_out != nullptr) {
        *max_tvd_out = max_tvd;
    }
    std::ostringstream detail;
    detail << n_states << " random strategies, max TVD " << max_tvd;
    return CheckResult{"reduction", max_tvd < 1e-9, detail.str()};
}

// ---------------------------------------------------------------------------
// Purification and swapping references

PurifyResultRef purify_step_dense(double f) {
    double e = (1.0 - f) / 3.0;
    double weight[4];
    weight[kSinglet.code()] = f;
    weight[kPhiPlus.code()] = e;
    weight[kPsiPlus.code()] = e;
    weight[kPhiMinus.code()] = e;

    // Rotate the singlet frame onto phi+ on both pairs, bilateral XOR, keep
    // the source when the target measures parallel, rotate back.
    std::vector<Gate> rotate;
    for (size_t p = 0; p < 2; p++) {
        rotate.push_back(Gate::sigma_x(p));
        rotate.push_back(Gate::by(p));
        rotate.push_back(Gate::bx(p));
    }
    std::vector<Gate> unrotate =
        inverse_gates({Gate::sigma_x(0), Gate::by(0), Gate::bx(0)});

    double p_success = 0;
    double fid_mass = 0;
    for (uint8_t l1 = 0; l1 < 4; l1++) {
        for (uint8_t l2 = 0; l2 < 4; l2++) {
            double w = weight[l1] * weight[l2];
            BellString in({BellLabel::from_code(l1), BellLabel::from_code(l2)});
            DenseState state = apply_unitaries(prepare_bell_product(in), rotate);
            state = apply_unitary(state, Gate::bxor(0, 1));
            std::array<double, 4> probs = pair_z_probabilities(state, 1);
            for (uint8_t o = 0; o < 4; o++) {
                FineOutcome fine = static_cast<FineOutcome>(o);
                if (probs[o] < 1e-14 || coarsen(fine) != CoarseOutcome::Parallel) {
                    continue;
                }
                DenseState kept = collapse_pair(state, 1, fine);
                kept = apply_unitaries(kept, unrotate);
                double fid = residual_fidelity(kept, BellString::singlets(1));
                p_success += w * probs[o];
                fid_mass += w * probs[o] * fid;
            }
        }
    }
    return PurifyResultRef{fid_mass / p_success, p_success};
}

namespace {

const std::array<cdouble, 4> kPauliMatrices[4] = {
    {cdouble(1, 0), cdouble(0, 0), cdouble(0, 0), cdouble(1, 0)},    // I
    {cdouble(0, 0), cdouble(1, 0), cdouble(1, 0), cdouble(0, 0)},    // X
    {cdouble(0, 0), cdouble(0, -1), cdouble(0, 1), cdouble(0, 0)},   // Y
    {cdouble(1, 0), cdouble(0, 0), cdouble(0, 0), cdouble(-1, 0)},   // Z
};

// Correction on the surviving (A, C) pair per middle Bell outcome, derived
// from the honest singlet-singlet case.
std::array<int, 4> derive_swap_corrections() {
    std::array<int, 4> correction{};
    DenseState honest = prepare_bell_product(BellString::singlets(2));
    for (const BellMeasureBranch& branch : measure_bell_on_qubits(honest, 1, 2)) {
        int best = 0;
        double best_fid = -1;
        for (int p = 0; p < 4; p++) {
            DenseState corrected = apply_qubit_matrix(branch.collapsed, 1, kPauliMatrices[p]);
            double fid = residual_fidelity(corrected, BellString::singlets(1));
            if (fid > best_fid) {
                best_fid = fid;
                best = p;
            }
        }
        correction[branch.outcome.code()] = best;
    }
    return correction;
}

}  // namespace

double connect_dense(double f1, double f2) {
    static const std::array<int, 4> correction = derive_swap_corrections();
    auto weights = [](double f) {
        std::array<double, 4> w{};
        double e = (1.0 - f) / 3.0;
        w[kSinglet.code()] = f;
        w[kPhiPlus.code()] = e;
        w[kPsiPlus.code()] = e;
        w[kPhiMinus.code()] = e;
        return w;
    };
    std::array<double, 4> w1 = weights(f1);
    std::array<double, 4> w2 = weights(f2);

    double fid = 0;
    for (uint8_t l1 = 0; l1 < 4; l1++) {
        for (uint8_t l2 = 0; l2 < 4; l2++) {
            double w = w1[l1] * w2[l2];
            BellString in({BellLabel::from_code(l1), BellLabel::from_code(l2)});
            DenseState state = prepare_bell_product(in);
            for (const BellMeasureBranch& branch : measure_bell_on_qubits(state, 1, 2)) {
                DenseState corrected = apply_qubit_matrix(
                    branch.collapsed, 1, kPauliMatrices[correction[branch.outcome.code()]]);
                fid += w * branch.probability * residual_fidelity(corrected, BellString::singlets(1));
            }
        }
    }
    return fid;
}

CheckResult check_purify_dense() {
    std::ostringstream detail;
    for (double f : {0.6, 0.8, 0.95}) {
        PurifyResult scalar = purify_step(f);
        PurifyResultRef dense = purify_step_dense(f);
        if (std::abs(scalar.fidelity - dense.fidelity) > 1e-9 ||
            std::abs(scalar.success_probability - dense.success_probability) > 1e-9) {
            detail << "f=" << f << ": scalar (" << scalar.fidelity << ", "
                   << scalar.success_probability << ") vs dense (" << dense.fidelity << ", "
                   << dense.success_probability << ")";
            return CheckResult{"purify-dense", false, detail.str()};
        }
    }
    detail << "recurrence matches the dense two-pair simulation at f in {0.6, 0.8, 0.95}";
    return CheckResult{"purify-dense", true, detail.str()};
}

CheckResult check_connect_dense() {
    std::ostringstream detail;
    const double cases[][2] = {{1.0, 0.7}, {0.95, 0.95}, {0.8, 0.9}, {0.6, 0.85}};
    for (const auto& c : cases) {
        double scalar = connect(c[0], c[1]);
        double dense = connect_dense(c[0], c[1]);
        if (std::abs(scalar - dense) > 1e-9) {
            detail << "connect(" << c[0] << ", " << c[1] << "): scalar " << scalar << " vs dense "
                   << dense;
            return CheckResult{"connect-dense", false, detail.str()};
        }
    }
    detail << "swapping composition matches dense simulation on all sampled fidelities";
    return CheckResult{"connect-dense", true, detail.str()};
}

CheckResult check_estimator_invariance() {
    // Per-label, per-axis coarse outcomes against the dense simulator.
    for (uint8_t code = 0; code < 4; code++) {
        for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
            DenseState state = prepare_bell_product(BellString({BellLabel::from_code(code)}));
            std::array<double, 4> probs = pair_axis_probabilities(state, 0, axis);
            double antiparallel =
                probs[static_cast<size_t>(FineOutcome::UpDown)] +
                probs[static_cast<size_t>(FineOutcome::DownUp)];
            double expected = label_antiparallel_along(BellLabel::from_code(code), axis);
            if (std::abs(antiparallel - expected) > 1e-10) {
                return CheckResult{"estimator-invariance", false,
                                   "axis table disagrees with dense simulator"};
            }
        }
    }

    // Premeasurement invariance of the (axis, coarse outcome) distribution.
    Rng rng(0x9d3f0451u);
    for (int c = 0; c < 5; c++) {
        DenseState state = general_pure_random(2, 2, rng);
        for (int a1 = 0; a1 < 3; a1++) {
            for (int a2 = 0; a2 < 3; a2++) {
                Axis axes[2] = {static_cast<Axis>(a1), static_cast<Axis>(a2)};
                // Joint coarse distribution over sequential measurements of
                // pairs 0 and 1.
                auto joint = [&](const DenseState& s) {
                    std::map<std::vector<uint8_t>, double> dist;
                    std::array<double, 4> p0 = pair_axis_probabilities(s, 0, axes[0]);
                    for (uint8_t o0 = 0; o0 < 4; o0++) {
                        if (p0[o0] < 1e-14) {
                            continue;
                        }
                        DenseState s1 =
                            collapse_pair_axis(s, 0, axes[0], static_cast<FineOutcome>(o0));
                        std::array<double, 4> p1 = pair_axis_probabilities(s1, 1, axes[1]);
                        for (uint8_t o1 = 0; o1 < 4; o1++) {
                            if (p1[o1] < 1e-14) {
                                continue;
                            }
                            std::vector<uint8_t> key{
                                parity_bit(coarsen(static_cast<FineOutcome>(o0))),
                                parity_bit(coarsen(static_cast<FineOutcome>(o1)))};
                            dist[key] += p0[o0] * p1[o1];
                        }
                    }
                    return dist;
                };
                auto direct = joint(state);
                std::map<std::vector<uint8_t>, double> premeasured;
                for (const PremeasureBranch& branch : bell_premeasure(state)) {
                    for (const auto& [key, p] : joint(branch.collapsed)) {
                        premeasured[key] += branch.probability * p;
                    }
                }
                if (total_variation_distance(direct, premeasured) > 1e-9) {
                    return CheckResult{"estimator-invariance", false,
                                       "premeasurement changed the sampling distribution"};
                }
            }
        }
    }
    return CheckResult{"estimator-invariance", true,
                       "axis table exact; sampling distribution premeasurement-invariant"};
}

std::vector<CheckResult> run_all_oracle_checks(uint64_t seed, int reduction_states) {
    std::vector<CheckResult> results;
    results.push_back(check_gate_tables());
    results.push_back(check_circuit_synthesis(3));
    results.push_back(check_parity_composite());
    results.push_back(check_cross_simulator(seed, 40));
    results.push_back(check_reduction(seed, reduction_states));
    results.push_back(check_purify_dense());
    results.push_back(check_connect_dense());
    results.push_back(check_estimator_invariance());
    return results;
}

}  // namespace eprverify
