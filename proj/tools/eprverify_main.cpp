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

// Experiment runner: parses a config, seeds the RNG, dispatches to the
// protocol / attack / repeater / estimator simulations and persists
// machine-readable results.
//
// Exit codes: 0 success, 1 usage or config error, 2 runtime failure.
// A rejected protocol run or an infeasible chain is data, not an error.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "eprverify/config.hpp"
#include "eprverify/experiments.hpp"
#include "eprverify/results.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string output_path;
    int64_t seed = -1;
    bool seed_set = false;
    int64_t trials = -1;
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
    cmd->add_option("-c,--config", opts->config_path, "Experiment config file");
    cmd->add_option("-o,--output", opts->output_path, "Results file (overrides config)");
    cmd->add_option("-s,--seed", opts->seed, "Seed override");
    cmd->add_option("-t,--trials", opts->trials, "Trial count override");
}

int execute(const std::string& kind, const CommonOpts& opts,
            const std::vector<std::pair<std::string, std::string>>& extra) {
    using namespace eprverify;
    try {
        IniConfig cfg;
        if (!opts.config_path.empty()) {
            cfg = IniConfig::parse_file(opts.config_path);
        }
        cfg.set("experiment", "kind", kind);
        if (opts.seed >= 0) {
            cfg.set("experiment", "seed", std::to_string(opts.seed));
        }
        if (opts.trials >= 0) {
            cfg.set("experiment", "trials", std::to_string(opts.trials));
        }
        for (const auto& [key, value] : extra) {
            cfg.set(kind, key, value);
        }

        ResultsRecord record = run_experiment(cfg);

        std::string output = opts.output_path.empty()
                                 ? cfg.get_or("experiment", "output", "")
                                 : opts.output_path;
        if (!output.empty()) {
            record.write_file(output);
        }
        for (const auto& [k, v] : record.summary()) {
            std::cout << k << " = " << v << "\n";
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"eprverify - entanglement verification and QKD security simulations"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* verify = app.add_subcommand("verify-sim", "Hashing / direct verification runs");
    add_common(verify, &opts);

    auto* game = app.add_subcommand("game-sim", "Classical locked-box parity game");
    add_common(game, &opts);

    auto* repeater = app.add_subcommand("repeater-sim", "Purification and repeater chain");
    add_common(repeater, &opts);

    auto* attack = app.add_subcommand("attack-analysis", "Beamsplitter attack feasibility");
    add_common(attack, &opts);
    double mu = -1, eta = -1, det = -1;
    attack->add_option("--mu", mu, "Mean photon number");
    attack->add_option("--eta", eta, "Channel transmittance");
    attack->add_option("--detector", det, "Detector efficiency");

    auto* estimate = app.add_subcommand("estimate", "Singlet-fraction estimation");
    add_common(estimate, &opts);

    auto* oracle = app.add_subcommand("oracle-check", "Cross-simulator and reduction suites");
    add_common(oracle, &opts);

    auto* bounds = app.add_subcommand("bounds", "Information-theoretic bounds");
    add_common(bounds, &opts);
    double delta = -1, fidelity = -1, atypical = -1, error_rate = -1;
    int64_t key_bits = -1, n_pairs = -1;
    bounds->add_option("--delta", delta, "Fidelity deficit for the entropy bound");
    bounds->add_option("--key-bits", key_bits, "Key length R in bits");
    bounds->add_option("--fidelity", fidelity, "Fidelity for Eve's information bound");
    bounds->add_option("--atypical-mass", atypical, "Atypical subspace mass");
    bounds->add_option("--n-pairs", n_pairs, "Pair count N");
    bounds->add_option("--error-rate", error_rate, "Observed error rate (heuristic input)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors exit 1
    }

    std::vector<std::pair<std::string, std::string>> extra;
    std::string kind;
    if (verify->parsed()) {
        kind = "verify-sim";
    } else if (game->parsed()) {
        kind = "game-sim";
    } else if (repeater->parsed()) {
        kind = "repeater-sim";
    } else if (attack->parsed()) {
        kind = "attack-analysis";
        if (mu >= 0) {
            extra.emplace_back("mean_photon_number", eprverify::format_double(mu));
        }
        if (eta >= 0) {
            extra.emplace_back("channel_transmittance", eprverify::format_double(eta));
        }
        if (det >= 0) {
            extra.emplace_back("detector_efficiency", eprverify::format_double(det));
        }
    } else if (estimate->parsed()) {
        kind = "estimate";
    } else if (oracle->parsed()) {
        kind = "oracle-check";
    } else {
        kind = "bounds";
        if (delta >= 0) {
            extra.emplace_back("delta", eprverify::format_double(delta));
        }
        if (fidelity >= 0) {
            extra.emplace_back("fidelity", eprverify::format_double(fidelity));
        }
        if (key_bits >= 0) {
            extra.emplace_back("key_bits", std::to_string(key_bits));
        }
        if (atypical >= 0) {
            extra.emplace_back("atypical_mass", eprverify::format_double(atypical));
        }
        if (n_pairs >= 0) {
            extra.emplace_back("n_pairs", std::to_string(n_pairs));
        }
        if (error_rate >= 0) {
            extra.emplace_back("error_rate", eprverify::format_double(error_rate));
        }
    }
    return execute(kind, opts, extra);
}
