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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eprverify {

namespace {

// log2(2^(2R) - 1), stable for any R.
double log2_pow2_minus_one(size_t two_r) {
    return static_cast<double>(two_r) + std::log1p(-std::exp2(-static_cast<double>(two_r))) / M_LN2;
}

double z_quantile_two_sided(double confidence) {
    // Inverse normal CDF at 1 - (1-confidence)/2, by bisection on erfc.
    double target = 1.0 - (1.0 - confidence) / 2.0;
    double lo = 0, hi = 10;
    for (int i = 0; i < 200; i++) {
        double mid = 0.5 * (lo + hi);
        double cdf = 0.5 * std::erfc(-mid / std::sqrt(2.0));
        (cdf < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double log_binomial_pmf(size_t m, size_t k, double p) {
    if (p <= 0) {
        return k == 0 ? 0.0 : -INFINITY;
    }
    if (p >= 1) {
        return k == m ? 0.0 : -INFINITY;
    }
    double lg = std::lgamma(static_cast<double>(m) + 1) - std::lgamma(static_cast<double>(k) + 1) -
                std::lgamma(static_cast<double>(m - k) + 1);
    return lg + static_cast<double>(k) * std::log(p) +
           static_cast<double>(m - k) * std::log1p(-p);
}

double binomial_tail_geq(size_t m, size_t k, double p) {
    double s = 0;
    for (size_t j = k; j <= m; j++) {
        s += std::exp(log_binomial_pmf(m, j, p));
    }
    return std::min(1.0, s);
}

double binomial_tail_leq(size_t m, size_t k, double p) {
    double s = 0;
    for (size_t j = 0; j <= k; j++) {
        s += std::exp(log_binomial_pmf(m, j, p));
    }
    return std::min(1.0, s);
}

// Clopper-Pearson interval for the antiparallel probability q.
std::pair<double, double> clopper_pearson(size_t m, size_t k, double confidence) {
    double alpha = 1.0 - confidence;
    double lo = 0.0, hi = 1.0;
    if (k > 0) {
        double a = 0, b = 1;
        for (int i = 0; i < 100; i++) {
            double mid = 0.5 * (a + b);
            (binomial_tail_geq(m, k, mid) < alpha / 2 ? a : b) = mid;
        }
        lo = 0.5 * (a + b);
    }
    if (k < m) {
        double a = 0, b = 1;
        for (int i = 0; i < 100; i++) {
            double mid = 0.5 * (a + b);
            (binomial_tail_leq(m, k, mid) >= alpha / 2 ? a : b) = mid;
        }
        hi = 0.5 * (a + b);
    }
    return {lo, hi};
}

}  // namespace

double entropy_bound(double delta, size_t key_bits) {
    if (delta < 0 || delta >= 1) {
        throw std::domain_error("delta must lie in [0, 1)");
    }
    if (key_bits < 1) {
        throw std::domain_error("key length must be at least 1 bit");
    }
    if (delta == 0) {
        return 0.0;
    }
    double log2_dim = log2_pow2_minus_one(2 * key_bits);
    return -(1.0 - delta) * std::log2(1.0 - delta) - delta * (std::log2(delta) - log2_dim);
}

double eve_info_bound(double fidelity, size_t key_bits) {
    if (!(fidelity > 0) || fidelity > 1) {
        throw std::domain_error("fidelity must lie in (0, 1]");
    }
    return entropy_bound(1.0 - fidelity, key_bits);
}

double typical_subspace_bound(size_t n_pairs, double atypical_mass, double typical_log_dim) {
    if (atypical_mass < 0 || atypical_mass > 1) {
        throw std::domain_error("atypical mass must lie in [0, 1]");
    }
    if (atypical_mass == 0) {
        return typical_log_dim;
    }
    double atypical_term =
        atypical_mass * (2.0 * static_cast<double>(n_pairs) - std::log2(atypical_mass));
    return typical_log_dim + atypical_term;
}

double binary_entropy(double p) {
    if (p <= 0 || p >= 1) {
        return 0.0;
    }
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

uint8_t label_antiparallel_along(BellLabel label, Axis axis) {
    // Frozen from the dense simulator: the singlet is antiparallel along all
    // three axes; each triplet along exactly one (psi+ -> z, phi+ -> y,
    // phi- -> x).
    static constexpr uint8_t table[4][3] = {
        // x  y  z
        {0, 1, 0},  // phi+
        {0, 0, 1},  // psi+
        {1, 0, 0},  // phi-
        {1, 1, 1},  // psi-
    };
    return table[label.code()][static_cast<size_t>(axis)];
}

namespace {

SampleReport finish_report(size_t m, size_t k, std::vector<Axis> axes, double confidence,
                           CiMethod method) {
    SampleReport report;
    report.m = m;
    report.antiparallel_count = k;
    report.axes = std::move(axes);
    report.confidence_level = confidence;
    report.method = method;
    double md = static_cast<double>(m);
    double kd = static_cast<double>(k);
    report.f_hat_raw = (3.0 * kd - md) / (2.0 * md);
    report.f_hat_clamped = std::clamp(report.f_hat_raw, 0.0, 1.0);
    if (method == CiMethod::Normal) {
        // Large-sample interval on the antiparallel rate q, mapped through
        // f = (3q - 1)/2. Only one of the three axis measurements is made
        // per pair; with the axis drawn uniformly, each sample is Bernoulli
        // with the axis-averaged rate, so the plain proportion variance
        // q(1-q)/m is the right stratified-sampling formula here. It is
        // conservative for sampling without replacement (finite-population
        // correction < 1).
        double q = kd / md;
        double z = z_quantile_two_sided(confidence);
        double half = z * 1.5 * std::sqrt(q * (1.0 - q) / md);
        report.ci_lo = report.f_hat_raw - half;
        report.ci_hi = report.f_hat_raw + half;
    } else {
        auto [qlo, qhi] = clopper_pearson(m, k, confidence);
        report.ci_lo = (3.0 * qlo - 1.0) / 2.0;
        report.ci_hi = (3.0 * qhi - 1.0) / 2.0;
    }
    return report;
}

std::vector<size_t> sample_without_replacement(const std::vector<size_t>& ids, size_t m,
                                               Rng& rng) {
    std::vector<size_t> pool = ids;
    std::vector<size_t> chosen;
    chosen.reserve(m);
    for (size_t i = 0; i < m; i++) {
        size_t j = i + static_cast<size_t>(rng.uniform_below(pool.size() - i));
        std::swap(pool[i], pool[j]);
        chosen.push_back(pool[i]);
    }
    return chosen;
}

}  // namespace

SampleReport estimate_singlet_fraction(const BellString& pairs, size_t m, Rng& rng,
                                       double confidence, CiMethod method) {
    if (m == 0 || m > pairs.n_pairs()) {
        throw std::invalid_argument("sample size must lie in [1, N]");
    }
    std::vector<size_t> chosen = sample_without_replacement(pairs.pair_ids(), m, rng);
    std::vector<Axis> axes;
    axes.reserve(m);
    size_t k = 0;
    for (size_t id : chosen) {
        Axis axis = static_cast<Axis>(rng.uniform_below(3));
        axes.push_back(axis);
        k += label_antiparallel_along(pairs.label_of(id), axis);
    }
    return finish_report(m, k, std::move(axes), confidence, method);
}

SampleReport estimate_singlet_fraction(const DenseState& pairs, size_t m, Rng& rng,
                                       double confidence, CiMethod method) {
    if (m == 0 || m > pairs.n_pairs()) {
        throw std::invalid_argument("sample size must lie in [1, N]");
    }
    std::vector<size_t> chosen = sample_without_replacement(pairs.pair_ids(), m, rng);
    DenseState current = pairs;
    std::vector<Axis> axes;
    axes.reserve(m);
    size_t k = 0;
    for (size_t id : chosen) {
        Axis axis = static_cast<Axis>(rng.uniform_below(3));
        axes.push_back(axis);
        std::array<double, 4> probs = pair_axis_probabilities(current, id, axis);
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
        FineOutcome f = static_cast<FineOutcome>(fine);
        if (coarsen(f) == CoarseOutcome::Antiparallel) {
            k++;
        }
        current = collapse_pair_axis(current, id, axis, f);
    }
    return finish_report(m, k, std::move(axes), confidence, method);
}

}  // namespace eprverify
