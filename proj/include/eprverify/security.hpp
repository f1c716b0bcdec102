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
#include "eprverify/dense_sim.hpp"
#include "eprverify/rng.hpp"

namespace eprverify {

// Information-theoretic accounting: bounds on Eve's knowledge of the key and
// the random-sampling singlet-fraction estimator.

/// High fidelity implies low entropy: if the R-pair state has singlet-product
/// fidelity above 1 - delta, its von Neumann entropy is below
///
///   -(1-delta) log2(1-delta) - delta log2(delta / (2^(2R) - 1))
///
/// Exactly 0 at delta = 0. Throws std::domain_error outside 0 <= delta < 1
/// or for R < 1.
double entropy_bound(double delta, size_t key_bits);

/// Entropy bounds mutual information (a Holevo-type bound), so the same
/// expression with delta = 1 - fidelity caps the bits Eve can hold about an
/// R-bit key.
double eve_info_bound(double fidelity, size_t key_bits);

/// Bound on Eve's information from a typical-subspace argument: the typical
/// log-dimension plus the atypical mass contribution
/// -eps * log2(eps / 2^(2N)) (about 2N*eps for small eps).
/// typical_log_dim is supplied by the caller; the CLI offers a
/// binomial-entropy heuristic for it.
double typical_subspace_bound(size_t n_pairs, double atypical_mass, double typical_log_dim);

/// Binary entropy in bits, h2(0) = h2(1) = 0.
double binary_entropy(double p);

enum class CiMethod : uint8_t { Normal, ExactBinomial };

/// Report of one singlet-fraction estimation experiment.
struct SampleReport {
    size_t m = 0;                  // pairs sampled (without replacement)
    size_t antiparallel_count = 0; // k
    std::vector<Axis> axes;        // per-sample axis log
    double f_hat_raw = 0;          // (3k - m) / (2m), can leave [0,1] by noise
    double f_hat_clamped = 0;
    double confidence_level = 0.99;
    CiMethod method = CiMethod::Normal;
    double ci_lo = 0;  // interval for the raw estimator
    double ci_hi = 0;
};

/// Estimate the fraction of singlets among N shared pairs: sample m pairs
/// without replacement, measure both members of each along an axis chosen
/// uniformly from {x, y, z}, count antiparallel outcomes k and report
/// f_hat = (3k - m) / (2m).
///
/// A singlet is antiparallel along every axis; each triplet is antiparallel
/// along exactly one of the three, so E[f_hat] equals the true singlet
/// fraction for any Bell-diagonal population. The default interval is the
/// large-sample normal one; ExactBinomial gives a Clopper-Pearson interval
/// on the antiparallel rate mapped through f = (3q - 1) / 2.
SampleReport estimate_singlet_fraction(const BellString& pairs, size_t m, Rng& rng,
                                       double confidence = 0.99,
                                       CiMethod method = CiMethod::Normal);

/// Dense-state variant: genuine sequential Born-rule measurements.
SampleReport estimate_singlet_fraction(const DenseState& pairs, size_t m, Rng& rng,
                                       double confidence = 0.99,
                                       CiMethod method = CiMethod::Normal);

/// Deterministic coarse outcome of each Bell label measured along each axis
/// (1 = antiparallel). Frozen from the dense simulator; checked against it
/// in the oracle suite.
uint8_t label_antiparallel_along(BellLabel label, Axis axis);

}  // namespace eprverify
