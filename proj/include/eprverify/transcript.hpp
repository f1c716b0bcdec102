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

#include <string>
#include <vector>

#include "eprverify/bell_algebra.hpp"
#include "eprverify/bitstring.hpp"

namespace eprverify {

/// Public record of one verification round. The fine outcome is announced in
/// full, mirroring the protocol's public channel; the verdict depends only on
/// the coarse parity.
struct TranscriptRound {
    BitString subset;        // full original 2N-bit width
    size_t destination = 0;  // pair id measured and dropped
    FineOutcome fine = FineOutcome::UpUp;
    CoarseOutcome coarse = CoarseOutcome::Parallel;
};

struct Transcript {
    std::vector<TranscriptRound> rounds;
    bool accepted = false;

    /// One round per line: "round=i subset=<hex> dest=<id> fine=<uu|ud|du|dd>
    /// parity=<0|1>", then a verdict line.
    std::string serialize() const;
};

}  // namespace eprverify
