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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace eprverify {

/// A fixed-length string of bits.
///
/// Used both for the N-bit strings of the classical parity game and for the
/// 2N-bit index strings that select which label bits a verification round
/// asks about (pair k owns bits 2k and 2k+1: phase bit first, amplitude bit
/// second).
class BitString {
  public:
    BitString() = default;
    explicit BitString(size_t n) : bits_(n, 0) {}

    /// Parse from a string of '0'/'1' characters, e.g. "001101".
    static BitString from_string(const std::string& s);

    size_t size() const {
        return bits_.size();
    }
    uint8_t get(size_t i) const {
        return bits_.at(i);
    }
    void set(size_t i, uint8_t v) {
        bits_.at(i) = v ? 1 : 0;
    }
    void flip(size_t i) {
        bits_.at(i) ^= 1;
    }

    /// True if any bit is set.
    bool any() const;

    /// Number of set bits.
    size_t weight() const;

    BitString operator^(const BitString& other) const;
    bool operator==(const BitString& other) const {
        return bits_ == other.bits_;
    }

    std::string to_string() const;

    /// Hex rendering: digit j covers bits 4j..4j+3, bit 4j most significant
    /// within the digit; the last digit is zero-padded on the right.
    std::string to_hex() const;

  private:
    std::vector<uint8_t> bits_;
};

/// Parity of the subset s of the bits of x: the modulo-2 sum of the bit-wise
/// AND of x and s. Throws std::invalid_argument on length mismatch.
uint8_t subset_parity(const BitString& x, const BitString& s);

}  // namespace eprverify
