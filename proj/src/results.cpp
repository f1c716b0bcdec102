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

#include "eprverify/results.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eprverify {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void ResultsRecord::add_summary(const std::string& key, double value) {
    add_summary(key, format_double(value));
}

void ResultsRecord::add_summary(const std::string& key, int64_t value) {
    add_summary(key, std::to_string(value));
}

std::string ResultsRecord::serialize() const {
    std::ostringstream out;
    out << "# eprverify results v1\n";
    out << echo_.serialize();
    out << "\n[trials]\n";
    for (const std::string& row : rows_) {
        out << row << "\n";
    }
    out << "\n[summary]\n";
    for (const auto& [k, v] : summary_) {
        out << k << " = " << v << "\n";
    }
    return out.str();
}

void ResultsRecord::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << serialize();
    if (!out) {
        throw std::runtime_error("failed writing output file: " + path);
    }
}

}  // namespace eprverify
