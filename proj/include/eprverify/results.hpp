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

#include "eprverify/config.hpp"

namespace eprverify {

/// Machine-readable record of one experiment run: the config echo (a valid
/// config that reproduces the run when fed back in), line-delimited per-trial
/// rows, and an aggregate summary recomputable from the rows.
class ResultsRecord {
  public:
    explicit ResultsRecord(IniConfig echo) : echo_(std::move(echo)) {}

    void add_row(const std::string& row) {
        rows_.push_back(row);
    }
    void add_summary(const std::string& key, const std::string& value) {
        summary_.emplace_back(key, value);
    }
    void add_summary(const std::string& key, double value);
    void add_summary(const std::string& key, int64_t value);

    const IniConfig& echo() const {
        return echo_;
    }
    const std::vector<std::string>& rows() const {
        return rows_;
    }
    const std::vector<std::pair<std::string, std::string>>& summary() const {
        return summary_;
    }

    std::string serialize() const;

    /// std::runtime_error if the file cannot be written.
    void write_file(const std::string& path) const;

  private:
    IniConfig echo_;
    std::vector<std::string> rows_;
    std::vector<std::pair<std::string, std::string>> summary_;
};

/// Fixed formatting used everywhere a double lands in a results file, so
/// identical runs serialize byte-identically.
std::string format_double(double v);

}  // namespace eprverify
