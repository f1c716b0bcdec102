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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eprverify {

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Flat sectioned text config: "[section]" headers, "key = value" lines,
/// '#' comments. Key order inside a section is preserved so an echoed config
/// serializes byte-identically.
class IniConfig {
  public:
    static IniConfig parse_string(const std::string& text);
    static IniConfig parse_file(const std::string& path);  // ConfigError on I/O or syntax

    bool has(const std::string& section, const std::string& key) const;
    std::optional<std::string> get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    /// ConfigError naming the missing field.
    std::string require(const std::string& section, const std::string& key) const;

    int64_t require_int(const std::string& section, const std::string& key) const;
    double require_double(const std::string& section, const std::string& key) const;
    int64_t get_int_or(const std::string& section, const std::string& key, int64_t fallback) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;

    void set(const std::string& section, const std::string& key, const std::string& value);

    std::vector<std::string> section_names() const;
    std::vector<std::pair<std::string, std::string>> section_items(
        const std::string& section) const;

    std::string serialize() const;

  private:
    struct Section {
        std::string name;
        std::vector<std::pair<std::string, std::string>> items;
    };
    std::vector<Section> sections_;
    const Section* find(const std::string& name) const;
    Section& find_or_add(const std::string& name);
};

}  // namespace eprverify
