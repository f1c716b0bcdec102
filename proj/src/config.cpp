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

#include "eprverify/config.hpp"

#include <fstream>
#include <sstream>

namespace eprverify {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

IniConfig IniConfig::parse_string(const std::string& text) {
    IniConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::string current;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        if (t.front() == '[') {
            if (t.back() != ']') {
                throw ConfigError("line " + std::to_string(line_no) + ": unterminated section");
            }
            current = trim(t.substr(1, t.size() - 2));
            if (current.empty()) {
                throw ConfigError("line " + std::to_string(line_no) + ": empty section name");
            }
            cfg.find_or_add(current);
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        }
        if (current.empty()) {
            throw ConfigError("line " + std::to_string(line_no) + ": key outside any section");
        }
        cfg.set(current, trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

IniConfig IniConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str());
}

const IniConfig::Section* IniConfig::find(const std::string& name) const {
    for (const Section& s : sections_) {
        if (s.name == name) {
            return &s;
        }
    }
    return nullptr;
}

IniConfig::Section& IniConfig::find_or_add(const std::string& name) {
    for (Section& s : sections_) {
        if (s.name == name) {
            return s;
        }
    }
    sections_.push_back(Section{name, {}});
    return sections_.back();
}

bool IniConfig::has(const std::string& section, const std::string& key) const {
    return get(section, key).has_value();
}

std::optional<std::string> IniConfig::get(const std::string& section,
                                          const std::string& key) const {
    const Section* s = find(section);
    if (s == nullptr) {
        return std::nullopt;
    }
    for (const auto& [k, v] : s->items) {
        if (k == key) {
            return v;
        }
    }
    return std::nullopt;
}

std::string IniConfig::get_or(const std::string& section, const std::string& key,
                              const std::string& fallback) const {
    auto v = get(section, key);
    return v ? *v : fallback;
}

std::string IniConfig::require(const std::string& section, const std::string& key) const {
    auto v = get(section, key);
    if (!v) {
        throw ConfigError("missing required field [" + section + "] " + key);
    }
    return *v;
}

int64_t IniConfig::require_int(const std::string& section, const std::string& key) const {
    const std::string v = require(section, key);
    try {
        size_t pos = 0;
        int64_t n = std::stoll(v, &pos);
        if (pos != v.size()) {
            throw std::invalid_argument(v);
        }
        return n;
    } catch (const std::exception&) {
        throw ConfigError("field [" + section + "] " + key + " is not an integer: " + v);
    }
}

double IniConfig::require_double(const std::string& section, const std::string& key) const {
    const std::string v = require(section, key);
    try {
        size_t pos = 0;
        double d = std::stod(v, &pos);
        if (pos != v.size()) {
            throw std::invalid_argument(v);
        }
        return d;
    } catch (const std::exception&) {
        throw ConfigError("field [" + section + "] " + key + " is not a number: " + v);
    }
}

int64_t IniConfig::get_int_or(const std::string& section, const std::string& key,
                              int64_t fallback) const {
    return has(section, key) ? require_int(section, key) : fallback;
}

double IniConfig::get_double_or(const std::string& section, const std::string& key,
                                double fallback) const {
    return has(section, key) ? require_double(section, key) : fallback;
}

void IniConfig::set(const std::string& section, const std::string& key, const std::string& value) {
    Section& s = find_or_add(section);
    for (auto& [k, v] : s.items) {
        if (k == key) {
            v = value;
            return;
        }
    }
    s.items.emplace_back(key, value);
}

std::vector<std::string> IniConfig::section_names() const {
    std::vector<std::string> names;
    names.reserve(sections_.size());
    for (const Section& s : sections_) {
        names.push_back(s.name);
    }
    return names;
}

std::vector<std::pair<std::string, std::string>> IniConfig::section_items(
    const std::string& section) const {
    const Section* s = find(section);
    return s ? s->items : std::vector<std::pair<std::string, std::string>>{};
}

std::string IniConfig::serialize() const {
    std::ostringstream out;
    for (size_t i = 0; i < sections_.size(); i++) {
        if (i) {
            out << "\n";
        }
        out << "[" << sections_[i].name << "]\n";
        for (const auto& [k, v] : sections_[i].items) {
            out << k << " = " << v << "\n";
        }
    }
    return out.str();
}

}  // namespace eprverify
