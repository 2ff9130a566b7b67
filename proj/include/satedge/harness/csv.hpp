// Copyright 2026 The satedge Authors
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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "satedge/errors.hpp"

namespace satedge::harness {

/// Nine significant digits, enough to round-trip the values we emit and
/// stable across IEEE-754 platforms.
inline std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

inline std::string csv_field(double x) { return format_real(x); }
inline std::string csv_field(std::int64_t x) { return std::to_string(x); }
inline std::string csv_field(int x) { return std::to_string(x); }
inline std::string csv_field(bool x) { return x ? "1" : "0"; }
inline std::string csv_field(const std::string& s) { return s; }
inline std::string csv_field(const char* s) { return s; }

template <class... Fields>
void csv_row(std::string& out, const Fields&... fields) {
    bool first = true;
    ((out += first ? "" : ",", out += csv_field(fields), first = false), ...);
    out += '\n';
}

/// Writes `content` to `dir/name`, creating `dir` if needed.
inline std::filesystem::path write_text_file(const std::filesystem::path& dir, const std::string& name,
                                             const std::string& content) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = dir / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
    return path;
}

} // namespace satedge::harness
