// Copyright 2026 The phasebit Authors
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

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace phasebit::cli {

/// Failure while producing output (unwritable path, I/O error).
class RuntimeFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using Cell = std::variant<std::int64_t, double, std::string>;

/// Rows of cells under a fixed header. Every row has one cell per column.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) {
        if (row.size() != columns.size()) {
            throw std::logic_error("Table::add_row: row width does not match header");
        }
        rows.push_back(std::move(row));
    }
};

enum class OutputFormat { Csv, Json };

/// 12 significant digits, '.' decimal point regardless of locale.
inline std::string format_double(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    if (v == 0.0) {
        v = 0.0;  // drop the sign of -0
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

namespace detail {

inline std::string csv_field(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    if (const auto* d = std::get_if<double>(&cell)) {
        return format_double(*d);
    }
    const auto& s = std::get<std::string>(cell);
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + '"';
}

inline std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out + '"';
}

inline std::string json_value(const Cell& cell) {
    if (const auto* i = std::get_if<std::int64_t>(&cell)) {
        return std::to_string(*i);
    }
    if (const auto* d = std::get_if<double>(&cell)) {
        return std::isfinite(*d) ? format_double(*d) : "null";
    }
    return json_string(std::get<std::string>(cell));
}

}  // namespace detail

/// Header line, then one line per row, '\n' terminated.
inline void emit_csv(const Table& table, std::ostream& out) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << detail::csv_field(row[c]);
        }
        out << '\n';
    }
}

/// Array of objects keyed by the CSV column names. Non-finite numbers
/// become null.
inline void emit_json(const Table& table, std::ostream& out) {
    if (table.rows.empty()) {
        out << "[]\n";
        return;
    }
    out << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << "  {";
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out << (c ? ", " : "") << detail::json_string(table.columns[c]) << ": "
                << detail::json_value(table.rows[r][c]);
        }
        out << (r + 1 < table.rows.size() ? "},\n" : "}\n");
    }
    out << "]\n";
}

inline void emit(const Table& table, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Csv) {
        emit_csv(table, out);
    } else {
        emit_json(table, out);
    }
}

/// Writes to `path`, or to `stdout_stream` when path is "-".
inline void write_table(const Table& table, OutputFormat format, const std::string& path,
                        std::ostream& stdout_stream) {
    if (path == "-") {
        emit(table, format, stdout_stream);
        stdout_stream.flush();
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw RuntimeFailure("cannot open output file '" + path + "'");
    }
    emit(table, format, file);
    file.flush();
    if (!file) {
        throw RuntimeFailure("write to '" + path + "' failed");
    }
}

}  // namespace phasebit::cli
