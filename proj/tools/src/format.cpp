// Copyright 2026 The nuqet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nuqet/app/format.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

#include <json.hpp>

#include "nuqet/error.hpp"

namespace nuqet::app {

Format parse_format(const std::string &text) {
    if (text == "csv") {
        return Format::Csv;
    }
    if (text == "json") {
        return Format::Json;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + text + "' (csv|json)");
}

std::string format_double(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::general, 17);
    if (result.ec != std::errc{}) {
        throw Error(ErrorCode::InvalidArgument, "cannot format value");
    }
    return std::string(buffer, result.ptr);
}

void write_csv(const Table &table, std::ostream &out) {
    for (const auto &comment : table.comments) {
        out << "# " << comment << '\n';
    }
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << format_double(row[c]);
        }
        out << '\n';
    }
}

void write_json(const Table &table, std::ostream &out) {
    nlohmann::ordered_json doc;
    doc["comments"] = table.comments;
    auto records = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json record;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (std::isfinite(row[c])) {
                record[table.columns[c]] = row[c];
            } else {
                record[table.columns[c]] = nullptr;
            }
        }
        records.push_back(std::move(record));
    }
    doc["records"] = std::move(records);
    out << doc.dump(2) << '\n';
}

void write_table(const Table &table, Format format, std::ostream &out) {
    if (format == Format::Csv) {
        write_csv(table, out);
    } else {
        write_json(table, out);
    }
}

} // namespace nuqet::app
