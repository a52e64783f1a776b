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

/**
 * @file
 * Tabular output shared by the figure, sweep and report commands.
 *
 * CSV is locale-independent: '.' decimal separator, 17 significant digits,
 * LF line endings. Leading '#' lines carry column documentation.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nuqet::app {

enum class Format { Csv, Json };

Format parse_format(const std::string &text);

/// std::to_chars general format with 17 significant digits.
std::string format_double(double value);

struct Table {
    std::vector<std::string> comments;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_csv(const Table &table, std::ostream &out);
/// {"comments": [...], "records": [{column: value, ...}, ...]}
void write_json(const Table &table, std::ostream &out);
void write_table(const Table &table, Format format, std::ostream &out);

} // namespace nuqet::app
