// Copyright 2026 The zkgame Authors
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

#ifndef ZKG_IO_REPORT_HPP_
#define ZKG_IO_REPORT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zkg::io {

enum class Format { kTable, kCsv };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  std::string command;       // echoed command line
  std::string input_digest;  // fnv1a64 over the input files, or "none"
  std::vector<std::string> notes;
  std::optional<Table> table;
};

// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string fnv1a64(std::string_view bytes);

// Quotes a field containing a comma, quote, CR or LF; quotes are doubled.
std::string csv_field(std::string_view field);

// Header plus rows, "\n"-terminated. Throws DomainError when the report has
// no table.
std::string emit_csv(const Report& report);

// Echo and digest lines, notes, then the table with aligned columns.
std::string emit_table(const Report& report);

std::string render(const Report& report, Format format);

}  // namespace zkg::io

#endif  // ZKG_IO_REPORT_HPP_
