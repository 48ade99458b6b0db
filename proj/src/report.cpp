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

#include "zkg/io/report.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "zkg/error.hpp"

namespace zkg::io {

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

std::string csv_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

void append_csv_row(std::string& out, const std::vector<std::string>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out += ',';
    out += csv_field(row[i]);
  }
  out += '\n';
}

// Display width in code points; labels may carry UTF-8 symbols.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

}  // namespace

std::string emit_csv(const Report& report) {
  if (!report.table) throw DomainError("report has no tabular payload");
  std::string out;
  append_csv_row(out, report.table->header);
  for (const auto& row : report.table->rows) append_csv_row(out, row);
  return out;
}

std::string emit_table(const Report& report) {
  std::ostringstream os;
  os << "# command: " << report.command << '\n';
  os << "# input: " << report.input_digest << '\n';
  for (const auto& note : report.notes) os << note << '\n';
  if (!report.table) return os.str();

  const auto& t = *report.table;
  std::vector<std::size_t> width(t.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], display_width(row[i]));
    }
  };
  widen(t.header);
  for (const auto& row : t.rows) widen(row);
  auto print = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line.append(width[i] - display_width(row[i]), ' ');
    }
    os << line << '\n';
  };
  if (!report.notes.empty()) os << '\n';
  print(t.header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  print(rule);
  for (const auto& row : t.rows) print(row);
  if (t.rows.empty()) os << "(none)\n";
  return os.str();
}

std::string render(const Report& report, Format format) {
  return format == Format::kCsv ? emit_csv(report) : emit_table(report);
}

}  // namespace zkg::io
