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

#include "zkg/fuzzy.hpp"

#include <algorithm>
#include <iterator>

#include "zkg/error.hpp"

namespace zkg::fuzzy {

LinguisticScale::LinguisticScale(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) throw DomainError("a linguistic scale needs at least two labels");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) throw DomainError("duplicate label '" + labels_[i] + "'");
    }
  }
}

std::size_t LinguisticScale::position(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw DomainError("unknown label '" + std::string(label) + "'");
}

std::strong_ordering compare_labels(const LinguisticScale& scale, std::string_view a,
                                    std::string_view b) {
  return scale.position(a) <=> scale.position(b);
}

FuzzyGame::FuzzyGame(LinguisticScale scale, std::vector<std::vector<FuzzyCell>> cells)
    : scale_(std::move(scale)), cells_(std::move(cells)) {
  if (cells_.empty() || cells_.front().empty()) throw DomainError("fuzzy grid must be non-empty");
  for (const auto& row : cells_) {
    if (row.size() != cells_.front().size()) throw DomainError("fuzzy grid rows differ in length");
    for (const auto& c : row) {
      if (c.v >= scale_.size() || c.phi >= scale_.size()) {
        throw DomainError("cell value outside the linguistic scale");
      }
    }
  }
  std::vector<std::string> rows, cols;
  for (std::size_t r = 0; r < q1(); ++r) rows.push_back("s1_" + std::to_string(r + 1));
  for (std::size_t c = 0; c < q2(); ++c) cols.push_back("s2_" + std::to_string(c + 1));
  labels_ = {std::move(rows), std::move(cols)};
}

namespace {

std::vector<std::vector<FuzzyCell>> zip_grids(const LinguisticScale& scale,
                                              const std::vector<std::vector<std::string>>& v,
                                              const std::vector<std::vector<std::string>>& phi) {
  if (v.size() != phi.size()) throw DomainError("v and phi grids differ in shape");
  std::vector<std::vector<FuzzyCell>> out;
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (v[r].size() != phi[r].size()) throw DomainError("v and phi grids differ in shape");
    std::vector<FuzzyCell> row;
    for (std::size_t c = 0; c < v[r].size(); ++c) {
      row.push_back({scale.position(v[r][c]), scale.position(phi[r][c])});
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

FuzzyGame::FuzzyGame(LinguisticScale scale, const std::vector<std::vector<std::string>>& v,
                     const std::vector<std::vector<std::string>>& phi)
    : FuzzyGame(scale, zip_grids(scale, v, phi)) {}

void FuzzyGame::set_strategy_labels(std::vector<std::string> row, std::vector<std::string> col) {
  if (row.size() != q1() || col.size() != q2()) {
    throw DomainError("strategy labels must match the grid shape");
  }
  labels_ = {std::move(row), std::move(col)};
}

std::string_view to_string(Interpretation i) {
  return i == Interpretation::kLiteral ? "literal" : "strict";
}

namespace {

template <typename Value>
std::vector<CellIndex> dominant_cells(const FuzzyGame& game, Interpretation interpretation,
                                      Value value) {
  std::vector<CellIndex> out;
  for (std::size_t r = 0; r < game.q1(); ++r) {
    for (std::size_t c = 0; c < game.q2(); ++c) {
      const std::size_t star = value(game.at(r, c));
      bool dominant = true;
      for (std::size_t r2 = 0; r2 < game.q1() && dominant; ++r2) {
        for (std::size_t c2 = 0; c2 < game.q2() && dominant; ++c2) {
          const bool competitor = interpretation == Interpretation::kLiteral
                                      ? (r2 != r && c2 != c)
                                      : (r2 != r || c2 != c);
          if (competitor && !(value(game.at(r2, c2)) < star)) dominant = false;
        }
      }
      if (dominant) out.push_back({r, c});
    }
  }
  return out;
}

}  // namespace

std::vector<CellIndex> find_nne(const FuzzyGame& game, Interpretation interpretation) {
  return dominant_cells(game, interpretation, [](const FuzzyCell& c) { return c.v; });
}

std::vector<CellIndex> find_fne(const FuzzyGame& game, Interpretation interpretation) {
  return dominant_cells(game, interpretation, [](const FuzzyCell& c) { return c.phi; });
}

std::vector<CellIndex> find_fnne(const FuzzyGame& game, Interpretation interpretation) {
  const auto nne = find_nne(game, interpretation);
  const auto fne = find_fne(game, interpretation);
  std::vector<CellIndex> out;
  std::set_intersection(nne.begin(), nne.end(), fne.begin(), fne.end(), std::back_inserter(out));
  return out;
}

}  // namespace zkg::fuzzy
