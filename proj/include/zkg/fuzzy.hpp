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

#ifndef ZKG_FUZZY_HPP_
#define ZKG_FUZZY_HPP_

// Linguistic fuzzy equilibria for two-player q1 x q2 games. Each cell holds a
// valuation v and a feasibility φ drawn from one ordered linguistic scale;
// all comparisons are ordinal.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace zkg::fuzzy {

class LinguisticScale {
 public:
  // Throws DomainError for fewer than two labels or duplicates.
  explicit LinguisticScale(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t position) const { return labels_.at(position); }
  // Throws DomainError for an unknown label.
  std::size_t position(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
};

std::strong_ordering compare_labels(const LinguisticScale& scale, std::string_view a,
                                    std::string_view b);

struct FuzzyCell {
  std::size_t v = 0;    // valuation, as a scale position
  std::size_t phi = 0;  // feasibility, as a scale position
  friend bool operator==(const FuzzyCell&, const FuzzyCell&) = default;
};

// 0-based (row, column); reports print them 1-based.
struct CellIndex {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

class FuzzyGame {
 public:
  // cells is row-major q1 x q2. Throws DomainError on a ragged or empty grid or
  // a position outside the scale.
  FuzzyGame(LinguisticScale scale, std::vector<std::vector<FuzzyCell>> cells);
  FuzzyGame(LinguisticScale scale, const std::vector<std::vector<std::string>>& v,
            const std::vector<std::vector<std::string>>& phi);

  const LinguisticScale& scale() const { return scale_; }
  std::size_t q1() const { return cells_.size(); }
  std::size_t q2() const { return cells_.front().size(); }
  const FuzzyCell& at(std::size_t row, std::size_t col) const { return cells_.at(row).at(col); }
  const std::vector<std::vector<FuzzyCell>>& cells() const { return cells_; }

  // ζ labels for each player's strategies; default "s1_1", "s2_1", ...
  const std::vector<std::string>& strategy_labels(std::size_t player) const {
    return labels_.at(player);
  }
  void set_strategy_labels(std::vector<std::string> row, std::vector<std::string> col);

 private:
  LinguisticScale scale_;
  std::vector<std::vector<FuzzyCell>> cells_;
  std::vector<std::vector<std::string>> labels_;
};

// literal: competitors are the cells differing from the candidate in both
// coordinates. strict: competitors are all other cells.
enum class Interpretation { kLiteral, kStrict };

std::string_view to_string(Interpretation i);

std::vector<CellIndex> find_nne(const FuzzyGame& game, Interpretation interpretation);
std::vector<CellIndex> find_fne(const FuzzyGame& game, Interpretation interpretation);
std::vector<CellIndex> find_fnne(const FuzzyGame& game, Interpretation interpretation);

}  // namespace zkg::fuzzy

#endif  // ZKG_FUZZY_HPP_
