#pragma once

// Permutation tableaux (0/1 fillings) and the bijection with alternative
// tableaux that removes the top row.

#include <altab/tableau.hpp>

#include <map>
#include <optional>
#include <vector>

namespace altab {

struct RawPermTableau {
  std::vector<int> labels;
  std::string word;
  std::map<Cell, int> filling;  // must cover every cell, values 0/1
};

std::vector<Violation> check_perm_tableau(const RawPermTableau& raw);

class PermTableau {
 public:
  PermTableau() = default;
  explicit PermTableau(const RawPermTableau& raw);
  /// Total filling given by its 1-cells; every other cell holds 0.
  PermTableau(std::vector<int> labels, std::string word, std::vector<Cell> ones);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  const std::string& word() const noexcept { return word_; }
  /// Sorted 1-cells.
  const std::vector<Cell>& ones() const noexcept { return ones_; }
  int at(Cell c) const;

  /// Same labeled shape, with an empty filling: convenient for geometry queries.
  AltTableau shape() const { return AltTableau(labels_, word_, {}); }

  auto operator<=>(const PermTableau&) const = default;

 private:
  std::vector<int> labels_;
  std::string word_;
  std::vector<Cell> ones_;
};

PermTableau validate_perm_tableau(const RawPermTableau& raw);

struct PermTableauStats {
  std::vector<int> unrestricted_rows;  // top row excepted
  std::vector<int> top_one_cols;
  std::vector<Cell> superfluous_ones;
};

PermTableauStats perm_tableau_stats(const PermTableau& p);

/// Drops the top row: non-superfluous 1s become Up arrows and rightmost
/// restricted 0s become Left arrows.
AltTableau alpha(const PermTableau& p);

/// Adds a top row labeled `top_label` (default: one less than the smallest
/// label, or 0 for the empty tableau).
PermTableau alpha_inv(const AltTableau& t, std::optional<int> top_label = std::nullopt);

}  // namespace altab
