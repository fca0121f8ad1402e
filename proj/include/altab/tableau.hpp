#pragma once

// Labeled shapes and alternative tableaux.
//
// A shape of length n is a word over {D, E} read along the south-east border
// from top right to bottom left; D is a row step, E a column step. Under a
// labeling L = {l1 < ... < ln}, the k-th step carries label lk. The cell
// (i, j) exists iff i labels a row, j labels a column and i < j.
//
// Geometry used throughout: rows run top to bottom by increasing label,
// columns run left to right by decreasing label. So "the cells to the left"
// of (i, j) are (i, j') with j' > j and "the cells above" are (i', j) with
// i' < i.

#include <altab/error.hpp>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace altab {

enum class Arrow : char { Left = 'L', Up = 'U' };

constexpr char kRowStep = 'D';
constexpr char kColStep = 'E';

struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

struct ArrowAt {
  Cell cell;
  Arrow arrow = Arrow::Left;
  auto operator<=>(const ArrowAt&) const = default;
};

/// Unvalidated tableau data, as read from text or assembled by hand.
struct RawTableau {
  std::vector<int> labels;
  std::string word;
  std::vector<ArrowAt> arrows;
};

std::vector<int> standard_labels(std::size_t n, int first = 1);

/// Every violated rule of `raw`; empty iff `raw` is a valid alternative tableau.
std::vector<Violation> check_alt(const RawTableau& raw);

class AltTableau {
 public:
  /// The empty tableau (length 0).
  AltTableau() = default;

  /// Validating constructor; throws ValidationError listing every violation.
  explicit AltTableau(RawTableau raw);

  AltTableau(std::vector<int> labels, std::string word, std::vector<ArrowAt> arrows)
      : AltTableau(RawTableau{std::move(labels), std::move(word), std::move(arrows)}) {}

  /// Standard labeling 1..n.
  static AltTableau standard(std::string word, std::vector<ArrowAt> arrows = {});

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<int>& labels() const noexcept { return labels_; }
  const std::string& word() const noexcept { return word_; }
  /// Sorted by (row, col).
  const std::vector<ArrowAt>& arrows() const noexcept { return arrows_; }

  bool has_label(int label) const;
  bool is_row(int label) const;
  bool is_col(int label) const;
  bool cell_exists(Cell c) const { return is_row(c.row) && is_col(c.col) && c.row < c.col; }
  std::optional<Arrow> at(Cell c) const;

  std::vector<int> rows() const;
  std::vector<int> cols() const;
  std::vector<Cell> cells() const;
  bool is_standard() const;

  auto operator<=>(const AltTableau&) const = default;

 private:
  std::vector<int> labels_;
  std::string word_;
  std::vector<ArrowAt> arrows_;
};

struct FreeStats {
  std::vector<int> free_rows;
  std::vector<int> free_cols;
  std::vector<Cell> free_cells;

  std::size_t frow() const noexcept { return free_rows.size(); }
  std::size_t fcol() const noexcept { return free_cols.size(); }
  std::size_t fcell() const noexcept { return free_cells.size(); }
};

AltTableau validate_alt(const RawTableau& raw);

FreeStats free_stats(const AltTableau& t);

/// Free rows and free columns together, ascending.
std::vector<int> free_labels(const AltTableau& t);

/// Reflection across the main diagonal. The label set is kept and the
/// order-reversing permutation of it is applied; Left and Up are exchanged.
AltTableau transpose(const AltTableau& t);

/// Order-preserving substitution of the labels by `labels` (sorted on input).
AltTableau relabel(const AltTableau& t, std::vector<int> labels);

AltTableau standardize(const AltTableau& t);

}  // namespace altab
