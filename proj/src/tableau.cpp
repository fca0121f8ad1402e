#include <altab/tableau.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace altab {

namespace {

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string arrow_name(Arrow a) { return a == Arrow::Left ? "Left" : "Up"; }

// Index of `label` in the sorted label vector, or -1.
std::ptrdiff_t index_of(const std::vector<int>& labels, int label) {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return -1;
  return it - labels.begin();
}

char swap_step(char c) { return c == kRowStep ? kColStep : kRowStep; }

}  // namespace

std::vector<int> standard_labels(std::size_t n, int first) {
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), first);
  return out;
}

std::vector<Violation> check_alt(const RawTableau& raw) {
  std::vector<Violation> out;
  for (std::size_t k = 0; k < raw.labels.size(); ++k) {
    if (raw.labels[k] < 0) {
      out.push_back({ErrorCode::LabelOrder, "negative label " + std::to_string(raw.labels[k])});
    }
    if (k > 0 && raw.labels[k - 1] >= raw.labels[k]) {
      out.push_back({ErrorCode::LabelOrder, "labels not strictly increasing at position " +
                                                std::to_string(k)});
    }
  }
  if (raw.word.size() != raw.labels.size()) {
    out.push_back({ErrorCode::SizeMismatch, "word has " + std::to_string(raw.word.size()) +
                                                " steps but there are " +
                                                std::to_string(raw.labels.size()) + " labels"});
  }
  for (std::size_t k = 0; k < raw.word.size(); ++k) {
    if (raw.word[k] != kRowStep && raw.word[k] != kColStep) {
      out.push_back({ErrorCode::SyntaxError,
                     "bad step '" + std::string(1, raw.word[k]) + "' at " + std::to_string(k)});
    }
  }
  if (!out.empty()) return out;

  auto kind = [&](int label) -> char {
    auto idx = index_of(raw.labels, label);
    return idx < 0 ? '\0' : raw.word[static_cast<std::size_t>(idx)];
  };

  std::vector<ArrowAt> placed;
  std::set<Cell> seen;
  for (const auto& a : raw.arrows) {
    const Cell c = a.cell;
    if (kind(c.row) != kRowStep || kind(c.col) != kColStep || c.row >= c.col) {
      out.push_back({ErrorCode::ArrowOffShape,
                     arrow_name(a.arrow) + " arrow on nonexistent cell " + cell_str(c)});
      continue;
    }
    if (!seen.insert(c).second) {
      out.push_back({ErrorCode::DuplicateArrow, "two arrows in cell " + cell_str(c)});
      continue;
    }
    placed.push_back(a);
  }
  std::sort(placed.begin(), placed.end());

  for (const auto& a : placed) {
    for (const auto& b : placed) {
      if (a.cell == b.cell) continue;
      const bool pointed =
          a.arrow == Arrow::Left
              ? (b.cell.row == a.cell.row && b.cell.col > a.cell.col)
              : (b.cell.col == a.cell.col && b.cell.row < a.cell.row);
      if (pointed) {
        out.push_back({ErrorCode::PointedCellOccupied,
                       arrow_name(a.arrow) + " arrow at " + cell_str(a.cell) +
                           " points at occupied cell " + cell_str(b.cell)});
      }
    }
  }
  return out;
}

AltTableau::AltTableau(RawTableau raw) {
  auto violations = check_alt(raw);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  labels_ = std::move(raw.labels);
  word_ = std::move(raw.word);
  arrows_ = std::move(raw.arrows);
  std::sort(arrows_.begin(), arrows_.end());
}

AltTableau AltTableau::standard(std::string word, std::vector<ArrowAt> arrows) {
  auto labels = standard_labels(word.size());
  return AltTableau(std::move(labels), std::move(word), std::move(arrows));
}

bool AltTableau::has_label(int label) const { return index_of(labels_, label) >= 0; }

bool AltTableau::is_row(int label) const {
  auto idx = index_of(labels_, label);
  return idx >= 0 && word_[static_cast<std::size_t>(idx)] == kRowStep;
}

bool AltTableau::is_col(int label) const {
  auto idx = index_of(labels_, label);
  return idx >= 0 && word_[static_cast<std::size_t>(idx)] == kColStep;
}

std::optional<Arrow> AltTableau::at(Cell c) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), c,
                             [](const ArrowAt& a, Cell key) { return a.cell < key; });
  if (it == arrows_.end() || it->cell != c) return std::nullopt;
  return it->arrow;
}

std::vector<int> AltTableau::rows() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (word_[k] == kRowStep) out.push_back(labels_[k]);
  return out;
}

std::vector<int> AltTableau::cols() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (word_[k] == kColStep) out.push_back(labels_[k]);
  return out;
}

std::vector<Cell> AltTableau::cells() const {
  std::vector<Cell> out;
  for (int i : rows())
    for (int j : cols())
      if (i < j) out.push_back({i, j});
  std::sort(out.begin(), out.end());
  return out;
}

bool AltTableau::is_standard() const {
  for (std::size_t k = 0; k < labels_.size(); ++k)
    if (labels_[k] != static_cast<int>(k) + 1) return false;
  return true;
}

AltTableau validate_alt(const RawTableau& raw) { return AltTableau(raw); }

FreeStats free_stats(const AltTableau& t) {
  FreeStats s;
  const auto& arrows = t.arrows();
  auto row_has_left = [&](int i) {
    return std::any_of(arrows.begin(), arrows.end(), [&](const ArrowAt& a) {
      return a.cell.row == i && a.arrow == Arrow::Left;
    });
  };
  auto col_has_up = [&](int j) {
    return std::any_of(arrows.begin(), arrows.end(), [&](const ArrowAt& a) {
      return a.cell.col == j && a.arrow == Arrow::Up;
    });
  };
  for (int i : t.rows())
    if (!row_has_left(i)) s.free_rows.push_back(i);
  for (int j : t.cols())
    if (!col_has_up(j)) s.free_cols.push_back(j);

  for (const Cell c : t.cells()) {
    if (t.at(c)) continue;
    const bool pointed = std::any_of(arrows.begin(), arrows.end(), [&](const ArrowAt& a) {
      if (a.arrow == Arrow::Left) return a.cell.row == c.row && a.cell.col < c.col;
      return a.cell.col == c.col && a.cell.row > c.row;
    });
    if (!pointed) s.free_cells.push_back(c);
  }
  return s;
}

std::vector<int> free_labels(const AltTableau& t) {
  auto s = free_stats(t);
  std::vector<int> out = s.free_rows;
  out.insert(out.end(), s.free_cols.begin(), s.free_cols.end());
  std::sort(out.begin(), out.end());
  return out;
}

AltTableau transpose(const AltTableau& t) {
  const auto& labels = t.labels();
  const std::size_t n = labels.size();
  auto mirror = [&](int label) {
    auto idx = static_cast<std::size_t>(index_of(labels, label));
    return labels[n - 1 - idx];
  };
  std::string word(t.word().rbegin(), t.word().rend());
  for (char& c : word) c = swap_step(c);

  std::vector<ArrowAt> arrows;
  arrows.reserve(t.arrows().size());
  for (const auto& a : t.arrows()) {
    arrows.push_back({{mirror(a.cell.col), mirror(a.cell.row)},
                      a.arrow == Arrow::Left ? Arrow::Up : Arrow::Left});
  }
  return AltTableau(labels, std::move(word), std::move(arrows));
}

AltTableau relabel(const AltTableau& t, std::vector<int> labels) {
  if (labels.size() != t.size()) {
    throw Error(ErrorCode::SizeMismatch, "relabel needs " + std::to_string(t.size()) +
                                             " labels, got " + std::to_string(labels.size()));
  }
  std::sort(labels.begin(), labels.end());
  const auto& old = t.labels();
  auto map = [&](int label) {
    return labels[static_cast<std::size_t>(index_of(old, label))];
  };
  std::vector<ArrowAt> arrows;
  arrows.reserve(t.arrows().size());
  for (const auto& a : t.arrows())
    arrows.push_back({{map(a.cell.row), map(a.cell.col)}, a.arrow});
  return AltTableau(std::move(labels), t.word(), std::move(arrows));
}

AltTableau standardize(const AltTableau& t) { return relabel(t, standard_labels(t.size())); }

}  // namespace altab
