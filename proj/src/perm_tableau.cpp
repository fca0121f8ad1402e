#include <altab/perm_tableau.hpp>

#include <algorithm>
#include <set>

namespace altab {

namespace {

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

std::vector<Violation> check_perm_tableau(const RawPermTableau& raw) {
  auto out = check_alt(RawTableau{raw.labels, raw.word, {}});
  if (!out.empty()) return out;
  const AltTableau shape(raw.labels, raw.word, {});

  for (const auto& [c, v] : raw.filling) {
    if (!shape.cell_exists(c))
      out.push_back({ErrorCode::NonTotalFilling, "value on nonexistent cell " + cell_str(c)});
    else if (v != 0 && v != 1)
      out.push_back({ErrorCode::NonTotalFilling, "value " + std::to_string(v) + " in cell " +
                                                     cell_str(c) + " is not 0 or 1"});
  }
  for (const Cell c : shape.cells()) {
    if (!raw.filling.contains(c))
      out.push_back({ErrorCode::NonTotalFilling, "cell " + cell_str(c) + " is unfilled"});
  }
  if (!out.empty()) return out;

  auto value = [&](Cell c) { return raw.filling.at(c); };
  const auto rows = shape.rows();
  const auto cols = shape.cols();
  for (int j : cols) {
    bool has_one = false;
    for (int i : rows)
      if (i < j && value({i, j}) == 1) has_one = true;
    if (!has_one)
      out.push_back({ErrorCode::EmptyColumn, "column " + std::to_string(j) + " has no 1"});
  }
  for (const Cell c : shape.cells()) {
    if (value(c) != 0) continue;
    bool one_above = false;
    bool one_left = false;
    for (int i : rows)
      if (i < c.row && value({i, c.col}) == 1) one_above = true;
    for (int j : cols)
      if (j > c.col && c.row < j && value({c.row, j}) == 1) one_left = true;
    if (one_above && one_left)
      out.push_back({ErrorCode::ZeroWithOneAboveAndLeft,
                     "0 at " + cell_str(c) + " has a 1 above it and a 1 to its left"});
  }
  return out;
}

PermTableau::PermTableau(const RawPermTableau& raw) {
  auto violations = check_perm_tableau(raw);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  labels_ = raw.labels;
  word_ = raw.word;
  for (const auto& [c, v] : raw.filling)
    if (v == 1) ones_.push_back(c);
}

PermTableau::PermTableau(std::vector<int> labels, std::string word, std::vector<Cell> ones) {
  RawPermTableau raw{std::move(labels), std::move(word), {}};
  if (auto bad = check_alt(RawTableau{raw.labels, raw.word, {}}); !bad.empty())
    throw ValidationError(std::move(bad));
  const AltTableau shape(raw.labels, raw.word, {});
  for (const Cell c : shape.cells()) raw.filling[c] = 0;
  for (const Cell c : ones) {
    if (!shape.cell_exists(c))
      throw ValidationError({{ErrorCode::NonTotalFilling, "1 on nonexistent cell " + cell_str(c)}});
    raw.filling[c] = 1;
  }
  *this = PermTableau(raw);
}

int PermTableau::at(Cell c) const {
  return std::binary_search(ones_.begin(), ones_.end(), c) ? 1 : 0;
}

PermTableau validate_perm_tableau(const RawPermTableau& raw) { return PermTableau(raw); }

namespace {

// True iff a 1 sits above `c` in its column.
bool one_above(const PermTableau& p, Cell c) {
  return std::any_of(p.ones().begin(), p.ones().end(),
                     [&](Cell o) { return o.col == c.col && o.row < c.row; });
}

}  // namespace

PermTableauStats perm_tableau_stats(const PermTableau& p) {
  PermTableauStats s;
  const AltTableau shape = p.shape();
  const auto rows = shape.rows();
  if (rows.empty()) return s;
  const int top = rows.front();

  for (int i : rows) {
    if (i == top) continue;
    bool restricted = false;
    for (int j : shape.cols())
      if (i < j && p.at({i, j}) == 0 && one_above(p, {i, j})) restricted = true;
    if (!restricted) s.unrestricted_rows.push_back(i);
  }
  for (int j : shape.cols())
    if (top < j && p.at({top, j}) == 1) s.top_one_cols.push_back(j);
  for (const Cell c : p.ones())
    if (one_above(p, c)) s.superfluous_ones.push_back(c);
  return s;
}

AltTableau alpha(const PermTableau& p) {
  const AltTableau shape = p.shape();
  const auto rows = shape.rows();
  if (p.size() == 0 || rows.empty() || rows.front() != p.labels().front()) {
    throw Error(ErrorCode::SizeMismatch, "alpha needs a nonempty permutation tableau whose "
                                         "smallest label is a row");
  }
  const int top = rows.front();
  std::vector<ArrowAt> arrows;
  for (int i : rows) {
    if (i == top) continue;
    // rightmost restricted 0 = restricted 0 with the smallest column label
    std::optional<int> rightmost;
    for (int j : shape.cols()) {
      if (j <= i) continue;
      const Cell c{i, j};
      if (p.at(c) == 1) {
        if (!one_above(p, c)) arrows.push_back({c, Arrow::Up});
      } else if (one_above(p, c) && !rightmost) {
        rightmost = j;
      }
    }
    if (rightmost) arrows.push_back({{i, *rightmost}, Arrow::Left});
  }
  std::vector<int> labels(p.labels().begin() + 1, p.labels().end());
  std::string word(p.word().begin() + 1, p.word().end());
  return AltTableau(std::move(labels), std::move(word), std::move(arrows));
}

PermTableau alpha_inv(const AltTableau& t, std::optional<int> top_label) {
  const int top = top_label.value_or(t.empty() ? 0 : t.labels().front() - 1);
  if (top < 0 || (!t.empty() && top >= t.labels().front())) {
    throw Error(ErrorCode::LabelNotExtremal,
                "top row label " + std::to_string(top) + " must be nonnegative and below " +
                    "every label of the tableau");
  }
  const auto stats = free_stats(t);
  std::vector<Cell> ones;
  for (int j : stats.free_cols) ones.push_back({top, j});
  for (const auto& a : t.arrows())
    if (a.arrow == Arrow::Up) ones.push_back(a.cell);
  ones.insert(ones.end(), stats.free_cells.begin(), stats.free_cells.end());
  std::sort(ones.begin(), ones.end());

  std::vector<int> labels{top};
  labels.insert(labels.end(), t.labels().begin(), t.labels().end());
  return PermTableau(std::move(labels), kRowStep + t.word(), std::move(ones));
}

}  // namespace altab
