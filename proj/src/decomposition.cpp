#include <altab/decomposition.hpp>
#include <altab/text.hpp>

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace altab {

std::string_view packed_class_name(PackedClass c) {
  switch (c) {
    case PackedClass::RowPacked: return "RowPacked";
    case PackedClass::ColPacked: return "ColPacked";
    case PackedClass::NotPacked: return "NotPacked";
  }
  return "?";
}

PackedClass packed_class(const AltTableau& t) {
  const auto s = free_stats(t);
  if (s.frow() == 1 && s.fcol() == 0) return PackedClass::RowPacked;
  if (s.frow() == 0 && s.fcol() == 1) {
    if (t.size() > 1) {
      const Cell corner{t.rows().front(), t.cols().back()};
      if (t.at(corner) != Arrow::Left)
        throw std::logic_error("column-packed tableau without a Left arrow in its corner");
    }
    return PackedClass::ColPacked;
  }
  return PackedClass::NotPacked;
}

AltTableau cut(const AltTableau& t, Axis axis) {
  const auto rows = t.rows();
  const auto cols = t.cols();
  std::vector<int> keep = t.labels();
  if (axis == Axis::Row) {
    if (rows.empty()) throw Error(ErrorCode::NothingToCut, "no row to cut");
    for (int j : cols)
      if (j < rows.front())
        throw Error(ErrorCode::EmptyLineObstruction,
                    "column " + std::to_string(j) + " is empty, cannot cut a row");
    std::erase(keep, rows.front());
  } else {
    if (cols.empty()) throw Error(ErrorCode::NothingToCut, "no column to cut");
    for (int i : rows)
      if (i > cols.back())
        throw Error(ErrorCode::EmptyLineObstruction,
                    "row " + std::to_string(i) + " is empty, cannot cut a column");
    std::erase(keep, cols.back());
  }
  return restrict_to(t, std::move(keep));
}

AltTableau block(const AltTableau& t, Axis axis, int label) {
  const bool below = t.empty() || label < t.labels().front();
  const bool above = t.empty() || label > t.labels().back();
  const auto s = free_stats(t);
  std::vector<int> labels = t.labels();
  std::string word = t.word();
  std::vector<ArrowAt> arrows = t.arrows();
  if (axis == Axis::Col) {
    if (!below || label < 0)
      throw Error(ErrorCode::LabelNotExtremal,
                  "new row label " + std::to_string(label) + " must precede every label");
    labels.insert(labels.begin(), label);
    word.insert(word.begin(), kRowStep);
    for (int j : s.free_cols) arrows.push_back({{label, j}, Arrow::Up});
  } else {
    if (!above)
      throw Error(ErrorCode::LabelNotExtremal,
                  "new column label " + std::to_string(label) + " must follow every label");
    labels.push_back(label);
    word.push_back(kColStep);
    for (int i : s.free_rows) arrows.push_back({{i, label}, Arrow::Left});
  }
  return AltTableau(std::move(labels), std::move(word), std::move(arrows));
}

AltTableau block_standard(const AltTableau& t, Axis axis) {
  const std::size_t n = t.size();
  if (axis == Axis::Col) return block(relabel(t, standard_labels(n, 2)), axis, 1);
  return block(standardize(t), axis, static_cast<int>(n) + 1);
}

std::vector<int> closure(const AltTableau& t, int k) {
  const auto s = free_stats(t);
  const bool free = std::binary_search(s.free_rows.begin(), s.free_rows.end(), k) ||
                    std::binary_search(s.free_cols.begin(), s.free_cols.end(), k);
  if (!free) throw Error(ErrorCode::NotFree, std::to_string(k) + " is not a free label");

  std::set<int> seen{k};
  std::deque<int> todo{k};
  while (!todo.empty()) {
    const int x = todo.front();
    todo.pop_front();
    for (const auto& a : t.arrows()) {
      int other;
      if (a.cell.row == x) other = a.cell.col;
      else if (a.cell.col == x) other = a.cell.row;
      else continue;
      if (seen.insert(other).second) todo.push_back(other);
    }
  }
  return {seen.begin(), seen.end()};
}

AltTableau restrict_to(const AltTableau& t, std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  RawTableau raw;
  for (int l : labels) {
    if (!t.has_label(l))
      throw Error(ErrorCode::NotASubset, std::to_string(l) + " is not a label of the tableau");
    raw.word.push_back(t.is_row(l) ? kRowStep : kColStep);
  }
  raw.labels = std::move(labels);
  auto inside = [&](int l) { return std::binary_search(raw.labels.begin(), raw.labels.end(), l); };
  for (const auto& a : t.arrows())
    if (inside(a.cell.row) && inside(a.cell.col)) raw.arrows.push_back(a);
  auto bad = check_alt(raw);
  if (!bad.empty()) {
    std::string msg = "restriction is not an alternative tableau";
    for (const auto& v : bad) msg += "; " + v.message;
    throw Error(ErrorCode::InvalidRestriction, msg);
  }
  return AltTableau(std::move(raw));
}

LabeledPartition split(const AltTableau& t) {
  LabeledPartition out;
  for (int k : free_labels(t)) {
    auto labels = closure(t, k);
    auto sub = restrict_to(t, labels);
    out.push_back({k, std::move(labels), std::move(sub)});
  }
  std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
    return a.labels.front() < b.labels.front();
  });
  return out;
}

AltTableau merge(const AltTableau& a, const AltTableau& b) {
  RawTableau raw;
  std::size_t p = 0, q = 0;
  const auto& la = a.labels();
  const auto& lb = b.labels();
  while (p < la.size() || q < lb.size()) {
    if (p < la.size() && q < lb.size() && la[p] == lb[q])
      throw Error(ErrorCode::LabelCollision, "label " + std::to_string(la[p]) + " is in both");
    if (q == lb.size() || (p < la.size() && la[p] < lb[q])) {
      raw.labels.push_back(la[p]);
      raw.word.push_back(a.word()[p++]);
    } else {
      raw.labels.push_back(lb[q]);
      raw.word.push_back(b.word()[q++]);
    }
  }
  raw.arrows = a.arrows();
  raw.arrows.insert(raw.arrows.end(), b.arrows().begin(), b.arrows().end());
  return AltTableau(std::move(raw));
}

AltTableau merge_all(const std::vector<AltTableau>& parts) {
  AltTableau out;
  for (const auto& p : parts) out = merge(out, p);
  return out;
}

AltTableau merge_all(const LabeledPartition& parts) {
  AltTableau out;
  for (const auto& p : parts) out = merge(out, p.tableau);
  return out;
}

std::pair<AltTableau, AltTableau> divide(const AltTableau& t) {
  const auto s = free_stats(t);
  std::vector<int> rows_side, cols_side;
  for (int k : s.free_rows) {
    auto c = closure(t, k);
    rows_side.insert(rows_side.end(), c.begin(), c.end());
  }
  for (int k : s.free_cols) {
    auto c = closure(t, k);
    cols_side.insert(cols_side.end(), c.begin(), c.end());
  }
  return {restrict_to(t, std::move(rows_side)), restrict_to(t, std::move(cols_side))};
}

std::string render_partition(const LabeledPartition& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '\n';
    out += format_label_set(p.labels) + " :: " + render_tableau(p.tableau);
  }
  return out;
}

}  // namespace altab
