#include <altab/trees.hpp>

#include "cursor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace altab {

namespace {

using detail::Cursor;
using detail::trim;

void check_depth(int depth) {
  if (depth > kMaxTreeDepth)
    throw Error(ErrorCode::ResourceLimit,
                "recursion deeper than " + std::to_string(kMaxTreeDepth));
}

void collect_labels(const PlaneAltTree& t, std::vector<int>& out) {
  out.push_back(t.label);
  for (const auto& c : t.children) collect_labels(c, out);
}

char color_char(Color c) { return c == Color::White ? 'W' : 'B'; }

// Fills `out` and returns the labels below and at `t`.
std::vector<int> check_tree_rec(const PlaneAltTree& t, std::vector<Violation>& out, int depth) {
  check_depth(depth);
  std::vector<int> below;
  const Color want = t.color == Color::White ? Color::Black : Color::White;
  for (std::size_t k = 0; k < t.children.size(); ++k) {
    const auto& c = t.children[k];
    auto sub = check_tree_rec(c, out, depth + 1);
    below.insert(below.end(), sub.begin(), sub.end());
    if (c.color != want)
      out.push_back({ErrorCode::InvalidTree, "vertex " + std::to_string(c.label) +
                                                 " has the color of its parent " +
                                                 std::to_string(t.label)});
    if (k > 0) {
      const int prev = t.children[k - 1].label;
      const bool ordered = t.color == Color::White ? prev > c.label : prev < c.label;
      if (!ordered)
        out.push_back({ErrorCode::InvalidTree, "children of " + std::to_string(t.label) +
                                                   " are out of order"});
    }
  }
  for (int l : below) {
    const bool ok = t.color == Color::White ? t.label < l : t.label > l;
    if (!ok) {
      out.push_back({ErrorCode::InvalidTree,
                     std::string(t.color == Color::White ? "white" : "black") + " vertex " +
                         std::to_string(t.label) + " is not " +
                         (t.color == Color::White ? "minimal" : "maximal")});
      break;
    }
  }
  below.push_back(t.label);
  return below;
}

void check_distinct(std::vector<int> labels, std::vector<Violation>& out) {
  std::sort(labels.begin(), labels.end());
  for (std::size_t k = 1; k < labels.size(); ++k)
    if (labels[k] == labels[k - 1])
      out.push_back({ErrorCode::InvalidTree, "label " + std::to_string(labels[k]) + " repeated"});
}

PlaneAltTree tree_of_rec(const AltTableau& t, int depth) {
  check_depth(depth);
  const auto cls = packed_class(t);
  if (cls == PackedClass::NotPacked)
    throw Error(ErrorCode::NotPacked, "tableau " + std::to_string(t.size()) + " is not packed");
  PlaneAltTree out;
  Axis axis;
  if (cls == PackedClass::RowPacked) {
    out.color = Color::White;
    out.label = t.labels().front();
    axis = Axis::Row;
  } else {
    out.color = Color::Black;
    out.label = t.labels().back();
    axis = Axis::Col;
  }
  for (const auto& comp : split(cut(t, axis)))
    out.children.push_back(tree_of_rec(comp.tableau, depth + 1));
  std::sort(out.children.begin(), out.children.end(),
            [&](const PlaneAltTree& a, const PlaneAltTree& b) {
              return out.color == Color::White ? a.label > b.label : a.label < b.label;
            });
  return out;
}

AltTableau tree_inv_rec(const PlaneAltTree& t, int depth) {
  check_depth(depth);
  AltTableau inner;
  for (const auto& c : t.children) inner = merge(inner, tree_inv_rec(c, depth + 1));
  return block(inner, t.color == Color::White ? Axis::Col : Axis::Row, t.label);
}

void render_tree_rec(const PlaneAltTree& t, std::string& out) {
  out += '(';
  out += color_char(t.color);
  out += ' ' + std::to_string(t.label);
  for (const auto& c : t.children) {
    out += ' ';
    render_tree_rec(c, out);
  }
  out += ')';
}

PlaneAltTree parse_tree_rec(Cursor& cur, int depth) {
  check_depth(depth);
  cur.skip_space();
  cur.expect('(');
  cur.skip_space();
  PlaneAltTree t;
  const char c = cur.done() ? '\0' : cur.take();
  if (c == 'W') t.color = Color::White;
  else if (c == 'B') t.color = Color::Black;
  else cur.fail("expected 'W' or 'B'");
  cur.skip_space();
  t.label = cur.integer();
  cur.skip_space();
  while (cur.peek() == '(') {
    t.children.push_back(parse_tree_rec(cur, depth + 1));
    cur.skip_space();
  }
  cur.expect(')');
  return t;
}

void sort_forest(PlaneAltForest& f) {
  std::sort(f.begin(), f.end(),
            [](const PlaneAltTree& a, const PlaneAltTree& b) { return a.label < b.label; });
}

bool has_arc(const ArcDiagram& d, Arc a) {
  return std::binary_search(d.arcs.begin(), d.arcs.end(), a);
}

void require_contiguous(const std::vector<int>& labels, int first, std::string_view what) {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] != first + static_cast<int>(k))
      throw Error(ErrorCode::LabelGap, std::string(what) + " labels are not " +
                                           std::to_string(first) + ".." +
                                           std::to_string(first + static_cast<int>(labels.size()) - 1));
}

// --- binary trees ---

std::vector<int> check_bin_rec(const BinTree& t, std::vector<Violation>& out, int depth) {
  check_depth(depth);
  if (!t) return {};
  auto left = check_bin_rec(t->left, out, depth + 1);
  auto right = check_bin_rec(t->right, out, depth + 1);
  if (t->left && std::any_of(left.begin(), left.end(), [&](int l) { return l > t->left->label; }))
    out.push_back({ErrorCode::InvalidTree,
                   "left child " + std::to_string(t->left->label) + " is not maximal"});
  if (t->right &&
      std::any_of(right.begin(), right.end(), [&](int l) { return l < t->right->label; }))
    out.push_back({ErrorCode::InvalidTree,
                   "right child " + std::to_string(t->right->label) + " is not minimal"});
  left.insert(left.end(), right.begin(), right.end());
  left.push_back(t->label);
  return left;
}

BinTree bin_of_rec(const AltTableau& t, BinKind kind, int depth) {
  check_depth(depth);
  if (t.empty()) return nullptr;
  AltTableau rest;
  int label;
  if (kind == BinKind::Min) {
    label = t.labels().front();
    rest = cut(t, Axis::Row);
  } else {
    label = t.labels().back();
    rest = cut(t, Axis::Col);
  }
  const auto [p, q] = divide(rest);
  auto node = std::make_shared<BinNode>();
  node->label = label;
  node->right = bin_of_rec(p, BinKind::Min, depth + 1);
  node->left = bin_of_rec(q, BinKind::Max, depth + 1);
  return node;
}

AltTableau bin_inv_rec(const BinTree& t, BinKind kind, int depth) {
  check_depth(depth);
  if (!t) return {};
  const AltTableau inner = merge(bin_inv_rec(t->right, BinKind::Min, depth + 1),
                                 bin_inv_rec(t->left, BinKind::Max, depth + 1));
  return block(inner, kind == BinKind::Min ? Axis::Col : Axis::Row, t->label);
}

void render_bin_rec(const BinTree& t, std::string& out) {
  if (!t) {
    out += '-';
    return;
  }
  out += '(' + std::to_string(t->label) + " L:";
  render_bin_rec(t->left, out);
  out += " R:";
  render_bin_rec(t->right, out);
  out += ')';
}

BinTree parse_bin_rec(Cursor& cur, int depth) {
  check_depth(depth);
  cur.skip_space();
  if (cur.accept("-")) return nullptr;
  cur.expect('(');
  cur.skip_space();
  auto node = std::make_shared<BinNode>();
  node->label = cur.integer();
  cur.skip_space();
  if (!cur.accept("L:")) cur.fail("expected 'L:'");
  node->left = parse_bin_rec(cur, depth + 1);
  cur.skip_space();
  if (!cur.accept("R:")) cur.fail("expected 'R:'");
  node->right = parse_bin_rec(cur, depth + 1);
  cur.skip_space();
  cur.expect(')');
  return node;
}

}  // namespace

// --- plane alternative trees ---

std::vector<Violation> check_tree(const PlaneAltTree& t) {
  std::vector<Violation> out;
  check_tree_rec(t, out, 0);
  check_distinct(tree_labels(t), out);
  return out;
}

std::vector<Violation> check_forest(const PlaneAltForest& f) {
  std::vector<Violation> out;
  for (const auto& t : f) check_tree_rec(t, out, 0);
  check_distinct(forest_labels(f), out);
  return out;
}

void validate_forest(const PlaneAltForest& f) {
  auto bad = check_forest(f);
  if (!bad.empty()) throw ValidationError(std::move(bad));
}

std::vector<int> tree_labels(const PlaneAltTree& t) {
  std::vector<int> out;
  collect_labels(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> forest_labels(const PlaneAltForest& f) {
  std::vector<int> out;
  for (const auto& t : f) collect_labels(t, out);
  std::sort(out.begin(), out.end());
  return out;
}

PlaneAltTree tree_of(const AltTableau& packed) { return tree_of_rec(packed, 0); }

AltTableau tree_inv(const PlaneAltTree& t) {
  auto bad = check_tree(t);
  if (!bad.empty()) throw ValidationError(std::move(bad));
  return tree_inv_rec(t, 0);
}

PlaneAltForest forest_of(const AltTableau& t) {
  PlaneAltForest out;
  for (const auto& comp : split(t)) out.push_back(tree_of_rec(comp.tableau, 0));
  sort_forest(out);
  return out;
}

AltTableau forest_inv(const PlaneAltForest& f) {
  validate_forest(f);
  AltTableau out;
  for (const auto& t : f) out = merge(out, tree_inv_rec(t, 0));
  return out;
}

std::string render_tree(const PlaneAltTree& t) {
  std::string out;
  render_tree_rec(t, out);
  return out;
}

std::string render_forest(const PlaneAltForest& f) {
  std::string out;
  for (const auto& t : f) {
    if (!out.empty()) out += ' ';
    render_tree_rec(t, out);
  }
  return out;
}

PlaneAltForest parse_forest(std::string_view text) {
  Cursor cur(trim(text));
  PlaneAltForest out;
  cur.skip_space();
  while (!cur.done()) {
    out.push_back(parse_tree_rec(cur, 0));
    cur.skip_space();
  }
  validate_forest(out);
  sort_forest(out);
  return out;
}

// --- arc diagrams ---

bool topmost_left(const ArcDiagram& d, Arc a) {
  return std::none_of(d.arcs.begin(), d.arcs.end(),
                      [&](Arc b) { return b.first == a.first && b.second > a.second; });
}

bool topmost_right(const ArcDiagram& d, Arc a) {
  return std::none_of(d.arcs.begin(), d.arcs.end(),
                      [&](Arc b) { return b.second == a.second && b.first < a.first; });
}

std::vector<Violation> check_arc_diagram(const ArcDiagram& d) {
  std::vector<Violation> out;
  auto bad = [&](std::string msg) { out.push_back({ErrorCode::InvalidArcDiagram, std::move(msg)}); };
  auto arc_str = [](Arc a) {
    return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
  };
  for (std::size_t k = 1; k < d.points.size(); ++k)
    if (d.points[k - 1] >= d.points[k]) bad("points are not strictly increasing");
  if (d.points.empty()) bad("no points");
  if (!out.empty()) return out;

  auto is_point = [&](int p) { return std::binary_search(d.points.begin(), d.points.end(), p); };
  std::set<Arc> seen;
  for (const Arc& a : d.arcs) {
    if (a.first >= a.second || !is_point(a.first) || !is_point(a.second))
      bad("arc " + arc_str(a) + " does not join two points left to right");
    else if (!seen.insert(a).second)
      bad("arc " + arc_str(a) + " repeated");
  }
  if (!out.empty()) return out;

  for (int p : d.points) {
    const bool in = std::any_of(d.arcs.begin(), d.arcs.end(), [&](Arc a) { return a.second == p; });
    const bool outgoing =
        std::any_of(d.arcs.begin(), d.arcs.end(), [&](Arc a) { return a.first == p; });
    if (in && outgoing) bad("point " + std::to_string(p) + " is both a left and a right end");
  }

  // tree: |arcs| = |points| - 1 and connected
  std::map<int, int> parent;
  for (int p : d.points) parent[p] = p;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t joined = 0;
  for (const Arc& a : d.arcs) {
    const int x = find(a.first), y = find(a.second);
    if (x == y) {
      bad("arcs form a cycle through " + arc_str(a));
    } else {
      parent[x] = y;
      ++joined;
    }
  }
  if (joined + 1 != d.points.size()) bad("arcs do not connect all points");

  const Arc outer{d.points.front(), d.points.back()};
  for (const Arc& a : d.arcs) {
    if (a == outer) continue;
    if (topmost_left(d, a) == topmost_right(d, a))
      bad("arc " + arc_str(a) + " is not topmost on exactly one side");
  }
  return out;
}

void validate_arc_diagram(const ArcDiagram& d) {
  auto bad = check_arc_diagram(d);
  if (!bad.empty()) throw ValidationError(std::move(bad));
}

ArcDiagram arc_of(const AltTableau& t) {
  const AltTableau s = standardize(t);
  const int n = static_cast<int>(s.size());
  ArcDiagram d;
  d.points = standard_labels(static_cast<std::size_t>(n) + 2, 0);
  for (const auto& a : s.arrows()) d.arcs.push_back({a.cell.row, a.cell.col});
  const auto st = free_stats(s);
  for (int j : st.free_cols) d.arcs.push_back({0, j});
  for (int i : st.free_rows) d.arcs.push_back({i, n + 1});
  d.arcs.push_back({0, n + 1});
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

ArcDiagram phi(const PlaneAltForest& f) {
  validate_forest(f);
  const auto labels = forest_labels(f);
  require_contiguous(labels, 1, "forest");
  const int n = static_cast<int>(labels.size());
  ArcDiagram d;
  d.points = standard_labels(static_cast<std::size_t>(n) + 2, 0);
  auto edges = [&](auto&& self, const PlaneAltTree& t) -> void {
    for (const auto& c : t.children) {
      d.arcs.push_back({std::min(t.label, c.label), std::max(t.label, c.label)});
      self(self, c);
    }
  };
  for (const auto& t : f) {
    if (t.color == Color::Black) d.arcs.push_back({0, t.label});
    else d.arcs.push_back({t.label, n + 1});
    edges(edges, t);
  }
  d.arcs.push_back({0, n + 1});
  std::sort(d.arcs.begin(), d.arcs.end());
  return d;
}

PlaneAltForest phi_inv(const ArcDiagram& d) {
  validate_arc_diagram(d);
  require_contiguous(d.points, 0, "arc diagram");
  if (d.points.size() < 2)
    throw Error(ErrorCode::InvalidArcDiagram, "an arc diagram needs the two end points");
  const int n = static_cast<int>(d.points.size()) - 2;

  std::map<int, std::vector<int>> inner;
  std::vector<int> roots;
  for (const Arc& a : d.arcs) {
    if (a.first == 0 && a.second == n + 1) continue;
    if (a.first == 0) roots.push_back(a.second);
    else if (a.second == n + 1) roots.push_back(a.first);
    else {
      inner[a.first].push_back(a.second);
      inner[a.second].push_back(a.first);
    }
  }
  auto color_of = [&](int p) {
    return has_arc(d, {p, n + 1}) ||
                   std::any_of(inner[p].begin(), inner[p].end(), [&](int q) { return q > p; })
               ? Color::White
               : Color::Black;
  };
  auto build = [&](auto&& self, int p, int from, int depth) -> PlaneAltTree {
    check_depth(depth);
    PlaneAltTree t{color_of(p), p, {}};
    for (int q : inner[p])
      if (q != from) t.children.push_back(self(self, q, p, depth + 1));
    std::sort(t.children.begin(), t.children.end(),
              [&](const PlaneAltTree& a, const PlaneAltTree& b) {
                return t.color == Color::White ? a.label > b.label : a.label < b.label;
              });
    return t;
  };
  PlaneAltForest f;
  for (int r : roots) f.push_back(build(build, r, -1, 0));
  sort_forest(f);

  if (!check_forest(f).empty() || forest_labels(f).size() != static_cast<std::size_t>(n) ||
      phi(f) != d)
    throw Error(ErrorCode::InvalidArcDiagram, "diagram is not the image of a forest");
  return f;
}

std::vector<Cell> out_crossings(const ArcDiagram& d) {
  std::set<Cell> out;
  for (const Arc& a : d.arcs) {
    if (!topmost_right(d, a)) continue;
    for (const Arc& b : d.arcs) {
      if (!topmost_left(d, b)) continue;
      if (a.first < b.first && b.first < a.second && a.second < b.second)
        out.insert({b.first, a.second});
    }
  }
  return {out.begin(), out.end()};
}

std::size_t crossing_count(const ArcDiagram& d) {
  std::size_t count = 0;
  for (const Arc& a : d.arcs)
    for (const Arc& b : d.arcs)
      if (a.first < b.first && b.first < a.second && a.second < b.second) ++count;
  return count;
}

std::string render_arcs(const ArcDiagram& d) {
  std::string out = "points=";
  if (!d.points.empty())
    out += std::to_string(d.points.front()) + ".." + std::to_string(d.points.back());
  out += " arcs=";
  for (const Arc& a : d.arcs)
    out += "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
  return out;
}

ArcDiagram parse_arcs(std::string_view text) {
  Cursor cur(trim(text));
  if (!cur.accept("points=")) cur.fail("expected 'points='");
  const int lo = cur.integer();
  if (!cur.accept("..")) cur.fail("expected '..'");
  const int hi = cur.integer();
  if (hi < lo) cur.fail("empty point range");
  ArcDiagram d;
  d.points.resize(static_cast<std::size_t>(hi - lo + 1));
  std::iota(d.points.begin(), d.points.end(), lo);
  cur.skip_space();
  if (!cur.accept("arcs=")) cur.fail("expected 'arcs='");
  while (cur.peek() == '(') {
    cur.take();
    const int i = cur.integer();
    cur.expect(',');
    const int j = cur.integer();
    cur.expect(')');
    d.arcs.push_back({i, j});
  }
  if (!cur.done()) cur.fail("unexpected character");
  std::sort(d.arcs.begin(), d.arcs.end());
  validate_arc_diagram(d);
  return d;
}

// --- binary trees ---

bool bin_equal(const BinTree& a, const BinTree& b) {
  if (!a || !b) return !a && !b;
  return a->label == b->label && bin_equal(a->left, b->left) && bin_equal(a->right, b->right);
}

std::size_t bin_size(const BinTree& t) {
  return t ? 1 + bin_size(t->left) + bin_size(t->right) : 0;
}

std::vector<Violation> check_bin(const BinTree& t, BinKind kind) {
  std::vector<Violation> out;
  auto labels = check_bin_rec(t, out, 0);
  if (t) {
    const bool ok = kind == BinKind::Min
                        ? std::all_of(labels.begin(), labels.end(), [&](int l) { return l >= t->label; })
                        : std::all_of(labels.begin(), labels.end(), [&](int l) { return l <= t->label; });
    if (!ok)
      out.push_back({ErrorCode::InvalidTree,
                     "root " + std::to_string(t->label) + " is not " +
                         (kind == BinKind::Min ? "minimal" : "maximal")});
  }
  check_distinct(labels, out);
  return out;
}

BinTree bin_of(const AltTableau& t, BinKind kind) {
  const auto s = free_stats(t);
  if (kind == BinKind::Min && s.fcol() != 0)
    throw Error(ErrorCode::WrongClass, "a Min tree needs a tableau without free columns");
  if (kind == BinKind::Max && s.frow() != 0)
    throw Error(ErrorCode::WrongClass, "a Max tree needs a tableau without free rows");
  return bin_of_rec(t, kind, 0);
}

AltTableau bin_inv(const BinTree& t, BinKind kind) {
  auto bad = check_bin(t, kind);
  if (!bad.empty()) throw ValidationError(std::move(bad));
  return bin_inv_rec(t, kind, 0);
}

std::pair<BinTree, BinTree> couple_bin(const AltTableau& t) {
  const auto [p, q] = divide(t);
  return {bin_of_rec(p, BinKind::Min, 0), bin_of_rec(q, BinKind::Max, 0)};
}

AltTableau couple_bin_inv(const BinTree& min_tree, const BinTree& max_tree) {
  return merge(bin_inv(min_tree, BinKind::Min), bin_inv(max_tree, BinKind::Max));
}

std::string render_bin(const BinTree& t) {
  std::string out;
  render_bin_rec(t, out);
  return out;
}

BinTree parse_bin(std::string_view text) {
  Cursor cur(trim(text));
  auto t = parse_bin_rec(cur, 0);
  cur.skip_space();
  if (!cur.done()) cur.fail("unexpected character");
  return t;
}

std::string render_bin_pair(const std::pair<BinTree, BinTree>& p) {
  return render_bin(p.first) + " " + render_bin(p.second);
}

std::pair<BinTree, BinTree> parse_bin_pair(std::string_view text) {
  Cursor cur(trim(text));
  auto a = parse_bin_rec(cur, 0);
  auto b = parse_bin_rec(cur, 0);
  cur.skip_space();
  if (!cur.done()) cur.fail("unexpected character");
  return {std::move(a), std::move(b)};
}

}  // namespace altab
