#include <altab/text.hpp>

#include "cursor.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace altab {

namespace {

using json = nlohmann::json;
using detail::Cursor;
using detail::trim;

std::string read_word(Cursor& cur) {
  std::string word;
  while (cur.peek() == kRowStep || cur.peek() == kColStep) word.push_back(cur.take());
  return word;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(xs[k]);
  }
  return out;
}

AltTableau parse_record(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SyntaxError, std::string("bad record: ") + e.what());
  }
  try {
    RawTableau raw;
    raw.labels = j.at("labels").get<std::vector<int>>();
    raw.word = j.at("word").get<std::string>();
    for (const auto& a : j.at("arrows")) {
      const auto dir = a.at(2).get<std::string>();
      if (dir != "L" && dir != "U") throw Error(ErrorCode::SyntaxError, "bad arrow kind " + dir);
      raw.arrows.push_back({{a.at(0).get<int>(), a.at(1).get<int>()},
                            dir == "L" ? Arrow::Left : Arrow::Up});
    }
    return AltTableau(std::move(raw));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("bad record: ") + e.what());
  }
}

std::string render_record(const AltTableau& t) {
  json arrows = json::array();
  for (const auto& a : t.arrows())
    arrows.push_back({a.cell.row, a.cell.col, a.arrow == Arrow::Left ? "L" : "U"});
  const auto s = free_stats(t);
  json cells = json::array();
  for (const Cell c : s.free_cells) cells.push_back({c.row, c.col});
  json stats = {{"frow", s.frow()},           {"fcol", s.fcol()},
                {"fcell", s.fcell()},         {"free_rows", s.free_rows},
                {"free_cols", s.free_cols},   {"free_cells", cells}};
  json j = {{"labels", t.labels()}, {"word", t.word()}, {"arrows", arrows}, {"statistics", stats}};
  return j.dump();
}

std::string render_grid(const AltTableau& t) {
  auto cols = t.cols();
  std::reverse(cols.begin(), cols.end());
  std::size_t width = 1;
  for (int l : t.labels()) width = std::max(width, std::to_string(l).size());
  width += 1;

  auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };

  std::ostringstream out;
  std::string header = std::string(width, ' ');
  for (int j : cols) header += pad(std::to_string(j));
  while (!header.empty() && header.back() == ' ') header.pop_back();
  out << header;
  for (int i : t.rows()) {
    out << '\n' << pad(std::to_string(i));
    for (int j : cols) {
      if (j <= i) break;
      const auto a = t.at({i, j});
      const char mark = !a ? '.' : (*a == Arrow::Left ? '<' : '^');
      out << pad(std::string(1, mark));
    }
  }
  return out.str();
}

}  // namespace

AltTableau parse_tableau(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::SyntaxError, "empty input at position 0");
  if (text.front() == '{') return parse_record(text);

  Cursor cur(text);
  RawTableau raw;
  bool explicit_labels = false;
  if (cur.accept("labels=")) {
    raw.labels = cur.integer_list(',', '|');
    cur.expect('|');
    explicit_labels = true;
  }
  raw.word = read_word(cur);
  cur.expect('|');
  if (!cur.done()) {
    do {
      Arrow dir;
      if (cur.peek() == 'L') dir = Arrow::Left;
      else if (cur.peek() == 'U') dir = Arrow::Up;
      else cur.fail("expected 'L' or 'U'");
      cur.take();
      const int i = cur.integer();
      cur.expect(',');
      const int j = cur.integer();
      raw.arrows.push_back({{i, j}, dir});
    } while (cur.accept(";"));
  }
  if (!cur.done()) cur.fail("unexpected character");
  if (!explicit_labels) raw.labels = standard_labels(raw.word.size());
  return AltTableau(std::move(raw));
}

std::string render_tableau(const AltTableau& t, TableauFormat format) {
  switch (format) {
    case TableauFormat::Record: return render_record(t);
    case TableauFormat::Grid: return render_grid(t);
    case TableauFormat::Compact: break;
  }
  std::string out;
  if (!t.is_standard()) out += "labels=" + join_ints(t.labels()) + "|";
  out += t.word();
  out += '|';
  bool first = true;
  for (const auto& a : t.arrows()) {
    if (!first) out += ';';
    first = false;
    out += static_cast<char>(a.arrow);
    out += std::to_string(a.cell.row) + "," + std::to_string(a.cell.col);
  }
  return out;
}

PermTableau parse_perm_tableau(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw Error(ErrorCode::SyntaxError, "empty input at position 0");
  Cursor cur(text);
  std::vector<int> labels;
  bool explicit_labels = false;
  if (cur.accept("labels=")) {
    labels = cur.integer_list(',', '|');
    cur.expect('|');
    explicit_labels = true;
  }
  std::string word = read_word(cur);
  cur.expect('|');
  std::vector<Cell> ones;
  if (!cur.done()) {
    do {
      const int i = cur.integer();
      cur.expect(',');
      const int j = cur.integer();
      ones.push_back({i, j});
    } while (cur.accept(";"));
  }
  if (!cur.done()) cur.fail("unexpected character");
  if (!explicit_labels) labels = standard_labels(word.size(), 0);
  return PermTableau(std::move(labels), std::move(word), std::move(ones));
}

std::string render_perm_tableau(const PermTableau& p) {
  std::string out;
  if (p.labels() != standard_labels(p.size(), 0)) out += "labels=" + join_ints(p.labels()) + "|";
  out += p.word();
  out += '|';
  bool first = true;
  for (const Cell c : p.ones()) {
    if (!first) out += ';';
    first = false;
    out += std::to_string(c.row) + "," + std::to_string(c.col);
  }
  return out;
}

std::string format_label_set(const std::vector<int>& labels) {
  return "{" + join_ints(labels) + "}";
}

std::string format_cell(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace altab
