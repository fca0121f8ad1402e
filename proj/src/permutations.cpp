#include <altab/permutations.hpp>
#include <altab/decomposition.hpp>

#include "cursor.hpp"

#include <algorithm>
#include <set>

namespace altab {

namespace {

using detail::Cursor;
using detail::trim;

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> filter_above(const std::vector<int>& v, int x) {
  std::vector<int> out;
  for (int l : v)
    if (l > x) out.push_back(l);
  return out;
}

// Letters a with a < every letter after it (or > when `maxima`).
std::vector<int> rl_extrema(const PermWord& w, bool maxima) {
  std::vector<int> out;
  for (std::size_t k = w.size(); k-- > 0;) {
    if (out.empty() || (maxima ? w[k] > out.back() : w[k] < out.back())) out.push_back(w[k]);
  }
  return out;
}

// Segments of `w` ending at its RL-minima (or RL-maxima).
std::vector<PermWord> segments(const PermWord& w, bool maxima) {
  std::vector<bool> cut(w.size(), false);
  bool seen = false;
  int best = 0;
  for (std::size_t k = w.size(); k-- > 0;) {
    if (!seen || (maxima ? w[k] > best : w[k] < best)) {
      cut[k] = true;
      best = w[k];
      seen = true;
    }
  }
  std::vector<PermWord> out;
  PermWord cur;
  for (std::size_t k = 0; k < w.size(); ++k) {
    cur.push_back(w[k]);
    if (cut[k]) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  return out;
}

void psi_rec(const PlaneAltTree& t, PermWord& out) {
  for (const auto& c : t.children) psi_rec(c, out);
  out.push_back(t.label);
}

PlaneAltTree psi_inv_rec(const PermWord& w, Color root, int depth) {
  if (depth > kMaxTreeDepth) throw Error(ErrorCode::ResourceLimit, "word too long");
  PlaneAltTree t{root, w.back(), {}};
  const PermWord rest(w.begin(), w.end() - 1);
  const Color child = root == Color::White ? Color::Black : Color::White;
  for (const auto& seg : segments(rest, root == Color::White))
    t.children.push_back(psi_inv_rec(seg, child, depth + 1));
  return t;
}

}  // namespace

void validate_perm_word(const PermWord& w) {
  std::set<int> seen;
  for (int l : w) {
    if (l < 0) throw Error(ErrorCode::SyntaxError, "negative letter " + std::to_string(l));
    if (!seen.insert(l).second)
      throw Error(ErrorCode::RepeatedLetter, "letter " + std::to_string(l) + " repeated");
  }
}

PermStats PermStats::above(int x) const {
  return {filter_above(ascents, x), filter_above(descents, x), filter_above(rl_minima, x),
          filter_above(rl_maxima, x), filter_above(shifted_rl_maxima, x)};
}

PermStats perm_stats(const PermWord& w) {
  validate_perm_word(w);
  PermStats s;
  if (w.empty()) return s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k + 1 == w.size() || w[k] < w[k + 1]) s.ascents.push_back(w[k]);
    else s.descents.push_back(w[k]);
  }
  s.ascents = sorted(s.ascents);
  s.descents = sorted(s.descents);
  s.rl_minima = sorted(rl_extrema(w, false));
  s.rl_maxima = sorted(rl_extrema(w, true));
  const auto min_at = std::min_element(w.begin(), w.end());
  s.shifted_rl_maxima = sorted(rl_extrema(PermWord(w.begin(), min_at), true));
  return s;
}

PermWord psi(const PlaneAltTree& t) {
  PermWord out;
  psi_rec(t, out);
  return out;
}

PlaneAltTree psi_inv(const PermWord& w, Color root) {
  validate_perm_word(w);
  if (w.empty()) throw Error(ErrorCode::BadTerminalLetter, "empty word");
  const bool ok = root == Color::Black ? w.back() == *std::max_element(w.begin(), w.end())
                                       : w.back() == *std::min_element(w.begin(), w.end());
  if (!ok)
    throw Error(ErrorCode::BadTerminalLetter,
                std::string("a ") + (root == Color::Black ? "black" : "white") +
                    " root needs the word to end with its " +
                    (root == Color::Black ? "maximum" : "minimum"));
  return psi_inv_rec(w, root, 0);
}

PermWord big_psi(const PlaneAltForest& f, int x) {
  validate_forest(f);
  const auto labels = forest_labels(f);
  if (!labels.empty() && x >= labels.front())
    throw Error(ErrorCode::BadSeparator,
                "separator " + std::to_string(x) + " is not below every label");
  std::vector<const PlaneAltTree*> black, white;
  for (const auto& t : f) (t.color == Color::Black ? black : white).push_back(&t);
  auto by_root = [](const PlaneAltTree* a, const PlaneAltTree* b) { return a->label < b->label; };
  std::sort(black.begin(), black.end(), [&](auto a, auto b) { return by_root(b, a); });
  std::sort(white.begin(), white.end(), by_root);
  PermWord out;
  for (const auto* t : black) psi_rec(*t, out);
  out.push_back(x);
  for (const auto* t : white) psi_rec(*t, out);
  return out;
}

std::pair<PlaneAltForest, int> big_psi_inv(const PermWord& w) {
  validate_perm_word(w);
  if (w.empty()) throw Error(ErrorCode::BadSeparator, "empty word has no separator");
  const auto min_at = std::min_element(w.begin(), w.end());
  const PermWord before(w.begin(), min_at), after(min_at + 1, w.end());
  PlaneAltForest f;
  for (const auto& seg : segments(before, true)) f.push_back(psi_inv_rec(seg, Color::Black, 0));
  for (const auto& seg : segments(after, false)) f.push_back(psi_inv_rec(seg, Color::White, 0));
  std::sort(f.begin(), f.end(),
            [](const PlaneAltTree& a, const PlaneAltTree& b) { return a.label < b.label; });
  return {std::move(f), *min_at};
}

PermWord phi_n(const AltTableau& t, int x) { return big_psi(forest_of(t), x); }

AltTableau phi_n_inv(const PermWord& w) { return forest_inv(big_psi_inv(w).first); }

PermWord phi_c(const AltTableau& t, std::vector<PermWord>* trace) {
  if (!t.is_standard())
    throw Error(ErrorCode::NonStandardLabels, "the insertion algorithm needs labels 1..n");
  PermWord w{0};
  const auto s = free_stats(t);
  w.insert(w.end(), s.free_rows.begin(), s.free_rows.end());
  if (trace) trace->push_back(w);

  auto cols = t.cols();
  std::reverse(cols.begin(), cols.end());
  for (int j : cols) {
    int anchor = 0;
    std::vector<int> lefts;
    for (const auto& a : t.arrows()) {
      if (a.cell.col != j) continue;
      if (a.arrow == Arrow::Up) anchor = a.cell.row;
      else lefts.push_back(a.cell.row);
    }
    std::sort(lefts.begin(), lefts.end());
    lefts.push_back(j);
    const auto at = std::find(w.begin(), w.end(), anchor);
    w.insert(at, lefts.begin(), lefts.end());
    if (trace) trace->push_back(w);
  }
  return w;
}

void validate_signed_perm(const SignedPerm& s) {
  if (s.letters.size() != s.barred.size())
    throw Error(ErrorCode::SizeMismatch, "bar flags do not match the letters");
  auto letters = sorted(s.letters);
  for (std::size_t k = 0; k < letters.size(); ++k)
    if (letters[k] != static_cast<int>(k) + 1)
      throw Error(ErrorCode::RepeatedLetter, "letters are not a permutation of 1.." +
                                                 std::to_string(letters.size()));
}

SignedPerm signed_of(const AltTableau& t) {
  if (!t.is_standard() || t.size() % 2 != 0 || transpose(t) != t)
    throw Error(ErrorCode::NotSymmetric,
                "expected a standard tableau of even size equal to its transpose");
  const int n = static_cast<int>(t.size() / 2);
  const auto [p, q] = divide(t);
  const PermWord w = phi_n(p, 0);
  SignedPerm out;
  for (std::size_t k = 1; k < w.size(); ++k) {
    const bool bar = w[k] > n;
    out.letters.push_back(bar ? 2 * n + 1 - w[k] : w[k]);
    out.barred.push_back(bar);
  }
  validate_signed_perm(out);
  return out;
}

AltTableau signed_inv(const SignedPerm& s) {
  validate_signed_perm(s);
  const int n = static_cast<int>(s.size());
  PermWord w{0};
  std::vector<int> mirror;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const int l = s.barred[k] ? 2 * n + 1 - s.letters[k] : s.letters[k];
    w.push_back(l);
    mirror.push_back(2 * n + 1 - l);
  }
  const AltTableau p = phi_n_inv(w);
  return merge(p, relabel(transpose(p), std::move(mirror)));
}

std::string render_perm(const PermWord& w) {
  std::string out;
  for (int l : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l);
  }
  return out;
}

PermWord parse_perm(std::string_view text) {
  Cursor cur(trim(text));
  PermWord w;
  while (!cur.done()) {
    w.push_back(cur.integer());
    if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek())))
      cur.fail("expected a space");
    cur.skip_space();
  }
  validate_perm_word(w);
  return w;
}

std::string render_perm_tuple(const PermWord& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w[k]);
  }
  return out + ")";
}

std::string render_signed(const SignedPerm& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(s.letters[k]);
    if (s.barred[k]) out += '\'';
  }
  return out;
}

SignedPerm parse_signed(std::string_view text) {
  Cursor cur(trim(text));
  SignedPerm s;
  while (!cur.done()) {
    s.letters.push_back(cur.integer());
    s.barred.push_back(cur.accept("'"));
    if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek())))
      cur.fail("expected a space");
    cur.skip_space();
  }
  validate_signed_perm(s);
  return s;
}

}  // namespace altab
