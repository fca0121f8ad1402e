#include <altab/enumeration.hpp>
#include <altab/decomposition.hpp>
#include <altab/permutations.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>

namespace altab {

unsigned max_enumeration_n() {
  if (const char* env = std::getenv("ALTAB_MAX_N")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<unsigned>(v);
  }
  return kDefaultMaxN;
}

void check_enumeration_limit(unsigned n, std::optional<unsigned> cap) {
  const unsigned limit = cap.value_or(max_enumeration_n());
  if (n > limit)
    throw Error(ErrorCode::ResourceLimit, "size " + std::to_string(n) + " exceeds the limit " +
                                              std::to_string(limit));
}

void for_each_filling(const std::string& word, const TableauVisitor& visit) {
  const int n = static_cast<int>(word.size());
  auto labels = standard_labels(word.size());
  std::vector<int> rows, cols;
  for (int k = 0; k < n; ++k) (word[k] == kRowStep ? rows : cols).push_back(k + 1);
  std::reverse(cols.begin(), cols.end());

  std::vector<Cell> cells;
  for (int j : cols)
    for (int i : rows)
      if (i < j) cells.push_back({i, j});

  std::vector<char> row_used(n + 2, 0), col_used(n + 2, 0);
  std::vector<ArrowAt> arrows;
  arrows.reserve(cells.size());

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      visit(AltTableau(labels, word, arrows));
      return;
    }
    const Cell c = cells[k];
    self(self, k + 1);
    const char row_was = row_used[c.row];
    if (!row_was) {
      arrows.push_back({c, Arrow::Left});
      row_used[c.row] = 1;
      col_used[c.col] += 1;
      self(self, k + 1);
      col_used[c.col] -= 1;
      row_used[c.row] = 0;
      arrows.pop_back();
    }
    if (!col_used[c.col]) {
      arrows.push_back({c, Arrow::Up});
      row_used[c.row] = 1;
      col_used[c.col] = 1;
      self(self, k + 1);
      col_used[c.col] = 0;
      row_used[c.row] = row_was;
      arrows.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<std::string> all_words(unsigned n) {
  std::vector<std::string> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::string w(n, kRowStep);
    for (unsigned k = 0; k < n; ++k)
      if (mask & (1UL << (n - 1 - k))) w[k] = kColStep;
    out.push_back(std::move(w));
  }
  return out;
}

void for_each_tableau(unsigned n, const TableauVisitor& visit) {
  check_enumeration_limit(n);
  for (const auto& w : all_words(n)) for_each_filling(w, visit);
}

std::vector<AltTableau> all_tableaux(unsigned n) {
  std::vector<AltTableau> out;
  for_each_tableau(n, [&](const AltTableau& t) { out.push_back(t); });
  return out;
}

void for_each_via_perm(unsigned n, const TableauVisitor& visit) {
  check_enumeration_limit(n);
  PermWord w(n + 1);
  std::iota(w.begin(), w.end(), 0);
  do {
    visit(phi_n_inv(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<AltTableau> all_via_perm(unsigned n) {
  std::vector<AltTableau> out;
  for_each_via_perm(n, [&](const AltTableau& t) { out.push_back(t); });
  return out;
}

std::string tableau_key(const AltTableau& t) {
  std::string key = t.word();
  key += '|';
  for (const auto& a : t.arrows()) {
    key += static_cast<char>(a.arrow);
    key += static_cast<char>(a.cell.row);
    key += static_cast<char>(a.cell.col);
  }
  return key;
}

BigInt CountTable::total() const {
  BigInt out = 0;
  for (const auto& [k, c] : counts) out += c;
  return out;
}

BigInt CountTable::free_count(unsigned i, unsigned j) const {
  BigInt out = 0;
  for (const auto& [k, c] : counts)
    if (k.frow == i && k.fcol == j) out += c;
  return out;
}

Poly3 CountTable::free_poly() const {
  Poly3 out;
  for (const auto& [k, c] : counts) out += Poly3::monomial(0, k.frow, k.fcol, c);
  return out;
}

Rational CountTable::eval(const Rational& u, const Rational& x, const Rational& y) const {
  Rational out = 0;
  for (const auto& [k, c] : counts) {
    Rational term = c;
    for (unsigned e = 0; e < k.frow; ++e) term *= x;
    for (unsigned e = 0; e < k.fcol; ++e) term *= y;
    for (unsigned e = 0; e < k.rows; ++e) term *= u;
    out += term;
  }
  return out;
}

std::string CountTable::render() const {
  std::string out;
  std::map<unsigned, BigInt> by_frow, by_fcol, by_rows;
  for (const auto& [k, c] : counts) {
    out += std::to_string(n) + "\t" + std::to_string(k.frow) + "\t" + std::to_string(k.fcol) +
           "\t" + std::to_string(k.rows) + "\t" + c.str() + "\n";
    by_frow[k.frow] += c;
    by_fcol[k.fcol] += c;
    by_rows[k.rows] += c;
  }
  out += "# total\t" + total().str() + "\n";
  for (const auto& [i, c] : by_frow) out += "# frow\t" + std::to_string(i) + "\t" + c.str() + "\n";
  for (const auto& [j, c] : by_fcol) out += "# fcol\t" + std::to_string(j) + "\t" + c.str() + "\n";
  for (const auto& [k, c] : by_rows) out += "# rows\t" + std::to_string(k) + "\t" + c.str() + "\n";
  return out;
}

CountTable count_table(unsigned n, unsigned jobs) {
  check_enumeration_limit(n);
  const auto words = all_words(n);
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(words.size())));
  std::vector<std::map<CountKey, unsigned long long>> partial(jobs);

  auto work = [&](unsigned id) {
    auto& mine = partial[id];
    for (std::size_t w = id; w < words.size(); w += jobs) {
      const unsigned rows =
          static_cast<unsigned>(std::count(words[w].begin(), words[w].end(), kRowStep));
      for_each_filling(words[w], [&](const AltTableau& t) {
        const auto s = free_stats(t);
        ++mine[{static_cast<unsigned>(s.frow()), static_cast<unsigned>(s.fcol()), rows}];
      });
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }

  CountTable table;
  table.n = n;
  for (const auto& part : partial)
    for (const auto& [k, c] : part) table.counts[k] += c;
  return table;
}

Poly3 weight_poly(const std::string& word) {
  std::map<Poly3::Exponents, unsigned long long> acc;
  for_each_filling(word, [&](const AltTableau& t) {
    const auto s = free_stats(t);
    ++acc[{static_cast<unsigned>(s.fcell()), static_cast<unsigned>(s.fcol()),
           static_cast<unsigned>(s.frow())}];
  });
  Poly3 out;
  for (const auto& [e, c] : acc) out += Poly3::monomial(e[0], e[1], e[2], c);
  return out;
}

BigInt decorated_count(unsigned n) {
  BigInt out = 0;
  for_each_tableau(n, [&](const AltTableau& t) { out += BigInt(1) << t.arrows().size(); });
  return out;
}

BigInt no_free_cell_count(unsigned n) {
  BigInt out = 0;
  for_each_tableau(n, [&](const AltTableau& t) {
    if (free_stats(t).fcell() == 0) ++out;
  });
  return out;
}

std::vector<AltTableau> symmetric_tableaux(unsigned n) {
  check_enumeration_limit(n);  // only size-n tableaux are enumerated
  const int size = static_cast<int>(2 * n);
  std::vector<AltTableau> out;
  for_each_tableau(n, [&](const AltTableau& u) {
    if (free_stats(u).fcol() != 0) return;
    const AltTableau tu = transpose(u);
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      std::vector<int> x, y;
      for (int i = 1; i <= static_cast<int>(n); ++i) {
        const bool flip = mask & (1UL << (i - 1));
        x.push_back(flip ? size + 1 - i : i);
        y.push_back(flip ? i : size + 1 - i);
      }
      AltTableau t = merge(relabel(u, x), relabel(tu, y));
      if (transpose(t) != t) throw std::logic_error("constructed tableau is not symmetric");
      out.push_back(std::move(t));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

BigInt symmetric_count_by_filter(unsigned size) {
  BigInt out = 0;
  for_each_tableau(size, [&](const AltTableau& t) {
    if (transpose(t) == t) ++out;
  });
  return out;
}

namespace {

int mirror_in(const std::vector<int>& labels, int l) {
  const auto idx = std::lower_bound(labels.begin(), labels.end(), l) - labels.begin();
  return labels[labels.size() - 1 - static_cast<std::size_t>(idx)];
}

bool contains(const std::vector<int>& v, int l) { return std::binary_search(v.begin(), v.end(), l); }

std::vector<int> marks_within(const std::vector<int>& marks, const AltTableau& part) {
  std::vector<int> out;
  for (int m : marks)
    if (part.has_label(m)) out.push_back(m);
  return out;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

MarkedTableau decorated_bijection(const MarkedTableau& decorated) {
  const AltTableau& t = decorated.tableau;
  const auto marks = sorted_unique(decorated.marks);
  const auto free = free_labels(t);
  for (int m : marks)
    if (!t.has_label(m) || contains(free, m))
      throw Error(ErrorCode::MarkOnFreeLine,
                  "mark on " + std::to_string(m) + ", which is not a line carrying an arrow");

  const auto [p, q] = divide(t);
  const AltTableau pt = transpose(p);
  std::vector<int> out_marks;
  for (int m : marks_within(marks, p)) out_marks.push_back(mirror_in(p.labels(), m));
  for (int i : free_stats(p).free_rows) out_marks.push_back(mirror_in(p.labels(), i));
  for (int m : marks_within(marks, q)) out_marks.push_back(m);
  return {merge(pt, q), sorted_unique(std::move(out_marks))};
}

MarkedTableau decorated_inv(const MarkedTableau& marked) {
  const AltTableau& u = marked.tableau;
  const auto marks = sorted_unique(marked.marks);
  const auto s = free_stats(u);
  if (s.frow() != 0)
    throw Error(ErrorCode::WrongClass, "a marked tableau must have no free rows");
  for (int m : marks)
    if (!u.has_label(m)) throw Error(ErrorCode::NotASubset, std::to_string(m) + " is not a label");

  std::vector<int> r_labels, s_labels, marked_free;
  for (int j : s.free_cols) {
    auto c = closure(u, j);
    if (contains(marks, j)) {
      marked_free.push_back(j);
      r_labels.insert(r_labels.end(), c.begin(), c.end());
    } else {
      s_labels.insert(s_labels.end(), c.begin(), c.end());
    }
  }
  const AltTableau r = restrict_to(u, r_labels);
  const AltTableau rest = restrict_to(u, s_labels);
  std::vector<int> out_marks;
  for (int m : marks_within(marks, r))
    if (!contains(marked_free, m)) out_marks.push_back(mirror_in(r.labels(), m));
  for (int m : marks_within(marks, rest)) out_marks.push_back(m);
  return {merge(transpose(r), rest), sorted_unique(std::move(out_marks))};
}

std::vector<MarkedTableau> all_decorated(unsigned n) {
  std::vector<MarkedTableau> out;
  for_each_tableau(n, [&](const AltTableau& t) {
    std::vector<int> lines;
    for (const auto& a : t.arrows()) lines.push_back(a.arrow == Arrow::Left ? a.cell.row : a.cell.col);
    std::sort(lines.begin(), lines.end());
    for (unsigned long mask = 0; mask < (1UL << lines.size()); ++mask) {
      std::vector<int> marks;
      for (std::size_t k = 0; k < lines.size(); ++k)
        if (mask & (1UL << k)) marks.push_back(lines[k]);
      out.push_back({t, std::move(marks)});
    }
  });
  return out;
}

}  // namespace altab
