#include <altab/verify.hpp>

#include <altab/asep.hpp>
#include <altab/decomposition.hpp>
#include <altab/enumeration.hpp>
#include <altab/perm_tableau.hpp>
#include <altab/permutations.hpp>
#include <altab/series.hpp>
#include <altab/text.hpp>
#include <altab/trees.hpp>

#include <functional>
#include <set>
#include <unordered_set>

namespace altab {

bool Report::ok() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(std::string name, bool pass, std::string detail) {
  checks.push_back({std::move(name), pass, std::move(detail)});
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string Report::render() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.name + (c.pass ? " PASS" : " FAIL");
    if (!c.pass && !c.detail.empty()) out += ": " + c.detail;
    out += '\n';
  }
  return out;
}

namespace {

std::string sfx(unsigned n) { return " n=" + std::to_string(n); }

// Runs `prop` on every tableau of size n; the detail names the first failure.
void for_all(Report& r, const std::string& name, unsigned n,
             const std::function<bool(const AltTableau&)>& prop) {
  std::string first;
  bool pass = true;
  for_each_tableau(n, [&](const AltTableau& t) {
    if (!pass) return;
    bool ok = false;
    try {
      ok = prop(t);
    } catch (const std::exception& e) {
      first = render_tableau(t) + " raised " + e.what();
      pass = false;
      return;
    }
    if (!ok) {
      first = "fails on " + render_tableau(t);
      pass = false;
    }
  });
  r.add(name + sfx(n), pass, first);
}

std::string big(const BigInt& v) { return v.str(); }

RationalSeries one_minus_z(unsigned order) {
  return RationalSeries::constant(order, 1) - RationalSeries::z(order);
}

// Compares n! [z^n] s with expected(n) for n <= order.
void compare_egf(Report& r, const std::string& name, const RationalSeries& s,
                 const std::function<Rational(unsigned)>& expected) {
  for (unsigned n = 0; n <= s.order(); ++n) {
    const Rational want = expected(n);
    if (s.egf(n) != want) {
      r.add(name, false,
            "coefficient " + std::to_string(n) + ": series " + to_string(s.egf(n)) +
                ", count " + to_string(want));
      return;
    }
  }
  r.add(name, true);
}

}  // namespace

Report verify_bijections(unsigned n_max) {
  Report r;
  for (unsigned n = 0; n <= n_max; ++n) {
    for_all(r, "parse/render round trip", n, [](const AltTableau& t) {
      return parse_tableau(render_tableau(t)) == t &&
             parse_tableau(render_tableau(t, TableauFormat::Record)) == t;
    });
    for_all(r, "transpose involution", n, [](const AltTableau& t) {
      const auto tt = transpose(t);
      const auto a = free_stats(t), b = free_stats(tt);
      return transpose(tt) == t && a.frow() == b.fcol() && a.fcol() == b.frow() &&
             a.fcell() == b.fcell();
    });
    for_all(r, "alpha round trip and statistics", n, [](const AltTableau& t) {
      const auto p = alpha_inv(t);
      const auto ps = perm_tableau_stats(p);
      const auto s = free_stats(t);
      return alpha(p) == t && ps.unrestricted_rows == s.free_rows &&
             ps.top_one_cols == s.free_cols && ps.superfluous_ones == s.free_cells;
    });
    for_all(r, "merge/split round trip", n, [](const AltTableau& t) {
      const auto parts = split(t);
      for (const auto& c : parts) {
        const auto fl = free_labels(c.tableau);
        if (fl != std::vector<int>{c.root} || c.tableau.arrows().size() + 1 != c.tableau.size())
          return false;
      }
      return merge_all(parts) == t;
    });
    for_all(r, "forest round trip", n, [](const AltTableau& t) {
      const auto f = forest_of(t);
      return check_forest(f).empty() && forest_inv(f) == t;
    });
    for_all(r, "arc diagram", n, [](const AltTableau& t) {
      const auto d = arc_of(t);
      const auto f = forest_of(t);
      return check_arc_diagram(d).empty() && phi(f) == d && phi_inv(d) == f &&
             out_crossings(d) == free_stats(t).free_cells;
    });
    for_all(r, "binary tree pair round trip", n, [](const AltTableau& t) {
      const auto [a, b] = couple_bin(t);
      return check_bin(a, BinKind::Min).empty() && check_bin(b, BinKind::Max).empty() &&
             couple_bin_inv(a, b) == t;
    });
    for_all(r, "permutation bijection and statistics", n, [](const AltTableau& t) {
      const auto w = phi_n(t, 0);
      const auto s = perm_stats(w).above(0);
      const auto f = free_stats(t);
      return phi_n_inv(w) == t && phi_c(t) == w && s.ascents == t.rows() &&
             s.descents == t.cols() && s.rl_minima == f.free_rows &&
             s.shifted_rl_maxima == f.free_cols;
    });
  }
  return r;
}

Report verify_counts(unsigned n_max) {
  Report r;
  std::vector<BigInt> all(n_max + 1), col_side(n_max + 1), row_side(n_max + 1),
      col_packed(n_max + 1), row_packed(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    const auto table = count_table(n);
    all[n] = table.total();
    for (const auto& [k, c] : table.counts) {
      if (k.frow == 0) col_side[n] += c;
      if (k.fcol == 0) row_side[n] += c;
      if (k.frow == 0 && k.fcol == 1) col_packed[n] += c;
      if (k.frow == 1 && k.fcol == 0) row_packed[n] += c;
    }
    r.add("A(" + std::to_string(n) + ")=" + big(all[n]), all[n] == factorial(n + 1),
          "expected " + big(factorial(n + 1)));

    Poly3 product(1);
    for (unsigned i = 0; i < n; ++i) product = product * (Poly3::x() + Poly3::y() + Poly3(i));
    r.add("product formula" + sfx(n), table.free_poly() == product,
          table.free_poly().to_string() + " vs " + product.to_string());

    const BigInt catalan = factorial(2 * n + 2) / (factorial(n + 1) * factorial(n + 2));
    const BigInt no_free = no_free_cell_count(n);
    r.add("no free cell = Catalan" + sfx(n), no_free == catalan,
          big(no_free) + " vs " + big(catalan));

    const BigInt deco = decorated_count(n);
    r.add("decorated = 2^n n!" + sfx(n), deco == (BigInt(1) << n) * factorial(n), big(deco));

    std::unordered_set<std::string> a, b;
    for_each_tableau(n, [&](const AltTableau& t) { a.insert(tableau_key(t)); });
    for_each_via_perm(n, [&](const AltTableau& t) { b.insert(tableau_key(t)); });
    r.add("generators agree" + sfx(n), a == b,
          std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " distinct");

    if (2 * n <= n_max) {
      const auto sym = symmetric_tableaux(n);
      std::set<AltTableau> distinct(sym.begin(), sym.end());
      const BigInt want = (BigInt(1) << n) * factorial(n);
      r.add("symmetric = 2^n n!" + sfx(n),
            distinct.size() == sym.size() && BigInt(sym.size()) == want &&
                symmetric_count_by_filter(2 * n) == want,
            std::to_string(sym.size()) + " built");
    }
  }
  for (unsigned n = 0; n + 1 <= n_max; ++n) {
    bool ok = col_side[n + 1] == all[n] && row_side[n + 1] == all[n];
    if (n + 2 <= n_max) ok = ok && col_packed[n + 2] == all[n] && row_packed[n + 2] == all[n];
    r.add("cut relations" + sfx(n), ok);
  }
  return r;
}

Report formula_report(unsigned n_max) {
  Report r;
  const unsigned order = n_max;
  std::vector<CountTable> tables;
  for (unsigned n = 0; n <= n_max; ++n) tables.push_back(count_table(n));

  auto count_where = [&](unsigned n, const std::function<bool(const CountKey&)>& pred) {
    BigInt out = 0;
    for (const auto& [k, c] : tables[n].counts)
      if (pred(k)) out += c;
    return out;
  };
  auto any = [](const CountKey&) { return true; };
  auto no_free_row = [](const CountKey& k) { return k.frow == 0; };
  auto col_packed = [](const CountKey& k) { return k.frow == 0 && k.fcol == 1; };

  const auto omz = one_minus_z(order);
  const auto a_series = ser_pow(omz, -2);
  const auto b_series = ser_inv(omz);
  const auto c_series = ser_log(omz) * Rational(-1);
  compare_egf(r, "A(z)=1/(1-z)^2", a_series, [&](unsigned n) { return Rational(count_where(n, any)); });
  compare_egf(r, "B(z)=1/(1-z)", b_series, [&](unsigned n) { return Rational(count_where(n, no_free_row)); });
  compare_egf(r, "C(z)=-log(1-z)", c_series, [&](unsigned n) { return Rational(count_where(n, col_packed)); });

  {
    const auto exp_log = ser_exp(ser_log(b_series));
    r.add("exp(log(1/(1-z)))=1/(1-z)", exp_log == b_series);
    const Rational half(1, 2);
    r.add("(1-z)^(1/2) = exp(log(1-z)/2)", ser_pow(omz, half) == ser_exp(ser_log(omz) * half));
  }

  for (const Rational& u : {Rational(2), Rational(1, 2), Rational(3)}) {
    RationalSeries e = ser_exp(RationalSeries::z(order) * (u - 1));
    const auto denom = e - RationalSeries::constant(order, u);
    const auto closed = ser_inv(denom) * (1 - u);
    compare_egf(r, "A0*(z,u) at u=" + to_string(u), closed, [&](unsigned n) {
      Rational s = 0;
      for (const auto& [k, c] : tables[n].counts) {
        if (k.frow != 0) continue;
        Rational term = c;
        for (unsigned e2 = 0; e2 < k.rows; ++e2) term *= u;
        s += term;
      }
      return s;
    });
  }

  const std::vector<std::array<Rational, 3>> triples = {
      {Rational(2), Rational(1), Rational(1)},
      {Rational(1), Rational(2), Rational(3)},
      {Rational(3), Rational(2), Rational(5)}};
  for (const auto& [u, x, y] : triples) {
    const std::string at = " at (u,x,y)=(" + to_string(u) + "," + to_string(x) + "," + to_string(y) + ")";
    RationalSeries closed(order);
    if (u == 1) {
      closed = ser_pow(omz, -(x + y));
    } else {
      const auto e = ser_exp(RationalSeries::z(order) * (1 - u));
      const auto inner = ser_inv(RationalSeries::constant(order, 1) - e * u) * (1 - u);
      closed = ser_exp(RationalSeries::z(order) * (y * (1 - u)) + ser_log(inner) * (x + y));
    }
    compare_egf(r, "refined generating function" + at, closed,
                [&](unsigned n) { return tables[n].eval(u, x, y); });
  }

  for (const auto& [x, y] : std::vector<std::pair<Rational, Rational>>{
           {Rational(1), Rational(1)}, {Rational(2), Rational(3)}, {Rational(1, 2), Rational(5)}}) {
    const auto closed = ser_pow(omz, -(x + y));
    compare_egf(r, "(1-z)^-(x+y) at (x,y)=(" + to_string(x) + "," + to_string(y) + ")", closed,
                [&](unsigned n) {
                  Rational prod = 1;
                  for (unsigned i = 0; i < n; ++i) prod *= x + y + i;
                  return tables[n].eval(1, x, y) == prod ? prod : Rational(-1);
                });
  }

  {
    std::vector<BigInt> a, b, c;
    for (unsigned n = 0; n <= n_max; ++n) {
      a.push_back(count_where(n, any));
      b.push_back(count_where(n, no_free_row));
      c.push_back(count_where(n, col_packed));
    }
    const auto as = RationalSeries::from_egf_counts(order, a);
    const auto bs = RationalSeries::from_egf_counts(order, b);
    const auto cs = RationalSeries::from_egf_counts(order, c);
    bool b_ok = true, c_ok = true;
    const auto db = bs.derivative();
    const auto ddc = cs.derivative().derivative();
    for (unsigned n = 0; n + 1 <= order; ++n) b_ok = b_ok && db[n] == as[n];
    for (unsigned n = 0; n + 2 <= order; ++n) c_ok = c_ok && ddc[n] == as[n];
    r.add("B'=A", b_ok);
    r.add("C''=A", c_ok);
  }
  return r;
}

Report verify_asep(unsigned n_max) {
  Report r;
  const std::vector<std::array<Rational, 3>> params = {
      {Rational(1), Rational(1, 2), Rational(1, 3)},
      {Rational(1, 2), Rational(1), Rational(1)},
      {Rational(1, 3), Rational(2, 3), Rational(1, 2)}};
  for (unsigned n = 0; n <= std::min(n_max, kDefaultChainMaxN); ++n) {
    for (const auto& [q, a, b] : params) {
      const AsepParams p{n, q, a, b};
      const auto tab = asep_distribution(p);
      const auto chain = chain_stationary(p);
      Rational st = 0, sc = 0;
      for (const auto& v : tab) st += v;
      for (const auto& v : chain) sc += v;
      r.add("stationary law" + sfx(n) + " (q,alpha,beta)=(" + to_string(q) + "," + to_string(a) +
                "," + to_string(b) + ")",
            tab == chain && st == 1 && sc == 1);
    }
  }
  for (unsigned len = 2; len <= n_max; ++len) {
    bool ok = true;
    std::string bad;
    for (const auto& w : all_words(len)) {
      for (std::size_t k = 0; k + 1 < w.size() && ok; ++k) {
        if (w[k] != kRowStep || w[k + 1] != kColStep) continue;
        const std::string u = w.substr(0, k), v = w.substr(k + 2);
        const Poly3 lhs = weight_poly(w);
        const Poly3 rhs = Poly3::q() * weight_poly(u + "ED" + v) + weight_poly(u + "D" + v) +
                          weight_poly(u + "E" + v);
        if (lhs != rhs) {
          ok = false;
          bad = w + " at " + std::to_string(k);
        }
      }
    }
    r.add("DE=qED+D+E on words of length " + std::to_string(len), ok, bad);
  }
  return r;
}

Report verify_suite(std::string_view suite, unsigned n_max) {
  check_enumeration_limit(n_max);
  if (suite == "bijections") return verify_bijections(n_max);
  if (suite == "counts") return verify_counts(n_max);
  if (suite == "series") return formula_report(n_max);
  if (suite == "asep") return verify_asep(n_max);
  if (suite == "all") {
    Report r = verify_bijections(n_max);
    r.append(verify_counts(n_max));
    r.append(formula_report(n_max));
    r.append(verify_asep(n_max));
    return r;
  }
  throw Error(ErrorCode::SyntaxError, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace altab
