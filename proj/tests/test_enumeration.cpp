#include <doctest.h>

#include <altab/enumeration.hpp>
#include <altab/series.hpp>
#include <altab/text.hpp>
#include <altab/verify.hpp>

#include "oracles.hpp"

#include <cstdlib>
#include <set>

using namespace altab;

TEST_CASE("generation matches brute force over arrow assignments") {
  for (unsigned n = 0; n <= 5; ++n) {
    std::set<std::string> got;
    for_each_tableau(n, [&](const AltTableau& t) { got.insert(render_tableau(t)); });
    CHECK(got == oracle::all_compact(n));
    CHECK(all_tableaux(n).size() == oracle::factorial(n + 1));
  }
  const auto two = all_tableaux(2);
  std::set<std::string> names;
  for (const auto& t : two) names.insert(render_tableau(t));
  CHECK(names == std::set<std::string>{"EE|", "DD|", "ED|", "DE|", "DE|L1,2", "DE|U1,2"});
  CHECK(all_words(2) == std::vector<std::string>{"DD", "DE", "ED", "EE"});
}

TEST_CASE("generation is deterministic") {
  CHECK(all_tableaux(4) == all_tableaux(4));
  CHECK(all_via_perm(3) == all_via_perm(3));
}

TEST_CASE("the two generators agree") {
  for (unsigned n = 0; n <= 5; ++n) {
    const auto a = all_tableaux(n), b = all_via_perm(n);
    CHECK(std::set<AltTableau>(a.begin(), a.end()) == std::set<AltTableau>(b.begin(), b.end()));
    CHECK(b.size() == a.size());
  }
}

TEST_CASE("resource limit") {
  CHECK_THROWS_AS(check_enumeration_limit(10, 9), Error);
  CHECK_NOTHROW(check_enumeration_limit(9, 9));
  CHECK(max_enumeration_n() >= 1);
}

TEST_CASE("count tables") {
  const auto t2 = count_table(2);
  CHECK(t2.total() == 6);
  CHECK(t2.free_count(1, 0) == 1);
  CHECK(t2.free_count(0, 1) == 1);
  CHECK(t2.free_count(2, 0) == 1);
  CHECK(t2.free_count(0, 2) == 1);
  CHECK(t2.free_count(1, 1) == 2);
  const auto xy = Poly3::x() + Poly3::y();
  CHECK(t2.free_poly() == xy * (xy + Poly3(1)));
  CHECK(count_table(1).free_poly() == xy);
  CHECK(count_table(6).total() == 5040);
  CHECK(count_table(6, 4).counts == count_table(6).counts);

  for (unsigned n = 0; n <= 7; ++n) {
    const auto table = count_table(n, 3);
    CHECK(table.total() == factorial(n + 1));
    // Transposition swaps free rows with free columns and rows with columns.
    for (const auto& [k, c] : table.counts) {
      const auto it = table.counts.find({k.fcol, k.frow, n - k.rows});
      REQUIRE(it != table.counts.end());
      CHECK(it->second == c);
    }
    const auto want = oracle::product_poly(n);
    const auto got = table.free_poly();
    for (const auto& [e, c] : want) CHECK(got.coeff(0, e.first, e.second) == c);
    CHECK(got.terms().size() == want.size());
  }
  const std::string text = count_table(2).render();
  CHECK(text.find("# total\t6") != std::string::npos);
}

TEST_CASE("weights of shapes") {
  CHECK(weight_poly("DE") == Poly3::q() * Poly3::x() * Poly3::y() + Poly3::x() + Poly3::y());
  CHECK(weight_poly("D") == Poly3::y());
  CHECK(weight_poly("E") == Poly3::x());
  CHECK(weight_poly("") == Poly3(1));
  CHECK(weight_poly("DE").to_string() == "q*x*y + x + y");
  for (unsigned n = 0; n <= 5; ++n)
    for (const auto& w : all_words(n)) {
      const auto p = weight_poly(w);
      CHECK(p.total() == oracle::alternative_fillings(oracle::shape_of(w)).size());
    }
}

TEST_CASE("matrix ansatz relation") {
  for (unsigned len = 2; len <= 6; ++len)
    for (const auto& w : all_words(len))
      for (std::size_t k = 0; k + 1 < len; ++k) {
        if (w.compare(k, 2, "DE") != 0) continue;
        const auto u = w.substr(0, k), v = w.substr(k + 2);
        CHECK(weight_poly(w) == Poly3::q() * weight_poly(u + "ED" + v) + weight_poly(u + "D" + v) +
                                    weight_poly(u + "E" + v));
      }
}

TEST_CASE("special counts") {
  CHECK(decorated_count(2) == 8);
  CHECK(no_free_cell_count(2) == 5);
  for (unsigned n = 0; n <= 7; ++n) {
    CHECK(decorated_count(n) == (BigInt(1) << n) * factorial(n));
    CHECK(no_free_cell_count(n) == oracle::catalan(n + 1));
  }
  CHECK(symmetric_tableaux(1).size() == 2);
  for (unsigned n = 0; n <= 4; ++n) {
    const auto sym = symmetric_tableaux(n);
    CHECK(std::set<AltTableau>(sym.begin(), sym.end()).size() == sym.size());
    CHECK(sym.size() == (std::uint64_t{1} << n) * oracle::factorial(n));
    for (const auto& t : sym) CHECK(transpose(t) == t);
    if (2 * n <= 8) CHECK(symmetric_count_by_filter(2 * n) == sym.size());
  }
  CHECK(symmetric_count_by_filter(3) == 0);
}

TEST_CASE("decorated tableaux") {
  const auto one = all_decorated(1);
  CHECK(one.size() == 2);
  for (const auto& m : one) {
    const auto image = decorated_bijection(m);
    CHECK(image.tableau == AltTableau::standard("E"));
    CHECK(decorated_inv(image) == m);
  }
  for (unsigned n = 0; n <= 4; ++n) {
    std::set<MarkedTableau> image;
    for (const auto& m : all_decorated(n)) {
      const auto b = decorated_bijection(m);
      REQUIRE(free_stats(b.tableau).frow() == 0);
      REQUIRE(decorated_inv(b) == m);
      image.insert(b);
    }
    CHECK(image.size() == (std::uint64_t{1} << n) * oracle::factorial(n));
  }
  const MarkedTableau bad{AltTableau::standard("D"), {1}};
  CHECK_THROWS_AS(decorated_bijection(bad), Error);
  CHECK_THROWS_AS(decorated_inv({AltTableau::standard("D"), {}}), Error);
}

TEST_CASE("power series arithmetic") {
  const unsigned N = 8;
  const auto z = RationalSeries::z(N);
  const auto one = RationalSeries::constant(N, 1);
  const auto inv = ser_inv(one - z);
  for (unsigned n = 0; n <= N; ++n) CHECK(inv[n] == 1);
  CHECK(ser_mul(inv, one - z) == one);
  const auto sq = ser_pow(one - z, -2);
  for (unsigned n = 0; n <= N; ++n) CHECK(sq.egf(n) == Rational(factorial(n + 1)));
  CHECK(ser_exp(ser_log(inv)) == inv);
  const auto e = ser_exp(z);
  for (unsigned n = 0; n <= N; ++n) CHECK(e.egf(n) == 1);
  CHECK(ser_pow(ser_pow(one + z, Rational(1, 3)), 3) == one + z);
  CHECK(e.derivative()[N - 1] == e[N - 1]);
  CHECK_THROWS_AS(ser_exp(one), Error);
  CHECK_THROWS_AS(ser_log(z), Error);
  CHECK_THROWS_AS(ser_inv(z), Error);
}

TEST_CASE("verification suites report passes and name failures") {
  const auto r = verify_suite("all", 5);
  CHECK(r.ok());
  CHECK(r.render().find("FAIL") == std::string::npos);
  CHECK(verify_suite("counts", 7).render().find("A(7)=40320 PASS") != std::string::npos);
  CHECK(verify_suite("bijections", 0).ok());
  CHECK_THROWS_AS(verify_suite("nope", 3), Error);

  Report bad;
  bad.add("x", false, "coefficient 3");
  CHECK(!bad.ok());
  CHECK(bad.render() == "x FAIL: coefficient 3\n");
}
