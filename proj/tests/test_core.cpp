#include <doctest.h>

#include <altab/enumeration.hpp>
#include <altab/perm_tableau.hpp>
#include <altab/text.hpp>

#include "corpus.hpp"
#include "oracles.hpp"

#include <algorithm>

using namespace altab;

namespace {

bool has_code(const std::vector<Violation>& vs, ErrorCode code) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.code == code; });
}

std::vector<std::pair<int, int>> pairs(const std::vector<Cell>& cells) {
  std::vector<std::pair<int, int>> out;
  for (const auto& c : cells) out.push_back({c.row, c.col});
  return out;
}

}  // namespace

TEST_CASE("validation accepts and rejects by the arrow rule") {
  CHECK_NOTHROW(AltTableau::standard("DE", {{{1, 2}, Arrow::Left}}));
  CHECK(AltTableau().empty());
  CHECK(check_alt({{}, "", {}}).empty());

  const RawTableau bad{{1, 2, 3}, "DEE", {{{1, 2}, Arrow::Left}, {{1, 3}, Arrow::Up}}};
  CHECK(has_code(check_alt(bad), ErrorCode::PointedCellOccupied));
  CHECK_THROWS_AS(AltTableau{bad}, ValidationError);

  SUBCASE("every violation is reported") {
    const RawTableau messy{{3, 1}, "DX", {{{1, 9}, Arrow::Up}}};
    const auto vs = check_alt(messy);
    CHECK(vs.size() >= 2);
    CHECK(has_code(vs, ErrorCode::LabelOrder));
  }
  SUBCASE("size mismatch") {
    CHECK(has_code(check_alt({{1, 2}, "D", {}}), ErrorCode::SizeMismatch));
  }
  SUBCASE("arrow off the shape") {
    CHECK(has_code(check_alt({{1, 2}, "ED", {{{1, 2}, Arrow::Up}}}), ErrorCode::ArrowOffShape));
  }
  SUBCASE("duplicate arrow") {
    CHECK(has_code(check_alt({{1, 2}, "DE", {{{1, 2}, Arrow::Up}, {{1, 2}, Arrow::Left}}}),
                   ErrorCode::DuplicateArrow));
  }
}

TEST_CASE("free statistics of the corpus tableau") {
  const auto s = free_stats(corpus::t0());
  CHECK(s.free_rows == std::vector<int>{4, 11, 13});
  CHECK(s.free_cols == std::vector<int>{1, 2, 5, 12});
  CHECK(pairs(s.free_cells) == std::vector<std::pair<int, int>>{{4, 5}, {4, 12}, {7, 8}, {11, 12}});
  CHECK(free_labels(corpus::t0()) == std::vector<int>{1, 2, 4, 5, 11, 12, 13});
}

TEST_CASE("free statistics on small shapes") {
  const auto d = free_stats(AltTableau::standard("D"));
  CHECK(d.free_rows == std::vector<int>{1});
  CHECK(d.free_cols.empty());
  const auto de = free_stats(AltTableau::standard("DE"));
  CHECK(de.free_rows == std::vector<int>{1});
  CHECK(de.free_cols == std::vector<int>{2});
  CHECK(pairs(de.free_cells) == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("free statistics agree with the definition for n <= 5") {
  for (unsigned n = 0; n <= 5; ++n) {
    for (const auto& w : oracle::words(n)) {
      const auto shape = oracle::shape_of(w);
      for (const auto& f : oracle::alternative_fillings(shape)) {
        const auto t = parse_tableau(oracle::compact(w, f));
        const auto want = oracle::free_of(shape, f);
        const auto got = free_stats(t);
        REQUIRE(got.free_rows == want.rows);
        REQUIRE(got.free_cols == want.cols);
        REQUIRE(pairs(got.free_cells) == want.cells);
      }
    }
  }
}

TEST_CASE("transpose") {
  const auto t = AltTableau::standard("DE", {{{1, 2}, Arrow::Left}});
  CHECK(transpose(t) == AltTableau::standard("DE", {{{1, 2}, Arrow::Up}}));
  CHECK(transpose(AltTableau::standard("EE")) == AltTableau::standard("DD"));
  CHECK(transpose(transpose(corpus::t0())) == corpus::t0());
  const auto s = free_stats(corpus::t0()), ts = free_stats(transpose(corpus::t0()));
  CHECK(s.frow() == ts.fcol());
  CHECK(s.fcol() == ts.frow());
  CHECK(s.fcell() == ts.fcell());
}

TEST_CASE("relabel and standardize") {
  CHECK(relabel(AltTableau::standard("D"), {7}).labels() == std::vector<int>{7});
  const AltTableau sub({3, 5}, "DE", {{{3, 5}, Arrow::Left}});
  CHECK(standardize(sub) == AltTableau::standard("DE", {{{1, 2}, Arrow::Left}}));
  CHECK(standardize(relabel(corpus::t0(), {2, 3, 5, 8, 13, 21, 34, 55, 89, 90, 91, 92, 93})) ==
        corpus::t0());
  CHECK_THROWS_AS(relabel(corpus::t0(), {1, 2}), Error);
}

TEST_CASE("compact text") {
  const auto t = corpus::t0();
  CHECK(t.size() == 13);
  CHECK(t.arrows().size() == 6);
  CHECK(render_tableau(t) == corpus::kT0);
  // Arrows are canonicalized by cell.
  CHECK(render_tableau(parse_tableau("DE|L1,2")) == "DE|L1,2");
  CHECK(render_tableau(parse_tableau(" EEDDEDDEEDDED|L10,12;L3,5;U4,9;U6,8;L6,9;L7,9 ")) ==
        corpus::kT0);
  CHECK(render_tableau(parse_tableau("labels=3,5|DE|L3,5")) == "labels=3,5|DE|L3,5");
  CHECK(parse_tableau("|").empty());

  for (const char* bad : {"", "DE", "DE|X1,2", "DE|L1", "labels=1|DE|", "DQ|", "DE|L1,2;"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_tableau(bad), Error);
  }
  try {
    parse_tableau("");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
  }
  try {
    parse_tableau("DEE|L1,2;U1,3");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PointedCellOccupied);
  }
}

TEST_CASE("record text round trip and statistics") {
  const auto t = corpus::t0();
  const auto rec = render_tableau(t, TableauFormat::Record);
  CHECK(rec.find('\n') == std::string::npos);
  CHECK(rec.find("\"frow\":3") != std::string::npos);
  CHECK(parse_tableau(rec) == t);
  CHECK_THROWS_AS(parse_tableau("{\"labels\":[1],"), Error);
}

TEST_CASE("grid drawing") {
  CHECK(render_tableau(parse_tableau("DE|L1,2"), TableauFormat::Grid) == "   2\n 1 <");
  const std::string grid = render_tableau(corpus::t0(), TableauFormat::Grid);
  const std::string want =
      "    12  9  8  5  2  1\n"
      "  3  .  .  .  <\n"
      "  4  .  ^  .  .\n"
      "  6  .  <  ^\n"
      "  7  .  <  .\n"
      " 10  <\n"
      " 11  .\n"
      " 13";
  CHECK(grid == want);
}

TEST_CASE("permutation tableaux of the corpus") {
  const PermTableau p0 = alpha_inv(corpus::t0());
  CHECK(p0.size() == 14);
  CHECK(p0.labels().front() == 0);
  CHECK(alpha(p0) == corpus::t0());
  const auto s = perm_tableau_stats(p0);
  CHECK(s.unrestricted_rows == std::vector<int>{4, 11, 13});
  CHECK(s.top_one_cols == std::vector<int>{1, 2, 5, 12});
  CHECK(pairs(s.superfluous_ones) ==
        std::vector<std::pair<int, int>>{{4, 5}, {4, 12}, {7, 8}, {11, 12}});
  CHECK(parse_perm_tableau(render_perm_tableau(p0)) == p0);
}

TEST_CASE("small permutation tableaux") {
  const PermTableau one({0, 1}, "DE", {{0, 1}});
  CHECK(perm_tableau_stats(one).superfluous_ones.empty());
  CHECK(alpha(one) == relabel(AltTableau::standard("E"), {1}));

  SUBCASE("empty column") {
    CHECK_THROWS_AS(PermTableau({0, 1}, "DE", {}), ValidationError);
  }
  SUBCASE("forbidden zero") {
    // (1,2) is 0 with a 1 above at (0,2) and a 1 to its left at (1,3).
    const RawPermTableau raw{
        {0, 1, 2, 3}, "DDEE", {{{0, 2}, 1}, {{0, 3}, 0}, {{1, 2}, 0}, {{1, 3}, 1}}};
    CHECK(has_code(check_perm_tableau(raw), ErrorCode::ZeroWithOneAboveAndLeft));
  }
  SUBCASE("partial filling") {
    const RawPermTableau raw{{0, 1}, "DE", {}};
    CHECK(has_code(check_perm_tableau(raw), ErrorCode::NonTotalFilling));
  }
}

TEST_CASE("alpha is a bijection onto permutation tableaux") {
  for (unsigned n = 0; n <= 5; ++n) {
    CAPTURE(n);
    std::set<PermTableau> image;
    for (const auto& t : all_tableaux(n)) {
      const auto p = alpha_inv(t);
      REQUIRE(check_perm_tableau({p.labels(), p.word(), [&] {
                                    std::map<Cell, int> f;
                                    for (const auto& c : p.shape().cells()) f[c] = p.at(c);
                                    return f;
                                  }()})
                  .empty());
      REQUIRE(alpha(p) == t);
      image.insert(p);
    }
    CHECK(image.size() == oracle::count_perm_tableaux(n + 1));
  }
}

TEST_CASE("label helpers") {
  CHECK(format_label_set({1, 2, 5}) == "{1,2,5}");
  CHECK(format_label_set({}) == "{}");
  CHECK(format_cell({4, 5}) == "(4,5)");
  CHECK(standard_labels(3) == std::vector<int>{1, 2, 3});
}
