#include <doctest.h>

#include <altab/decomposition.hpp>
#include <altab/enumeration.hpp>

#include "corpus.hpp"

#include <algorithm>
#include <random>

using namespace altab;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::SyntaxError;
}

AltTableau col(int label) { return AltTableau({label}, "E", {}); }
AltTableau row(int label) { return AltTableau({label}, "D", {}); }

}  // namespace

TEST_CASE("packed classes") {
  CHECK(packed_class(AltTableau::standard("DE", {{{1, 2}, Arrow::Left}})) == PackedClass::ColPacked);
  CHECK(packed_class(AltTableau::standard("D")) == PackedClass::RowPacked);
  CHECK(packed_class(AltTableau::standard("E")) == PackedClass::ColPacked);
  CHECK(packed_class(corpus::t0()) == PackedClass::NotPacked);
  CHECK(packed_class(AltTableau()) == PackedClass::NotPacked);
  CHECK(packed_class_name(PackedClass::RowPacked) == "RowPacked");
}

TEST_CASE("cut") {
  CHECK(cut(AltTableau::standard("DE", {{{1, 2}, Arrow::Up}}), Axis::Row) == col(2));
  CHECK(cut(AltTableau::standard("D"), Axis::Row).empty());
  CHECK(cut(AltTableau::standard("E"), Axis::Col).empty());
  CHECK(code_of([] { cut(AltTableau(), Axis::Row); }) == ErrorCode::NothingToCut);
  CHECK(code_of([] { cut(AltTableau::standard("E"), Axis::Row); }) == ErrorCode::NothingToCut);
  // Columns 1 and 2 of the corpus tableau have no cells, so the first row
  // cannot go without leaving them stranded.
  CHECK(code_of([] { cut(corpus::t0(), Axis::Row); }) == ErrorCode::EmptyLineObstruction);

  // Below the empty columns the first row can be cut.
  const auto sub = restrict_to(corpus::t0(), {3, 4, 5, 6, 7, 8, 9});
  const auto cut_sub = cut(sub, Axis::Row);
  CHECK(cut_sub.labels() == std::vector<int>{4, 5, 6, 7, 8, 9});
  CHECK(cut_sub.arrows().size() == 4);
}

TEST_CASE("block") {
  CHECK(block(col(2), Axis::Col, 1) == AltTableau::standard("DE", {{{1, 2}, Arrow::Up}}));
  CHECK(block(AltTableau(), Axis::Col, 1) == AltTableau::standard("D"));
  CHECK(block(row(1), Axis::Row, 2) == AltTableau::standard("DE", {{{1, 2}, Arrow::Left}}));
  CHECK(code_of([] { block(col(2), Axis::Col, 3); }) == ErrorCode::LabelNotExtremal);
  CHECK(code_of([] { block(col(2), Axis::Row, 1); }) == ErrorCode::LabelNotExtremal);
  CHECK(code_of([] { block(col(2), Axis::Col, -1); }) == ErrorCode::LabelNotExtremal);
  CHECK(block_standard(AltTableau::standard("E"), Axis::Col) ==
        AltTableau::standard("DE", {{{1, 2}, Arrow::Up}}));
}

TEST_CASE("cut undoes block for every tableau of size <= 5") {
  for (unsigned n = 0; n <= 5; ++n) {
    for (const auto& t : all_tableaux(n)) {
      const auto shifted = relabel(t, standard_labels(n, 2));
      const auto bc = block(shifted, Axis::Col, 1);
      // The new row is free and takes over every free column.
      REQUIRE(free_stats(bc).frow() == free_stats(t).frow() + 1);
      REQUIRE(free_stats(bc).fcol() == 0);
      REQUIRE(cut(bc, Axis::Row) == shifted);
      const auto br = block(t, Axis::Row, static_cast<int>(n) + 1);
      REQUIRE(free_stats(br).fcol() == free_stats(t).fcol() + 1);
      REQUIRE(free_stats(br).frow() == 0);
      REQUIRE(cut(br, Axis::Col) == t);
    }
  }
}

TEST_CASE("closures of the corpus tableau") {
  const auto t = corpus::t0();
  CHECK(closure(t, 4) == std::vector<int>{4, 6, 7, 8, 9});
  CHECK(closure(t, 13) == std::vector<int>{13});
  CHECK(closure(t, 5) == std::vector<int>{3, 5});
  CHECK(closure(t, 12) == std::vector<int>{10, 12});
  CHECK(code_of([&] { closure(t, 3); }) == ErrorCode::NotFree);

  std::vector<int> all;
  for (int k : free_labels(t)) {
    const auto c = closure(t, k);
    all.insert(all.end(), c.begin(), c.end());
  }
  std::sort(all.begin(), all.end());
  CHECK(all == t.labels());
}

TEST_CASE("restrict") {
  const auto t = corpus::t0();
  const auto packed = restrict_to(t, {4, 6, 7, 8, 9});
  CHECK(packed.word() == "DDDEE");
  CHECK(packed.arrows().size() == 4);
  CHECK(packed.at({4, 9}) == Arrow::Up);
  CHECK(packed.at({6, 9}) == Arrow::Left);
  CHECK(packed_class(packed) == PackedClass::RowPacked);
  CHECK(restrict_to(t, t.labels()) == t);
  CHECK(packed_class(restrict_to(t, {3, 5})) == PackedClass::ColPacked);
  CHECK(code_of([&] { restrict_to(t, {4, 99}); }) == ErrorCode::NotASubset);
}

TEST_CASE("split and merge") {
  const auto parts = split(corpus::t0());
  REQUIRE(parts.size() == 7);
  std::vector<std::vector<int>> sets;
  for (const auto& c : parts) sets.push_back(c.labels);
  CHECK(sets == std::vector<std::vector<int>>{{1}, {2}, {3, 5}, {4, 6, 7, 8, 9}, {10, 12}, {11}, {13}});
  CHECK(parts[3].root == 4);
  CHECK(merge_all(parts) == corpus::t0());
  CHECK(split(AltTableau()).empty());
  const auto one = AltTableau::standard("DE", {{{1, 2}, Arrow::Left}});
  CHECK(split(one).size() == 1);

  const auto m = merge(row(4), AltTableau({3, 5}, "DE", {{{3, 5}, Arrow::Left}}));
  CHECK(m.labels() == std::vector<int>{3, 4, 5});
  CHECK(m.word() == "DDE");
  CHECK(!m.at({4, 5}));
  CHECK(free_stats(m).free_cells.size() == 1);
  CHECK(merge(corpus::t0(), AltTableau()) == corpus::t0());
  CHECK(code_of([] { merge(row(1), col(1)); }) == ErrorCode::LabelCollision);

  CHECK(render_partition(split(AltTableau::standard("DE"))) == "{1} :: D|\n{2} :: labels=2|E|");
}

TEST_CASE("merge is associative and order-free") {
  auto parts = split(corpus::t0());
  std::vector<AltTableau> ts;
  for (const auto& c : parts) ts.push_back(c.tableau);
  std::mt19937 rng(7);
  for (int round = 0; round < 20; ++round) {
    std::shuffle(ts.begin(), ts.end(), rng);
    CHECK(merge_all(ts) == corpus::t0());
    AltTableau left = AltTableau();
    for (const auto& t : ts) left = merge(left, t);
    AltTableau right = AltTableau();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) right = merge(*it, right);
    CHECK(left == right);
  }
}

TEST_CASE("split components are packed, exhaustively for n <= 6") {
  for (unsigned n = 0; n <= 6; ++n) {
    for_each_tableau(n, [](const AltTableau& t) {
      const auto parts = split(t);
      REQUIRE(parts.size() == free_labels(t).size());
      for (const auto& c : parts) REQUIRE(packed_class(c.tableau) != PackedClass::NotPacked);
      REQUIRE(merge_all(parts) == t);
    });
  }
}

TEST_CASE("divide") {
  const auto [p, q] = divide(corpus::t0());
  CHECK(p.labels() == std::vector<int>{4, 6, 7, 8, 9, 11, 13});
  CHECK(q.labels() == std::vector<int>{1, 2, 3, 5, 10, 12});
  CHECK(free_stats(p).fcol() == 0);
  CHECK(free_stats(q).frow() == 0);
  CHECK(merge(p, q) == corpus::t0());

  const auto [r, c] = divide(AltTableau::standard("DE"));
  CHECK(r == row(1));
  CHECK(c == col(2));
  const auto [e1, e2] = divide(AltTableau());
  CHECK(e1.empty());
  CHECK(e2.empty());
}
