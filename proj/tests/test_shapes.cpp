#include <doctest.h>

#include <algorithm>
#include <set>

#include "deg/shapes.hpp"

using namespace deg;

TEST_CASE("content of cells in (5,4,4,1)") {
  SkewShape s(Partition({5, 4, 4, 1}), Partition());
  CHECK(s.content({1, 1}) == 0);
  CHECK(s.content({5, 1}) == 4);
  CHECK(s.content({1, 4}) == -3);
}

TEST_CASE("shifted content") {
  TupleShape t({SkewShape(Partition({1}), Partition()),
                SkewShape(Partition({2}), Partition()),
                SkewShape(), SkewShape(Partition({1}), Partition())});
  CHECK(t.shifted_content(0, {1, 1}) == 0);      // k=4, comp 0, content 0
  CHECK(t.shifted_content(3, {1, 1}) == 3);
  CHECK(t.shifted_content(1, {2, 1}) == 4 * 1 + 1);
}

TEST_CASE("content reading word of the 4-tuple figure") {
  // shapes ((3,2),(2,1),empty,(2,2,1)/(1)), entries as displayed
  TupleShape shape({SkewShape(Partition({3, 2}), Partition()),
                    SkewShape(Partition({2, 1}), Partition()), SkewShape(),
                    SkewShape(Partition({2, 2, 1}), Partition({1}))});
  // entry per (comp, col, row)
  auto entry = [](int comp, int col, int row) -> int {
    if (comp == 0) {
      if (row == 1) return col == 1 ? 2 : col == 2 ? 6 : 10;
      return col == 1 ? 7 : 11;
    }
    if (comp == 1) {
      if (row == 1) return col == 1 ? 1 : 12;
      return 8;
    }
    // comp 3
    if (row == 1) return 4;
    if (row == 2) return col == 1 ? 3 : 5;
    return 9;
  };
  std::vector<int> entries;
  for (const TupleCell& tc : content_reading_order(shape))
    entries.push_back(entry(tc.comp, tc.cell.col, tc.cell.row));
  StandardTupleTableau t(shape, entries);
  CHECK(t.content_reading_word() ==
        Word{9, 7, 8, 3, 2, 11, 1, 5, 6, 12, 4, 10});
}

TEST_CASE("single row and SYT32 words") {
  auto row = enumerate_syt(Partition({4}));
  REQUIRE(row.size() == 1);
  CHECK(row[0].content_reading_word() == Word{1, 2, 3, 4});

  auto syt = enumerate_syt(Partition({3, 2}));
  REQUIRE(syt.size() == 5);  // K_{(3,2),(1^5)} = 5
  std::set<Word> words;
  for (const auto& t : syt) words.insert(t.content_reading_word());
  CHECK(words.count(Word{3, 1, 4, 2, 5}) == 1);
  // enumeration is sorted lexicographically by word
  for (size_t j = 1; j < syt.size(); ++j)
    CHECK(syt[j - 1].entries() < syt[j].entries());
}

TEST_CASE("enumeration counts match the hook length formula") {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      auto syt = enumerate_syt(lambda);
      CHECK(static_cast<long long>(syt.size()) == hook_length_count(lambda));
    }
}

TEST_CASE("standard (3,2,1) has 16 tableaux") {
  CHECK(enumerate_syt(Partition({3, 2, 1})).size() == 16);
}

TEST_CASE("reading words are distinct across tableaux") {
  TupleShape shape({SkewShape(Partition({2}), Partition()),
                    SkewShape(Partition({1, 1}), Partition())});
  auto tuples = enumerate_standard(shape);
  std::set<Word> words;
  for (const auto& t : tuples) words.insert(t.content_reading_word());
  CHECK(words.size() == tuples.size());
}

TEST_CASE("row and column reading words give the same signature") {
  for (int n = 2; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (const auto& t : enumerate_syt(lambda)) {
        SignVec s = t.signature();
        CHECK(descent_signature(row_reading_word(t)) == s);
        CHECK(descent_signature(column_reading_word(t)) == s);
      }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Partition({2, 2, 1}), Partition({3, 2})));
  for (int n = 2; n <= 8; ++n) {
    auto ps = partitions_of(n);
    Partition top({n});
    for (const auto& p : ps) CHECK(dominance_leq(p, top));
    // reflexive, antisymmetric, transitive
    for (const auto& a : ps) CHECK(dominance_leq(a, a));
    for (const auto& a : ps)
      for (const auto& b : ps)
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
    for (const auto& a : ps)
      for (const auto& b : ps)
        for (const auto& c : ps)
          if (dominance_leq(a, b) && dominance_leq(b, c))
            CHECK(dominance_leq(a, c));
  }
  // (3,3) vs (4,1,1): incomparable
  CHECK(!dominance_leq(Partition({3, 3}), Partition({4, 1, 1})));
  CHECK(!dominance_leq(Partition({4, 1, 1}), Partition({3, 3})));
}

TEST_CASE("descent signatures") {
  CHECK(descent_signature({3, 1, 4, 2, 5}).to_string() == "+-++");
  CHECK(descent_signature({1, 2, 3, 4}).to_string() == "+++");
  CHECK(descent_signature({4, 3, 2, 1}).to_string() == "---");
}

TEST_CASE("runs composition") {
  CHECK(runs_composition(SignVec::from_string("++++")) == Composition{5});
  CHECK(runs_composition(SignVec::from_string("+-+-")) == Composition{2, 2, 1});
  // sigma(T_lambda) recovers lambda
  Partition lam({3, 2, 2});
  std::string s;
  for (int r = 1; r <= lam.length(); ++r) {
    s += std::string(lam.part(r) - 1, '+');
    if (r < lam.length()) s += "-";
  }
  CHECK(to_partition(runs_composition(SignVec::from_string(s))) == lam);
}

TEST_CASE("skew shapes distinguish content-changing translates") {
  SkewShape a(Partition({3, 2}), Partition({1}));
  SkewShape b(Partition({3, 3, 3, 2}), Partition({3, 3, 1}));
  CHECK(a != b);  // same cells up to translation, different contents
  SkewShape c(Partition({3, 2}), Partition({1}), {1, 1});  // diagonal slide
  CHECK(a == c);                                           // same contents
  SkewShape d(Partition({3, 2}), Partition({1}), {1, 0});
  CHECK(a != d);
}

TEST_CASE("shape literal grammar round trip") {
  TupleShape t = parse_tuple_shape("3,2/1;0;2,1");
  CHECK(t.k() == 3);
  CHECK(t.components()[0].size() == 4);
  CHECK(t.components()[1].empty());
  CHECK(t.components()[2].size() == 3);
  CHECK(parse_tuple_shape("3,2/0@0,0;2,1/1@0,0").k() == 2);
}
