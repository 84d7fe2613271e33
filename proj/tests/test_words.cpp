#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "fusionkit/paths.hpp"
#include "fusionkit/words.hpp"

using namespace fusionkit;

namespace {

// The two label sets of the running example word.
const std::vector<int> kFirst{3, 2, 0, -1, -2};
const std::vector<int> kSecond{4, 1, -1, -3};

std::string all_brackets(unsigned bits, int len) {
  std::string s;
  for (int i = 0; i < len; ++i) {
    s += ((bits >> i) & 1U) ? ')' : '(';
  }
  return s;
}

}  // namespace

TEST(Words, WordOf) {
  const BracketWord w = word_of(kFirst, kSecond);
  EXPECT_EQ(w.brackets(), ")(()()(()");
  std::vector<int> labels;
  for (const Letter& l : w.letters()) {
    labels.push_back(l.label);
  }
  EXPECT_EQ(labels, (std::vector<int>{-3, -2, -1, -1, 0, 1, 2, 3, 4}));
  const std::vector<int> zero{0};
  const std::vector<int> none;
  const std::vector<int> three{2, 0, -2};
  EXPECT_EQ(word_of(zero, none).brackets(), "(");
  EXPECT_EQ(word_of(none, three).brackets(), ")))");
}

TEST(Words, DuplicateInOneBlockIsRejected) {
  const std::vector<int> dup{1, 1};
  const std::vector<int> none;
  EXPECT_THROW(word_of(dup, none), InvalidInput);
}

TEST(Words, SharedLabelsPairWithEachOther) {
  const std::vector<int> a{0};
  const std::vector<int> b{0};
  const BracketWord w = word_of(a, b);
  EXPECT_EQ(w.brackets(), "()");
  EXPECT_EQ(w.partner(0), 1U);
}

TEST(Words, Type) {
  EXPECT_EQ(word_type(word_of(kFirst, kSecond)), (WordType{2, 1}));
  EXPECT_EQ(word_type(BracketWord::from_brackets("()")), (WordType{0, 0}));
  EXPECT_EQ(word_type(BracketWord::from_brackets(")))")), (WordType{0, 3}));
}

TEST(Words, RaiseAndLower) {
  const BracketWord w = word_of(kFirst, kSecond);
  EXPECT_EQ(raise_e(w).brackets(), "((()()(()");
  EXPECT_EQ(lower_f(w).brackets(), "))()()(()");
  EXPECT_THROW(raise_e(BracketWord::from_brackets("(()")), UndefinedOperator);
  EXPECT_THROW(lower_f(BracketWord::from_brackets("())")), UndefinedOperator);
  EXPECT_EQ(raise_e(BracketWord::from_brackets(")))"), 2).brackets(), ")((");
  EXPECT_EQ(lower_f(BracketWord::from_brackets("((("), 2).brackets(), "))(");
  EXPECT_THROW(raise_e(BracketWord::from_brackets(")"), 2), UndefinedOperator);
}

TEST(Words, HighlightMarker) {
  EXPECT_EQ(BracketWord::from_brackets(")()))").brackets(3), ")()[)])");
}

TEST(WordsProperty, RaiseAndLowerAreInverse) {
  for (int len = 0; len <= 10; ++len) {
    for (unsigned bits = 0; bits < (1U << len); ++bits) {
      const BracketWord w = BracketWord::from_brackets(all_brackets(bits, len));
      const WordType t = w.type();
      if (t.right > 0) {
        const BracketWord e = raise_e(w);
        ASSERT_EQ(lower_f(e), w);
        ASSERT_EQ(e.type(), (WordType{t.left + 1, t.right - 1}));
        // Unpaired letters stay in place.
        std::vector<std::size_t> before = w.unpaired(Paren::Left);
        const auto r = w.unpaired(Paren::Right);
        before.insert(before.end(), r.begin(), r.end());
        std::vector<std::size_t> after = e.unpaired(Paren::Left);
        const auto r2 = e.unpaired(Paren::Right);
        after.insert(after.end(), r2.begin(), r2.end());
        std::sort(before.begin(), before.end());
        std::sort(after.begin(), after.end());
        ASSERT_EQ(before, after);
      }
      if (t.left > 0) {
        const BracketWord f = lower_f(w);
        ASSERT_EQ(raise_e(f), w);
        ASSERT_EQ(f.type(), (WordType{t.left - 1, t.right + 1}));
      }
    }
  }
}

TEST(Words, Fits) {
  const LatticePath single({}, {{{1, 1}, {2, 1}}});
  EXPECT_TRUE(fits(single, {1, 1}));
  const LatticePath p({1}, {{{2, 1}}, {{1, 2}}});
  EXPECT_EQ(BracketWord::from_blocks(p.block(0), p.block(1)).brackets(), "()");
  EXPECT_TRUE(fits(p, {2}));
  const LatticePath q({1}, {{{1, 2}}, {{2, 1}}});
  EXPECT_FALSE(fits(q, {2}));
  EXPECT_THROW(fits(q, {1, 1}), InvalidInput);
}

TEST(WordsProperty, BracketCriterionMatchesColumnStrictness) {
  for (int s = 0; s <= 8; ++s) {
    for (const Partition& nu : partitions_of(s)) {
      for (int ls = 0; ls <= s; ++ls) {
        for (const Partition& lambda : partitions_of(ls)) {
          if (!nu.contains(lambda)) {
            continue;
          }
          for (const Partition& mu : partitions_of(s - ls)) {
            const Partition c = conjugate(mu);
            for (const LatticePath& p :
                 enumerate_paths(lambda, nu, c.parts())) {
              ASSERT_EQ(fits(p, mu), is_column_strict(path_to_tableau(p)));
            }
          }
        }
      }
    }
  }
}

TEST(Words, BlocksRoundTrip) {
  const LatticePath p({1}, {{{2, 1}}, {{1, 2}}});
  const BracketWord w = BracketWord::from_blocks(p.block(0), p.block(1));
  const auto [a, b] = w.blocks();
  EXPECT_EQ(a, p.block_copy(0));
  EXPECT_EQ(b, p.block_copy(1));
  EXPECT_THROW(BracketWord::from_brackets("()").blocks(), InvalidInput);
}
