#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "fusionkit/coefficients.hpp"
#include "fusionkit/involutions.hpp"

using namespace fusionkit;

namespace {

// n = 4, k = 3: lambda = (3,3,2), one box in the first block, four in the
// second, nu = (4,4,4,1).
LatticePath example_four() {
  return LatticePath({3, 3, 2}, {{{3, 3}}, {{1, 4}, {2, 4}, {3, 4}, {4, 1}}});
}

// n = 3, k = 2: lambda = (2,1), empty first block, nu = (3,2,1).
LatticePath example_five() {
  return LatticePath({2, 1}, {{}, {{1, 3}, {2, 2}, {3, 1}}});
}

std::string word_text(const LatticePath& p, std::optional<Box> mark = {}) {
  const BracketWord w = BracketWord::from_blocks(p.block(0), p.block(1));
  return w.brackets(mark ? w.position_of(*mark) : std::nullopt);
}

}  // namespace

TEST(CanonicalViolation, FittingHasNone) {
  const LatticePath p({1}, {{{2, 1}}, {{1, 2}}});
  EXPECT_FALSE(canonical_violation(path_to_tableau(p)));
}

TEST(CanonicalViolation, TwoColumnWord) {
  // Labels of the running example word, which no path realises.
  const PathTableau t{{{3, 2, 0, -1, -2}, {4, 1, -1, -3}}};
  EXPECT_EQ(canonical_violation(t), 0U);
}

TEST(CanonicalViolation, ThreeColumns) {
  const LatticePath p({}, {{{1, 1}}, {{1, 2}}, {{2, 1}}});
  EXPECT_EQ(canonical_violation(path_to_tableau(p)), 1U);
}

TEST(Psi, FixedOnFittingTerms) {
  const SignedTerm t{Permutation::identity(2),
                     LatticePath({1}, {{{2, 1}}, {{1, 2}}})};
  EXPECT_EQ(psi(t), t);
}

TEST(Psi, MovesAndReturns) {
  const SignedTerm t{Permutation::identity(2),
                     LatticePath({1}, {{{1, 2}}, {{2, 1}}})};
  const SignedTerm u = psi(t);
  EXPECT_EQ(u.sign(), -1);
  EXPECT_EQ(u.path.ascents(), (Composition{0, 2}));
  EXPECT_EQ(psi(u), t);
}

TEST(PsiProperty, InvolutionOnSmallInstances) {
  for (int s = 0; s <= 10; ++s) {
    for (const Partition& nu : partitions_of(s)) {
      for (int ls = std::max(0, s - 4); ls <= std::min(s, 6); ++ls) {
        for (const Partition& lambda : partitions_of(ls)) {
          if (!nu.contains(lambda)) {
            continue;
          }
          for (const Partition& mu : partitions_of(s - ls)) {
            Count sum = 0;
            for (const SignedTerm& t : classical_terms(lambda, mu, nu)) {
              sum += t.sign();
              const SignedTerm u = psi(t);
              if (u == t) {
                ASSERT_TRUE(t.sigma.is_identity() && fits(t.path, mu));
              } else {
                ASSERT_EQ(u.sign(), -t.sign());
                ASSERT_EQ(psi(u), t);
              }
            }
            ASSERT_EQ(sum, lr_paths(lambda, mu, nu));
          }
        }
      }
    }
  }
}

TEST(D1, ExampleFour) {
  const FusionContext ctx(4, 3);
  const LatticePath p = example_four();
  EXPECT_TRUE(in_d1(p, ctx));
  EXPECT_EQ(word_text(p, Box{2, 4}), ")()[)])");
  const LatticePath q = phi1(p, ctx);
  EXPECT_EQ(word_text(q, Box{2, 4}), "(()[)](");
  EXPECT_EQ(q.block_copy(0), (Block{{1, 4}, {3, 3}, {4, 1}}));
  EXPECT_EQ(q.block_copy(1), (Block{{2, 4}, {3, 4}}));
  EXPECT_EQ(q.base(), p.base());
  EXPECT_EQ(q.target(), p.target());
  EXPECT_TRUE(in_d2(q, ctx));
  EXPECT_EQ(phi2(q, ctx), p);
}

TEST(D1, ExampleFive) {
  const FusionContext ctx(3, 2);
  const LatticePath p = example_five();
  EXPECT_TRUE(in_d1(p, ctx));
  EXPECT_EQ(word_text(p, Box{1, 3}), "))[)]");
  const LatticePath q = phi1(p, ctx);
  EXPECT_EQ(word_text(q, Box{1, 3}), "(([)]");
  EXPECT_EQ(q.block_copy(0), (Block{{2, 2}, {3, 1}}));
  EXPECT_EQ(q.block_copy(1), (Block{{1, 3}}));
  const D2Certificate cert = d2_certificate(q, ctx);
  EXPECT_TRUE(cert.member());
  EXPECT_EQ(cert.a_i0, (Box{1, 3}));
  EXPECT_EQ(word_text(phi2(q, ctx), Box{1, 3}), "))[)]");
}

TEST(D1, NonEdgeTargetIsOutside) {
  const FusionContext ctx(3, 3);
  EXPECT_FALSE(in_d1(example_five(), ctx));
  EXPECT_THROW(phi1(example_five(), ctx), DomainError);
}

TEST(PhiWords, PropositionIllustration) {
  const std::string w = std::string(")))()(())))(()())") + ")" + "))";
  const std::size_t special = 17;
  const BracketWord word = BracketWord::from_brackets(w);
  const BracketWord image = phi1_word(word, special);
  EXPECT_EQ(image.brackets(special), "(((()(())(((()())[)]((");
  EXPECT_EQ(phi2_word(image, special), word);
}

TEST(PhiWords, ExampleWords) {
  const BracketWord four = BracketWord::from_brackets(")()))");
  EXPECT_EQ(phi1_word(four, 3).brackets(3), "(()[)](");
  const BracketWord five = BracketWord::from_brackets(")))");
  const BracketWord image = phi1_word(five, 2);
  EXPECT_EQ(image.brackets(2), "(([)]");
  EXPECT_EQ(phi2_word(image, 2).brackets(2), "))[)]");
}

TEST(D2, Negatives) {
  const FusionContext ctx(3, 2);
  const LatticePath not_edge({1}, {{{2, 1}}, {{1, 2}}});
  EXPECT_FALSE(d2_certificate(not_edge, FusionContext(3, 3)).structure);
  EXPECT_FALSE(in_d2(not_edge, FusionContext(3, 3)));
  // The last column of nu/lambda holds only a first-block box.
  const LatticePath first_only({2, 1}, {{{1, 3}, {3, 1}}, {{2, 2}}});
  const D2Certificate c = d2_certificate(first_only, ctx);
  EXPECT_TRUE(c.fits);
  EXPECT_FALSE(c.a_i0);
  EXPECT_FALSE(c.last_column);
  EXPECT_FALSE(c.member());
  EXPECT_THROW(phi2(first_only, ctx), DomainError);
}

TEST(Phi, DispatchCases) {
  const FusionContext ctx(3, 2);
  const Permutation id = Permutation::identity(2);
  const Permutation swap({1, 0});
  const SignedTerm d1{swap, example_five()};
  EXPECT_EQ(classify(d1, ctx), PhiCase::Phi1);
  const SignedTerm image = phi(d1, ctx);
  EXPECT_EQ(classify(image, ctx), PhiCase::Phi2);
  EXPECT_EQ(image.sigma, id);
  EXPECT_EQ(phi(image, ctx), d1);

  const SignedTerm fixed{id, LatticePath({1}, {{{2, 1}}, {{1, 2}}})};
  EXPECT_EQ(classify(fixed, ctx), PhiCase::Fixed);
  EXPECT_EQ(phi(fixed, ctx), fixed);

  // Not fitting: plain psi.
  const SignedTerm crossing{id, LatticePath({1}, {{{1, 2}}, {{2, 1}}})};
  EXPECT_EQ(classify(crossing, ctx), PhiCase::Psi);
  EXPECT_EQ(phi(crossing, ctx), psi(crossing));
}

TEST(Phi, TraceWritesBrackets) {
  std::ostringstream os;
  phi(SignedTerm{Permutation({1, 0}), example_five()}, FusionContext(3, 2),
      &os);
  EXPECT_EQ(os.str(), "phi1: ))[)] -> (([)]\n");
}

TEST(KFusion, Basics) {
  const FusionContext ctx(3, 2);
  const LatticePath fitting({1}, {{{2, 1}}, {{1, 2}}});
  EXPECT_TRUE(is_k_fusion(fitting, ctx, {2}));
  const LatticePath d2 = phi1(example_five(), ctx);
  EXPECT_FALSE(is_k_fusion(d2, ctx, {2, 1}));
  EXPECT_THROW(is_k_fusion(fitting, ctx, {3}), UnsupportedShape);
}

TEST(KFusion, ExcludedTableau) {
  // One excluded tableau: n = 5, k = 3, lambda = (3,1,1), mu = (2,1),
  // nu = (4,1,1,1,1). The classical coefficient is 1, the fusion one 0.
  const FusionContext ctx(5, 3);
  const LatticePath p({3, 1, 1}, {{{4, 1}, {5, 1}}, {{1, 4}}});
  EXPECT_TRUE(fits(p, {2, 1}));
  EXPECT_TRUE(in_d2(p, ctx));
  EXPECT_FALSE(is_k_fusion(p, ctx, {2, 1}));
}

TEST(InvolutionProperty, BothBotLettersPair) {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= 3; ++k) {
      const FusionContext ctx(n, k);
      for (int s = 0; s <= 8; ++s) {
        for (const Partition& nu : restricted_partitions(s, ctx)) {
          for (int ls = 0; ls < s; ++ls) {
            for (const Partition& lambda : restricted_partitions(ls, ctx)) {
              for (const Partition& mu : restricted_partitions(s - ls, ctx)) {
                if (mu.row(1) != 2 || !nu.contains(lambda)) {
                  continue;
                }
                for (const SignedTerm& t : fusion_terms(lambda, mu, nu, ctx)) {
                  if (!block_has_bot(t.path, 0) || !block_has_bot(t.path, 1)) {
                    continue;
                  }
                  const BracketWord w =
                      BracketWord::from_blocks(t.path.block(0), t.path.block(1));
                  for (std::size_t i = 0; i < w.size(); ++i) {
                    if (w[i].box->row == 1) {
                      ASSERT_TRUE(w.paired(i));
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
  }
}
