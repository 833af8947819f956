#include <gtest/gtest.h>

#include <set>

#include "freeprod/classify.hpp"
#include "freeprod/oracle.hpp"
#include "support.hpp"

using namespace freeprod;
using namespace freeprod::testing;

namespace {

// a_1(f) = k_f, a_L(f) = k_f * sum_{g != f} a_{L-1}(g), where k_f is the
// number of letters of factor f.
std::uint64_t recurrence_count(const std::vector<std::uint64_t>& k, std::size_t max_len) {
  std::uint64_t total = 1;
  std::vector<std::uint64_t> a = k;
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (len > 1) {
      std::vector<std::uint64_t> next(k.size());
      for (std::size_t f = 0; f < k.size(); ++f) {
        std::uint64_t s = 0;
        for (std::size_t h = 0; h < k.size(); ++h) {
          if (h != f) s += a[h];
        }
        next[f] = k[f] * s;
      }
      a = next;
    }
    for (auto v : a) total += v;
  }
  return total;
}

std::vector<std::string> formatted(const GroupSpec& g, const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(format_word(g, w));
  return out;
}

}  // namespace

TEST(Enumerate, DihedralLengthTwo) {
  const auto g = z2z2();
  EXPECT_EQ(formatted(g, enumerate_words(g, EnumBounds{2, 3, 0})),
            (std::vector<std::string>{"", "x", "y", "x y", "y x"}));
}

TEST(Enumerate, Z3Z2LengthOne) {
  const auto g = z3z2();
  EXPECT_EQ(formatted(g, enumerate_words(g, EnumBounds{1, 3, 0})), (std::vector<std::string>{"", "x", "x^2", "y"}));
}

TEST(Enumerate, CountsMatchRecurrence) {
  EXPECT_EQ(enumerate_words(z3z2(), EnumBounds{4, 3, 0}).size(), recurrence_count({2, 1}, 4));
  EXPECT_EQ(enumerate_words(z3z2(), EnumBounds{8, 3, 0}).size(), recurrence_count({2, 1}, 8));
  EXPECT_EQ(enumerate_words(z2z2z2(), EnumBounds{6, 3, 0}).size(), recurrence_count({1, 1, 1}, 6));
  EXPECT_EQ(enumerate_words(z7z2(), EnumBounds{6, 3, 0}).size(), recurrence_count({6, 1}, 6));
  EXPECT_EQ(enumerate_words(zz3(), EnumBounds{5, 2, 0}).size(), recurrence_count({4, 2}, 5));
}

TEST(Enumerate, LengthLexOrderWithoutDuplicates) {
  const auto words = enumerate_words(z7z2(), EnumBounds{5, 3, 0});
  for (std::size_t i = 1; i < words.size(); ++i) EXPECT_LT(words[i - 1], words[i]);
  const std::set<Word> unique(words.begin(), words.end());
  EXPECT_EQ(unique.size(), words.size());
}

TEST(ScBall, DihedralLengthThree) {
  const auto g = z2z2();
  auto ball = sc_ball(g, 3);
  std::sort(ball.begin(), ball.end());
  EXPECT_EQ(formatted(g, ball), (std::vector<std::string>{"", "x", "y", "x y x", "y x y"}));
}

TEST(ScBall, IsClosedUnderInversesAndHasOnlyLetterConjugates) {
  for (const auto& g : {z3z2(), z7z2(), zz3()}) {
    const auto ball = sc_ball(g, 7, 2);
    const std::set<Word> set(ball.begin(), ball.end());
    EXPECT_EQ(set.size(), ball.size());
    for (const auto& s : ball) {
      EXPECT_TRUE(classify(g, s).in_s_complement);
      EXPECT_TRUE(set.count(inverse(g, s)));
    }
    // Every S^c word of length <= 7 appears.
    std::size_t sc = 0;
    for_each_word(g, 7, 2, [&](const Word& u) { sc += classify(g, u).in_s_complement; });
    EXPECT_EQ(sc, ball.size());
  }
}

TEST(Oracle, ConstructedNonMembers) {
  const auto g = z3z2();
  EXPECT_FALSE(oracle_sc_squared(g, W(g, "(x y)^3"), EnumBounds{6, 3, 0}));
  const auto k = z7z2();
  EXPECT_FALSE(oracle_sc_squared(k, W(k, "x y x^2 y x^3 y"), EnumBounds{6, 3, 0}));
  const auto h = z2z2z2();
  EXPECT_FALSE(oracle_sc_squared(h, W(h, "x y z"), EnumBounds{3, 3, 0}));
}

TEST(Oracle, EveryDihedralWordOfLengthFiveIsMember) {
  const auto g = z2z2();
  const ScSquaredOracle oracle(g, EnumBounds{5, 3, 0});
  for_each_word(g, 5, 3, [&](const Word& u) {
    if (u.size() == 5) EXPECT_TRUE(oracle.contains(u)) << format_word(g, u);
  });
}

TEST(Oracle, RejectsWordsLongerThanBound) {
  const auto g = z3z2();
  const ScSquaredOracle oracle(g, EnumBounds{2, 3, 0});
  EXPECT_THROW(oracle.contains(W(g, "x y x")), std::invalid_argument);
}

TEST(Oracle, SlackDoesNotChangeAnswers) {
  const auto g = z3z2();
  const ScSquaredOracle tight(g, EnumBounds{6, 3, 0});
  const ScSquaredOracle loose(g, EnumBounds{6, 3, 4});
  EXPECT_GT(loose.ball_size(), tight.ball_size());
  for_each_word(g, 6, 3, [&](const Word& u) { EXPECT_EQ(tight.contains(u), loose.contains(u)); });
}

TEST(ProductsEqual, AgreesWithMaterializedProducts) {
  const auto g = z3z2();
  const auto words = enumerate_words(g, EnumBounds{4, 3, 0});
  for (const auto& a : words) {
    for (const auto& b : words) {
      const Word ab = concat(g, a, b);
      EXPECT_TRUE(products_equal(g, a, b, ab, Word()));
      EXPECT_TRUE(products_equal(g, Word(), ab, a, b));
      const Word c = W(g, "y");
      EXPECT_EQ(products_equal(g, a, b, c, Word()), ab == c);
    }
  }
}

TEST(VerifyLemma, EverySuitePassesOnZ3Z2) {
  const auto g = z3z2();
  for (const auto& info : known_lemmas()) {
    if (info.id == "dihedral") continue;
    const auto r = verify_lemma(g, info.id, EnumBounds{6, 3, 0}, VerifyOptions{1, 1});
    EXPECT_TRUE(r.passed()) << info.id << ": " << (r.counterexamples.empty() ? "" : r.counterexamples[0].detail);
    // Z3 has no three pairwise non-inverse letters, so the unbalanced suites are vacuous.
    if (info.id.starts_with("unbalanced")) {
      EXPECT_EQ(r.instances, 0u) << info.id;
    } else {
      EXPECT_GT(r.instances, 0u) << info.id;
    }
    EXPECT_EQ(r.id, info.id);
  }
}

TEST(VerifyLemma, AliasesResolve) {
  const auto g = z3z2();
  EXPECT_EQ(verify_lemma(g, "2.3", EnumBounds{4, 3, 0}).id, "sc-squared-forms");
  EXPECT_EQ(verify_lemma(g, "2.1", EnumBounds{4, 3, 0}).id, "core-decomposition");
  EXPECT_EQ(verify_lemma(g, "2.6-properness", EnumBounds{6, 3, 0}).id, "properness");
  EXPECT_THROW(verify_lemma(g, "2.6-dihedral", EnumBounds{4, 3, 0}), std::invalid_argument);
}

TEST(VerifyLemma, UnknownIdThrows) {
  EXPECT_THROW(verify_lemma(z3z2(), "9.9", EnumBounds{}), std::invalid_argument);
}

TEST(VerifyLemma, DihedralSuiteRequiresDihedralGroup) {
  EXPECT_THROW(verify_lemma(z3z2(), "2.7", EnumBounds{4, 3, 0}), std::invalid_argument);
  const auto r = verify_lemma(z2z2(), "2.7", EnumBounds{8, 3, 0});
  EXPECT_TRUE(r.passed());
}

TEST(VerifyLemma, DihedralPropernessIsFlagged) {
  const auto r = verify_lemma(z2z2(), "2.6", EnumBounds{10, 3, 0});
  EXPECT_TRUE(r.passed());
  bool flagged = false;
  for (const auto& n : r.notes) flagged |= n.find("no element outside S^c*S^c found") != std::string::npos;
  EXPECT_TRUE(flagged);
}

TEST(VerifyLemma, UnbalancedSuitesRequireTwoFactors) {
  EXPECT_THROW(verify_lemma(z2z2z2(), "4.2", EnumBounds{4, 3, 0}), std::invalid_argument);
}

TEST(VerifyLemma, ReportDoesNotDependOnJobs) {
  const auto g = z7z2();
  const auto a = verify_lemma(g, "axioms", EnumBounds{3, 3, 0}, VerifyOptions{1, 5});
  const auto b = verify_lemma(g, "axioms", EnumBounds{3, 3, 0}, VerifyOptions{3, 5});
  EXPECT_EQ(a.instances, b.instances);
  EXPECT_EQ(a.counterexamples.size(), b.counterexamples.size());
}

TEST(VerifyLemma, InfiniteFactorSuites) {
  const auto g = zz3();
  for (const char* id : {"2.1", "2.2", "2.3", "axioms"}) {
    const auto r = verify_lemma(g, id, EnumBounds{4, 2, 0}, VerifyOptions{1, 1});
    EXPECT_TRUE(r.passed()) << id;
  }
}
