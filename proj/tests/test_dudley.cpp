#include <gtest/gtest.h>

#include "freeprod/classify.hpp"
#include "freeprod/dudley.hpp"
#include "freeprod/errors.hpp"
#include "support.hpp"

using namespace freeprod;
using namespace freeprod::testing;

namespace {

std::vector<Word> repeat(const Word& g, std::size_t n) { return std::vector<Word>(n, g); }

Schedule schedule_for(ScheduleKind kind, const std::vector<Word>& gammas, std::uint64_t prime = 2) {
  std::vector<std::uint64_t> lengths;
  for (const auto& g : gammas) lengths.push_back(g.size());
  return Schedule(kind, lengths, prime);
}

}  // namespace

TEST(Schedule, Formulas) {
  const std::vector<std::uint64_t> six(5, 6);
  const Schedule d(ScheduleKind::dudley, six);
  EXPECT_EQ(d.r(0), 0);
  EXPECT_EQ(d.r(1), 7);
  EXPECT_EQ(d.r(3), 21);
  EXPECT_EQ(d.prefix_length(2), 12u);
  const Schedule y(ScheduleKind::dyadic, six);
  EXPECT_EQ(y.r(0), 1);
  EXPECT_EQ(y.r(4), 16);
  const Schedule l(ScheduleKind::linear, six);
  EXPECT_EQ(l.r(2), 14);
  const Schedule p(ScheduleKind::prime_power, six, 3);
  EXPECT_EQ(p.r(1), 2187);
  EXPECT_EQ(p.r(0), 1);
}

TEST(Schedule, DudleyUsesPerLevelLengths) {
  const Schedule d(ScheduleKind::dudley, {2, 3, 5});
  EXPECT_EQ(d.r(1), 3);
  EXPECT_EQ(d.r(2), 7);
  EXPECT_EQ(d.r(3), 13);
  EXPECT_THROW(d.prefix_length(4), std::out_of_range);
}

TEST(Schedule, OverflowIsResourceError) {
  const Schedule y(ScheduleKind::dyadic, {2});
  EXPECT_EQ(y.r(62), std::int64_t{1} << 62);
  EXPECT_THROW(y.r(63), ResourceError);
  const Schedule p(ScheduleKind::prime_power, {6, 6, 6, 6, 6, 6, 6, 6, 6, 6}, 2);
  EXPECT_EQ(p.r(8), std::int64_t{1} << 56);
  EXPECT_THROW(p.r(9), ResourceError);
}

TEST(Schedule, EqualLengthRequirement) {
  EXPECT_THROW(Schedule(ScheduleKind::linear, {2, 3}), std::invalid_argument);
  EXPECT_THROW(Schedule(ScheduleKind::prime_power, {2, 3}), std::invalid_argument);
  EXPECT_NO_THROW(Schedule(ScheduleKind::dudley, {2, 3}));
  EXPECT_THROW(Schedule(ScheduleKind::prime_power, {2}, 1), std::invalid_argument);
  EXPECT_THROW(Schedule(ScheduleKind::dudley, {}), std::invalid_argument);
}

TEST(Schedule, ParseKind) {
  EXPECT_EQ(parse_schedule_kind("prime-power"), ScheduleKind::prime_power);
  EXPECT_EQ(parse_schedule_kind("linear"), ScheduleKind::linear);
  EXPECT_THROW(parse_schedule_kind("cubic"), std::invalid_argument);
}

TEST(Truncation, DepthOneIsGamma) {
  const auto g = z3z2();
  const auto gammas = repeat(W(g, "(x y)^3"), 1);
  const auto levels = build_truncation(g, gammas, schedule_for(ScheduleKind::dudley, gammas), 1);
  ASSERT_EQ(levels.size(), 1u);
  EXPECT_EQ(levels[0], gammas[0]);
}

TEST(Truncation, DudleyDepthTwo) {
  const auto g = z3z2();
  const auto gammas = repeat(W(g, "(x y)^3"), 2);
  const auto levels = build_truncation(g, gammas, schedule_for(ScheduleKind::dudley, gammas), 2);
  EXPECT_EQ(levels[1], W(g, "(x y)^3"));
  EXPECT_EQ(levels[0], W(g, "(x y)^24"));
  EXPECT_EQ(levels[0].size(), 48u);
}

TEST(Truncation, DyadicDihedralDepthThree) {
  const auto g = z2z2();
  const auto gammas = repeat(W(g, "x y"), 3);
  const auto levels = build_truncation(g, gammas, schedule_for(ScheduleKind::dyadic, gammas), 3);
  // Exponents e_3 = 1, e_m = 1 + 2^m e_{m+1}.
  EXPECT_EQ(levels[1], W(g, "(x y)^5"));
  EXPECT_EQ(levels[0], W(g, "(x y)^11"));
  EXPECT_EQ(levels[0].size(), 22u);
}

TEST(Truncation, MatchesIteratedConcatenation) {
  const auto g = z7z2();
  const std::vector<Word> gammas{W(g, "x y"), W(g, "x^3 y x"), W(g, "y x^2 y x^4")};
  const auto s = schedule_for(ScheduleKind::dudley, gammas);
  const auto levels = build_truncation(g, gammas, s, 3);
  Word h = gammas[2];
  for (std::size_t m = 2; m >= 1; --m) {
    h = concat(g, gammas[m - 1], fold_power(g, h, s.r(m)));
    EXPECT_EQ(levels[m - 1], h) << m;
  }
}

TEST(Truncation, BudgetNamesLevel) {
  const auto g = z3z2();
  const auto gammas = repeat(W(g, "(x y)^3"), 6);
  try {
    build_truncation(g, gammas, schedule_for(ScheduleKind::dudley, gammas), 6, 1000);
    FAIL();
  } catch (const ResourceError& e) {
    EXPECT_NE(std::string(e.what()).find("exceeded at level"), std::string::npos) << e.what();
  }
}

TEST(Truncation, DepthValidation) {
  const auto g = z3z2();
  const auto gammas = repeat(W(g, "x y"), 2);
  const auto s = schedule_for(ScheduleKind::dudley, gammas);
  EXPECT_THROW(build_truncation(g, gammas, s, 0), std::invalid_argument);
  EXPECT_THROW(build_truncation(g, gammas, s, 3), std::invalid_argument);
}

TEST(VerifyChain, DudleyDepthFourPasses) {
  const auto g = z3z2();
  const auto gammas = repeat(W(g, "(x y)^3"), 4);
  const auto r = verify_chain(g, gammas, schedule_for(ScheduleKind::dudley, gammas), 4);
  EXPECT_TRUE(r.all_checks_pass());
  EXPECT_EQ(r.bound, BoundStatus::holds);
  EXPECT_EQ(r.target, 3);
  EXPECT_GE(r.final_length, 3u);
  ASSERT_EQ(r.levels.size(), 4u);
  for (const auto& l : r.levels) {
    EXPECT_TRUE(l.recursion_identity);
    EXPECT_FALSE(l.torsion);
    if (l.m < 4) {
      EXPECT_EQ(l.gamma_outside_sc2, true);
      EXPECT_EQ(l.pair_check, true);
    }
    if (l.m >= 2) {
      EXPECT_EQ(l.power_bound, true);
      EXPECT_EQ(l.monotone, true);
    }
  }
}

TEST(VerifyChain, LinearXiStaysOutsideScomplement) {
  const auto g = z7z2();
  const Word xi = W(g, "x y x^2 y x^3 y");
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto gammas = repeat(xi, n);
    const auto r = verify_chain(g, gammas, schedule_for(ScheduleKind::linear, gammas), n);
    for (const auto& l : r.levels) EXPECT_FALSE(l.in_s_complement) << n << " " << l.m;
    EXPECT_TRUE(r.all_checks_pass());
    EXPECT_EQ(r.bound, BoundStatus::holds);
  }
}

TEST(VerifyChain, TorsionWithholdsBound) {
  const auto g = z3z2();
  const auto gammas = repeat(W(g, "x y x^2"), 3);
  const auto r = verify_chain(g, gammas, schedule_for(ScheduleKind::dudley, gammas), 3);
  EXPECT_EQ(r.bound, BoundStatus::withheld);
  bool any_torsion = false;
  for (const auto& l : r.levels) any_torsion |= l.torsion;
  EXPECT_TRUE(any_torsion);
  EXPECT_FALSE(r.notes.empty());
}

TEST(VerifyChain, PrimePowerNotesMatchingOrder) {
  const auto g = z3z2();
  const auto gammas = repeat(W(g, "x y"), 2);
  const auto with3 = verify_chain(g, gammas, schedule_for(ScheduleKind::prime_power, gammas, 3), 2);
  ASSERT_FALSE(with3.notes.empty());
  EXPECT_NE(with3.notes[0].find("order 3"), std::string::npos);
  const auto with5 = verify_chain(g, gammas, schedule_for(ScheduleKind::prime_power, gammas, 5), 2);
  EXPECT_TRUE(with5.notes.empty());
  EXPECT_TRUE(with5.all_checks_pass());
}

TEST(HasElementOfOrder, CyclicAndTable) {
  const auto g = z7z2();
  EXPECT_TRUE(has_element_of_order(g, 7));
  EXPECT_TRUE(has_element_of_order(g, 2));
  EXPECT_FALSE(has_element_of_order(g, 3));
  EXPECT_FALSE(has_element_of_order(zz3(), 2));
  EXPECT_TRUE(has_element_of_order(cyclic_product({6, 5}), 3));
}
