#include "splitsum/nim_pass.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "splitsum/engine.hpp"
#include "splitsum/verifier.hpp"

namespace {

using namespace splitsum;

TEST(NimPassState, Canonicalization) {
  NimPassState s = NimPassState::make({3, 0, 1, 3}, true);
  EXPECT_EQ(s.piles, (std::vector<std::uint32_t>{1, 3, 3}));
  EXPECT_TRUE(s.has_pass_move());
  EXPECT_FALSE(NimPassState::make({0, 0}, true).has_pass_move());
  EXPECT_FALSE(NimPassState::make({4}, false).has_pass_move());
}

TEST(NimPassGrundy, Examples) {
  NimPassSolver solver;
  EXPECT_EQ(solver.grundy(NimPassState::make({}, true)), 0u);
  EXPECT_EQ(solver.grundy(NimPassState::make({7}, true)), 8u);
  EXPECT_EQ(solver.grundy(NimPassState::make({4}, true)), 3u);
}

TEST(NimPassOutcome, Examples) {
  NimPassSolver solver;
  EXPECT_EQ(solver.outcome(NimPassState::make({1, 2}, true)), Outcome::kP);
  EXPECT_EQ(solver.outcome(NimPassState::make({1, 1, 1}, true)), Outcome::kP);
  EXPECT_EQ(solver.outcome(NimPassState::make({5}, true)), Outcome::kN);
}

TEST(NimPassWinningMoves, Examples) {
  NimPassSolver solver;
  auto moves = solver.winning_moves(NimPassState::make({2, 3}, true));
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0].kind, NimPassMove::Kind::kReduce);
  EXPECT_EQ(moves[0].pile_index, 1u);
  EXPECT_EQ(moves[0].new_size, 1u);
  EXPECT_EQ(moves[0].result, NimPassState::make({1, 2}, true));

  EXPECT_TRUE(solver.winning_moves(NimPassState::make({1, 2}, true)).empty());
  EXPECT_TRUE(solver.winning_moves(NimPassState::make({1, 1}, false)).empty());
}

TEST(NimPassWinningMoves, PassCanBeTheWinningMove) {
  // (1,1)* has value *1 and (1,1) is P, so passing wins.
  NimPassSolver solver;
  auto moves = solver.winning_moves(NimPassState::make({1, 1}, true));
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0].kind, NimPassMove::Kind::kPass);
  EXPECT_EQ(moves[0].result, NimPassState::make({1, 1}, false));
}

TEST(NimPassWinningMoves, MatchOracleEnumeration) {
  NimPassSolver solver;
  for (const auto& piles : small_nim_positions(3, 5)) {
    NimPassState s = NimPassState::make(piles, true);
    std::size_t expected = 0;
    for (const auto& m : NimPassSolver::successors(s)) {
      std::vector<unsigned> next(m.result.piles.begin(), m.result.piles.end());
      if (oracle::nim_pass_grundy(next, m.result.pass_available) == 0) ++expected;
    }
    EXPECT_EQ(solver.winning_moves(s).size(), expected);
    EXPECT_EQ(expected == 0, solver.outcome(s) == Outcome::kP);
  }
}

TEST(NimPassGrundy, FastPathMatchesRecursion) {
  NimPassSolver fast(true);
  NimPassSolver slow(false);
  for (const auto& piles : small_nim_positions(3, 7)) {
    for (bool pass : {false, true}) {
      NimPassState s = NimPassState::make(piles, pass);
      ASSERT_EQ(fast.grundy(s), slow.grundy(s));
    }
    Nimber x = 0;
    for (auto p : piles) x ^= p;
    ASSERT_EQ(slow.grundy(NimPassState::make(piles, false)), x);
  }
}

TEST(NimPassGrundy, MatchesOracleSearch) {
  NimPassSolver solver;
  for (const auto& piles : small_nim_positions(4, 5)) {
    std::vector<unsigned> ps(piles.begin(), piles.end());
    ASSERT_EQ(solver.grundy(NimPassState::make(piles, true)), oracle::nim_pass_grundy(ps, true));
  }
}

TEST(NimPassGrundy, ConsistentWithGenericEngine) {
  Engine e;
  NimPassSolver solver;
  for (const auto& piles : small_nim_positions(3, 6)) {
    GameId g = e.arena.nim_position(piles);
    ASSERT_EQ(solver.grundy(NimPassState::make(piles, true)), e.solver.grundy(e.ops.pass_op(g)));
    ASSERT_EQ(solver.grundy(NimPassState::make(piles, false)), e.solver.grundy(g));
  }
}

TEST(NimPassGrundy, SinglePileRule) {
  NimPassSolver solver;
  EXPECT_EQ(solver.grundy(NimPassState::make({}, true)), 0u);
  for (std::uint32_t n = 1; n <= 200; ++n)
    ASSERT_EQ(solver.grundy(NimPassState::make({n}, true)), n % 2 ? n + 1 : n - 1) << n;
}

TEST(NimPassGrundy, TwoPilePPositions) {
  NimPassSolver solver;
  for (std::uint32_t a = 0; a <= 50; ++a)
    for (std::uint32_t b = a; b <= 50; ++b) {
      const bool expected = (a == 0 && b == 0) || (b == a + 1 && a % 2 == 1);
      ASSERT_EQ(solver.grundy(NimPassState::make({a, b}, true)) == 0, expected) << a << "," << b;
    }
}

TEST(NimPassGrundy, MemoLimit) {
  NimPassSolver solver(true, 10);
  EXPECT_THROW(solver.grundy(NimPassState::make({6, 7}, true)), ResourceLimitError);
}

TEST(GrundyTable, EntriesAndSymmetry) {
  NimPassSolver solver;
  GrundyTable table = two_pile_table(solver, 8);
  EXPECT_EQ(table.at(0, 0), 0u);
  EXPECT_EQ(table.at(1, 1), 1u);
  EXPECT_EQ(table.at(3, 4), 0u);
  for (std::uint32_t a = 0; a <= 8; ++a)
    for (std::uint32_t b = 0; b <= 8; ++b) EXPECT_EQ(table.at(a, b), table.at(b, a));
  EXPECT_THROW(table.at(9, 0), std::out_of_range);
}

TEST(ThreePile, NerExamples) {
  NimPassSolver solver;
  auto ner = three_pile_ppos_ner(solver, 2);
  EXPECT_TRUE(ner.contains(Triple{1, 1, 1}));
  EXPECT_TRUE(ner.contains(Triple{0, 1, 2}));
  EXPECT_TRUE(ner.contains(Triple{0, 0, 0}));
  // with max = 1 the (0,1) row still contributes c = 2
  EXPECT_TRUE(three_pile_ppos_ner(solver, 1).contains(Triple{0, 1, 2}));
}

TEST(ThreePile, DirectExamples) {
  NimPassSolver solver;
  auto direct = three_pile_ppos_direct(solver, 2);
  EXPECT_TRUE(direct.contains(Triple{0, 0, 0}));
  EXPECT_TRUE(direct.contains(Triple{1, 1, 1}));
  EXPECT_FALSE(direct.contains(Triple{1, 1, 2}));
  // frozen from the independent Python search: {000, 012, 111, 222}
  EXPECT_EQ(direct, (std::set<Triple>{{0, 0, 0}, {0, 1, 2}, {1, 1, 1}, {2, 2, 2}}));
}

TEST(ThreePile, CrossCheck) {
  NimPassSolver solver;
  auto r0 = cross_check_three_pile(solver, 0);
  EXPECT_TRUE(r0.passed());
  EXPECT_EQ(r0.cases, 1u);
  auto r2 = cross_check_three_pile(solver, 2);
  EXPECT_TRUE(r2.passed());
  EXPECT_EQ(r2.cases, 4u);
  auto r12 = cross_check_three_pile(solver, 12);
  EXPECT_TRUE(r12.passed());
  EXPECT_EQ(r12.cases, 30u);
}

TEST(ThreePile, DirectAgreesWithOracle) {
  NimPassSolver solver;
  auto direct = three_pile_ppos_direct(solver, 6);
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned b = a; b <= 6; ++b)
      for (unsigned c = b; c <= 6; ++c)
        EXPECT_EQ(direct.contains(Triple{a, b, c}), oracle::nim_pass_grundy({a, b, c}, true) == 0);
}

}  // namespace
