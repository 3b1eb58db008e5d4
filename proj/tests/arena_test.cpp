#include "splitsum/arena.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "splitsum/solver.hpp"

namespace {

using namespace splitsum;

std::vector<GameId> to_vec(std::span<const GameId> s) { return {s.begin(), s.end()}; }

TEST(Arena, EmptyGameIsIdZero) {
  Arena arena;
  EXPECT_EQ(arena.empty(), GameId{0});
  EXPECT_TRUE(arena.options(arena.empty()).empty());
  EXPECT_EQ(arena.birthday(arena.empty()), 0u);
}

TEST(Arena, MkGameExamples) {
  Arena arena;
  EXPECT_EQ(arena.mk_game({}), arena.empty());
  EXPECT_EQ(arena.mk_game({arena.empty()}), arena.nimber(1));
  GameId g = arena.nim_position({2, 3});
  EXPECT_EQ(arena.mk_game(to_vec(arena.options(g))), g);
}

TEST(Arena, MkGameSortsAndDeduplicates) {
  Arena arena;
  GameId one = arena.nimber(1);
  GameId e = arena.empty();
  EXPECT_EQ(arena.mk_game({one, e, one, e}), arena.nimber(2));
}

TEST(Arena, UnknownOptionIsMalformed) {
  Arena arena;
  EXPECT_THROW(arena.mk_game({GameId{99}}), MalformedInputError);
  EXPECT_THROW(arena.options(GameId{5}), MalformedInputError);
}

TEST(Arena, NimberExamples) {
  Arena arena;
  EXPECT_EQ(arena.nimber(0), arena.empty());
  EXPECT_EQ(to_vec(arena.options(arena.nimber(2))),
            (std::vector<GameId>{arena.empty(), arena.nimber(1)}));
  Solver solver(arena);
  EXPECT_EQ(solver.grundy(arena.nimber(7)), 7u);
  for (Nimber n = 0; n <= 64; ++n) {
    EXPECT_EQ(solver.grundy(arena.nimber(n)), n);
    EXPECT_EQ(arena.birthday(arena.nimber(n)), n);
    EXPECT_EQ(arena.as_nimber(arena.nimber(n)), n);
  }
}

TEST(Arena, NimPositionExamples) {
  Arena arena;
  Solver solver(arena);
  EXPECT_EQ(arena.nim_position({}), arena.empty());
  GameId one_one = arena.nim_position({1, 1});
  EXPECT_EQ(to_vec(arena.options(one_one)), (std::vector<GameId>{arena.nim_position({1})}));
  EXPECT_EQ(solver.grundy(one_one), 0u);
  EXPECT_EQ(solver.grundy(arena.nim_position({3, 5})), 6u);
  EXPECT_EQ(to_vec(arena.options(arena.nim_position({2}))),
            (std::vector<GameId>{arena.empty(), arena.nimber(1)}));
  EXPECT_EQ(arena.nim_position({0, 3, 0, 1}), arena.nim_position({1, 3}));
  EXPECT_EQ(arena.nim_position({5, 2}), arena.nim_position({2, 5}));
}

TEST(Arena, BirthdayOfNimIsStoneCount) {
  Arena arena;
  for (std::uint32_t a = 0; a <= 6; ++a)
    for (std::uint32_t b = 0; b <= 6; ++b)
      EXPECT_EQ(arena.birthday(arena.nim_position({a, b})), a + b);
}

TEST(Arena, DisjunctiveSumExamples) {
  Arena arena;
  Solver solver(arena);
  GameId h = arena.nim_position({2, 3});
  EXPECT_EQ(arena.disjunctive_sum(arena.empty(), h), h);
  EXPECT_EQ(arena.disjunctive_sum(h, arena.empty()), h);
  EXPECT_EQ(arena.disjunctive_sum(arena.nimber(1), arena.nimber(1)), arena.nim_position({1, 1}));
  for (Nimber a = 0; a < 6; ++a)
    for (Nimber b = 0; b < 6; ++b)
      EXPECT_EQ(solver.grundy(arena.disjunctive_sum(arena.nimber(a), arena.nimber(b))), a ^ b);
}

TEST(Arena, DisjunctiveSumIsStructuralNotShortcut) {
  // E + H must equal the structurally expanded sum, checked against an
  // explicit {g + H, G + h} construction.
  Arena arena;
  GameId g = arena.nim_position({1, 2});
  GameId h = arena.mk_game({arena.nimber(2)});
  std::vector<GameId> opts;
  for (GameId x : std::vector<GameId>(arena.options(g).begin(), arena.options(g).end()))
    opts.push_back(arena.disjunctive_sum(x, h));
  for (GameId x : std::vector<GameId>(arena.options(h).begin(), arena.options(h).end()))
    opts.push_back(arena.disjunctive_sum(g, x));
  EXPECT_EQ(arena.disjunctive_sum(g, h), arena.mk_game(opts));
  EXPECT_EQ(arena.disjunctive_sum(g, h), arena.disjunctive_sum(h, g));
}

// Every multiset of positive piles with total at most 20.
void for_each_multiset(std::uint32_t budget, std::uint32_t min_pile, std::vector<std::uint32_t>& piles,
                       const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  fn(piles);
  for (std::uint32_t p = min_pile; p <= budget; ++p) {
    piles.push_back(p);
    for_each_multiset(budget - p, p, piles, fn);
    piles.pop_back();
  }
}

TEST(Arena, NimPositionIsFoldOfNimberSums) {
  Arena arena;
  std::vector<std::uint32_t> piles;
  std::size_t checked = 0;
  for_each_multiset(20, 1, piles, [&](const std::vector<std::uint32_t>& ps) {
    GameId folded = arena.empty();
    for (std::uint32_t p : ps) folded = arena.disjunctive_sum(folded, arena.nimber(p));
    ASSERT_EQ(arena.nim_position(ps), folded);
    ++checked;
  });
  EXPECT_GT(checked, 2000u);
}

TEST(Arena, InterningSoundnessAndTopologicalOrder) {
  Arena arena;
  arena.nim_position({3, 4, 5});
  arena.disjunctive_sum(arena.nim_position({2, 2}), arena.nimber(3));
  for (std::uint32_t i = 0; i < arena.size(); ++i) {
    GameId g{i};
    auto opts = to_vec(arena.options(g));
    EXPECT_TRUE(std::is_sorted(opts.begin(), opts.end()));
    EXPECT_EQ(std::adjacent_find(opts.begin(), opts.end()), opts.end());
    for (GameId o : opts) EXPECT_LT(o, g);
    EXPECT_EQ(arena.mk_game(opts), g);
  }
}

TEST(Arena, DeterministicIds) {
  auto build = [](Arena& arena) {
    std::vector<GameId> ids;
    ids.push_back(arena.nim_position({4, 2, 7}));
    ids.push_back(arena.disjunctive_sum(arena.nimber(3), ids.back()));
    ids.push_back(arena.mk_game({arena.nimber(5), ids.front()}));
    return ids;
  };
  Arena a;
  Arena b;
  EXPECT_EQ(build(a), build(b));
  EXPECT_EQ(a.size(), b.size());
}

TEST(Arena, NodeLimitIsResourceError) {
  ArenaLimits limits;
  limits.max_nodes = 8;
  Arena arena(limits);
  EXPECT_NO_THROW(arena.nimber(7));
  EXPECT_THROW(arena.nimber(8), ResourceLimitError);
  EXPECT_THROW(arena.nim_position({3, 3}), ResourceLimitError);
}

TEST(Arena, StoneLimitIsResourceError) {
  ArenaLimits limits;
  limits.max_nim_stones = 10;
  Arena arena(limits);
  EXPECT_THROW(arena.nim_position({6, 5}), ResourceLimitError);
}

TEST(Arena, LimitFromEnvironment) {
  ::setenv("SPLITSUM_MAX_NODES", "1234", 1);
  EXPECT_EQ(ArenaLimits::from_env().max_nodes, 1234u);
  ::setenv("SPLITSUM_MAX_NODES", "bogus", 1);
  EXPECT_EQ(ArenaLimits::from_env().max_nodes, 50'000'000u);
  ::unsetenv("SPLITSUM_MAX_NODES");
}

}  // namespace
