#pragma once

#include "splitsum/arena.hpp"
#include "splitsum/operators.hpp"
#include "splitsum/solver.hpp"

namespace splitsum {

// One arena with its operator memos and Grundy cache. Ids from one Engine are
// meaningless in another.
struct Engine {
  explicit Engine(ArenaLimits limits = ArenaLimits::from_env()) : arena(limits) {}

  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  Arena arena;
  Operators ops{arena};
  Solver solver{arena};
};

}  // namespace splitsum
