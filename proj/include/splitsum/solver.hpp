#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "splitsum/arena.hpp"
#include "splitsum/postorder.hpp"

namespace splitsum {

enum class Outcome { kP, kN };

inline std::string_view to_string(Outcome o) { return o == Outcome::kP ? "P" : "N"; }
inline std::ostream& operator<<(std::ostream& os, Outcome o) { return os << to_string(o); }

// Least natural number absent from `values` (any order, duplicates allowed).
template <class Range>
Nimber mex(const Range& values) {
  const std::size_t n = std::size(values);
  std::vector<bool> seen(n + 1, false);
  for (auto v : values)
    if (static_cast<std::uint64_t>(v) <= n) seen[static_cast<std::size_t>(v)] = true;
  Nimber m = 0;
  while (seen[m]) ++m;
  return m;
}

inline Nimber mex(std::initializer_list<Nimber> values) { return mex<std::initializer_list<Nimber>>(values); }

// Grundy values over an Arena. Evaluation is post-order with an explicit
// stack; results are cached in a dense table indexed by GameId.
class Solver {
 public:
  explicit Solver(const Arena& arena) : arena_(arena) {}

  Nimber grundy(GameId g) {
    arena_.options(g);
    return evaluate_postorder<GameId, Nimber>(
        g,
        [&](GameId key) -> std::optional<Nimber> {
          if (key == kEmpty) return 0u;
          if (auto n = arena_.as_nimber(key)) return *n;
          if (key.value < memo_.size() && memo_[key.value] != kUnset) return memo_[key.value];
          return std::nullopt;
        },
        [&](GameId key, std::vector<GameId>& children) {
          auto opts = arena_.options(key);
          children.assign(opts.begin(), opts.end());
        },
        [&](GameId key, std::span<const Nimber> values) {
          Nimber value = mex(values);
          if (memo_.size() <= key.value) memo_.resize(arena_.size(), kUnset);
          memo_[key.value] = value;
          return value;
        });
  }

  Outcome outcome(GameId g) { return grundy(g) == 0 ? Outcome::kP : Outcome::kN; }

  std::vector<GameId> winning_moves(GameId g) {
    grundy(g);
    std::vector<GameId> moves;
    auto opts = arena_.options(g);
    for (GameId opt : opts)
      if (grundy(opt) == 0) moves.push_back(opt);
    return moves;
  }

  // Value equality: o(G+X) = o(H+X) for every X, which for finite impartial
  // games is equality of Grundy values.
  bool equal_values(GameId g, GameId h) { return grundy(g) == grundy(h); }

 private:
  static constexpr Nimber kUnset = 0xffffffffu;

  const Arena& arena_;
  std::vector<Nimber> memo_;
};

}  // namespace splitsum
