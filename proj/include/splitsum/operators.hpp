#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "splitsum/arena.hpp"
#include "splitsum/postorder.hpp"

namespace splitsum {

// The pass operator and the split sum. Both are form-sensitive: they are
// defined on option sets, not on values, so their memos are keyed by GameId.
class Operators {
 public:
  explicit Operators(Arena& arena) : arena_(arena) {}

  Arena& arena() { return arena_; }

  // G*: E stays E; otherwise {G} together with the pass applied to every
  // option of G.
  GameId pass_op(GameId g) {
    return evaluate_postorder<GameId, GameId>(
        g,
        [&](GameId key) -> std::optional<GameId> {
          if (key == kEmpty) return kEmpty;
          if (key.value < pass_memo_.size() && pass_memo_[key.value] != kUnset)
            return GameId{pass_memo_[key.value]};
          return std::nullopt;
        },
        [&](GameId key, std::vector<GameId>& children) {
          auto opts = arena_.options(key);
          children.assign(opts.begin(), opts.end());
        },
        [&](GameId key, std::span<const GameId> passed) {
          std::vector<GameId> opts(passed.begin(), passed.end());
          opts.push_back(key);
          GameId id = arena_.mk_game(opts);
          if (pass_memo_.size() <= key.value) pass_memo_.resize(key.value + 1, kUnset);
          pass_memo_[key.value] = id.value;
          arena_.note_provenance(id, Provenance{Origin::kPass, key, key, {}});
          return id;
        });
  }

  // G o H: E when G is E, G when H is E, otherwise {G o h, g o H}.
  // Not commutative, so the memo key is the ordered pair.
  GameId split_sum(GameId g, GameId h) {
    using Pair = std::pair<GameId, GameId>;
    arena_.options(g);
    arena_.options(h);
    return evaluate_postorder<Pair, GameId>(
        Pair{g, h},
        [&](const Pair& key) -> std::optional<GameId> {
          if (key.first == kEmpty) return kEmpty;
          if (key.second == kEmpty) return key.first;
          if (auto it = split_memo_.find(detail::pair_key(key.first, key.second));
              it != split_memo_.end())
            return GameId{it->second};
          return std::nullopt;
        },
        [&](const Pair& key, std::vector<Pair>& children) {
          for (GameId opt : arena_.options(key.second)) children.emplace_back(key.first, opt);
          for (GameId opt : arena_.options(key.first)) children.emplace_back(opt, key.second);
        },
        [&](const Pair& key, std::span<const GameId> child_ids) {
          GameId id = arena_.mk_game(child_ids);
          split_memo_.emplace(detail::pair_key(key.first, key.second), id.value);
          arena_.note_provenance(id, Provenance{Origin::kSplit, key.first, key.second, {}});
          return id;
        });
  }

 private:
  static constexpr std::uint32_t kUnset = 0xffffffffu;

  Arena& arena_;
  std::vector<std::uint32_t> pass_memo_;
  std::unordered_map<std::uint64_t, std::uint32_t> split_memo_;
};

}  // namespace splitsum
