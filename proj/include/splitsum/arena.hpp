#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "splitsum/postorder.hpp"

namespace splitsum {

// Handle to an interned impartial game form. Ids are dense, session-local and
// topologically ordered: every option of a node has a smaller id than the node.
struct GameId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(const GameId&, const GameId&) = default;
};

inline constexpr GameId kEmpty{0};

using Nimber = std::uint32_t;
using Birthday = std::uint32_t;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ArenaLimits {
  std::uint64_t max_nodes = 50'000'000;
  std::uint64_t max_option_entries = 1ull << 30;
  std::uint64_t max_nim_stones = 1'000'000;

  // Reads SPLITSUM_MAX_NODES; anything unparsable falls back to the default.
  static ArenaLimits from_env() {
    ArenaLimits limits;
    if (const char* raw = std::getenv("SPLITSUM_MAX_NODES")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(raw, &end, 10);
      if (end != raw && *end == '\0' && parsed > 0) limits.max_nodes = parsed;
    }
    return limits;
  }
};

// How a node was first produced by a named constructor. Only used to print
// forms back in the expression syntax; never affects identity.
enum class Origin { kNim, kPass, kSplit, kSum };

struct Provenance {
  Origin origin;
  GameId lhs{};
  GameId rhs{};
  std::vector<std::uint32_t> piles;  // kNim only
};

struct GameIdHash {
  std::size_t operator()(GameId id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t hash_options(std::span<const GameId> options) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ options.size();
  for (GameId id : options) h = mix64(h ^ id.value) + 0x9e3779b97f4a7c15ull;
  return h;
}

struct PileHash {
  std::size_t operator()(const std::vector<std::uint32_t>& piles) const noexcept {
    std::uint64_t h = piles.size();
    for (std::uint32_t p : piles) h = mix64(h ^ p) + 0x9e3779b97f4a7c15ull;
    return static_cast<std::size_t>(h);
  }
};

inline std::uint64_t pair_key(GameId a, GameId b) {
  return (static_cast<std::uint64_t>(a.value) << 32) | b.value;
}

}  // namespace detail

// Canonicalizes a Nim position: drops empty piles and sorts ascending.
inline std::vector<std::uint32_t> canonical_piles(std::span<const std::uint32_t> piles) {
  std::vector<std::uint32_t> out;
  out.reserve(piles.size());
  for (std::uint32_t p : piles)
    if (p != 0) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

// Hash-consed store of impartial game forms. Two forms with the same option
// set always share one GameId, so equivalence of forms is id equality.
//
// Not thread-safe for construction. Spans returned by options() are
// invalidated by any later construction.
class Arena {
 public:
  explicit Arena(ArenaLimits limits = ArenaLimits::from_env()) : limits_(limits) {
    intern_sorted({});  // GameId 0 is E
  }

  Arena(const Arena&) = delete;
  Arena& operator=(const Arena&) = delete;

  const ArenaLimits& limits() const { return limits_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(GameId g) const { return g.value < nodes_.size(); }

  GameId empty() const { return kEmpty; }

  GameId mk_game(std::span<const GameId> options) {
    std::vector<GameId> sorted(options.begin(), options.end());
    for (GameId g : sorted)
      if (!contains(g))
        throw MalformedInputError("unknown option id " + std::to_string(g.value));
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return intern_sorted(sorted);
  }

  GameId mk_game(std::initializer_list<GameId> options) {
    return mk_game(std::span<const GameId>(options.begin(), options.size()));
  }

  std::span<const GameId> options(GameId g) const {
    const Node& node = at(g);
    return {option_store_.data() + node.first, node.count};
  }

  Birthday birthday(GameId g) const { return at(g).birthday; }

  // Value n if the form is literally *n, nullopt otherwise. O(1).
  std::optional<Nimber> as_nimber(GameId g) const {
    const Node& node = at(g);
    if (node.nimber == kNotNimber) return std::nullopt;
    return node.nimber;
  }

  GameId nimber(Nimber n) {
    if (n < nimber_ids_.size()) return nimber_ids_[n];
    const std::uint64_t needed =
        (static_cast<std::uint64_t>(n) + 1) * n / 2 + option_store_.size();
    if (needed > limits_.max_option_entries)
      throw ResourceLimitError("nimber *" + std::to_string(n) + " exceeds the option storage limit");
    while (nimber_ids_.size() <= n) {
      std::vector<GameId> lower = nimber_ids_;
      intern_sorted(lower);  // registers itself in nimber_ids_
    }
    return nimber_ids_[n];
  }

  GameId nim_position(std::span<const std::uint32_t> piles) {
    std::uint64_t stones = 0;
    for (std::uint32_t p : piles) stones += p;
    if (stones > limits_.max_nim_stones)
      throw ResourceLimitError("Nim position with " + std::to_string(stones) +
                               " stones exceeds the configured limit");
    using Piles = std::vector<std::uint32_t>;
    return evaluate_postorder<Piles, GameId>(
        canonical_piles(piles),
        [&](const Piles& key) -> std::optional<GameId> {
          if (key.empty()) return kEmpty;
          if (key.size() == 1) return nimber(key.front());
          if (auto it = nim_memo_.find(key); it != nim_memo_.end()) return it->second;
          return std::nullopt;
        },
        [](const Piles& key, std::vector<Piles>& children) {
          for (std::size_t i = 0; i < key.size(); ++i) {
            if (i > 0 && key[i] == key[i - 1]) continue;
            for (std::uint32_t smaller = 0; smaller < key[i]; ++smaller) {
              Piles next = key;
              next[i] = smaller;
              children.push_back(canonical_piles(next));
            }
          }
        },
        [&](const Piles& key, std::span<const GameId> child_ids) {
          GameId id = mk_game(child_ids);
          nim_memo_.emplace(key, id);
          note_provenance(id, Provenance{Origin::kNim, {}, {}, key});
          return id;
        });
  }

  GameId nim_position(std::initializer_list<std::uint32_t> piles) {
    return nim_position(std::span<const std::uint32_t>(piles.begin(), piles.size()));
  }

  // Structural disjunctive sum; symmetric by construction of the memo key.
  GameId disjunctive_sum(GameId a, GameId b) {
    using Pair = std::pair<GameId, GameId>;
    auto normalize = [](GameId x, GameId y) { return x <= y ? Pair{x, y} : Pair{y, x}; };
    at(a);
    at(b);
    return evaluate_postorder<Pair, GameId>(
        normalize(a, b),
        [&](const Pair& key) -> std::optional<GameId> {
          if (key.first == kEmpty) return key.second;
          if (auto it = sum_memo_.find(detail::pair_key(key.first, key.second)); it != sum_memo_.end())
            return GameId{it->second};
          return std::nullopt;
        },
        [&](const Pair& key, std::vector<Pair>& children) {
          for (GameId g : options(key.first)) children.push_back(normalize(g, key.second));
          for (GameId h : options(key.second)) children.push_back(normalize(key.first, h));
        },
        [&](const Pair& key, std::span<const GameId> child_ids) {
          GameId id = mk_game(child_ids);
          sum_memo_.emplace(detail::pair_key(key.first, key.second), id.value);
          note_provenance(id, Provenance{Origin::kSum, key.first, key.second, {}});
          return id;
        });
  }

  const Provenance* provenance(GameId g) const {
    auto it = provenance_.find(g.value);
    return it == provenance_.end() ? nullptr : &it->second;
  }

  // Records how `result` was built, keeping the first recorded origin except
  // that a Nim origin replaces any other. Operands must precede the result so
  // that printing through provenance always terminates.
  void note_provenance(GameId result, Provenance origin) {
    if (origin.origin != Origin::kNim && !(origin.lhs < result && origin.rhs < result)) return;
    auto it = provenance_.find(result.value);
    if (it == provenance_.end()) {
      provenance_.emplace(result.value, std::move(origin));
    } else if (origin.origin == Origin::kNim && it->second.origin != Origin::kNim) {
      it->second = std::move(origin);
    }
  }

 private:
  static constexpr std::uint32_t kNotNimber = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint32_t kNoNext = std::numeric_limits<std::uint32_t>::max();

  struct Node {
    std::uint64_t first;
    std::uint32_t count;
    Birthday birthday;
    std::uint32_t nimber;
    std::uint32_t next_in_bucket;
  };

  const Node& at(GameId g) const {
    if (!contains(g)) throw MalformedInputError("unknown game id " + std::to_string(g.value));
    return nodes_[g.value];
  }

  // `sorted` must be strictly ascending and reference existing nodes.
  GameId intern_sorted(std::span<const GameId> sorted) {
    const std::uint64_t h = detail::hash_options(sorted);
    auto bucket = buckets_.find(h);
    if (bucket != buckets_.end()) {
      for (std::uint32_t i = bucket->second; i != kNoNext; i = nodes_[i].next_in_bucket) {
        std::span<const GameId> existing = options(GameId{i});
        if (std::equal(existing.begin(), existing.end(), sorted.begin(), sorted.end()))
          return GameId{i};
      }
    }

    if (nodes_.size() >= limits_.max_nodes)
      throw ResourceLimitError("arena node limit of " + std::to_string(limits_.max_nodes) +
                               " reached");
    if (option_store_.size() + sorted.size() > limits_.max_option_entries)
      throw ResourceLimitError("arena option storage limit reached");

    Birthday birthday = 0;
    bool is_nimber = true;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const Node& child = nodes_[sorted[i].value];
      birthday = std::max<Birthday>(birthday, child.birthday + 1);
      if (child.nimber != i) is_nimber = false;
    }

    const auto id = static_cast<std::uint32_t>(nodes_.size());
    Node node{option_store_.size(), static_cast<std::uint32_t>(sorted.size()), birthday,
              is_nimber ? static_cast<std::uint32_t>(sorted.size()) : kNotNimber, kNoNext};
    option_store_.insert(option_store_.end(), sorted.begin(), sorted.end());
    if (bucket != buckets_.end()) {
      node.next_in_bucket = bucket->second;
      bucket->second = id;
    } else {
      buckets_.emplace(h, id);
    }
    nodes_.push_back(node);
    if (is_nimber && node.nimber == nimber_ids_.size()) nimber_ids_.push_back(GameId{id});
    return GameId{id};
  }

  ArenaLimits limits_;
  std::vector<Node> nodes_;
  std::vector<GameId> option_store_;
  std::unordered_map<std::uint64_t, std::uint32_t> buckets_;
  std::vector<GameId> nimber_ids_;
  std::unordered_map<std::vector<std::uint32_t>, GameId, detail::PileHash> nim_memo_;
  std::unordered_map<std::uint64_t, std::uint32_t> sum_memo_;
  std::unordered_map<std::uint32_t, Provenance> provenance_;
};

}  // namespace splitsum

template <>
struct std::hash<splitsum::GameId> : splitsum::GameIdHash {};
