#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "splitsum/arena.hpp"
#include "splitsum/postorder.hpp"
#include "splitsum/report.hpp"
#include "splitsum/solver.hpp"

namespace splitsum {

// A position of Nim with a Pass: piles kept sorted with zeros dropped, and
// whether the single pass is still unused.
struct NimPassState {
  std::vector<std::uint32_t> piles;
  bool pass_available = true;

  static NimPassState make(std::span<const std::uint32_t> piles, bool pass_available) {
    return NimPassState{canonical_piles(piles), pass_available};
  }
  static NimPassState make(std::initializer_list<std::uint32_t> piles, bool pass_available) {
    return make(std::span<const std::uint32_t>(piles.begin(), piles.size()), pass_available);
  }

  // The pass is illegal once every pile is empty.
  bool has_pass_move() const { return pass_available && !piles.empty(); }

  friend bool operator==(const NimPassState&, const NimPassState&) = default;
};

struct NimPassMove {
  enum class Kind { kReduce, kPass };

  Kind kind = Kind::kReduce;
  std::size_t pile_index = 0;  // into the sorted piles of the source state
  std::uint32_t new_size = 0;
  NimPassState result;
};

class NimPassSolver {
 public:
  explicit NimPassSolver(bool nim_sum_fast_path = true, std::uint64_t max_states = 50'000'000)
      : fast_path_(nim_sum_fast_path), max_states_(max_states) {}

  // Successors in a fixed order: pile reductions by ascending pile index and
  // new size (one representative per distinct pile size), then the pass.
  static std::vector<NimPassMove> successors(const NimPassState& s) {
    std::vector<NimPassMove> moves;
    for (std::size_t i = 0; i < s.piles.size(); ++i) {
      if (i > 0 && s.piles[i] == s.piles[i - 1]) continue;
      for (std::uint32_t smaller = 0; smaller < s.piles[i]; ++smaller) {
        std::vector<std::uint32_t> next = s.piles;
        next[i] = smaller;
        moves.push_back({NimPassMove::Kind::kReduce, i, smaller,
                         NimPassState::make(next, s.pass_available)});
      }
    }
    if (s.has_pass_move())
      moves.push_back({NimPassMove::Kind::kPass, 0, 0, NimPassState{s.piles, false}});
    return moves;
  }

  Nimber grundy(const NimPassState& state) {
    NimPassState root = NimPassState::make(state.piles, state.pass_available);
    return evaluate_postorder<NimPassState, Nimber>(
        root,
        [&](const NimPassState& s) -> std::optional<Nimber> {
          if (s.piles.empty()) return 0u;
          if (fast_path_ && !s.pass_available) {
            Nimber x = 0;
            for (std::uint32_t p : s.piles) x ^= p;
            return x;
          }
          if (auto it = memo_.find(key_of(s)); it != memo_.end()) return it->second;
          return std::nullopt;
        },
        [](const NimPassState& s, std::vector<NimPassState>& children) {
          for (NimPassMove& m : successors(s)) children.push_back(std::move(m.result));
        },
        [&](const NimPassState& s, std::span<const Nimber> values) {
          if (memo_.size() >= max_states_)
            throw ResourceLimitError("Nim-with-a-pass memo limit of " +
                                     std::to_string(max_states_) + " states reached");
          Nimber value = mex(values);
          memo_.emplace(key_of(s), value);
          return value;
        });
  }

  Outcome outcome(const NimPassState& s) { return grundy(s) == 0 ? Outcome::kP : Outcome::kN; }

  // Successors that are P-positions, deduplicated by resulting state.
  std::vector<NimPassMove> winning_moves(const NimPassState& state) {
    std::vector<NimPassMove> winners;
    for (NimPassMove& m : successors(NimPassState::make(state.piles, state.pass_available)))
      if (grundy(m.result) == 0) winners.push_back(std::move(m));
    return winners;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  // Flag byte followed by LEB128 pile sizes; short keys stay in SSO storage.
  static std::string key_of(const NimPassState& s) {
    std::string key;
    key.push_back(s.pass_available ? '\1' : '\0');
    for (std::uint32_t p : s.piles) {
      do {
        unsigned char byte = p & 0x7f;
        p >>= 7;
        if (p != 0) byte |= 0x80;
        key.push_back(static_cast<char>(byte));
      } while (p != 0);
    }
    return key;
  }

  bool fast_path_;
  std::uint64_t max_states_;
  std::unordered_map<std::string, Nimber> memo_;
};

// Grundy values of (a,b)* for 0 <= a, b <= max; lookups are symmetric.
class GrundyTable {
 public:
  GrundyTable() = default;
  explicit GrundyTable(std::uint32_t max)
      : max_(max), entries_((static_cast<std::size_t>(max) + 1) * (max + 1), 0) {}

  std::uint32_t max() const { return max_; }

  Nimber at(std::uint32_t a, std::uint32_t b) const { return entries_.at(index(a, b)); }

  void set(std::uint32_t a, std::uint32_t b, Nimber value) {
    entries_.at(index(a, b)) = value;
    entries_.at(index(b, a)) = value;
  }

 private:
  std::size_t index(std::uint32_t a, std::uint32_t b) const {
    if (a > max_ || b > max_) throw std::out_of_range("grundy table index out of range");
    return static_cast<std::size_t>(a) * (max_ + 1) + b;
  }

  std::uint32_t max_ = 0;
  std::vector<Nimber> entries_;
};

inline GrundyTable two_pile_table(NimPassSolver& solver, std::uint32_t max) {
  GrundyTable table(max);
  for (std::uint32_t a = 0; a <= max; ++a)
    for (std::uint32_t b = a; b <= max; ++b)
      table.set(a, b, solver.grundy(NimPassState::make({a, b}, true)));
  return table;
}

using Triple = std::array<std::uint32_t, 3>;

inline Triple sorted_triple(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

// Three-pile P-positions obtained from the two-pile table: (a,b)* + *c = 0
// with c the Grundy value of (a,b)*, hence (a,b,c)* = 0. The third pile is
// not bounded by max.
inline std::set<Triple> three_pile_ppos_ner(const GrundyTable& table) {
  std::set<Triple> out;
  for (std::uint32_t a = 0; a <= table.max(); ++a)
    for (std::uint32_t b = a; b <= table.max(); ++b) out.insert(sorted_triple(a, b, table.at(a, b)));
  return out;
}

inline std::set<Triple> three_pile_ppos_ner(NimPassSolver& solver, std::uint32_t max) {
  return three_pile_ppos_ner(two_pile_table(solver, max));
}

// Brute force: every sorted triple inside the cube [0, max]^3 that is a
// P-position of Nim with a Pass.
inline std::set<Triple> three_pile_ppos_direct(NimPassSolver& solver, std::uint32_t max) {
  std::set<Triple> out;
  for (std::uint32_t a = 0; a <= max; ++a)
    for (std::uint32_t b = a; b <= max; ++b)
      for (std::uint32_t c = b; c <= max; ++c)
        if (solver.grundy(NimPassState::make({a, b, c}, true)) == 0) out.insert({a, b, c});
  return out;
}

inline std::string pass_nim_expr(const Triple& t) {
  std::string s = "pass(nim(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + "))";
}

// Compares both constructions on the cube [0, max]^3. Cases are the triples
// in the union of the two sets.
inline VerificationReport cross_check_three_pile(NimPassSolver& solver, std::uint32_t max) {
  VerificationReport report;
  report.theorem = "three-pile";
  {
    ReportTimer timer(report);
    std::set<Triple> ner;
    for (const Triple& t : three_pile_ppos_ner(solver, max))
      if (t[2] <= max) ner.insert(t);
    std::set<Triple> direct = three_pile_ppos_direct(solver, max);

    std::set<Triple> all = ner;
    all.insert(direct.begin(), direct.end());
    report.cases = all.size();
    for (const Triple& t : all) {
      const bool in_ner = ner.contains(t);
      const bool in_direct = direct.contains(t);
      if (in_ner == in_direct) continue;
      report.failures.push_back({{pass_nim_expr(t)},
                                 in_ner ? "P (extension rule)" : "N (extension rule)",
                                 in_direct ? "P (direct search)" : "N (direct search)"});
    }
  }
  return report;
}

}  // namespace splitsum
