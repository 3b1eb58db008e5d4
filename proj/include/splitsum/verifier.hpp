#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "splitsum/engine.hpp"
#include "splitsum/expr.hpp"
#include "splitsum/nim_pass.hpp"
#include "splitsum/postorder.hpp"
#include "splitsum/report.hpp"

namespace splitsum {

struct GenConfig {
  Birthday max_birthday = 5;        // random forms
  std::uint32_t max_options = 3;    // per random node
  std::uint64_t samples = 500;      // random cases per check
  std::uint64_t seed = 42;
  Birthday exhaustive_birthday = 3; // pairwise and triple sweeps
};

class UnknownCheckError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr Birthday kMaxEnumerableBirthday = 4;

// Every distinct form born by day d: all subsets of the day d-1 forms, ordered
// by subset bitmask. Sizes are 1, 2, 4, 16, 65536.
inline std::vector<GameId> enumerate_by_birthday(Arena& arena, Birthday d) {
  if (d > kMaxEnumerableBirthday)
    throw MalformedInputError("enumeration is capped at day " +
                              std::to_string(kMaxEnumerableBirthday));
  std::vector<GameId> forms{arena.empty()};
  for (Birthday day = 1; day <= d; ++day) {
    const std::size_t n = forms.size();
    std::vector<GameId> next;
    next.reserve(std::size_t{1} << n);
    std::vector<GameId> subset;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      subset.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) subset.push_back(forms[i]);
      next.push_back(arena.mk_game(subset));
    }
    forms = std::move(next);
  }
  return forms;
}

// Recursive sampler: with budget b > 0 draw k in [0, max_options] and sample k
// options with budget b-1; budget 0 yields E.
inline GameId random_game(Arena& arena, const GenConfig& cfg, std::mt19937_64& rng,
                          Birthday budget) {
  if (budget == 0) return arena.empty();
  std::uniform_int_distribution<std::uint32_t> count(0, cfg.max_options);
  const std::uint32_t k = count(rng);
  std::vector<GameId> opts;
  opts.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) opts.push_back(random_game(arena, cfg, rng, budget - 1));
  return arena.mk_game(opts);
}

inline GameId random_game(Arena& arena, const GenConfig& cfg, std::mt19937_64& rng) {
  return random_game(arena, cfg, rng, cfg.max_birthday);
}

inline bool is_hereditarily_transitive(const Arena& arena, GameId g) {
  auto opts = arena.options(g);
  for (GameId option : opts)
    for (GameId sub : arena.options(option))
      if (!std::binary_search(opts.begin(), opts.end(), sub)) return false;
  return true;
}

// Hereditarily transitive all the way down. Results are cached in `memo`,
// which may be shared across calls on the same arena.
inline bool is_nimber_like(const Arena& arena, GameId g,
                           std::unordered_map<std::uint32_t, bool>& memo) {
  return evaluate_postorder<GameId, std::uint8_t>(
             g,
             [&](GameId key) -> std::optional<std::uint8_t> {
               if (auto it = memo.find(key.value); it != memo.end()) return it->second;
               return std::nullopt;
             },
             [&](GameId key, std::vector<GameId>& children) {
               auto opts = arena.options(key);
               children.assign(opts.begin(), opts.end());
             },
             [&](GameId key, std::span<const std::uint8_t> children) {
               const bool like = std::all_of(children.begin(), children.end(),
                                             [](std::uint8_t c) { return c != 0; }) &&
                                 is_hereditarily_transitive(arena, key);
               memo.emplace(key.value, like);
               return static_cast<std::uint8_t>(like);
             }) != 0;
}

inline bool is_nimber_like(const Arena& arena, GameId g) {
  std::unordered_map<std::uint32_t, bool> memo;
  return is_nimber_like(arena, g, memo);
}

struct GameTriple {
  GameId g, h, k;
};

struct NerCase {
  GameId g, h;
  Nimber n;
};

struct SumRuleCase {
  std::vector<std::uint32_t> piles;
  GameId h;
};

namespace detail {

inline VerificationReport start_report(std::string theorem, CheckMode mode) {
  VerificationReport r;
  r.theorem = std::move(theorem);
  r.mode = mode;
  return r;
}

inline std::string outcome_str(Outcome o) { return std::string(to_string(o)); }

}  // namespace detail

// If G and H are P-positions then so is G o H.
inline VerificationReport check_p_closure(Engine& e, std::span<const std::pair<GameId, GameId>> pairs,
                                          CheckMode mode = CheckMode::kExhaustive) {
  auto report = detail::start_report("p-closure", mode);
  ReportTimer timer(report);
  for (auto [g, h] : pairs) {
    if (e.solver.outcome(g) != Outcome::kP || e.solver.outcome(h) != Outcome::kP) {
      ++report.excluded;
      continue;
    }
    ++report.cases;
    Outcome got = e.solver.outcome(e.ops.split_sum(g, h));
    if (got != Outcome::kP)
      report.failures.push_back(
          {{describe(e.arena, g), describe(e.arena, h)}, "P", detail::outcome_str(got)});
  }
  return report;
}

// Exactly one of G, H a P-position gives an N-position G o H. Pairs with
// G = E are excluded: E o H is E whatever H is.
inline VerificationReport check_mixed_n(Engine& e, std::span<const std::pair<GameId, GameId>> pairs,
                                        CheckMode mode = CheckMode::kExhaustive) {
  auto report = detail::start_report("mixed-n", mode);
  ReportTimer timer(report);
  for (auto [g, h] : pairs) {
    const bool g_p = e.solver.outcome(g) == Outcome::kP;
    const bool h_p = e.solver.outcome(h) == Outcome::kP;
    if (g_p == h_p) continue;
    if (g == kEmpty) {
      ++report.excluded;
      continue;
    }
    ++report.cases;
    Outcome got = e.solver.outcome(e.ops.split_sum(g, h));
    if (got != Outcome::kN)
      report.failures.push_back(
          {{describe(e.arena, g), describe(e.arena, h)}, "N", detail::outcome_str(got)});
  }
  return report;
}

// (G o H) o K = G o (H + K) as values.
inline VerificationReport check_split_assoc(Engine& e, std::span<const GameTriple> triples,
                                            CheckMode mode = CheckMode::kExhaustive) {
  auto report = detail::start_report("split-assoc", mode);
  ReportTimer timer(report);
  for (const GameTriple& t : triples) {
    ++report.cases;
    GameId left = e.ops.split_sum(e.ops.split_sum(t.g, t.h), t.k);
    GameId right = e.ops.split_sum(t.g, e.arena.disjunctive_sum(t.h, t.k));
    if (!e.solver.equal_values(left, right))
      report.failures.push_back({{describe(e.arena, t.g), describe(e.arena, t.h), describe(e.arena, t.k)},
                                 "grundy " + std::to_string(e.solver.grundy(right)),
                                 "grundy " + std::to_string(e.solver.grundy(left))});
  }
  return report;
}

// H = K implies G o H = G o K.
inline VerificationReport check_right_congruence(Engine& e, std::span<const GameTriple> triples,
                                                 CheckMode mode = CheckMode::kExhaustive) {
  auto report = detail::start_report("right-congruence", mode);
  ReportTimer timer(report);
  for (const GameTriple& t : triples) {
    if (!e.solver.equal_values(t.h, t.k)) {
      ++report.excluded;
      continue;
    }
    ++report.cases;
    GameId gh = e.ops.split_sum(t.g, t.h);
    GameId gk = e.ops.split_sum(t.g, t.k);
    if (!e.solver.equal_values(gh, gk))
      report.failures.push_back({{describe(e.arena, t.g), describe(e.arena, t.h), describe(e.arena, t.k)},
                                 "grundy " + std::to_string(e.solver.grundy(gh)),
                                 "grundy " + std::to_string(e.solver.grundy(gk))});
  }
  return report;
}

// G o H + *n = 0  <=>  (G + *n) o H = 0.
inline VerificationReport check_ner(Engine& e, std::span<const NerCase> cases,
                                    CheckMode mode = CheckMode::kExhaustive) {
  auto report = detail::start_report("ner", mode);
  ReportTimer timer(report);
  for (const NerCase& c : cases) {
    ++report.cases;
    GameId star = e.arena.nimber(c.n);
    Outcome left = e.solver.outcome(e.arena.disjunctive_sum(e.ops.split_sum(c.g, c.h), star));
    Outcome right = e.solver.outcome(e.ops.split_sum(e.arena.disjunctive_sum(c.g, star), c.h));
    if (left != right)
      report.failures.push_back(
          {{describe(e.arena, c.g), describe(e.arena, c.h), "star(" + std::to_string(c.n) + ")"},
           "split(G,H)+*n is " + detail::outcome_str(left),
           "split(G+*n,H) is " + detail::outcome_str(right)});
  }
  return report;
}

// For a Nim form G with G o H an N-position, any two winning pile moves
// a -> a' and b -> b' in distinct piles satisfy a ^ a' = b ^ b'.
inline VerificationReport check_sum_rule(Engine& e, std::span<const SumRuleCase> cases,
                                         CheckMode mode = CheckMode::kExhaustive) {
  auto report = detail::start_report("sum-rule", mode);
  ReportTimer timer(report);
  struct PileMove {
    std::size_t index;
    std::uint32_t from, to;
  };
  for (const SumRuleCase& c : cases) {
    std::vector<std::uint32_t> piles = canonical_piles(c.piles);
    GameId g = e.arena.nim_position(piles);
    if (e.solver.outcome(e.ops.split_sum(g, c.h)) == Outcome::kP) {
      ++report.excluded;
      continue;
    }
    ++report.cases;
    std::vector<PileMove> winning;
    for (std::size_t i = 0; i < piles.size(); ++i) {
      for (std::uint32_t to = 0; to < piles[i]; ++to) {
        std::vector<std::uint32_t> next = piles;
        next[i] = to;
        GameId child = e.ops.split_sum(e.arena.nim_position(next), c.h);
        if (e.solver.outcome(child) == Outcome::kP) winning.push_back({i, piles[i], to});
      }
    }
    bool reported = false;
    for (std::size_t x = 0; x < winning.size() && !reported; ++x) {
      for (std::size_t y = x + 1; y < winning.size() && !reported; ++y) {
        const PileMove& a = winning[x];
        const PileMove& b = winning[y];
        if (a.index == b.index || (a.from ^ a.to) == (b.from ^ b.to)) continue;
        report.failures.push_back(
            {{describe(e.arena, g), describe(e.arena, c.h)},
             "equal nim-sums for winning moves in distinct piles",
             std::to_string(a.from) + "->" + std::to_string(a.to) + " (" +
                 std::to_string(a.from ^ a.to) + ") vs " + std::to_string(b.from) + "->" +
                 std::to_string(b.to) + " (" + std::to_string(b.from ^ b.to) + ")"});
        reported = true;
      }
    }
  }
  return report;
}

// Nimber-like forms are nimbers.
inline VerificationReport check_nimber_characterization(Engine& e, std::span<const GameId> forms,
                                                        CheckMode mode = CheckMode::kExhaustive) {
  auto report = detail::start_report("nimber-characterization", mode);
  ReportTimer timer(report);
  std::unordered_map<std::uint32_t, bool> memo;
  for (GameId g : forms) {
    ++report.cases;
    if (!is_nimber_like(e.arena, g, memo)) continue;
    const auto k = static_cast<Nimber>(e.arena.options(g).size());
    if (e.arena.nimber(k) != g)
      report.failures.push_back({{describe(e.arena, g)}, "star(" + std::to_string(k) + ")",
                                 "nimber-like form that is not a nimber"});
  }
  return report;
}

// (G*)* = G as values.
inline VerificationReport check_double_pass(Engine& e, std::span<const GameId> forms,
                                            CheckMode mode = CheckMode::kExhaustive) {
  auto report = detail::start_report("double-pass", mode);
  ReportTimer timer(report);
  for (GameId g : forms) {
    ++report.cases;
    GameId twice = e.ops.pass_op(e.ops.pass_op(g));
    if (!e.solver.equal_values(twice, g))
      report.failures.push_back({{describe(e.arena, g)}, "grundy " + std::to_string(e.solver.grundy(g)),
                                 "grundy " + std::to_string(e.solver.grundy(twice))});
  }
  return report;
}

// Pass-Grundy of a single pile n is n+1 for odd n and n-1 for even n >= 2.
inline VerificationReport check_single_pile(NimPassSolver& solver, std::uint32_t max_pile) {
  auto report = detail::start_report("single-pile", CheckMode::kExhaustive);
  ReportTimer timer(report);
  for (std::uint32_t n = 0; n <= max_pile; ++n) {
    ++report.cases;
    const Nimber expected = n == 0 ? 0 : (n % 2 == 1 ? n + 1 : n - 1);
    const Nimber got = solver.grundy(NimPassState::make({n}, true));
    if (got != expected)
      report.failures.push_back({{"pass(nim(" + std::to_string(n) + "))"},
                                 "grundy " + std::to_string(expected), "grundy " + std::to_string(got)});
  }
  return report;
}

// Two-pile P-positions of Nim with a Pass are (0,0) and (a,a+1) for odd a.
inline VerificationReport check_two_pile_ppos(NimPassSolver& solver, std::uint32_t max) {
  auto report = detail::start_report("two-pile", CheckMode::kExhaustive);
  ReportTimer timer(report);
  GrundyTable table = two_pile_table(solver, max);
  for (std::uint32_t a = 0; a <= max; ++a) {
    for (std::uint32_t b = a; b <= max; ++b) {
      ++report.cases;
      const bool expected = (a == 0 && b == 0) || (b == a + 1 && a % 2 == 1);
      const bool got = table.at(a, b) == 0;
      if (got != expected)
        report.failures.push_back(
            {{"pass(nim(" + std::to_string(a) + "," + std::to_string(b) + "))"},
             expected ? "P" : "N", got ? "P" : "N"});
    }
  }
  return report;
}

// Every Nim position with at most `max_piles` piles each of size 1..max_size,
// piles sorted; includes the empty position.
inline std::vector<std::vector<std::uint32_t>> small_nim_positions(std::size_t max_piles,
                                                                   std::uint32_t max_size) {
  std::vector<std::vector<std::uint32_t>> out{{}};
  std::vector<std::vector<std::uint32_t>> frontier{{}};
  for (std::size_t count = 1; count <= max_piles; ++count) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& piles : frontier) {
      const std::uint32_t lo = piles.empty() ? 1 : piles.back();
      for (std::uint32_t p = lo; p <= max_size; ++p) {
        auto grown = piles;
        grown.push_back(p);
        next.push_back(grown);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{
      "p-closure", "mixed-n",          "split-assoc", "right-congruence",
      "ner",       "sum-rule",         "nimber-characterization",
      "double-pass", "three-pile",     "single-pile", "two-pile"};
  return names;
}

// Runs the selected check ("all" for every check): an exhaustive sweep, then
// cfg.samples seeded random cases where the check has a random mode.
// Pairwise and triple sweeps use day min(exhaustive_birthday, 3); unary sweeps
// use day min(exhaustive_birthday + 1, 4).
inline std::vector<VerificationReport> run_suite(Engine& e, std::string_view selection,
                                                 const GenConfig& cfg) {
  std::vector<std::string> selected;
  if (selection == "all") {
    selected = known_checks();
  } else if (std::find(known_checks().begin(), known_checks().end(), selection) !=
             known_checks().end()) {
    selected.emplace_back(selection);
  } else {
    throw UnknownCheckError("unknown check '" + std::string(selection) + "'");
  }

  const Birthday pair_day = std::min<Birthday>(cfg.exhaustive_birthday, 3);
  const Birthday unary_day = std::min<Birthday>(cfg.exhaustive_birthday + 1, kMaxEnumerableBirthday);
  const std::vector<GameId> small = enumerate_by_birthday(e.arena, pair_day);

  auto all_pairs = [&] {
    std::vector<std::pair<GameId, GameId>> pairs;
    for (GameId g : small)
      for (GameId h : small) pairs.emplace_back(g, h);
    return pairs;
  };
  auto all_triples = [&] {
    std::vector<GameTriple> triples;
    for (GameId g : small)
      for (GameId h : small)
        for (GameId k : small) triples.push_back({g, h, k});
    return triples;
  };

  std::vector<VerificationReport> reports;
  for (const std::string& name : selected) {
    std::mt19937_64 rng(cfg.seed);
    auto rand_game = [&] { return random_game(e.arena, cfg, rng); };
    // Shifts a form's value to `target` by adding the right nimber.
    auto with_value = [&](GameId g, Nimber target) {
      const Nimber v = e.solver.grundy(g);
      return v == target ? g : e.arena.disjunctive_sum(g, e.arena.nimber(v ^ target));
    };
    auto finish_random = [&](VerificationReport r) {
      r.seed = cfg.seed;
      reports.push_back(std::move(r));
    };

    if (name == "p-closure" || name == "mixed-n") {
      const bool closure = name == "p-closure";
      auto pairs = all_pairs();
      reports.push_back(closure ? check_p_closure(e, pairs) : check_mixed_n(e, pairs));
      if (cfg.samples == 0) continue;
      std::vector<std::pair<GameId, GameId>> sampled;
      for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        GameId g = rand_game();
        GameId h = rand_game();
        if (closure) {
          sampled.emplace_back(with_value(g, 0), with_value(h, 0));
        } else {
          // one side P, the other N; G stays non-empty so the claim applies
          if (g == kEmpty) g = e.arena.nimber(1);
          const bool g_is_p = rng() & 1;
          GameId gp = g_is_p ? with_value(g, 0) : g;
          GameId hp = g_is_p ? h : with_value(h, 0);
          if (g_is_p && e.solver.grundy(hp) == 0) hp = with_value(hp, 1);
          if (!g_is_p && e.solver.grundy(gp) == 0) gp = with_value(gp, 1);
          sampled.emplace_back(gp, hp);
        }
      }
      finish_random(closure ? check_p_closure(e, sampled, CheckMode::kRandom)
                            : check_mixed_n(e, sampled, CheckMode::kRandom));
    } else if (name == "split-assoc" || name == "right-congruence") {
      const bool assoc = name == "split-assoc";
      auto triples = all_triples();
      reports.push_back(assoc ? check_split_assoc(e, triples) : check_right_congruence(e, triples));
      if (cfg.samples == 0) continue;
      std::vector<GameTriple> sampled;
      for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        GameId g = rand_game();
        GameId h = rand_game();
        GameId k = rand_game();
        if (!assoc) k = with_value(k, e.solver.grundy(h));
        sampled.push_back({g, h, k});
      }
      finish_random(assoc ? check_split_assoc(e, sampled, CheckMode::kRandom)
                          : check_right_congruence(e, sampled, CheckMode::kRandom));
    } else if (name == "ner") {
      std::vector<NerCase> cases;
      for (GameId g : small)
        for (GameId h : small)
          for (Nimber n = 0; n <= 3; ++n) cases.push_back({g, h, n});
      reports.push_back(check_ner(e, cases));
      if (cfg.samples == 0) continue;
      std::vector<NerCase> sampled;
      std::uniform_int_distribution<Nimber> pick_n(0, 7);
      for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        GameId g = rand_game();
        GameId h = rand_game();
        sampled.push_back({g, h, pick_n(rng)});
      }
      finish_random(check_ner(e, sampled, CheckMode::kRandom));
    } else if (name == "sum-rule") {
      std::vector<SumRuleCase> cases;
      for (const auto& piles : small_nim_positions(3, 6))
        for (GameId h : small) cases.push_back({piles, h});
      reports.push_back(check_sum_rule(e, cases));
      if (cfg.samples == 0) continue;
      std::vector<SumRuleCase> sampled;
      std::uniform_int_distribution<std::uint32_t> pile_count(0, 3);
      std::uniform_int_distribution<std::uint32_t> pile_size(1, 6);
      for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        std::vector<std::uint32_t> piles(pile_count(rng));
        for (auto& p : piles) p = pile_size(rng);
        sampled.push_back({std::move(piles), rand_game()});
      }
      finish_random(check_sum_rule(e, sampled, CheckMode::kRandom));
    } else if (name == "nimber-characterization" || name == "double-pass") {
      const bool characterization = name == "nimber-characterization";
      std::vector<GameId> forms = enumerate_by_birthday(e.arena, unary_day);
      if (!characterization)
        for (const auto& piles : small_nim_positions(3, 6)) forms.push_back(e.arena.nim_position(piles));
      reports.push_back(characterization ? check_nimber_characterization(e, forms)
                                         : check_double_pass(e, forms));
      if (cfg.samples == 0) continue;
      std::vector<GameId> sampled;
      for (std::uint64_t i = 0; i < cfg.samples; ++i) sampled.push_back(rand_game());
      finish_random(characterization
                        ? check_nimber_characterization(e, sampled, CheckMode::kRandom)
                        : check_double_pass(e, sampled, CheckMode::kRandom));
    } else if (name == "three-pile") {
      NimPassSolver solver;
      reports.push_back(cross_check_three_pile(solver, 12));
    } else if (name == "single-pile") {
      NimPassSolver solver;
      reports.push_back(check_single_pile(solver, 200));
    } else if (name == "two-pile") {
      NimPassSolver solver;
      reports.push_back(check_two_pile_ppos(solver, 50));
    }
  }
  return reports;
}

}  // namespace splitsum
