#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "splitsum/arena.hpp"
#include "splitsum/engine.hpp"

namespace splitsum {

// Surface syntax for game forms:
//
//   expr := "empty" | "star(" NAT ")" | "nim(" NAT ("," NAT)* ")"
//         | "pass(" expr ")" | "split(" expr "," expr ")"
//         | "sum(" expr ("," expr)+ ")" | "{" [expr ("," expr)*] "}"
//
// Whitespace between tokens is ignored. The braces form is a literal option
// set, so every interned form has a printable expression.
struct GameExpr {
  enum class Kind { kEmpty, kStar, kNim, kPass, kSplit, kSum, kOptions };

  Kind kind = Kind::kEmpty;
  std::vector<std::uint32_t> numbers;  // kStar: one value, kNim: piles
  std::vector<GameExpr> children;

  static GameExpr empty() { return {}; }
  static GameExpr star(std::uint32_t n) { return {Kind::kStar, {n}, {}}; }
  static GameExpr nim(std::vector<std::uint32_t> piles) { return {Kind::kNim, std::move(piles), {}}; }
  static GameExpr pass(GameExpr e) { return {Kind::kPass, {}, {std::move(e)}}; }
  static GameExpr split(GameExpr g, GameExpr h) {
    return {Kind::kSplit, {}, {std::move(g), std::move(h)}};
  }
  static GameExpr sum(std::vector<GameExpr> terms) { return {Kind::kSum, {}, std::move(terms)}; }
  static GameExpr options(std::vector<GameExpr> opts) { return {Kind::kOptions, {}, std::move(opts)}; }

  friend bool operator==(const GameExpr&, const GameExpr&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected " +
                           expected),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GameExpr parse() {
    GameExpr e = expr(0);
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "end of input");
    return e;
  }

 private:
  static constexpr std::size_t kMaxDepth = 4096;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(pos_, std::string("'") + c + "'");
  }

  std::uint32_t natural() {
    skip_space();
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max())
        throw ParseError(start, "natural number below 2^32 (numeric overflow)");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "natural number");
    return static_cast<std::uint32_t>(value);
  }

  GameExpr expr(std::size_t depth) {
    if (depth > kMaxDepth) throw ParseError(pos_, "shallower nesting");
    skip_space();
    const std::size_t start = pos_;
    if (accept('{')) {
      std::vector<GameExpr> opts;
      if (accept('}')) return GameExpr::options({});
      do opts.push_back(expr(depth + 1));
      while (accept(','));
      expect('}');
      return GameExpr::options(std::move(opts));
    }

    while (pos_ < text_.size() && std::islower(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word == "empty") return GameExpr::empty();
    if (word == "star") {
      expect('(');
      std::uint32_t n = natural();
      expect(')');
      return GameExpr::star(n);
    }
    if (word == "nim") {
      expect('(');
      std::vector<std::uint32_t> piles{natural()};
      while (accept(',')) piles.push_back(natural());
      expect(')');
      return GameExpr::nim(std::move(piles));
    }
    if (word == "pass") {
      expect('(');
      GameExpr inner = expr(depth + 1);
      expect(')');
      return GameExpr::pass(std::move(inner));
    }
    if (word == "split") {
      expect('(');
      GameExpr g = expr(depth + 1);
      expect(',');
      GameExpr h = expr(depth + 1);
      expect(')');
      return GameExpr::split(std::move(g), std::move(h));
    }
    if (word == "sum") {
      expect('(');
      std::vector<GameExpr> terms{expr(depth + 1)};
      expect(',');
      do terms.push_back(expr(depth + 1));
      while (accept(','));
      expect(')');
      return GameExpr::sum(std::move(terms));
    }
    throw ParseError(start, "one of empty, star, nim, pass, split, sum, '{'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void join_into(std::string& out, const std::vector<std::uint32_t>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
}

}  // namespace detail

inline GameExpr parse_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline std::string format_expr(const GameExpr& e) {
  std::string out;
  auto list = [&](const std::vector<GameExpr>& items) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ',';
      out += format_expr(items[i]);
    }
  };
  switch (e.kind) {
    case GameExpr::Kind::kEmpty:
      return "empty";
    case GameExpr::Kind::kStar:
      return "star(" + std::to_string(e.numbers.at(0)) + ")";
    case GameExpr::Kind::kNim:
      out = "nim(";
      detail::join_into(out, e.numbers);
      return out + ")";
    case GameExpr::Kind::kPass:
      return "pass(" + format_expr(e.children.at(0)) + ")";
    case GameExpr::Kind::kSplit:
      return "split(" + format_expr(e.children.at(0)) + "," + format_expr(e.children.at(1)) + ")";
    case GameExpr::Kind::kSum:
      out = "sum(";
      list(e.children);
      return out + ")";
    case GameExpr::Kind::kOptions:
      out = "{";
      list(e.children);
      return out + "}";
  }
  return out;
}

inline GameId eval_expr(Engine& engine, const GameExpr& e) {
  switch (e.kind) {
    case GameExpr::Kind::kEmpty:
      return engine.arena.empty();
    case GameExpr::Kind::kStar:
      return engine.arena.nimber(e.numbers.at(0));
    case GameExpr::Kind::kNim:
      return engine.arena.nim_position(e.numbers);
    case GameExpr::Kind::kPass:
      return engine.ops.pass_op(eval_expr(engine, e.children.at(0)));
    case GameExpr::Kind::kSplit: {
      GameId g = eval_expr(engine, e.children.at(0));
      GameId h = eval_expr(engine, e.children.at(1));
      return engine.ops.split_sum(g, h);
    }
    case GameExpr::Kind::kSum: {
      GameId acc = eval_expr(engine, e.children.at(0));
      for (std::size_t i = 1; i < e.children.size(); ++i)
        acc = engine.arena.disjunctive_sum(acc, eval_expr(engine, e.children[i]));
      return acc;
    }
    case GameExpr::Kind::kOptions: {
      std::vector<GameId> opts;
      opts.reserve(e.children.size());
      for (const GameExpr& child : e.children) opts.push_back(eval_expr(engine, child));
      return engine.arena.mk_game(opts);
    }
  }
  throw MalformedInputError("unknown expression kind");
}

inline GameId eval_expr(Engine& engine, std::string_view text) {
  return eval_expr(engine, parse_expr(text));
}

// Prints an interned form in expression syntax, preferring the constructor
// that first produced it (star, nim, pass, split, sum) over a literal option
// set. Re-evaluating the result yields an equivalent form.
inline std::string describe(const Arena& arena, GameId g) {
  if (g == kEmpty) return "empty";
  if (auto n = arena.as_nimber(g)) return "star(" + std::to_string(*n) + ")";
  if (const Provenance* p = arena.provenance(g)) {
    switch (p->origin) {
      case Origin::kNim: {
        std::string out = "nim(";
        detail::join_into(out, p->piles);
        return out + ")";
      }
      case Origin::kPass:
        return "pass(" + describe(arena, p->lhs) + ")";
      case Origin::kSplit:
        return "split(" + describe(arena, p->lhs) + "," + describe(arena, p->rhs) + ")";
      case Origin::kSum:
        return "sum(" + describe(arena, p->lhs) + "," + describe(arena, p->rhs) + ")";
    }
  }
  std::string out = "{";
  auto opts = arena.options(g);
  for (std::size_t i = 0; i < opts.size(); ++i) {
    if (i) out += ',';
    out += describe(arena, opts[i]);
  }
  return out + "}";
}

}  // namespace splitsum
