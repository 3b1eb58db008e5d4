// splitsum: query impartial game forms, emit Nim-with-a-pass tables and run
// the theorem verifier.
//
// Exit codes: 0 success, 1 verification or cross-check failure, 2 usage or
// parse error, 3 resource limit or I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitsum/engine.hpp"
#include "splitsum/expr.hpp"
#include "splitsum/formats.hpp"
#include "splitsum/nim_pass.hpp"
#include "splitsum/verifier.hpp"

namespace {

using namespace splitsum;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  if (!out.flush()) throw IoError("failed writing '" + path + "'");
}

enum class Query { kGrundy, kOutcome, kMoves };

int run_query(Query query, const std::string& text, bool json) {
  GameExpr expr = parse_expr(text);
  Engine engine;
  GameId g = eval_expr(engine, expr);
  const Nimber value = engine.solver.grundy(g);
  std::vector<std::string> moves;
  for (GameId m : engine.solver.winning_moves(g)) moves.push_back(describe(engine.arena, m));

  if (json) {
    nlohmann::ordered_json doc{{"expr", format_expr(expr)},
                               {"grundy", value},
                               {"outcome", std::string(to_string(engine.solver.outcome(g)))},
                               {"winning_moves", moves}};
    std::cout << doc.dump() << '\n';
    return kExitOk;
  }
  switch (query) {
    case Query::kGrundy:
      std::cout << value << '\n';
      break;
    case Query::kOutcome:
      std::cout << engine.solver.outcome(g) << '\n';
      break;
    case Query::kMoves:
      for (const std::string& m : moves) std::cout << m << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split sums, the pass operator and Nim with a Pass"};
  app.require_subcommand(1);

  bool json = false;
  app.add_flag("--json", json, "Machine-readable output for grundy/outcome/moves");

  std::string expr_text;
  auto* grundy = app.add_subcommand("grundy", "Print the Grundy value of an expression");
  auto* outcome = app.add_subcommand("outcome", "Print P or N for an expression");
  auto* moves = app.add_subcommand("moves", "List winning moves of an expression");
  for (auto* sub : {grundy, outcome, moves}) {
    sub->add_option("expr", expr_text, "Game expression, e.g. pass(nim(3,4))")->required();
    sub->add_flag("--json", json, "Machine-readable output");
  }

  std::string kind;
  std::uint32_t max = 0;
  std::string format = "csv";
  std::string out_path;
  auto* table = app.add_subcommand("table", "Two-pile Nim with a Pass Grundy table");
  table->add_option("kind", kind)->required()->check(CLI::IsMember({"two-pass"}));
  table->add_option("--max", max, "Largest pile size")->required();
  table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", out_path, "Output file (default stdout)");

  std::string method = "ner";
  auto* ppos = app.add_subcommand("ppos", "Three-pile Nim with a Pass P-positions");
  ppos->add_option("kind", kind)->required()->check(CLI::IsMember({"three-pass"}));
  ppos->add_option("--max", max, "Largest pile size for a and b (and c for direct)")->required();
  ppos->add_option("--method", method)->check(CLI::IsMember({"ner", "direct", "both"}));
  ppos->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  ppos->add_option("--out", out_path, "Output file (default stdout)");

  std::string selection;
  GenConfig cfg;
  std::string report_path;
  auto* verify = app.add_subcommand("verify", "Run theorem checks");
  verify->add_option("check", selection, "Check name or 'all'")->required();
  verify->add_option("--exhaustive-birthday", cfg.exhaustive_birthday,
                     "Day bound for exhaustive pair/triple sweeps (capped at 3)");
  verify->add_option("--samples", cfg.samples, "Random cases per check");
  verify->add_option("--seed", cfg.seed, "Random seed");
  verify->add_option("--report", report_path, "Write the JSON report here (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (grundy->parsed()) return run_query(Query::kGrundy, expr_text, json);
    if (outcome->parsed()) return run_query(Query::kOutcome, expr_text, json);
    if (moves->parsed()) return run_query(Query::kMoves, expr_text, json);

    if (table->parsed()) {
      NimPassSolver solver;
      emit(format_table(two_pile_table(solver, max), parse_format(format)), out_path);
      return kExitOk;
    }

    if (ppos->parsed()) {
      NimPassSolver solver;
      const OutputFormat fmt = parse_format(format);
      if (method == "ner") {
        emit(format_triples(three_pile_ppos_ner(solver, max), max, method, fmt), out_path);
        return kExitOk;
      }
      std::set<Triple> direct = three_pile_ppos_direct(solver, max);
      emit(format_triples(direct, max, method, fmt), out_path);
      if (method == "both") {
        VerificationReport report = cross_check_three_pile(solver, max);
        if (!report.passed()) {
          for (const Failure& f : report.failures)
            std::cerr << "mismatch " << f.inputs.at(0) << ": " << f.expected << " vs " << f.actual
                      << '\n';
          return kExitCheckFailed;
        }
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      Engine engine;
      std::vector<VerificationReport> reports = run_suite(engine, selection, cfg);
      emit(format_reports(reports), report_path);
      bool ok = true;
      for (const VerificationReport& r : reports) {
        ok = ok && r.passed();
        if (!report_path.empty())
          std::cout << (r.passed() ? "PASS " : "FAIL ") << r.theorem << " [" << to_string(r.mode)
                    << "] cases=" << r.cases << " failures=" << r.failures.size() << '\n';
      }
      return ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownCheckError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MalformedInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource limit: out of memory\n";
    return kExitResource;
  }
  return kExitUsage;
}
