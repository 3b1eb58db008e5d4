#include "splitsum/formats.hpp"

#include <gtest/gtest.h>

namespace {

using namespace splitsum;

TEST(TableFormat, CsvMaxOne) {
  NimPassSolver solver;
  EXPECT_EQ(format_table(two_pile_table(solver, 1), OutputFormat::kCsv),
            "a,b,grundy\n0,0,0\n0,1,2\n1,1,1\n");
}

TEST(TableFormat, CsvMaxZero) {
  NimPassSolver solver;
  EXPECT_EQ(format_table(two_pile_table(solver, 0), OutputFormat::kCsv), "a,b,grundy\n0,0,0\n");
}

TEST(TableFormat, Json) {
  NimPassSolver solver;
  EXPECT_EQ(format_table(two_pile_table(solver, 1), OutputFormat::kJson),
            "{\"max\":1,\"entries\":[{\"a\":0,\"b\":0,\"grundy\":0},{\"a\":0,\"b\":1,\"grundy\":2},"
            "{\"a\":1,\"b\":1,\"grundy\":1}]}\n");
}

TEST(TableFormat, ByteDeterministic) {
  NimPassSolver a;
  NimPassSolver b;
  EXPECT_EQ(format_table(two_pile_table(a, 30), OutputFormat::kCsv),
            format_table(two_pile_table(b, 30), OutputFormat::kCsv));
}

TEST(TriplesFormat, CsvAndJson) {
  std::set<Triple> triples{{0, 0, 0}, {1, 1, 1}};
  EXPECT_EQ(format_triples(triples, 1, "direct", OutputFormat::kCsv), "a,b,c\n0,0,0\n1,1,1\n");
  EXPECT_EQ(format_triples(triples, 1, "direct", OutputFormat::kJson),
            "{\"max\":1,\"method\":\"direct\",\"triples\":[{\"a\":0,\"b\":0,\"c\":0},"
            "{\"a\":1,\"b\":1,\"c\":1}]}\n");
}

TEST(ReportFormat, SchemaFields) {
  VerificationReport r;
  r.theorem = "ner";
  r.mode = CheckMode::kRandom;
  r.cases = 3;
  r.seed = 7;
  r.failures.push_back({{"star(1)", "empty"}, "P", "N"});
  auto j = nlohmann::ordered_json::parse(format_reports({r}));
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["theorem"], "ner");
  EXPECT_EQ(j[0]["mode"], "random");
  EXPECT_EQ(j[0]["verdict"], "fail");
  EXPECT_EQ(j[0]["seed"], 7);
  EXPECT_EQ(j[0]["failures"][0]["inputs"][1], "empty");
  EXPECT_TRUE(j[0].contains("elapsed_ms"));
}

TEST(Format, UnknownNameRejected) { EXPECT_THROW(parse_format("xml"), std::invalid_argument); }

}  // namespace
