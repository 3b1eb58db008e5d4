#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "splitsum/nim_pass.hpp"
#include "splitsum/report.hpp"

namespace splitsum {

// Byte-exact output formats. Every document ends with exactly one newline and
// CSV fields are never quoted.
enum class OutputFormat { kCsv, kJson };

inline OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

// Rows (a, b, grundy) for 0 <= a <= b <= max in lexicographic order.
inline std::string format_table(const GrundyTable& table, OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    std::string out = "a,b,grundy\n";
    for (std::uint32_t a = 0; a <= table.max(); ++a)
      for (std::uint32_t b = a; b <= table.max(); ++b)
        out += std::to_string(a) + ',' + std::to_string(b) + ',' + std::to_string(table.at(a, b)) + '\n';
    return out;
  }
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::uint32_t a = 0; a <= table.max(); ++a)
    for (std::uint32_t b = a; b <= table.max(); ++b)
      entries.push_back({{"a", a}, {"b", b}, {"grundy", table.at(a, b)}});
  nlohmann::ordered_json doc{{"max", table.max()}, {"entries", std::move(entries)}};
  return doc.dump() + '\n';
}

inline std::string format_triples(const std::set<Triple>& triples, std::uint32_t max,
                                  std::string_view method, OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    std::string out = "a,b,c\n";
    for (const Triple& t : triples)
      out += std::to_string(t[0]) + ',' + std::to_string(t[1]) + ',' + std::to_string(t[2]) + '\n';
    return out;
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Triple& t : triples) rows.push_back({{"a", t[0]}, {"b", t[1]}, {"c", t[2]}});
  nlohmann::ordered_json doc{{"max", max}, {"method", method}, {"triples", std::move(rows)}};
  return doc.dump() + '\n';
}

inline std::string format_reports(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const VerificationReport& r : reports) doc.push_back(to_json(r));
  return doc.dump(2) + '\n';
}

}  // namespace splitsum
