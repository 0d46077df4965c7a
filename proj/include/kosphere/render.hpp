#pragma once

#include <sstream>
#include <string>

#include "json_io.hpp"
#include "sphere_invariants.hpp"

namespace kosphere {

enum class OutputFormat { Text, Markdown, Csv, Json };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "text")
    return OutputFormat::Text;
  if (s == "md")
    return OutputFormat::Markdown;
  if (s == "csv")
    return OutputFormat::Csv;
  if (s == "json")
    return OutputFormat::Json;
  return std::nullopt;
}

/// 8x8 table indexed by (n mod 8, m mod 8).
inline std::string render_table(const PhiTable &t, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
  case OutputFormat::Markdown:
    os << "| n\\m |";
    for (int m = 0; m < 8; ++m)
      os << ' ' << m << " |";
    os << "\n|---|";
    for (int m = 0; m < 8; ++m)
      os << "---|";
    os << '\n';
    for (int n = 0; n < 8; ++n) {
      os << "| " << n << " |";
      for (int m = 0; m < 8; ++m)
        os << ' ' << to_string(t[n][m]) << " |";
      os << '\n';
    }
    break;
  case OutputFormat::Csv:
    os << "n\\m";
    for (int m = 0; m < 8; ++m)
      os << ',' << m;
    os << '\n';
    for (int n = 0; n < 8; ++n) {
      os << n;
      for (int m = 0; m < 8; ++m)
        os << ',' << (t[n][m] == PhiValue::Infinite ? "inf" : to_string(t[n][m]));
      os << '\n';
    }
    break;
  case OutputFormat::Json: {
    json rows = json::array();
    for (int n = 0; n < 8; ++n) {
      json row = json::array();
      for (int m = 0; m < 8; ++m)
        row.push_back(phi_json(t[n][m]));
      rows.push_back(std::move(row));
    }
    os << json{{"rows", std::move(rows)}}.dump() << '\n';
    break;
  }
  case OutputFormat::Text:
    os << "n\\m";
    for (int m = 0; m < 8; ++m)
      os << ' ' << m;
    os << '\n';
    for (int n = 0; n < 8; ++n) {
      os << "  " << n;
      for (int m = 0; m < 8; ++m)
        os << ' ' << to_string(t[n][m]);
      os << '\n';
    }
    break;
  }
  return os.str();
}

} // namespace kosphere
