#pragma once

// Presentation files:
//
//   # comment
//   generators: 2
//   relations:
//     2 0
//     0, 6
//
// One relation per line after "relations:"; entries separated by spaces or commas,
// optionally wrapped in [ ]. An empty relations block is the free abelian group.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "errors.hpp"
#include "presentation.hpp"

namespace sumcolour {

inline Presentation parse_presentation(std::istream& in, const std::string& source = "<input>") {
  auto fail = [&](std::size_t line, const std::string& msg) -> ParseError {
    return ParseError(source + ":" + std::to_string(line) + ": " + msg);
  };
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };

  Presentation p;
  bool have_generators = false, in_relations = false;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.rfind("generators:", 0) == 0) {
      if (have_generators) throw fail(lineno, "field 'generators' given twice");
      std::string v = trim(line.substr(11));
      if (v.empty() || !std::all_of(v.begin(), v.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw fail(lineno, "field 'generators' must be a nonnegative integer, got '" + v + "'");
      }
      p.n_generators = std::stoul(v);
      have_generators = true;
      in_relations = false;
      continue;
    }
    if (line.rfind("relations:", 0) == 0) {
      if (!have_generators) throw fail(lineno, "field 'relations' before 'generators'");
      in_relations = true;
      line = trim(line.substr(10));
      if (line.empty() || line == "[]") continue;
    }
    if (!in_relations) throw fail(lineno, "unexpected content '" + line + "'");

    for (auto& c : line) {
      if (c == ',' || c == '[' || c == ']') c = ' ';
    }
    std::istringstream ls(line);
    std::vector<Integer> row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::invalid_argument&) {
        throw fail(lineno, "relation entry '" + tok + "' is not an integer");
      }
    }
    if (row.empty()) continue;
    if (row.size() != p.n_generators) {
      throw fail(lineno, "relation has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(p.n_generators));
    }
    p.relations.push_back(std::move(row));
  }
  if (!have_generators) throw fail(lineno, "missing field 'generators'");
  return p;
}

inline Presentation parse_presentation(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return parse_presentation(in, source);
}

inline Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return parse_presentation(in, path);
}

}  // namespace sumcolour
