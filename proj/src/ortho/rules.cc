// ortho/rules.cc

// Copyright 2026  The Kahako Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "ortho/rules.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include "base/errors.h"
#include "ortho/normalize.h"

namespace kahako {
namespace {

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::optional<char32_t> ParseSide(const std::string &field,
                                  const std::string &line) {
  if (field == "<eps>") return std::nullopt;
  if (field == "<space>") return U' ';
  const std::u32string text = Normalize(field);
  if (text.size() != 1) {
    throw FormatError("rule side must be one character or <eps>: " + line);
  }
  return text[0];
}

}  // namespace

RuleSet ParseRuleSet(std::istream &is) {
  RuleSet rules;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::vector<std::string> f = SplitTabs(line);
    if (f.size() != 3 && f.size() != 4) {
      throw FormatError("rule line " + std::to_string(line_no) +
                        " needs 3 or 4 tab-separated fields");
    }
    Rule rule;
    rule.from = ParseSide(f[0], line);
    rule.to = ParseSide(f[1], line);
    if (!rule.from && !rule.to) {
      throw FormatError("rule line " + std::to_string(line_no) +
                        " maps epsilon to epsilon");
    }
    char *end = nullptr;
    const double w = std::strtod(f[2].c_str(), &end);
    if (end == f[2].c_str() || *end != '\0' || !(w >= 0.0) ||
        std::isinf(w)) {
      throw FormatError("rule line " + std::to_string(line_no) +
                        " needs a finite non-negative weight");
    }
    rule.weight = Weight(w);
    if (f.size() == 4) {
      if (f[3] != "guard=vowel") {
        throw FormatError("rule line " + std::to_string(line_no) +
                          ": unknown guard '" + f[3] + "'");
      }
      rule.guard = RuleGuard::kNextIsVowel;
    }
    rules.push_back(rule);
  }
  return rules;
}

RuleSet ReadRuleSetFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open rule file: " + path);
  return ParseRuleSet(is);
}

}  // namespace kahako
