// ortho/rules.h

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

#ifndef KAHAKO_ORTHO_RULES_H_
#define KAHAKO_ORTHO_RULES_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fst/wfst.h"

namespace kahako {

enum class RuleGuard { kNone, kNextIsVowel };

// One rewrite arc added at the hub of an orthography transducer. An empty
// `from` or `to` stands for epsilon; never both.
struct Rule {
  std::optional<char32_t> from;
  std::optional<char32_t> to;
  Weight weight;
  RuleGuard guard = RuleGuard::kNone;
};

using RuleSet = std::vector<Rule>;

// Rule file: "FROM<TAB>TO<TAB>WEIGHT[<TAB>guard=vowel]" per line, "<eps>"
// for epsilon, "<space>" for a space, '#' starts a comment. Throws
// FormatError on malformed lines, epsilon-to-epsilon rules or negative
// weights.
RuleSet ParseRuleSet(std::istream &is);
RuleSet ReadRuleSetFile(const std::string &path);

}  // namespace kahako

#endif  // KAHAKO_ORTHO_RULES_H_
