// decoder/fst-decoder.cc

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

#include "decoder/fst-decoder.h"

#include "fst/fst-algorithms.h"

namespace kahako {

Wfst BuildInputLattice(std::span<const Label> input, const Wfst &rules) {
  return Trim(Compose(ChainAcceptor(input, rules.InputSymbolsPtr()), rules));
}

std::u32string RestoreUnknowns(const SymbolTable &syms,
                               std::u32string_view input,
                               std::span<const Label> output) {
  std::u32string unknown;
  for (char32_t c : input) {
    if (!syms.Contains(c)) unknown.push_back(c);
  }
  size_t next = 0;
  std::u32string text;
  for (Label l : output) {
    if (l == kEpsilon) continue;
    if (l == kUnk) {
      text.push_back(next < unknown.size() ? unknown[next++] : U'�');
    } else if (syms.IsReserved(l)) {
      text.push_back(U'�');
    } else {
      text.push_back(syms.Character(l));
    }
  }
  return text;
}

DecodeResult DecodeFst(std::u32string_view input, const Wfst &rules,
                       const Wfst &lm) {
  const std::vector<Label> labels = rules.InputSymbols().MapText(input);
  const Wfst search = Trim(Compose(BuildInputLattice(labels, rules), lm));
  const Path best = ShortestPath(search);
  DecodeResult result;
  result.olabels = best.olabels;
  result.cost = best.cost;
  result.text = RestoreUnknowns(lm.OutputSymbols(), input, best.olabels);
  return result;
}

}  // namespace kahako
