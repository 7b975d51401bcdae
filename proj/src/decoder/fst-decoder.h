// decoder/fst-decoder.h

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

#ifndef KAHAKO_DECODER_FST_DECODER_H_
#define KAHAKO_DECODER_FST_DECODER_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fst/wfst.h"

namespace kahako {

struct DecodeResult {
  std::vector<Label> olabels;  // epsilon-free output
  double cost = 0.0;
  std::u32string text;  // olabels rendered, unknown characters restored
};

// trim(chain(input) o rules), over the rules' input symbols.
Wfst BuildInputLattice(std::span<const Label> input, const Wfst &rules);

// Renders `output`, replacing the k-th <unk> by the k-th character of
// `input` that `syms` does not know.
std::u32string RestoreUnknowns(const SymbolTable &syms,
                               std::u32string_view input,
                               std::span<const Label> output);

// Shortest path through trim(chain(input) o rules o lm). The cost includes
// the lm's final weights. Throws EmptyLanguageError if nothing is accepted.
DecodeResult DecodeFst(std::u32string_view input, const Wfst &rules,
                       const Wfst &lm);

}  // namespace kahako

#endif  // KAHAKO_DECODER_FST_DECODER_H_
