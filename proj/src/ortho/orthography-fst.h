// ortho/orthography-fst.h

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

#ifndef KAHAKO_ORTHO_ORTHOGRAPHY_FST_H_
#define KAHAKO_ORTHO_ORTHOGRAPHY_FST_H_

#include <memory>

#include "fst/wfst.h"
#include "ortho/rules.h"

namespace kahako {

struct OrthographyFstOptions {
  // Cost on every inserted ʻokina and inserted space. Zero leaves all
  // disambiguation to the language model.
  double insertion_penalty = 0.0;
  // Extra rewrite arcs appended at the hub.
  RuleSet extra_rules;
};

// Missionary -> modern transducer C. A single hub state (start and final)
// carries identity arcs for every non-vowel symbol, and (V:V), (V:V̄) for
// each vowel. An (ε:ʻ) arc leads to a state that must consume a vowel before
// returning to the hub, so every cycle consumes input.
Wfst BuildOrthographyFst(std::shared_ptr<const SymbolTable> syms,
                         const OrthographyFstOptions &options = {});

// C_wb: as above, plus an optional (ε:space) after any vowel-emitting arc.
// The state reached by the inserted space must consume a non-space symbol
// (possibly after an inserted ʻokina), so spaces never double up.
Wfst BuildWordBoundaryFst(std::shared_ptr<const SymbolTable> syms,
                          const OrthographyFstOptions &options = {});

}  // namespace kahako

#endif  // KAHAKO_ORTHO_ORTHOGRAPHY_FST_H_
