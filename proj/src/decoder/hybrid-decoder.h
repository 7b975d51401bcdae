// decoder/hybrid-decoder.h

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

#ifndef KAHAKO_DECODER_HYBRID_DECODER_H_
#define KAHAKO_DECODER_HYBRID_DECODER_H_

#include <cstdint>
#include <string_view>

#include "decoder/fst-decoder.h"
#include "decoder/scorers.h"
#include "fst/wfst.h"

namespace kahako {

struct BeamConfig {
  int width = 64;
  // Adds -ln p(</s> | tokens) to hypotheses as they finish.
  bool eos_scoring = false;
  // 0 means one more than the number of states of the search lattice, which
  // no search over an acyclic lattice can exceed.
  int64_t max_iterations = 0;

  void Check() const;
};

// Approximate composition of the lattice `f` with `scorer`. Hypotheses
// advance one arc per iteration; emitting c != <eps> over an arc of weight w
// costs w - ln p(c | tokens so far), an epsilon output costs w. Children with
// the same (state, tokens) keep the cheaper score. A hypothesis at a final
// state also yields a finished copy whose score adds the final weight (and
// the EOS cost if enabled); finished copies are carried over unchanged while
// the original keeps expanding. Each iteration keeps the `width` best by
// (score, tokens, state); the search ends when only finished hypotheses
// remain and returns the best of them.
// Throws EmptyLanguageError if `f` accepts nothing and DecodeError if
// max_iterations is exceeded.
DecodeResult BeamSearch(const Wfst &f, const SequenceScorer &scorer,
                        const BeamConfig &config);

// BeamSearch over BuildInputLattice(input, rules), with unknown characters
// restored in the text.
DecodeResult DecodeHybrid(std::u32string_view input, const Wfst &rules,
                          const SequenceScorer &scorer,
                          const BeamConfig &config);

}  // namespace kahako

#endif  // KAHAKO_DECODER_HYBRID_DECODER_H_
