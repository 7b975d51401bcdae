// lm/ngram-fst.h

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

#ifndef KAHAKO_LM_NGRAM_FST_H_
#define KAHAKO_LM_NGRAM_FST_H_

#include "fst/wfst.h"
#include "lm/ngram-model.h"

namespace kahako {

// Acceptor with one state per stored context. Explicit probabilities become
// arcs to the shifted context, backoff weights become epsilon arcs to the
// parent context, and p(</s>|h) becomes the final weight of h. The start
// state is the context of N-1 <s> symbols.
Wfst NgramToWfst(const NgramModel &model);

}  // namespace kahako

#endif  // KAHAKO_LM_NGRAM_FST_H_
