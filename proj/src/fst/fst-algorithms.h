// fst/fst-algorithms.h

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

#ifndef KAHAKO_FST_FST_ALGORITHMS_H_
#define KAHAKO_FST_FST_ALGORITHMS_H_

#include <vector>

#include "fst/wfst.h"

namespace kahako {

// Composition a∘b over the tropical semiring. Only pairs reachable from the
// start pair are built. Epsilons are matched with a sequencing filter: within
// a run of epsilon moves, `a`'s output-epsilon moves precede `b`'s
// input-epsilon moves, so each path of the composed relation is produced once.
// Throws ModelMismatchError if a's output symbols differ from b's input
// symbols.
Wfst Compose(const Wfst &a, const Wfst &b);

// Keeps only states that are both reachable from the start and co-reachable
// to a final state, preserving relative state order. If nothing survives the
// result is a single non-final start state.
Wfst Trim(const Wfst &fst);

struct Path {
  std::vector<Label> ilabels;  // epsilons removed
  std::vector<Label> olabels;  // epsilons removed
  double cost = 0.0;           // arc weights plus final weight
};

// Minimum-cost start-to-final path. Among equal-cost paths the one with the
// lexicographically smallest output label sequence wins. Requires
// non-negative weights. Throws EmptyLanguageError when no final state is
// reachable.
Path ShortestPath(const Wfst &fst);

// True if some cycle consists only of input-epsilon arcs. Such a cycle lets
// a search loop without consuming input.
bool HasInputEpsilonCycle(const Wfst &fst);

// True if `fst` accepts at least one path.
bool HasAcceptingPath(const Wfst &fst);

}  // namespace kahako

#endif  // KAHAKO_FST_FST_ALGORITHMS_H_
