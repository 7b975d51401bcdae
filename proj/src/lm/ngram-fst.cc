// lm/ngram-fst.cc

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

#include "lm/ngram-fst.h"

#include <cmath>

namespace kahako {

Wfst NgramToWfst(const NgramModel &model) {
  Wfst fst(model.symbols_ptr(), model.symbols_ptr());
  const auto &nodes = model.nodes();
  fst.ReserveStates(nodes.size());
  for (size_t i = 0; i < nodes.size(); ++i) fst.AddState();

  const std::vector<Label> bos(static_cast<size_t>(model.order() - 1), kBos);
  fst.SetStart(model.FindContext(bos));

  for (int32_t id = 0; id < static_cast<int32_t>(nodes.size()); ++id) {
    const auto &node = nodes[id];
    std::vector<Label> history = model.ContextOf(id);
    for (const auto &[c, lp] : node.log_probs) {
      if (c == kEos || c == kBos) continue;
      history.push_back(c);
      fst.AddArc(id, Arc{c, c, Weight(-lp), model.FindContext(history)});
      history.pop_back();
    }
    if (id != NgramModel::kRoot) {
      fst.AddArc(id, Arc{kEpsilon, kEpsilon, Weight(-node.log_backoff),
                         node.parent});
    }
    const double final_lp = model.LogProb(history, kEos);
    if (!std::isinf(final_lp)) fst.SetFinal(id, Weight(-final_lp));
  }
  return fst;
}

}  // namespace kahako
