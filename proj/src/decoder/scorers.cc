// decoder/scorers.cc

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

#include "decoder/scorers.h"

#include <limits>

namespace kahako {
namespace {

class LstmState : public ScorerState {
 public:
  RnnState rnn;
};

class NgramState : public ScorerState {
 public:
  int32_t node = NgramModel::kRoot;
};

std::shared_ptr<LstmState> FromStep(StepOutput &&out) {
  auto s = std::make_shared<LstmState>();
  s->rnn = std::move(out.state);
  s->log_probs.assign(out.log_probs.data(),
                      out.log_probs.data() + out.log_probs.size());
  return s;
}

}  // namespace

ScorerStatePtr LstmScorer::Initial() const {
  return FromStep(InitialStep(params_));
}

std::vector<ScorerStatePtr> LstmScorer::Advance(
    std::span<const ScorerState *const> parents,
    std::span<const Label> symbols) const {
  std::vector<const RnnState *> states;
  states.reserve(parents.size());
  for (const ScorerState *p : parents) {
    states.push_back(&static_cast<const LstmState *>(p)->rnn);
  }
  std::vector<StepOutput> steps = StepBatch(params_, states, symbols);
  std::vector<ScorerStatePtr> out;
  out.reserve(steps.size());
  for (StepOutput &s : steps) out.push_back(FromStep(std::move(s)));
  return out;
}

ScorerStatePtr NgramScorer::MakeState(int32_t node) const {
  auto s = std::make_shared<NgramState>();
  s->node = node;
  // Dense distribution: walk from the root down to `node`, adding each
  // level's backoff weight and overriding with its explicit entries.
  std::vector<int32_t> chain;
  for (int32_t n = node; n != NgramModel::kRoot; n = model_.nodes()[n].parent) {
    chain.push_back(n);
  }
  chain.push_back(NgramModel::kRoot);
  s->log_probs.assign(model_.symbols().size(),
                      -std::numeric_limits<double>::infinity());
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const auto &n = model_.nodes()[*it];
    if (*it != NgramModel::kRoot) {
      for (double &lp : s->log_probs) lp += n.log_backoff;
    }
    for (const auto &[c, lp] : n.log_probs) s->log_probs[c] = lp;
  }
  return s;
}

ScorerStatePtr NgramScorer::Initial() const {
  const std::vector<Label> bos(static_cast<size_t>(model_.order() - 1), kBos);
  return MakeState(model_.FindContext(bos));
}

std::vector<ScorerStatePtr> NgramScorer::Advance(
    std::span<const ScorerState *const> parents,
    std::span<const Label> symbols) const {
  std::vector<ScorerStatePtr> out;
  out.reserve(parents.size());
  for (size_t i = 0; i < parents.size(); ++i) {
    const int32_t node = static_cast<const NgramState *>(parents[i])->node;
    out.push_back(MakeState(model_.NextContext(node, symbols[i])));
  }
  return out;
}

}  // namespace kahako
