// decoder/scorers.h

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

#ifndef KAHAKO_DECODER_SCORERS_H_
#define KAHAKO_DECODER_SCORERS_H_

#include <memory>
#include <span>
#include <vector>

#include "lm/ngram-model.h"
#include "rnnlm/lstm-lm.h"

namespace kahako {

// Predictive state of a left-to-right scorer: the distribution over the
// next symbol given everything fed so far.
class ScorerState {
 public:
  virtual ~ScorerState() = default;
  // Natural-log probabilities indexed by label.
  std::vector<double> log_probs;
};

using ScorerStatePtr = std::shared_ptr<const ScorerState>;

class SequenceScorer {
 public:
  virtual ~SequenceScorer() = default;

  virtual size_t NumSymbols() const = 0;

  // State after feeding <s>.
  virtual ScorerStatePtr Initial() const = 0;

  // Feeds symbols[i] to parents[i], for all i in one call so that
  // implementations may batch.
  virtual std::vector<ScorerStatePtr> Advance(
      std::span<const ScorerState *const> parents,
      std::span<const Label> symbols) const = 0;
};

class LstmScorer : public SequenceScorer {
 public:
  // `params` must outlive the scorer.
  explicit LstmScorer(const LstmParams &params) : params_(params) {}

  size_t NumSymbols() const override { return params_.config.vocab; }
  ScorerStatePtr Initial() const override;
  std::vector<ScorerStatePtr> Advance(
      std::span<const ScorerState *const> parents,
      std::span<const Label> symbols) const override;

 private:
  const LstmParams &params_;
};

// Exact backoff probabilities of an n-gram model, step by step; with EOS
// scoring this reproduces the model's sentence score.
class NgramScorer : public SequenceScorer {
 public:
  // `model` must outlive the scorer.
  explicit NgramScorer(const NgramModel &model) : model_(model) {}

  size_t NumSymbols() const override { return model_.symbols().size(); }
  ScorerStatePtr Initial() const override;
  std::vector<ScorerStatePtr> Advance(
      std::span<const ScorerState *const> parents,
      std::span<const Label> symbols) const override;

 private:
  ScorerStatePtr MakeState(int32_t node) const;

  const NgramModel &model_;
};

}  // namespace kahako

#endif  // KAHAKO_DECODER_SCORERS_H_
