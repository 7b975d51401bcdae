// rnnlm/lstm-train.h

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

#ifndef KAHAKO_RNNLM_LSTM_TRAIN_H_
#define KAHAKO_RNNLM_LSTM_TRAIN_H_

#include <functional>
#include <optional>
#include <vector>

#include "rnnlm/lstm-lm.h"

namespace kahako {

struct TrainConfig {
  int batch = 30;
  double lr = 10.0;
  int tbptt = 45;
  double clip_norm = 1.0;  // <= 0 disables renormalization
  int epochs = 10;
  uint64_t seed = 1;
  // With a validation set and anneal > 1: divide lr by `anneal` after every
  // epoch that does not improve validation perplexity, and return the
  // parameters of the best epoch. 0 disables both.
  double anneal = 0.0;

  void Check() const;
};

struct EpochStats {
  int epoch = 0;        // 1-based
  double train_loss = 0.0;  // mean NLL per symbol, dropout on
  std::optional<double> valid_ppl;
  double lr = 0.0;          // learning rate used during the epoch
};

using EpochCallback = std::function<void(const EpochStats &)>;

// SGD with truncated BPTT. Lines are shuffled each epoch and laid end to end
// in `batch` parallel streams; state is carried across truncation
// boundaries and reset at each line start. One seeded generator drives
// initialization, shuffling and dropout. Throws TrainingError on a
// non-finite loss.
LstmParams TrainLstm(const std::vector<std::vector<Label>> &lines,
                     const LstmConfig &config, const TrainConfig &train,
                     const std::vector<std::vector<Label>> *valid = nullptr,
                     const EpochCallback &on_epoch = nullptr);

}  // namespace kahako

#endif  // KAHAKO_RNNLM_LSTM_TRAIN_H_
