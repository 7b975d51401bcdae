// rnnlm/lstm-train.cc

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

#include "rnnlm/lstm-train.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "base/errors.h"

namespace kahako {

void TrainConfig::Check() const {
  if (batch < 1) throw std::invalid_argument("batch must be >= 1");
  if (!(lr >= 0.0)) throw std::invalid_argument("learning rate must be >= 0");
  if (tbptt < 1) throw std::invalid_argument("tbptt must be >= 1");
  if (epochs < 0) throw std::invalid_argument("epochs must be >= 0");
  if (!(anneal == 0.0 || anneal > 1.0)) {
    throw std::invalid_argument("anneal must be 0 or > 1");
  }
}

namespace {

// Per stream, the (input, target) sequence of its lines.
struct Stream {
  std::vector<Label> inputs, targets;
};

std::vector<Stream> LayOutStreams(const std::vector<std::vector<Label>> &lines,
                                  const std::vector<size_t> &order,
                                  int streams) {
  std::vector<Stream> out(static_cast<size_t>(streams));
  for (size_t idx : order) {
    // Next line goes to the currently shortest stream (lowest index on ties).
    auto shortest = std::min_element(
        out.begin(), out.end(), [](const Stream &a, const Stream &b) {
          return a.inputs.size() < b.inputs.size();
        });
    const auto &line = lines[idx];
    shortest->inputs.push_back(kBos);
    for (Label c : line) {
      shortest->inputs.push_back(c);
      shortest->targets.push_back(c);
    }
    shortest->targets.push_back(kEos);
  }
  return out;
}

StreamBatch Chunk(const std::vector<Stream> &streams, size_t start,
                  size_t steps) {
  StreamBatch batch;
  batch.streams = static_cast<int>(streams.size());
  batch.steps = static_cast<int>(steps);
  batch.inputs.assign(steps * streams.size(), kBos);
  batch.targets.assign(steps * streams.size(), kNoLabel);
  for (size_t b = 0; b < streams.size(); ++b) {
    for (size_t t = 0; t < steps; ++t) {
      const size_t pos = start + t;
      if (pos >= streams[b].inputs.size()) break;
      batch.inputs[t * streams.size() + b] = streams[b].inputs[pos];
      batch.targets[t * streams.size() + b] = streams[b].targets[pos];
    }
  }
  return batch;
}

LstmParams Run(LstmParams params, std::mt19937_64 &rng,
               const std::vector<std::vector<Label>> &lines,
               const TrainConfig &train,
               const std::vector<std::vector<Label>> *valid,
               const EpochCallback &on_epoch) {
  train.Check();
  if (lines.empty()) throw std::invalid_argument("training corpus is empty");
  const int streams =
      static_cast<int>(std::min<size_t>(static_cast<size_t>(train.batch), lines.size()));
  std::vector<size_t> order(lines.size());
  LstmParams grad = LstmParams::Zeros(params.config);
  ForwardOptions options;
  options.dropout_rng = &rng;
  const bool annealing =
      train.anneal > 1.0 && valid != nullptr && !valid->empty();
  double lr = train.lr;
  std::optional<double> best_ppl;
  LstmParams best;

  for (int epoch = 1; epoch <= train.epochs; ++epoch) {
    std::iota(order.begin(), order.end(), size_t{0});
    for (size_t i = order.size(); i > 1; --i) {
      std::uniform_int_distribution<size_t> pick(0, i - 1);
      std::swap(order[i - 1], order[pick(rng)]);
    }
    const std::vector<Stream> laid = LayOutStreams(lines, order, streams);
    size_t longest = 0;
    for (const Stream &s : laid) longest = std::max(longest, s.inputs.size());

    StreamState state = ZeroStreamState(params.config, streams);
    double nll = 0.0;
    int64_t count = 0;
    for (size_t start = 0; start < longest; start += train.tbptt) {
      const size_t steps = std::min<size_t>(train.tbptt, longest - start);
      const StreamBatch batch = Chunk(laid, start, steps);
      grad.Scale(0.0);
      const BatchLoss loss = ForwardBackward(params, batch, &state, &grad, options);
      if (!std::isfinite(loss.nll_sum)) {
        throw TrainingError("non-finite loss in epoch " + std::to_string(epoch) +
                            " at position " + std::to_string(start) +
                            "; try a smaller learning rate");
      }
      nll += loss.nll_sum;
      count += loss.count;
      if (loss.count == 0) continue;
      const double norm = std::sqrt(grad.SquaredNorm());
      if (!std::isfinite(norm)) {
        throw TrainingError("non-finite gradient in epoch " +
                            std::to_string(epoch));
      }
      double step = lr;
      if (train.clip_norm > 0.0 && norm > train.clip_norm) {
        step *= train.clip_norm / norm;
      }
      params.AddScaled(-step, grad);
    }
    if (!params.AllFinite()) {
      throw TrainingError("parameters diverged in epoch " + std::to_string(epoch));
    }
    EpochStats stats;
    stats.epoch = epoch;
    stats.train_loss = count > 0 ? nll / static_cast<double>(count) : 0.0;
    stats.lr = lr;
    if (valid != nullptr && !valid->empty()) {
      stats.valid_ppl = Perplexity(params, *valid);
    }
    if (on_epoch) on_epoch(stats);
    if (annealing) {
      if (!best_ppl || *stats.valid_ppl < *best_ppl) {
        best_ppl = stats.valid_ppl;
        best = params;
      } else {
        lr /= train.anneal;
      }
    }
  }
  return best_ppl ? best : params;
}

}  // namespace

LstmParams TrainLstm(const std::vector<std::vector<Label>> &lines,
                     const LstmConfig &config, const TrainConfig &train,
                     const std::vector<std::vector<Label>> *valid,
                     const EpochCallback &on_epoch) {
  std::mt19937_64 rng(train.seed);
  LstmParams params = InitParams(config, rng());
  return Run(std::move(params), rng, lines, train, valid, on_epoch);
}

}  // namespace kahako
