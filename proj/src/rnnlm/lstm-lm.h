// rnnlm/lstm-lm.h

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

#ifndef KAHAKO_RNNLM_LSTM_LM_H_
#define KAHAKO_RNNLM_LSTM_LM_H_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fst/symbol-table.h"

namespace kahako {

struct LstmConfig {
  int layers = 2;
  int hidden = 200;
  int vocab = 0;  // size of the symbol table
  double dropout = 0.2;

  // Throws std::invalid_argument on an inconsistent config.
  void Check() const;
  bool operator==(const LstmConfig &other) const = default;
};

// Gate rows are stacked as [input; forget; cell; output], each `hidden` rows.
struct LstmLayer {
  Eigen::MatrixXd w_x;  // 4H x input
  Eigen::MatrixXd w_h;  // 4H x H
  Eigen::VectorXd bias;  // 4H
};

struct LstmParams {
  LstmConfig config;
  Eigen::MatrixXd embedding;  // H x V, one column per symbol
  std::vector<LstmLayer> layers;
  Eigen::MatrixXd out_w;  // V x H
  Eigen::VectorXd out_b;  // V

  // All zeros, correctly shaped; also used as a gradient accumulator.
  static LstmParams Zeros(const LstmConfig &config);

  // Calls f(name, data, rows, cols) for every block in serialization order.
  // Data is column-major.
  template <class F>
  void ForEachBlock(F &&f);
  template <class F>
  void ForEachBlock(F &&f) const;

  size_t NumParams() const;
  double SquaredNorm() const;
  void Scale(double factor);
  // this += factor * other
  void AddScaled(double factor, const LstmParams &other);
  bool AllFinite() const;
  bool operator==(const LstmParams &other) const;
};

// Uniform in [-0.08, 0.08], forget-gate biases +1.
LstmParams InitParams(const LstmConfig &config, uint64_t seed);

struct RnnState {
  std::vector<Eigen::VectorXd> h, c;  // one per layer
};

RnnState ZeroState(const LstmConfig &config);

struct StepOutput {
  RnnState state;
  Eigen::VectorXd log_probs;  // natural log, over the whole symbol table
};

// Feeds `symbol` to `state`. Inference only: no dropout.
StepOutput Step(const LstmParams &params, const RnnState &state, Label symbol);

// Step() applied to many (state, symbol) pairs at once.
std::vector<StepOutput> StepBatch(const LstmParams &params,
                                  std::span<const RnnState *const> states,
                                  std::span<const Label> symbols);

// State after feeding <s> to the zero state, with its predictive
// distribution for the first character.
StepOutput InitialStep(const LstmParams &params);

// ln p(line </s>), <s> fed first.
double SequenceLogProb(const LstmParams &params, std::span<const Label> line);

double Perplexity(const LstmParams &params,
                  std::span<const std::vector<Label>> lines);

// Column-parallel streams for training: T steps of B symbols, stored at
// t * B + b. A <s> input resets that stream's state to zero before the step;
// a kNoLabel target contributes no loss.
struct StreamBatch {
  int steps = 0;
  int streams = 0;
  std::vector<Label> inputs;
  std::vector<Label> targets;
};

// Per-layer H x B state of all streams.
struct StreamState {
  std::vector<Eigen::MatrixXd> h, c;
};

StreamState ZeroStreamState(const LstmConfig &config, int streams);

// Test hook for the gradient check.
enum class GradientFault { kNone, kForgetGate };

struct ForwardOptions {
  std::mt19937_64 *dropout_rng = nullptr;  // null: no dropout
  GradientFault fault = GradientFault::kNone;
};

struct BatchLoss {
  double nll_sum = 0.0;
  int64_t count = 0;
};

// Runs the batch from `*state` and leaves the final state there. If `grad`
// is non-null, adds the gradient of nll_sum / count to it.
BatchLoss ForwardBackward(const LstmParams &params, const StreamBatch &batch,
                          StreamState *state, LstmParams *grad,
                          const ForwardOptions &options);

struct GradientCheckResult {
  double max_relative_error = 0.0;
  std::string worst_block;
  size_t checked = 0;
};

// Analytic gradients against central differences (step 1e-5) for every
// parameter of a tiny random model on a random two-stream batch that
// exercises resets, padding and a carried-in state. Relative error is
// |a - n| / max(|a|, |n|, 1e-6).
GradientCheckResult GradientCheck(const LstmConfig &config, uint64_t seed,
                                  GradientFault fault = GradientFault::kNone);

template <class F>
void LstmParams::ForEachBlock(F &&f) {
  f("embedding", embedding.data(), embedding.rows(), embedding.cols());
  for (size_t l = 0; l < layers.size(); ++l) {
    const std::string p = "layer" + std::to_string(l) + ".";
    LstmLayer &layer = layers[l];
    f(p + "w_x", layer.w_x.data(), layer.w_x.rows(), layer.w_x.cols());
    f(p + "w_h", layer.w_h.data(), layer.w_h.rows(), layer.w_h.cols());
    f(p + "bias", layer.bias.data(), layer.bias.rows(), Eigen::Index{1});
  }
  f("out_w", out_w.data(), out_w.rows(), out_w.cols());
  f("out_b", out_b.data(), out_b.rows(), Eigen::Index{1});
}

template <class F>
void LstmParams::ForEachBlock(F &&f) const {
  const_cast<LstmParams *>(this)->ForEachBlock(
      [&](const std::string &name, double *data, Eigen::Index rows,
          Eigen::Index cols) {
        f(name, static_cast<const double *>(data), rows, cols);
      });
}

}  // namespace kahako

#endif  // KAHAKO_RNNLM_LSTM_LM_H_
