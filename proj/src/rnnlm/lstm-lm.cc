// rnnlm/lstm-lm.cc

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

#include "rnnlm/lstm-lm.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kahako {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

void LstmConfig::Check() const {
  if (layers < 1) throw std::invalid_argument("LSTM needs at least one layer");
  if (hidden < 1) throw std::invalid_argument("LSTM hidden size must be >= 1");
  if (vocab < 1) throw std::invalid_argument("LSTM vocabulary is empty");
  if (!(dropout >= 0.0 && dropout < 1.0)) {
    throw std::invalid_argument("dropout must lie in [0, 1)");
  }
}

LstmParams LstmParams::Zeros(const LstmConfig &config) {
  config.Check();
  const Index h = config.hidden;
  const Index v = config.vocab;
  LstmParams p;
  p.config = config;
  p.embedding = MatrixXd::Zero(h, v);
  for (int l = 0; l < config.layers; ++l) {
    p.layers.push_back(
        {MatrixXd::Zero(4 * h, h), MatrixXd::Zero(4 * h, h), VectorXd::Zero(4 * h)});
  }
  p.out_w = MatrixXd::Zero(v, h);
  p.out_b = VectorXd::Zero(v);
  return p;
}

size_t LstmParams::NumParams() const {
  size_t n = 0;
  ForEachBlock([&](const std::string &, const double *, Index rows, Index cols) {
    n += static_cast<size_t>(rows * cols);
  });
  return n;
}

double LstmParams::SquaredNorm() const {
  double sum = 0.0;
  ForEachBlock([&](const std::string &, const double *data, Index rows,
                   Index cols) {
    for (Index i = 0; i < rows * cols; ++i) sum += data[i] * data[i];
  });
  return sum;
}

void LstmParams::Scale(double factor) {
  ForEachBlock([&](const std::string &, double *data, Index rows, Index cols) {
    for (Index i = 0; i < rows * cols; ++i) data[i] *= factor;
  });
}

void LstmParams::AddScaled(double factor, const LstmParams &other) {
  std::vector<const double *> src;
  other.ForEachBlock([&](const std::string &, const double *data, Index,
                         Index) { src.push_back(data); });
  size_t block = 0;
  ForEachBlock([&](const std::string &, double *data, Index rows, Index cols) {
    const double *o = src.at(block++);
    for (Index i = 0; i < rows * cols; ++i) data[i] += factor * o[i];
  });
}

bool LstmParams::AllFinite() const {
  bool finite = true;
  ForEachBlock([&](const std::string &, const double *data, Index rows,
                   Index cols) {
    for (Index i = 0; i < rows * cols; ++i) finite = finite && std::isfinite(data[i]);
  });
  return finite;
}

bool LstmParams::operator==(const LstmParams &other) const {
  if (!(config == other.config)) return false;
  std::vector<std::vector<double>> mine;
  ForEachBlock([&](const std::string &, const double *data, Index rows,
                   Index cols) { mine.emplace_back(data, data + rows * cols); });
  size_t block = 0;
  bool same = true;
  other.ForEachBlock([&](const std::string &, const double *data, Index rows,
                         Index cols) {
    same = same && block < mine.size() &&
           std::equal(mine[block].begin(), mine[block].end(), data,
                      data + rows * cols);
    ++block;
  });
  return same && block == mine.size();
}

LstmParams InitParams(const LstmConfig &config, uint64_t seed) {
  LstmParams p = LstmParams::Zeros(config);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.08, 0.08);
  p.ForEachBlock([&](const std::string &, double *data, Index rows, Index cols) {
    for (Index i = 0; i < rows * cols; ++i) data[i] = u(rng);
  });
  for (LstmLayer &layer : p.layers) {
    layer.bias.segment(config.hidden, config.hidden).array() += 1.0;
  }
  return p;
}

RnnState ZeroState(const LstmConfig &config) {
  RnnState s;
  for (int l = 0; l < config.layers; ++l) {
    s.h.push_back(VectorXd::Zero(config.hidden));
    s.c.push_back(VectorXd::Zero(config.hidden));
  }
  return s;
}

StreamState ZeroStreamState(const LstmConfig &config, int streams) {
  StreamState s;
  for (int l = 0; l < config.layers; ++l) {
    s.h.push_back(MatrixXd::Zero(config.hidden, streams));
    s.c.push_back(MatrixXd::Zero(config.hidden, streams));
  }
  return s;
}

namespace {

struct CellCache {
  MatrixXd x, hp, cp, i, f, g, o, c, tc, h;
};

MatrixXd Sigmoid(const MatrixXd &a) {
  return (1.0 / (1.0 + (-a.array()).exp())).matrix();
}

// Fills the gate activations and the new state from x, hp and cp.
void CellForward(const LstmLayer &layer, Index hidden, CellCache *k) {
  MatrixXd a = layer.w_x * k->x;
  a.noalias() += layer.w_h * k->hp;
  a.colwise() += layer.bias;
  k->i = Sigmoid(a.topRows(hidden));
  k->f = Sigmoid(a.middleRows(hidden, hidden));
  k->g = a.middleRows(2 * hidden, hidden).array().tanh().matrix();
  k->o = Sigmoid(a.bottomRows(hidden));
  k->c = (k->f.array() * k->cp.array() + k->i.array() * k->g.array()).matrix();
  k->tc = k->c.array().tanh().matrix();
  k->h = (k->o.array() * k->tc.array()).matrix();
}

MatrixXd LogSoftmaxColumns(const LstmParams &params, const MatrixXd &top) {
  MatrixXd out = params.out_w * top;
  out.colwise() += params.out_b;
  for (Index b = 0; b < out.cols(); ++b) {
    const double m = out.col(b).maxCoeff();
    const double lse = m + std::log((out.col(b).array() - m).exp().sum());
    out.col(b).array() -= lse;
  }
  return out;
}

void CheckLabel(const LstmConfig &config, Label label) {
  if (label < 0 || label >= config.vocab) {
    throw std::out_of_range("symbol id " + std::to_string(label) +
                            " outside the LSTM vocabulary");
  }
}

}  // namespace

std::vector<StepOutput> StepBatch(const LstmParams &params,
                                  std::span<const RnnState *const> states,
                                  std::span<const Label> symbols) {
  if (states.size() != symbols.size()) {
    throw std::invalid_argument("StepBatch: states and symbols differ in size");
  }
  const LstmConfig &cfg = params.config;
  const Index n = static_cast<Index>(symbols.size());
  std::vector<StepOutput> out(symbols.size());
  if (n == 0) return out;

  MatrixXd x(cfg.hidden, n);
  for (Index b = 0; b < n; ++b) {
    CheckLabel(cfg, symbols[b]);
    x.col(b) = params.embedding.col(symbols[b]);
  }
  CellCache k;
  for (int l = 0; l < cfg.layers; ++l) {
    k.x = std::move(x);
    k.hp.resize(cfg.hidden, n);
    k.cp.resize(cfg.hidden, n);
    for (Index b = 0; b < n; ++b) {
      k.hp.col(b) = states[b]->h[l];
      k.cp.col(b) = states[b]->c[l];
    }
    CellForward(params.layers[l], cfg.hidden, &k);
    for (Index b = 0; b < n; ++b) {
      out[b].state.h.push_back(k.h.col(b));
      out[b].state.c.push_back(k.c.col(b));
    }
    x = std::move(k.h);
  }
  const MatrixXd lp = LogSoftmaxColumns(params, x);
  for (Index b = 0; b < n; ++b) out[b].log_probs = lp.col(b);
  return out;
}

StepOutput Step(const LstmParams &params, const RnnState &state, Label symbol) {
  const RnnState *states[] = {&state};
  const Label symbols[] = {symbol};
  return std::move(StepBatch(params, states, symbols)[0]);
}

StepOutput InitialStep(const LstmParams &params) {
  return Step(params, ZeroState(params.config), kBos);
}

BatchLoss ForwardBackward(const LstmParams &params, const StreamBatch &batch,
                          StreamState *state, LstmParams *grad,
                          const ForwardOptions &options) {
  const LstmConfig &cfg = params.config;
  const Index H = cfg.hidden;
  const int L = cfg.layers;
  const Index B = batch.streams;
  const int T = batch.steps;
  if (batch.inputs.size() != static_cast<size_t>(T * B) ||
      batch.targets.size() != batch.inputs.size()) {
    throw std::invalid_argument("malformed stream batch");
  }
  const bool drop = options.dropout_rng != nullptr && cfg.dropout > 0.0;
  const double keep = 1.0 - cfg.dropout;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto make_mask = [&]() {
    MatrixXd m(H, B);
    for (Index b = 0; b < B; ++b) {
      for (Index r = 0; r < H; ++r) {
        m(r, b) = unit(*options.dropout_rng) < keep ? 1.0 / keep : 0.0;
      }
    }
    return m;
  };
  auto input = [&](int t, Index b) { return batch.inputs[t * B + b]; };
  auto target = [&](int t, Index b) { return batch.targets[t * B + b]; };

  std::vector<std::vector<CellCache>> cache(T, std::vector<CellCache>(L));
  std::vector<std::vector<MatrixXd>> masks(T);
  std::vector<MatrixXd> top(T), probs(T);
  BatchLoss loss;

  for (int t = 0; t < T; ++t) {
    MatrixXd x(H, B);
    for (Index b = 0; b < B; ++b) {
      CheckLabel(cfg, input(t, b));
      if (input(t, b) == kBos) {
        for (int l = 0; l < L; ++l) {
          state->h[l].col(b).setZero();
          state->c[l].col(b).setZero();
        }
      }
      x.col(b) = params.embedding.col(input(t, b));
    }
    for (int l = 0; l < L; ++l) {
      if (drop) {
        masks[t].push_back(make_mask());
        x.array() *= masks[t].back().array();
      }
      CellCache &k = cache[t][l];
      k.x = std::move(x);
      k.hp = state->h[l];
      k.cp = state->c[l];
      CellForward(params.layers[l], H, &k);
      state->h[l] = k.h;
      state->c[l] = k.c;
      x = k.h;
    }
    if (drop) {
      masks[t].push_back(make_mask());
      x.array() *= masks[t].back().array();
    }
    const MatrixXd lp = LogSoftmaxColumns(params, x);
    top[t] = std::move(x);
    for (Index b = 0; b < B; ++b) {
      if (target(t, b) == kNoLabel) continue;
      CheckLabel(cfg, target(t, b));
      loss.nll_sum -= lp(target(t, b), b);
      ++loss.count;
    }
    if (grad != nullptr) probs[t] = lp.array().exp().matrix();
  }
  if (grad == nullptr || loss.count == 0) return loss;

  const double scale = 1.0 / static_cast<double>(loss.count);
  std::vector<MatrixXd> dh_rec(L, MatrixXd::Zero(H, B));
  std::vector<MatrixXd> dc_rec(L, MatrixXd::Zero(H, B));
  for (int t = T - 1; t >= 0; --t) {
    MatrixXd dlogits = probs[t];
    for (Index b = 0; b < B; ++b) {
      if (target(t, b) == kNoLabel) {
        dlogits.col(b).setZero();
      } else {
        dlogits(target(t, b), b) -= 1.0;
      }
    }
    dlogits *= scale;
    grad->out_w.noalias() += dlogits * top[t].transpose();
    grad->out_b += dlogits.rowwise().sum();
    MatrixXd dh = params.out_w.transpose() * dlogits;
    if (drop) dh.array() *= masks[t][L].array();

    for (int l = L - 1; l >= 0; --l) {
      const CellCache &k = cache[t][l];
      const LstmLayer &layer = params.layers[l];
      LstmLayer &gl = grad->layers[l];
      dh += dh_rec[l];
      const auto tc = k.tc.array();
      const MatrixXd dc =
          dc_rec[l] + (dh.array() * k.o.array() * (1.0 - tc * tc)).matrix();
      MatrixXd da(4 * H, B);
      da.topRows(H) = (dc.array() * k.g.array() * k.i.array() *
                       (1.0 - k.i.array())).matrix();
      if (options.fault == GradientFault::kForgetGate) {
        da.middleRows(H, H) = (dc.array() * k.cp.array()).matrix();
      } else {
        da.middleRows(H, H) = (dc.array() * k.cp.array() * k.f.array() *
                               (1.0 - k.f.array())).matrix();
      }
      da.middleRows(2 * H, H) = (dc.array() * k.i.array() *
                                 (1.0 - k.g.array() * k.g.array())).matrix();
      da.bottomRows(H) = (dh.array() * tc * k.o.array() *
                          (1.0 - k.o.array())).matrix();

      gl.w_x.noalias() += da * k.x.transpose();
      gl.w_h.noalias() += da * k.hp.transpose();
      gl.bias += da.rowwise().sum();

      MatrixXd dx = layer.w_x.transpose() * da;
      dh_rec[l].noalias() = layer.w_h.transpose() * da;
      dc_rec[l] = (dc.array() * k.f.array()).matrix();
      for (Index b = 0; b < B; ++b) {
        // The state was zeroed before this step; nothing flows further back.
        if (input(t, b) == kBos) {
          dh_rec[l].col(b).setZero();
          dc_rec[l].col(b).setZero();
        }
      }
      if (drop) dx.array() *= masks[t][l].array();
      if (l > 0) {
        dh = std::move(dx);
      } else {
        for (Index b = 0; b < B; ++b) {
          grad->embedding.col(input(t, b)) += dx.col(b);
        }
      }
    }
  }
  return loss;
}

namespace {

// One stream per line: <s> c1 .. cn predicting c1 .. cn </s>, padded with
// <s> inputs and empty targets.
StreamBatch LineBatch(std::span<const std::vector<Label>> lines) {
  StreamBatch batch;
  batch.streams = static_cast<int>(lines.size());
  for (const auto &line : lines) {
    batch.steps = std::max(batch.steps, static_cast<int>(line.size()) + 1);
  }
  batch.inputs.assign(static_cast<size_t>(batch.steps) * lines.size(), kBos);
  batch.targets.assign(batch.inputs.size(), kNoLabel);
  for (size_t b = 0; b < lines.size(); ++b) {
    const auto &line = lines[b];
    for (size_t t = 0; t <= line.size(); ++t) {
      const size_t at = t * lines.size() + b;
      batch.inputs[at] = t == 0 ? kBos : line[t - 1];
      batch.targets[at] = t < line.size() ? line[t] : kEos;
    }
  }
  return batch;
}

BatchLoss ScoreLines(const LstmParams &params,
                     std::span<const std::vector<Label>> lines) {
  constexpr size_t kGroup = 64;
  BatchLoss total;
  for (size_t start = 0; start < lines.size(); start += kGroup) {
    const auto group = lines.subspan(start, std::min(kGroup, lines.size() - start));
    const StreamBatch batch = LineBatch(group);
    StreamState state =
        ZeroStreamState(params.config, static_cast<int>(group.size()));
    const BatchLoss part = ForwardBackward(params, batch, &state, nullptr, {});
    total.nll_sum += part.nll_sum;
    total.count += part.count;
  }
  return total;
}

}  // namespace

double SequenceLogProb(const LstmParams &params, std::span<const Label> line) {
  const std::vector<Label> copy(line.begin(), line.end());
  return -ScoreLines(params, std::span(&copy, 1)).nll_sum;
}

double Perplexity(const LstmParams &params,
                  std::span<const std::vector<Label>> lines) {
  const BatchLoss loss = ScoreLines(params, lines);
  if (loss.count == 0) throw std::invalid_argument("perplexity of empty input");
  return std::exp(loss.nll_sum / static_cast<double>(loss.count));
}

GradientCheckResult GradientCheck(const LstmConfig &config, uint64_t seed,
                                  GradientFault fault) {
  LstmConfig cfg = config;
  cfg.dropout = 0.0;
  cfg.Check();
  if (cfg.vocab < kNumReserved + 1) {
    throw std::invalid_argument("gradient check needs a vocabulary of >= 5");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  LstmParams params = LstmParams::Zeros(cfg);
  params.ForEachBlock([&](const std::string &, double *data, Index rows,
                          Index cols) {
    for (Index i = 0; i < rows * cols; ++i) data[i] = u(rng);
  });

  StreamBatch batch;
  batch.streams = 2;
  batch.steps = 7;
  std::uniform_int_distribution<Label> sym(kEos, cfg.vocab - 1);
  for (int i = 0; i < batch.steps * batch.streams; ++i) {
    batch.inputs.push_back(sym(rng));
    batch.targets.push_back(sym(rng));
  }
  batch.inputs[0] = kBos;          // stream 0 starts a line
  batch.inputs[3 * 2 + 1] = kBos;  // stream 1 starts a line mid-batch
  batch.targets[6 * 2 + 0] = kNoLabel;

  StreamState carried = ZeroStreamState(cfg, batch.streams);
  for (int l = 0; l < cfg.layers; ++l) {
    carried.h[l] = carried.h[l].unaryExpr([&](double) { return u(rng); });
    carried.c[l] = carried.c[l].unaryExpr([&](double) { return u(rng); });
  }

  auto mean_loss = [&]() {
    StreamState s = carried;
    const BatchLoss r = ForwardBackward(params, batch, &s, nullptr, {});
    return r.nll_sum / static_cast<double>(r.count);
  };

  LstmParams grad = LstmParams::Zeros(cfg);
  {
    StreamState s = carried;
    ForwardOptions options;
    options.fault = fault;
    ForwardBackward(params, batch, &s, &grad, options);
  }

  std::vector<const double *> analytic;
  grad.ForEachBlock([&](const std::string &, const double *data, Index,
                        Index) { analytic.push_back(data); });

  constexpr double kStep = 1e-5;
  GradientCheckResult result;
  size_t block = 0;
  params.ForEachBlock([&](const std::string &name, double *data, Index rows,
                          Index cols) {
    const double *a = analytic[block++];
    for (Index i = 0; i < rows * cols; ++i) {
      const double saved = data[i];
      data[i] = saved + kStep;
      const double plus = mean_loss();
      data[i] = saved - kStep;
      const double minus = mean_loss();
      data[i] = saved;
      const double numeric = (plus - minus) / (2.0 * kStep);
      const double denom = std::max({std::abs(a[i]), std::abs(numeric), 1e-6});
      const double rel = std::abs(a[i] - numeric) / denom;
      ++result.checked;
      if (rel > result.max_relative_error) {
        result.max_relative_error = rel;
        result.worst_block = name;
      }
    }
  });
  return result;
}

}  // namespace kahako
