// lm/ngram-model.cc

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

#include "lm/ngram-model.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "base/errors.h"

namespace kahako {
namespace {

template <typename T>
auto FindSorted(std::vector<std::pair<Label, T>> &v, Label key) {
  return std::lower_bound(
      v.begin(), v.end(), key,
      [](const std::pair<Label, T> &e, Label k) { return e.first < k; });
}

template <typename T>
auto FindSorted(const std::vector<std::pair<Label, T>> &v, Label key) {
  return std::lower_bound(
      v.begin(), v.end(), key,
      [](const std::pair<Label, T> &e, Label k) { return e.first < k; });
}

}  // namespace

Smoothing ParseSmoothing(std::string_view name) {
  if (name == "katz") return Smoothing::kKatz;
  if (name == "kn" || name == "kn_interpolated") return Smoothing::kKneserNey;
  if (name == "kn_backoff") return Smoothing::kKneserNeyBackoff;
  throw std::invalid_argument("unknown smoothing '" + std::string(name) +
                              "' (expected katz, kn or kn_backoff)");
}

std::string SmoothingName(Smoothing smoothing) {
  switch (smoothing) {
    case Smoothing::kKatz:
      return "katz";
    case Smoothing::kKneserNey:
      return "kn";
    case Smoothing::kKneserNeyBackoff:
      return "kn_backoff";
  }
  return "unknown";
}

NgramModel::NgramModel(int order, Smoothing smoothing,
                       std::shared_ptr<const SymbolTable> syms)
    : order_(order), smoothing_(smoothing), syms_(std::move(syms)) {
  if (order < 1) throw std::invalid_argument("n-gram order must be >= 1");
  nodes_.emplace_back();
}

int32_t NgramModel::Descend(std::span<const Label> context, bool create) {
  int32_t node = kRoot;
  for (auto it = context.rbegin(); it != context.rend(); ++it) {
    auto &children = nodes_[node].children;
    auto pos = FindSorted(children, *it);
    if (pos != children.end() && pos->first == *it) {
      node = pos->second;
      continue;
    }
    if (!create) return -1;
    const int32_t child = static_cast<int32_t>(nodes_.size());
    children.insert(pos, {*it, child});
    Node n;
    n.symbol = *it;
    n.parent = node;
    n.depth = nodes_[node].depth + 1;
    nodes_.push_back(std::move(n));
    node = child;
  }
  return node;
}

void NgramModel::SetLogProb(std::span<const Label> gram, double log_prob) {
  if (gram.empty() || static_cast<int>(gram.size()) > order_) {
    throw std::invalid_argument("gram length out of range for model order");
  }
  const int32_t node = Descend(gram.first(gram.size() - 1), true);
  auto &probs = nodes_[node].log_probs;
  auto pos = FindSorted(probs, gram.back());
  if (pos != probs.end() && pos->first == gram.back()) {
    pos->second = log_prob;
  } else {
    probs.insert(pos, {gram.back(), log_prob});
  }
}

void NgramModel::SetLogBackoff(std::span<const Label> context,
                               double log_backoff) {
  if (static_cast<int>(context.size()) >= order_) {
    throw std::invalid_argument("backoff context too long for model order");
  }
  const int32_t node = Descend(context, true);
  nodes_[node].log_backoff = log_backoff;
  nodes_[node].has_backoff = true;
}

int32_t NgramModel::FindContext(std::span<const Label> history) const {
  const size_t max_len = static_cast<size_t>(order_ - 1);
  if (history.size() > max_len) history = history.last(max_len);
  int32_t node = kRoot;
  for (auto it = history.rbegin(); it != history.rend(); ++it) {
    const auto &children = nodes_[node].children;
    auto pos = FindSorted(children, *it);
    if (pos == children.end() || pos->first != *it) break;
    node = pos->second;
  }
  return node;
}

std::vector<Label> NgramModel::ContextOf(int32_t node) const {
  std::vector<Label> context;
  for (int32_t n = node; n != kRoot; n = nodes_[n].parent) {
    context.push_back(nodes_[n].symbol);
  }
  return context;
}

int32_t NgramModel::NextContext(int32_t node, Label symbol) const {
  std::vector<Label> history = ContextOf(node);
  history.push_back(symbol);
  return FindContext(history);
}

std::optional<double> NgramModel::ExplicitLogProb(int32_t node,
                                                  Label symbol) const {
  const auto &probs = nodes_[node].log_probs;
  auto pos = FindSorted(probs, symbol);
  if (pos == probs.end() || pos->first != symbol) return std::nullopt;
  return pos->second;
}

double NgramModel::LogProb(std::span<const Label> history,
                           Label symbol) const {
  double acc = 0.0;
  for (int32_t node = FindContext(history);; node = nodes_[node].parent) {
    if (auto lp = ExplicitLogProb(node, symbol)) return acc + *lp;
    if (node == kRoot) break;
    acc += nodes_[node].log_backoff;
  }
  return -std::numeric_limits<double>::infinity();
}

std::vector<Label> NgramModel::PredictedLabels() const {
  std::vector<Label> labels;
  for (Label l = 0; static_cast<size_t>(l) < syms_->size(); ++l) {
    if (l != kEpsilon && l != kBos) labels.push_back(l);
  }
  return labels;
}

double Perplexity(const NgramModel &model,
                  std::span<const std::vector<Label>> lines) {
  double total = 0.0;
  size_t events = 0;
  const size_t context = static_cast<size_t>(model.order() - 1);
  for (const auto &line : lines) {
    std::vector<Label> history(context, kBos);
    for (size_t i = 0; i <= line.size(); ++i) {
      const Label c = i < line.size() ? line[i] : kEos;
      const double lp = model.LogProb(history, c);
      if (std::isinf(lp)) {
        throw DecodeError("zero-probability event in perplexity");
      }
      total += lp;
      ++events;
      if (context > 0) {
        history.erase(history.begin());
        history.push_back(c);
      }
    }
  }
  if (events == 0) throw std::invalid_argument("perplexity of empty input");
  return std::exp(-total / static_cast<double>(events));
}

NormalizationReport CheckNormalization(const NgramModel &model) {
  const std::vector<Label> predicted = model.PredictedLabels();
  const size_t table = model.symbols().size();
  const auto &nodes = model.nodes();
  NormalizationReport report;

  // Depth-first over the trie; dist[d] is the dense distribution of the
  // node on the stack at depth d.
  std::vector<std::vector<double>> dist(model.order() + 1,
                                        std::vector<double>(table, 0.0));
  struct Frame {
    int32_t node;
    size_t next_child;
  };
  auto fill = [&](int32_t node) {
    const auto &n = nodes[node];
    std::vector<double> &out = dist[n.depth];
    if (node == NgramModel::kRoot) {
      std::fill(out.begin(), out.end(), 0.0);
    } else {
      const double scale = std::exp(n.log_backoff);
      const std::vector<double> &up = dist[n.depth - 1];
      for (Label c : predicted) out[c] = scale * up[c];
    }
    for (const auto &[c, lp] : n.log_probs) out[c] = std::exp(lp);
    double sum = 0.0;
    for (Label c : predicted) sum += out[c];
    ++report.contexts;
    report.max_abs_error = std::max(report.max_abs_error, std::abs(sum - 1.0));
  };
  fill(NgramModel::kRoot);
  std::vector<Frame> stack{{NgramModel::kRoot, 0}};
  while (!stack.empty()) {
    Frame &top = stack.back();
    const auto &children = nodes[top.node].children;
    if (top.next_child == children.size()) {
      stack.pop_back();
      continue;
    }
    const int32_t child = children[top.next_child++].second;
    fill(child);
    stack.push_back({child, 0});
  }
  return report;
}

}  // namespace kahako
