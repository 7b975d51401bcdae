// lm/ngram-model.h

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

#ifndef KAHAKO_LM_NGRAM_MODEL_H_
#define KAHAKO_LM_NGRAM_MODEL_H_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fst/symbol-table.h"
#include "lm/ngram-counts.h"

namespace kahako {

enum class Smoothing { kKatz, kKneserNey, kKneserNeyBackoff };

// "katz", "kn", "kn_backoff". Throws std::invalid_argument otherwise.
Smoothing ParseSmoothing(std::string_view name);
std::string SmoothingName(Smoothing smoothing);

// Backoff n-gram model stored as a trie of contexts keyed from the most
// recent symbol backwards, so a node's parent is its context with the oldest
// symbol dropped. Each node holds explicit log probabilities of the symbols
// seen after it and the log backoff weight applied when a symbol is not
// explicit. All logs are natural.
class NgramModel {
 public:
  struct Node {
    Label symbol = kNoLabel;  // oldest symbol of this context
    int32_t parent = -1;
    int32_t depth = 0;
    std::vector<std::pair<Label, int32_t>> children;  // sorted by label
    std::vector<std::pair<Label, double>> log_probs;  // sorted by label
    double log_backoff = 0.0;
    bool has_backoff = false;
  };

  NgramModel(int order, Smoothing smoothing,
             std::shared_ptr<const SymbolTable> syms);

  int order() const { return order_; }
  Smoothing smoothing() const { return smoothing_; }
  const SymbolTable &symbols() const { return *syms_; }
  const std::shared_ptr<const SymbolTable> &symbols_ptr() const {
    return syms_;
  }

  // `gram` is a context followed by the predicted symbol.
  void SetLogProb(std::span<const Label> gram, double log_prob);
  void SetLogBackoff(std::span<const Label> context, double log_backoff);

  // ln p(symbol | history); only the last order-1 symbols of `history`
  // matter. Returns -infinity if even the empty context lacks the symbol.
  double LogProb(std::span<const Label> history, Label symbol) const;

  // Deepest stored node matching a suffix of `history`, at most order-1 deep.
  int32_t FindContext(std::span<const Label> history) const;
  // Node reached after appending `symbol` to the context of `node`.
  int32_t NextContext(int32_t node, Label symbol) const;
  // The context of `node`, oldest symbol first.
  std::vector<Label> ContextOf(int32_t node) const;
  std::optional<double> ExplicitLogProb(int32_t node, Label symbol) const;

  const std::vector<Node> &nodes() const { return nodes_; }
  static constexpr int32_t kRoot = 0;

  // Symbols with a predictive probability: everything but epsilon and BOS.
  std::vector<Label> PredictedLabels() const;

 private:
  int32_t Descend(std::span<const Label> context, bool create);

  int order_;
  Smoothing smoothing_;
  std::shared_ptr<const SymbolTable> syms_;
  std::vector<Node> nodes_;
};

// Estimates a smoothed model from counts. Throws std::invalid_argument on
// empty counts.
NgramModel EstimateNgramModel(const NgramCounts &counts, Smoothing smoothing,
                              std::shared_ptr<const SymbolTable> syms);

// exp(-(1/T) sum ln p) over every symbol of every line plus one end-of-line
// event each. Throws DecodeError on a zero-probability event.
double Perplexity(const NgramModel &model,
                  std::span<const std::vector<Label>> lines);

struct NormalizationReport {
  size_t contexts = 0;
  double max_abs_error = 0.0;  // max over contexts of |sum_c p(c|h) - 1|
};

// Sums every context's full predictive distribution, backoff included.
NormalizationReport CheckNormalization(const NgramModel &model);

}  // namespace kahako

#endif  // KAHAKO_LM_NGRAM_MODEL_H_
