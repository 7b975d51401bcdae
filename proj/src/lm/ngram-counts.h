// lm/ngram-counts.h

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

#ifndef KAHAKO_LM_NGRAM_COUNTS_H_
#define KAHAKO_LM_NGRAM_COUNTS_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fst/symbol-table.h"

namespace kahako {

using Ngram = std::vector<Label>;

// Occurrence counts of every k-gram, 1 <= k <= order, over lines padded with
// order-1 sentence-begin symbols and one sentence-end symbol.
class NgramCounts {
 public:
  explicit NgramCounts(int order);

  int order() const { return order_; }

  void AddLine(std::span<const Label> line);
  void Merge(const NgramCounts &other);

  // Grams of length k, 1 <= k <= order.
  const std::map<Ngram, int64_t> &Grams(int k) const { return grams_[k - 1]; }
  int64_t Count(const Ngram &gram) const;
  bool empty() const { return grams_[0].empty(); }

 private:
  int order_;
  std::vector<std::map<Ngram, int64_t>> grams_;
};

// Throws std::invalid_argument if order < 1.
NgramCounts CountNgrams(std::span<const std::vector<Label>> lines, int order);

}  // namespace kahako

#endif  // KAHAKO_LM_NGRAM_COUNTS_H_
