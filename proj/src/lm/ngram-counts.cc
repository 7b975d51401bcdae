// lm/ngram-counts.cc

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

#include "lm/ngram-counts.h"

#include <stdexcept>
#include <string>

namespace kahako {

NgramCounts::NgramCounts(int order) : order_(order) {
  if (order < 1) {
    throw std::invalid_argument("n-gram order must be >= 1, got " +
                                std::to_string(order));
  }
  grams_.resize(order);
}

void NgramCounts::AddLine(std::span<const Label> line) {
  std::vector<Label> padded(order_ - 1, kBos);
  padded.insert(padded.end(), line.begin(), line.end());
  padded.push_back(kEos);
  for (size_t end = 1; end <= padded.size(); ++end) {
    for (int k = 1; k <= order_ && static_cast<size_t>(k) <= end; ++k) {
      Ngram gram(padded.begin() + (end - k), padded.begin() + end);
      ++grams_[k - 1][std::move(gram)];
    }
  }
}

void NgramCounts::Merge(const NgramCounts &other) {
  if (other.order_ != order_) {
    throw std::invalid_argument("cannot merge counts of different orders");
  }
  for (int k = 0; k < order_; ++k) {
    for (const auto &[gram, n] : other.grams_[k]) grams_[k][gram] += n;
  }
}

int64_t NgramCounts::Count(const Ngram &gram) const {
  if (gram.empty() || static_cast<int>(gram.size()) > order_) return 0;
  const auto &m = grams_[gram.size() - 1];
  auto it = m.find(gram);
  return it == m.end() ? 0 : it->second;
}

NgramCounts CountNgrams(std::span<const std::vector<Label>> lines, int order) {
  NgramCounts counts(order);
  for (const auto &line : lines) counts.AddLine(line);
  return counts;
}

}  // namespace kahako
