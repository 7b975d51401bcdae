// eval/cerr.h

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

#ifndef KAHAKO_EVAL_CERR_H_
#define KAHAKO_EVAL_CERR_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace kahako {

// Unit-cost edit distance over code points.
size_t Levenshtein(std::u32string_view a, std::u32string_view b);

struct ParallelPair {
  std::u32string input;  // missionary orthography
  std::u32string truth;  // modern orthography
  std::optional<std::u32string> prediction;
};

// d(prediction, truth) / d(input, truth). Throws std::domain_error
// ("already modern") when input == truth and std::invalid_argument when
// there is no prediction.
double PairCerr(const ParallelPair &pair);

struct CerrReport {
  size_t pairs = 0;
  size_t scored = 0;          // pairs with d(input, truth) > 0
  size_t already_modern = 0;  // excluded from the aggregates
  size_t exact = 0;           // prediction == truth, over all pairs
  size_t prediction_distance = 0;  // sum over scored pairs
  size_t input_distance = 0;       // sum over scored pairs
  double corpus_cerr = 0.0;  // prediction_distance / input_distance
  double mean_pair_cerr = 0.0;
};

// Micro-averaged corpus CERR. Every pair needs a prediction. With no scored
// pair both averages are NaN.
CerrReport EvaluateCerr(std::span<const ParallelPair> pairs);

// "key=value" lines, one per field.
std::string FormatReport(const CerrReport &report);

}  // namespace kahako

#endif  // KAHAKO_EVAL_CERR_H_
