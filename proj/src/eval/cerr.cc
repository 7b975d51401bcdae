// eval/cerr.cc

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

#include "eval/cerr.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace kahako {

size_t Levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), size_t{0});
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diag = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

double PairCerr(const ParallelPair &pair) {
  if (!pair.prediction) throw std::invalid_argument("pair has no prediction");
  const size_t denom = Levenshtein(pair.input, pair.truth);
  if (denom == 0) throw std::domain_error("already modern");
  return static_cast<double>(Levenshtein(*pair.prediction, pair.truth)) /
         static_cast<double>(denom);
}

CerrReport EvaluateCerr(std::span<const ParallelPair> pairs) {
  CerrReport r;
  double ratio_sum = 0.0;
  for (const ParallelPair &p : pairs) {
    if (!p.prediction) {
      throw std::invalid_argument("pair " + std::to_string(r.pairs + 1) +
                                  " has no prediction");
    }
    ++r.pairs;
    if (*p.prediction == p.truth) ++r.exact;
    const size_t denom = Levenshtein(p.input, p.truth);
    if (denom == 0) {
      ++r.already_modern;
      continue;
    }
    const size_t num = Levenshtein(*p.prediction, p.truth);
    ++r.scored;
    r.prediction_distance += num;
    r.input_distance += denom;
    ratio_sum += static_cast<double>(num) / static_cast<double>(denom);
  }
  if (r.scored == 0) {
    r.corpus_cerr = std::numeric_limits<double>::quiet_NaN();
    r.mean_pair_cerr = std::numeric_limits<double>::quiet_NaN();
  } else {
    r.corpus_cerr = static_cast<double>(r.prediction_distance) /
                    static_cast<double>(r.input_distance);
    r.mean_pair_cerr = ratio_sum / static_cast<double>(r.scored);
  }
  return r;
}

std::string FormatReport(const CerrReport &report) {
  auto real = [](double v) {
    if (std::isnan(v)) return std::string("nan");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
  };
  std::string out;
  out += "pairs=" + std::to_string(report.pairs) + "\n";
  out += "scored=" + std::to_string(report.scored) + "\n";
  out += "already_modern=" + std::to_string(report.already_modern) + "\n";
  out += "exact=" + std::to_string(report.exact) + "\n";
  out += "prediction_distance=" + std::to_string(report.prediction_distance) + "\n";
  out += "input_distance=" + std::to_string(report.input_distance) + "\n";
  out += "corpus_cerr=" + real(report.corpus_cerr) + "\n";
  out += "mean_pair_cerr=" + real(report.mean_pair_cerr) + "\n";
  return out;
}

}  // namespace kahako
