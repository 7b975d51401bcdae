// lm/ngram-estimate.cc

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

// Katz and Kneser-Ney estimation into the backoff representation of
// NgramModel. Orders are estimated bottom-up so that every lower-order
// probability needed by a higher order is already final.

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "base/log.h"
#include "lm/ngram-model.h"

namespace kahako {
namespace {

constexpr int kKatzMaxDiscounted = 5;
constexpr double kFallbackDiscount = 0.5;

// Counts used at one order: context -> (symbol -> count).
using LevelCounts = std::map<Ngram, std::map<Label, int64_t>>;

// Raw counts of k-grams, or continuation counts N1+(. g) derived from the
// (k+1)-grams. Grams predicting BOS are context-only and skipped.
LevelCounts CollectLevel(const NgramCounts &counts, int k, bool continuation) {
  LevelCounts level;
  if (!continuation) {
    for (const auto &[gram, n] : counts.Grams(k)) {
      if (gram.back() == kBos) continue;
      Ngram context(gram.begin(), gram.end() - 1);
      level[context][gram.back()] += n;
    }
    return level;
  }
  for (const auto &[gram, n] : counts.Grams(k + 1)) {
    if (gram.back() == kBos) continue;
    Ngram context(gram.begin() + 1, gram.end() - 1);
    level[context][gram.back()] += 1;
  }
  return level;
}

std::map<int64_t, int64_t> CountOfCounts(const LevelCounts &level) {
  std::map<int64_t, int64_t> n;
  for (const auto &[context, row] : level) {
    for (const auto &[c, count] : row) ++n[count];
  }
  return n;
}

int64_t Lookup(const std::map<int64_t, int64_t> &m, int64_t key) {
  auto it = m.find(key);
  return it == m.end() ? 0 : it->second;
}

double KneserNeyDiscount(const LevelCounts &level, int k) {
  const auto n = CountOfCounts(level);
  const int64_t n1 = Lookup(n, 1);
  const int64_t n2 = Lookup(n, 2);
  if (n1 == 0 || n2 == 0) {
    std::ostringstream msg;
    msg << "order " << k << ": degenerate count-of-counts (n1=" << n1
        << ", n2=" << n2 << "); using discount " << kFallbackDiscount;
    LogWarning(msg.str());
    return kFallbackDiscount;
  }
  return static_cast<double>(n1) / static_cast<double>(n1 + 2 * n2);
}

// Good-Turing discount ratios d_r for r = 1..5 (index r). Counts above 5 are
// not discounted. An out-of-range ratio falls back to absolute discounting
// by 0.5.
std::vector<double> KatzDiscounts(const LevelCounts &level, int k) {
  const auto n = CountOfCounts(level);
  std::vector<double> d(kKatzMaxDiscounted + 1, 1.0);
  const double n1 = static_cast<double>(Lookup(n, 1));
  const double cutoff =
      n1 > 0 ? (kKatzMaxDiscounted + 1) *
                   static_cast<double>(Lookup(n, kKatzMaxDiscounted + 1)) / n1
             : 0.0;
  bool warned = false;
  for (int r = 1; r <= kKatzMaxDiscounted; ++r) {
    const double nr = static_cast<double>(Lookup(n, r));
    const double nr1 = static_cast<double>(Lookup(n, r + 1));
    double ratio = -1.0;
    if (nr > 0 && nr1 > 0 && n1 > 0 && cutoff < 1.0) {
      const double r_star = (r + 1) * nr1 / nr;
      ratio = (r_star / r - cutoff) / (1.0 - cutoff);
    }
    if (!(ratio > 0.0 && ratio < 1.0)) {
      ratio = (r - kFallbackDiscount) / r;
      if (!warned) {
        LogWarning("order " + std::to_string(k) +
                   ": Good-Turing ratio out of range; using absolute "
                   "discounting for some counts");
        warned = true;
      }
    }
    d[r] = ratio;
  }
  return d;
}

// ln p(c | context) summed over `symbols` under the already-estimated
// lower orders.
double LowerMass(const NgramModel &model, const Ngram &lower_context,
                 const std::map<Label, int64_t> &row) {
  double mass = 0.0;
  for (const auto &[c, count] : row) {
    mass += std::exp(model.LogProb(lower_context, c));
  }
  return mass;
}

void EstimateUnigrams(NgramModel &model, const std::map<Label, int64_t> &row,
                      Smoothing smoothing, double kn_discount,
                      const std::vector<double> &katz) {
  const std::vector<Label> vocab = model.PredictedLabels();
  const double uniform = 1.0 / static_cast<double>(vocab.size());
  double total = 0.0;
  for (const auto &[c, n] : row) total += static_cast<double>(n);

  std::map<Label, double> seen;
  for (const auto &[c, n] : row) {
    const double count = static_cast<double>(n);
    if (smoothing == Smoothing::kKatz) {
      const double d = n <= kKatzMaxDiscounted ? katz[n] : 1.0;
      seen[c] = d * count / total;
    } else {
      seen[c] = std::max(count - kn_discount, 0.0) / total;
    }
  }
  double left = 1.0;
  for (const auto &[c, p] : seen) left -= p;
  if (left <= 1e-12) {
    for (auto &[c, p] : seen) p = static_cast<double>(row.at(c)) / (total + 1.0);
    left = 1.0 / (total + 1.0);
  }
  // The leftover mass is spread evenly over the whole predicted vocabulary.
  for (Label c : vocab) {
    auto it = seen.find(c);
    const double p = (it == seen.end() ? 0.0 : it->second) + left * uniform;
    const Label gram[] = {c};
    model.SetLogProb(gram, std::log(p));
  }
}

void EstimateContext(NgramModel &model, const Ngram &context,
                     const std::map<Label, int64_t> &row, Smoothing smoothing,
                     double kn_discount, const std::vector<double> &katz) {
  const Ngram lower(context.begin() + 1, context.end());
  double total = 0.0;
  for (const auto &[c, n] : row) total += static_cast<double>(n);
  const double types = static_cast<double>(row.size());

  Ngram gram = context;
  gram.push_back(kNoLabel);
  if (smoothing == Smoothing::kKneserNey) {
    const double gamma = kn_discount * types / total;
    for (const auto &[c, n] : row) {
      const double p =
          std::max(static_cast<double>(n) - kn_discount, 0.0) / total +
          gamma * std::exp(model.LogProb(lower, c));
      gram.back() = c;
      model.SetLogProb(gram, std::log(p));
    }
    model.SetLogBackoff(context, std::log(gamma));
    return;
  }

  std::map<Label, double> seen;
  for (const auto &[c, n] : row) {
    const double count = static_cast<double>(n);
    if (smoothing == Smoothing::kKatz) {
      const double d = n <= kKatzMaxDiscounted ? katz[n] : 1.0;
      seen[c] = d * count / total;
    } else {
      seen[c] = (count - kn_discount) / total;
    }
  }
  double left = 1.0;
  for (const auto &[c, p] : seen) left -= p;
  if (left <= 1e-12) {
    // Nothing was discounted (every count above the Katz cutoff): reserve
    // the mass of one extra unseen event.
    for (auto &[c, p] : seen) p = static_cast<double>(row.at(c)) / (total + 1.0);
    left = 1.0 / (total + 1.0);
  }
  const double lower_unseen = 1.0 - LowerMass(model, lower, row);
  double alpha;
  if (lower_unseen <= 1e-15) {
    // Lower order has no mass outside the seen set; renormalize instead.
    for (auto &[c, p] : seen) p /= (1.0 - left);
    alpha = 1.0;
  } else {
    alpha = left / lower_unseen;
  }
  for (const auto &[c, p] : seen) {
    gram.back() = c;
    model.SetLogProb(gram, std::log(p));
  }
  model.SetLogBackoff(context, std::log(alpha));
}

}  // namespace

NgramModel EstimateNgramModel(const NgramCounts &counts, Smoothing smoothing,
                              std::shared_ptr<const SymbolTable> syms) {
  if (counts.empty()) {
    throw std::invalid_argument("cannot estimate a model from empty counts");
  }
  const int order = counts.order();
  NgramModel model(order, smoothing, std::move(syms));
  for (int k = 1; k <= order; ++k) {
    const bool continuation = smoothing != Smoothing::kKatz && k < order;
    const LevelCounts level = CollectLevel(counts, k, continuation);
    double kn_discount = 0.0;
    std::vector<double> katz;
    if (smoothing == Smoothing::kKatz) {
      katz = KatzDiscounts(level, k);
    } else {
      kn_discount = KneserNeyDiscount(level, k);
    }
    if (k == 1) {
      auto it = level.find(Ngram{});
      static const std::map<Label, int64_t> kEmpty;
      EstimateUnigrams(model, it == level.end() ? kEmpty : it->second,
                       smoothing, kn_discount, katz);
      continue;
    }
    for (const auto &[context, row] : level) {
      EstimateContext(model, context, row, smoothing, kn_discount, katz);
    }
  }
  return model;
}

}  // namespace kahako
