// tests/lm-test.cc

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "base/errors.h"
#include "base/log.h"
#include "fst/fst-algorithms.h"
#include "lm/arpa.h"
#include "lm/ngram-counts.h"
#include "lm/ngram-fst.h"
#include "lm/ngram-model.h"
#include "test-util.h"

namespace kahako {
namespace {

using testing::Labels;

constexpr Smoothing kAllSmoothings[] = {Smoothing::kKatz, Smoothing::kKneserNey,
                                        Smoothing::kKneserNeyBackoff};

std::vector<Labels> Lines(std::initializer_list<std::u32string_view> texts,
                          const SymbolTable &syms) {
  std::vector<Labels> out;
  for (auto t : texts) out.push_back(syms.MapText(t));
  return out;
}

std::vector<Labels> RandomLines(std::mt19937_64 &rng, int letters, int n,
                                int max_len) {
  std::vector<Labels> out;
  for (int i = 0; i < n; ++i) {
    Labels line;
    const int len = testing::Uniform(rng, 0, max_len);
    for (int k = 0; k < len; ++k) {
      // Skewed towards the first letters so that counts repeat.
      const int a = testing::Uniform(rng, 0, letters - 1);
      const int b = testing::Uniform(rng, 0, letters - 1);
      line.push_back(kNumReserved + std::min(a, b));
    }
    out.push_back(line);
  }
  return out;
}

// Interpolated Kneser-Ney written directly from the textbook recursion over
// padded string counts: raw counts at the top order, distinct left
// extensions below, one discount n1 / (n1 + 2 n2) per order, and a uniform
// distribution over the predictable symbols at the bottom.
class KneserNeyOracle {
 public:
  KneserNeyOracle(const std::vector<Labels> &lines, int order, size_t vocab)
      : order_(order) {
    for (Label l = 0; static_cast<size_t>(l) < vocab; ++l) {
      if (l != kEpsilon && l != kBos) predicted_.push_back(l);
    }
    for (const Labels &line : lines) {
      Labels padded(order - 1, kBos);
      padded.insert(padded.end(), line.begin(), line.end());
      padded.push_back(kEos);
      for (size_t i = 0; i < padded.size(); ++i) {
        for (int k = 1; k <= order && i + k <= padded.size(); ++k) {
          Labels gram(padded.begin() + i, padded.begin() + i + k);
          if (gram.back() == kBos) continue;
          if (k == order) ++raw_[gram];
          if (k >= 2) {
            left_[Labels(gram.begin() + 1, gram.end())].insert(gram[0]);
          }
        }
      }
    }
    discount_.assign(order + 1, 0.0);
    for (int k = 1; k <= order; ++k) {
      std::map<int64_t, int64_t> coc;
      for (const auto &[gram, c] : AllCounts(k)) ++coc[c];
      const int64_t n1 = coc[1], n2 = coc[2];
      discount_[k] = n1 == 0 || n2 == 0 ? 0.5 : double(n1) / (n1 + 2 * n2);
    }
  }

  double Prob(const Labels &history, Label w) const {
    return P(order_, Labels(history.end() - (order_ - 1), history.end()), w);
  }

  double Discount(int k) const { return discount_[k]; }

 private:
  int64_t Count(int k, const Labels &gram) const {
    if (k == order_) {
      auto it = raw_.find(gram);
      return it == raw_.end() ? 0 : it->second;
    }
    auto it = left_.find(gram);
    return it == left_.end() ? 0 : static_cast<int64_t>(it->second.size());
  }

  std::map<Labels, int64_t> AllCounts(int k) const {
    std::map<Labels, int64_t> out;
    if (k == order_) return raw_;
    for (const auto &[gram, set] : left_) {
      if (static_cast<int>(gram.size()) == k) out[gram] = set.size();
    }
    return out;
  }

  double P(int k, const Labels &h, Label w) const {
    if (k == 0) return 1.0 / predicted_.size();
    const Labels lower = h.empty() ? h : Labels(h.begin() + 1, h.end());
    double total = 0.0, types = 0.0, mine = 0.0;
    for (Label v : predicted_) {
      Labels gram = h;
      gram.push_back(v);
      const double c = static_cast<double>(Count(k, gram));
      total += c;
      types += c > 0;
      if (v == w) mine = c;
    }
    if (total == 0.0) return P(k - 1, lower, w);
    const double d = discount_[k];
    return (std::max(mine - d, 0.0) + d * types * P(k - 1, lower, w)) / total;
  }

  int order_;
  std::vector<Label> predicted_;
  std::map<Labels, int64_t> raw_;
  std::map<Labels, std::set<Label>> left_;
  std::vector<double> discount_;
};

// Every history of length order - 1 over BOS and the first `letters`
// letters.
std::vector<Labels> AllHistories(int order, int letters) {
  std::vector<Labels> out{{}};
  for (int k = 0; k < order - 1; ++k) {
    std::vector<Labels> next;
    for (const Labels &h : out) {
      for (int a = -1; a < letters; ++a) {
        Labels g = h;
        g.push_back(a < 0 ? kBos : kNumReserved + a);
        next.push_back(g);
      }
    }
    out = next;
  }
  return out;
}

struct QuietLogs {
  QuietLogs() : saved(GetLogLevel()) { SetLogLevel(LogLevel::kSilent); }
  ~QuietLogs() { SetLogLevel(saved); }
  LogLevel saved;
};

TEST_CASE("n-gram counts") {
  auto syms = testing::LetterSymbols(2);
  const Label a = kNumReserved, b = kNumReserved + 1;

  const auto ab = CountNgrams(Lines({U"ab"}, *syms), 2);
  const std::map<Ngram, int64_t> expected_ab{
      {{kBos, a}, 1}, {{a, b}, 1}, {{b, kEos}, 1}};
  CHECK(ab.Grams(2) == expected_ab);

  const auto abab = CountNgrams(Lines({U"abab"}, *syms), 2);
  const std::map<Ngram, int64_t> expected_abab{
      {{kBos, a}, 1}, {{a, b}, 2}, {{b, a}, 1}, {{b, kEos}, 1}};
  CHECK(abab.Grams(2) == expected_abab);
  CHECK(abab.Count({a}) == 2);
  CHECK(abab.Count({kEos}) == 1);

  const auto none = CountNgrams(std::vector<Labels>{}, 3);
  CHECK(none.empty());
  for (int k = 1; k <= 3; ++k) CHECK(none.Grams(k).empty());

  CHECK_THROWS_AS(NgramCounts(0), std::invalid_argument);

  NgramCounts merged(2);
  merged.Merge(ab);
  merged.Merge(ab);
  CHECK(merged.Count({a, b}) == 2);
  CHECK_THROWS_AS(merged.Merge(CountNgrams(std::vector<Labels>{}, 3)),
                  std::invalid_argument);
}

TEST_CASE("Kneser-Ney by hand on ab, ab, ac") {
  auto syms = testing::LetterSymbols(3);
  const Label a = kNumReserved, b = kNumReserved + 1, c = kNumReserved + 2;
  const auto lines = Lines({U"ab", U"ab", U"ac"}, *syms);
  const NgramModel model = EstimateNgramModel(
      CountNgrams(lines, 2), Smoothing::kKneserNey, syms);
  // Unigram continuation counts: a 1, b 1, c 1, EOS 2, D = 3 / 5; the
  // leftover 0.48 spreads over 5 predictable symbols.
  CHECK(std::exp(model.LogProb({}, a)) == doctest::Approx(0.176));
  CHECK(std::exp(model.LogProb({}, kEos)) == doctest::Approx(0.376));
  CHECK(std::exp(model.LogProb({}, kUnk)) == doctest::Approx(0.096));
  // Bigram counts have n1 = 2, n2 = 2, so D = 1/3; context a has total 3
  // over 2 types.
  CHECK(std::exp(model.LogProb(Labels{a}, b)) ==
        doctest::Approx(5.0 / 9 + 2.0 / 9 * 0.176));
  CHECK(std::exp(model.LogProb(Labels{a}, c)) ==
        doctest::Approx(2.0 / 9 + 2.0 / 9 * 0.176));
  CHECK(std::exp(model.LogProb(Labels{a}, a)) == doctest::Approx(2.0 / 9 * 0.176));
  const KneserNeyOracle oracle(lines, 2, syms->size());
  CHECK(oracle.Discount(1) == doctest::Approx(0.6));
  CHECK(oracle.Discount(2) == doctest::Approx(1.0 / 3));
}

TEST_CASE("Kneser-Ney matches the independent oracle on random corpora") {
  QuietLogs quiet;
  std::mt19937_64 rng(21);
  auto syms = testing::LetterSymbols(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int order = testing::Uniform(rng, 1, 4);
    const auto lines = RandomLines(rng, 3, testing::Uniform(rng, 1, 10), 6);
    const NgramModel model = EstimateNgramModel(
        CountNgrams(lines, order), Smoothing::kKneserNey, syms);
    const KneserNeyOracle oracle(lines, order, syms->size());
    for (const Labels &h : AllHistories(order, 3)) {
      for (Label w : model.PredictedLabels()) {
        REQUIRE(model.LogProb(h, w) ==
                doctest::Approx(std::log(oracle.Prob(h, w))).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("every smoothing normalizes every context") {
  QuietLogs quiet;
  std::mt19937_64 rng(22);
  auto syms = testing::LetterSymbols(4);
  for (int trial = 0; trial < 60; ++trial) {
    const int order = testing::Uniform(rng, 1, 5);
    const auto lines = RandomLines(rng, 4, testing::Uniform(rng, 1, 12), 10);
    const auto counts = CountNgrams(lines, order);
    for (Smoothing s : kAllSmoothings) {
      const NgramModel model = EstimateNgramModel(counts, s, syms);
      const NormalizationReport report = CheckNormalization(model);
      CHECK(report.contexts >= 1);
      CHECK(report.max_abs_error <= 1e-9);
      // Independent check through LogProb on every history.
      for (const Labels &h : AllHistories(order, 4)) {
        double sum = 0.0;
        for (Label w : model.PredictedLabels()) {
          sum += std::exp(model.LogProb(h, w));
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("a repeated symbol dominates every context") {
  QuietLogs quiet;
  auto syms = testing::LetterSymbols(3);
  const Label a = kNumReserved;
  std::vector<Labels> lines(5, syms->MapText(U"aaaa"));
  for (int order = 1; order <= 4; ++order) {
    for (Smoothing s : kAllSmoothings) {
      const NgramModel model =
          EstimateNgramModel(CountNgrams(lines, order), s, syms);
      for (const Labels &h : AllHistories(order, 3)) {
        for (Label w : {kNumReserved + 1, kNumReserved + 2, kUnk}) {
          CHECK(model.LogProb(h, a) >= model.LogProb(h, w));
        }
      }
    }
  }
}

TEST_CASE("empty counts are rejected") {
  auto syms = testing::LetterSymbols(1);
  CHECK_THROWS_AS(EstimateNgramModel(NgramCounts(2), Smoothing::kKatz, syms),
                  std::invalid_argument);
  CHECK_THROWS_AS(ParseSmoothing("witten-bell"), std::invalid_argument);
  for (Smoothing s : kAllSmoothings) {
    CHECK(ParseSmoothing(SmoothingName(s)) == s);
  }
}

TEST_CASE("perplexity") {
  QuietLogs quiet;
  auto syms = testing::LetterSymbols(3);
  NgramModel uniform(1, Smoothing::kKatz, syms);
  const auto predicted = uniform.PredictedLabels();
  for (Label w : predicted) {
    const Label gram[] = {w};
    uniform.SetLogProb(gram, -std::log(double(predicted.size())));
  }
  const auto text = Lines({U"abc", U"", U"cab"}, *syms);
  CHECK(Perplexity(uniform, text) ==
        doctest::Approx(double(predicted.size())));

  // Sentences drawn from a small lexicon, like real text. Uniform random
  // letters are mostly singletons and legitimately favour lower orders.
  auto lex = std::make_shared<SymbolTable>();
  for (char32_t c : std::u32string(U"aeiouhklmnpw ")) lex->AddSymbol(c);
  const std::u32string words[] = {U"aloha", U"kanu", U"mele", U"ka",
                                  U"wai", U"moana", U"pule", U"hale"};
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Labels> lines;
    for (int i = 0; i < 30; ++i) {
      std::u32string text;
      const int n = testing::Uniform(rng, 1, 6);
      for (int k = 0; k < n; ++k) {
        if (k > 0) text.push_back(U' ');
        text += words[testing::Uniform(rng, 0, 7)];
      }
      lines.push_back(lex->MapText(text));
    }
    for (Smoothing s : kAllSmoothings) {
      const double p1 = Perplexity(
          EstimateNgramModel(CountNgrams(lines, 1), s, lex), lines);
      const double p3 = Perplexity(
          EstimateNgramModel(CountNgrams(lines, 3), s, lex), lines);
      INFO("smoothing " << SmoothingName(s));
      CHECK(p3 <= p1);
    }
  }

  auto repeated = [&](int len) {
    const std::vector<Labels> line{Labels(len, kNumReserved)};
    return Perplexity(
        EstimateNgramModel(CountNgrams(line, 2), Smoothing::kKneserNey, syms),
        line);
  };
  CHECK(repeated(200) < repeated(20));
  CHECK(repeated(2000) < 1.05);
  CHECK_THROWS_AS(Perplexity(uniform, std::vector<Labels>{}),
                  std::invalid_argument);
}

TEST_CASE("ARPA round trip") {
  QuietLogs quiet;
  std::mt19937_64 rng(24);
  auto syms = std::make_shared<SymbolTable>();
  for (char32_t c : std::u32string(U"ab ʻā")) syms->AddSymbol(c);
  for (int trial = 0; trial < 20; ++trial) {
    const int order = testing::Uniform(rng, 1, 4);
    const auto lines = RandomLines(rng, 5, 8, 8);
    for (Smoothing s : kAllSmoothings) {
      const NgramModel model =
          EstimateNgramModel(CountNgrams(lines, order), s, syms);
      std::stringstream ss;
      WriteArpa(model, ss);
      const NgramModel back = ReadArpa(ss, syms);
      CHECK(back.order() == model.order());
      CHECK(back.smoothing() == model.smoothing());
      for (const Labels &h : AllHistories(order, 5)) {
        for (Label w : model.PredictedLabels()) {
          CHECK(back.LogProb(h, w) ==
                doctest::Approx(model.LogProb(h, w)).epsilon(1e-6));
        }
      }
      CHECK(CheckNormalization(back).max_abs_error <= 1e-9);
    }
  }
}

TEST_CASE("ARPA reader errors") {
  auto syms = testing::LetterSymbols(2);
  auto read = [&](const std::string &text) {
    std::istringstream is(text);
    return ReadArpa(is, syms);
  };
  const std::string good =
      "\\data\\\nngram 1=2\nngram 2=1\n\n\\1-grams:\n-0.3\ta\t-0.1\n"
      "-0.3\t</s>\n\n\\2-grams:\n-0.1\ta </s>\n\n\\end\\\n";
  const NgramModel model = read(good);
  CHECK(model.smoothing() == Smoothing::kKneserNey);
  CHECK(model.order() == 2);
  CHECK_THROWS_AS(read(""), FormatError);
  CHECK_THROWS_AS(read("\\data\\\n"), FormatError);
  CHECK_THROWS_AS(read("kahako-smoothing=nope\n" + good), FormatError);
  CHECK_THROWS_AS(read("\\data\\\nngram 1=1\n\n\\1-grams:\n-1\tz\n\\end\\\n"),
                  ModelMismatchError);
  CHECK_THROWS_AS(read("\\data\\\nngram 1=2\n\n\\1-grams:\n-1\ta\n\\end\\\n"),
                  FormatError);
  CHECK_THROWS_AS(read("\\data\\\nngram 1=1\n\n\\1-grams:\n-1\ta\t-1\n"
                       "\\end\\\n"),
                  FormatError);
  CHECK_THROWS_AS(read("\\data\\\nngram 1=1\n\n\\1-grams:\nx\ta\n\\end\\\n"),
                  FormatError);
}

TEST_CASE("unigram model as an FST") {
  auto syms = testing::LetterSymbols(2);
  const Label a = kNumReserved, b = kNumReserved + 1;
  NgramModel model(1, Smoothing::kKatz, syms);
  const std::pair<Label, double> probs[] = {{a, 0.5}, {b, 0.25}, {kEos, 0.25}};
  for (auto [l, p] : probs) {
    const Label gram[] = {l};
    model.SetLogProb(gram, std::log(p));
  }
  const Wfst g = NgramToWfst(model);
  REQUIRE(g.NumStates() == 1);
  CHECK(g.Final(g.Start()).Value() == doctest::Approx(-std::log(0.25)));
  std::map<Label, double> weights;
  for (const Arc &arc : g.Arcs(g.Start())) {
    CHECK(arc.ilabel == arc.olabel);
    CHECK(arc.nextstate == g.Start());
    weights[arc.ilabel] = arc.weight.Value();
  }
  CHECK(weights.size() == 2);
  CHECK(weights[a] == doctest::Approx(-std::log(0.5)));
  CHECK(weights[b] == doctest::Approx(-std::log(0.25)));
}

TEST_CASE("unigram-only higher-order model still accepts everything") {
  auto syms = testing::LetterSymbols(2);
  NgramModel model(3, Smoothing::kKatz, syms);
  for (Label l : model.PredictedLabels()) {
    const Label gram[] = {l};
    model.SetLogProb(gram, -std::log(4.0));
  }
  const Wfst g = NgramToWfst(model);
  for (const Labels &s : testing::AllStrings(2, 4)) {
    const Path p = ShortestPath(Compose(ChainAcceptor(s, syms), g));
    CHECK(p.cost == doctest::Approx((s.size() + 1) * std::log(4.0)));
  }
}

// Exact backoff score of a line, including the end-of-line event.
double ModelCost(const NgramModel &model, const Labels &line) {
  Labels history(model.order() - 1, kBos);
  double cost = 0.0;
  for (Label l : line) {
    cost -= model.LogProb(history, l);
    history.push_back(l);
  }
  return cost - model.LogProb(history, kEos);
}

TEST_CASE("FST scores never exceed the model and match it when explicit") {
  QuietLogs quiet;
  std::mt19937_64 rng(25);
  auto syms = testing::LetterSymbols(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int order = testing::Uniform(rng, 1, 4);
    const auto lines = RandomLines(rng, 3, 6, 6);
    const auto counts = CountNgrams(lines, order);
    for (Smoothing s : kAllSmoothings) {
      const NgramModel model = EstimateNgramModel(counts, s, syms);
      const Wfst g = NgramToWfst(model);
      for (const Labels &x : testing::AllStrings(3, 3)) {
        const Path p = ShortestPath(Compose(ChainAcceptor(x, syms), g));
        CHECK(p.olabels == x);
        CHECK(p.cost <= ModelCost(model, x) + 1e-9);
      }
      if (s != Smoothing::kKneserNey) continue;
      // Interpolated explicit probabilities always beat the backoff route,
      // so training lines are scored exactly.
      for (const Labels &x : lines) {
        const Path p = ShortestPath(Compose(ChainAcceptor(x, syms), g));
        CHECK(p.cost == doctest::Approx(ModelCost(model, x)).epsilon(1e-12));
      }
    }
  }
}

}  // namespace
}  // namespace kahako
