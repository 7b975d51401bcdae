// tests/ortho-test.cc

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
#include "base/utf8.h"
#include "fst/fst-algorithms.h"
#include "ortho/alphabet.h"
#include "ortho/normalize.h"
#include "ortho/orthography-fst.h"
#include "ortho/rules.h"
#include "test-util.h"

namespace kahako {
namespace {

using Candidates = std::map<std::u32string, double>;

std::shared_ptr<const SymbolTable> Syms() {
  return std::make_shared<SymbolTable>(MakeSymbolTable({}));
}

// Every output of `rules` for `input`, enumerated on the transducer itself.
Candidates Outputs(const Wfst &rules, std::u32string_view input) {
  Candidates out;
  const auto &syms = rules.InputSymbols();
  for (const auto &[labels, w] :
       testing::OutputsFor(rules, syms.MapText(input))) {
    out.emplace(syms.Render(labels), w);
  }
  return out;
}

// The same outputs obtained through composition with a chain acceptor.
Candidates ComposedOutputs(const Wfst &rules, std::u32string_view input) {
  Candidates out;
  const Wfst lattice =
      Compose(ChainAcceptor(input, rules.InputSymbolsPtr()), rules);
  const auto &syms = rules.InputSymbols();
  for (const auto &[labels, w] :
       testing::OutputsFor(lattice, syms.MapText(input))) {
    out.emplace(syms.Render(labels), w);
  }
  return out;
}

// Whether `output` is an accepting output for `input`, decided by composing
// with an output-side chain and testing for an accepting path.
bool Accepts(const Wfst &rules, std::u32string_view input,
             std::u32string_view output) {
  const auto syms = rules.InputSymbolsPtr();
  return HasAcceptingPath(Compose(
      Compose(ChainAcceptor(input, syms), rules), ChainAcceptor(output, syms)));
}

// Random modern-orthography string over a few native letters, with okina
// only before vowels.
std::u32string RandomModern(std::mt19937_64 &rng, int max_len) {
  const std::u32string letters = U"aeiouāēīōūAEIOUĀĒĪŌŪhklmnpw HKLMNPW.,0";
  std::u32string out;
  const int n = testing::Uniform(rng, 0, max_len);
  for (int i = 0; i < n; ++i) {
    const char32_t c = letters[testing::Uniform(rng, 0, letters.size() - 1)];
    if (alphabet::IsVowel(c) && testing::Coin(rng, 0.3)) out.push_back(kOkina);
    out.push_back(c);
  }
  return out;
}

TEST_CASE("normalize") {
  CHECK(Normalize(std::string_view("M\x61\xCC\x84la")) == U"Māla");
  CHECK(Normalize(std::string_view("Ali`i")) == U"Aliʻi");
  CHECK(Normalize(std::string_view("Ali\xCA\xBBi")) == U"Aliʻi");
  CHECK(Normalize(std::string_view("kanu")) == U"kanu");
  CHECK(Normalize(std::u32string_view(U"Ē")) == U"Ē");
  CHECK_THROWS_AS(Normalize(std::string_view("ka\xC3")), EncodingError);
  CHECK_THROWS_AS(Normalize(std::string_view("\xED\xA0\x80")), EncodingError);
}

TEST_CASE("utf8 round trip") {
  const std::u32string text = U"ʻŌlelo Hawaiʻi 🌺 \u0000x";
  CHECK(DecodeUtf8(EncodeUtf8(text)) == text);
  CHECK_THROWS_AS(DecodeUtf8("\xC0\xAF"), EncodingError);  // overlong
  CHECK_THROWS_AS(DecodeUtf8("\xF4\x90\x80\x80"), EncodingError);
}

TEST_CASE("backward map") {
  CHECK(BackwardMap(U"E aʻo aʻe ʻoe iā ia") == U"E ao ae oe ia ia");
  CHECK(BackwardMap(U"ʻāʻā") == U"aa");
  CHECK(BackwardMap(U"Hawaiʻi 2018!") == U"Hawaii 2018!");
  CHECK(BackwardMap(U"ĀĒĪŌŪ") == U"AEIOU");
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const std::u32string x = RandomModern(rng, 12);
    const std::u32string y = BackwardMap(x);
    CHECK(BackwardMap(y) == y);
    CHECK(y.size() <= x.size());
    CHECK(y.find(kOkina) == y.npos);
  }
}

TEST_CASE("alphabet") {
  CHECK(alphabet::Lengthen(U'a') == U'ā');
  CHECK(alphabet::Lengthen(U'U') == U'Ū');
  CHECK(alphabet::Lengthen(U'k') == U'k');
  CHECK(alphabet::Shorten(U'Ō') == U'O');
  CHECK(alphabet::IsUpper(U'Ā'));
  CHECK(!alphabet::IsUpper(U'ā'));
  CHECK(alphabet::IsNativeConsonant(U'w'));
  CHECK(alphabet::IsForeignConsonant(U't'));
  CHECK(!alphabet::IsVowel(kOkina));
  const std::vector<std::u32string> lines{U"kē ñ"};
  const SymbolTable syms = MakeSymbolTable(lines);
  CHECK(syms.Contains(U'ñ'));
  CHECK(syms.Contains(kOkina));
  CHECK(syms.Contains(U'Ū'));
  CHECK(!syms.Contains(U'`'));
}

TEST_CASE("the four candidates for aa") {
  const Wfst c = BuildOrthographyFst(Syms());
  const Candidates out = ComposedOutputs(c, U"aa");
  for (std::u32string w : {U"aa", U"aʻa", U"ʻaʻa", U"ʻaʻā", U"ʻāʻā"}) {
    CHECK(out.count(w) == 1);
  }
  // Each vowel may be lengthened and preceded by an okina: 16 strings.
  std::set<std::u32string> expected;
  for (int mask = 0; mask < 16; ++mask) {
    std::u32string w;
    for (int v = 0; v < 2; ++v) {
      if (mask & (1 << (2 * v))) w.push_back(kOkina);
      w.push_back(mask & (2 << (2 * v)) ? U'ā' : U'a');
    }
    expected.insert(w);
  }
  std::set<std::u32string> got;
  for (const auto &[w, cost] : out) {
    got.insert(w);
    CHECK(cost == 0.0);
  }
  CHECK(got == expected);
  CHECK(out == Outputs(c, U"aa"));
}

TEST_CASE("orthography transducer examples") {
  const Wfst c = BuildOrthographyFst(Syms());
  const Candidates x = Outputs(c, U"x");
  REQUIRE(x.size() == 1);
  CHECK(x.begin()->first == U"x");
  CHECK(Accepts(c, U"Okakopa", U"ʻOkakopa"));
  CHECK(!Accepts(c, U"Okakopa", U"ʻokakopa"));
  // An inserted okina must be followed by a vowel.
  CHECK(Accepts(c, U"kanu", U"kʻanu"));
  CHECK(!Accepts(c, U"kanu", U"ʻkanu"));
  CHECK(!Accepts(c, U"kanu", U"kanuʻ"));
  CHECK(!Accepts(c, U"alaila", U"a laila"));
  CHECK(!HasInputEpsilonCycle(c));
  // Unknown characters pass through as <unk>.
  CHECK(Outputs(c, U"ñ").count(U"ñ") == 0);
  CHECK(testing::OutputsFor(c, {kUnk}).count({kUnk}) == 1);
}

TEST_CASE("orthography transducer never changes case or other letters") {
  const Wfst c = BuildOrthographyFst(Syms());
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const std::u32string input = BackwardMap(RandomModern(rng, 4));
    for (const auto &[out, w] : Outputs(c, input)) {
      CHECK(BackwardMap(out) == input);
      for (size_t k = 0; k < out.size(); ++k) {
        if (out[k] == kOkina) {
          REQUIRE(k + 1 < out.size());
          CHECK(alphabet::IsVowel(out[k + 1]));
        }
      }
    }
  }
}

TEST_CASE("round-trip containment") {
  const Wfst c = BuildOrthographyFst(Syms());
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const std::u32string x = RandomModern(rng, 10);
    CHECK(Accepts(c, BackwardMap(x), x));
  }
}

TEST_CASE("word-boundary transducer") {
  const auto syms = Syms();
  const Wfst c = BuildOrthographyFst(syms);
  const Wfst wb = BuildWordBoundaryFst(syms);
  CHECK(Accepts(wb, U"alaila", U"a laila"));
  CHECK(Accepts(wb, U"Weheia", U"Wehe ʻia"));
  CHECK(!HasInputEpsilonCycle(wb));
  CHECK(!Accepts(wb, U"alaila", U"al aila"));

  // Every C output is a C_wb output with the same weight, and C_wb never
  // produces two spaces in a row.
  std::vector<std::u32string> inputs{U""};
  for (size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].size() == 4) continue;
    for (char32_t ch : std::u32string(U"ak ")) {
      inputs.push_back(inputs[i] + ch);
    }
  }
  for (const std::u32string &x : inputs) {
    const Candidates in_c = Outputs(c, x);
    const Candidates in_wb = Outputs(wb, x);
    for (const auto &[out, w] : in_c) {
      REQUIRE(in_wb.count(out) == 1);
      CHECK(in_wb.at(out) == w);
    }
    if (x.find(U"  ") != x.npos) continue;
    for (const auto &[out, w] : in_wb) {
      CHECK(out.find(U"  ") == out.npos);
    }
  }
}

TEST_CASE("rule files") {
  std::istringstream is(
      "# foreign letters\n"
      "t\tk\t1.5\n"
      "<eps>\th\t2\tguard=vowel\n"
      "<space>\t<eps>\t0.5\n");
  const RuleSet rules = ParseRuleSet(is);
  REQUIRE(rules.size() == 3);
  CHECK(rules[0].from == U't');
  CHECK(rules[0].to == U'k');
  CHECK(rules[0].weight == Weight(1.5));
  CHECK(!rules[1].from.has_value());
  CHECK(rules[1].guard == RuleGuard::kNextIsVowel);
  CHECK(rules[2].from == U' ');
  CHECK(!rules[2].to.has_value());

  OrthographyFstOptions options;
  options.extra_rules = rules;
  const Wfst c = BuildOrthographyFst(Syms(), options);
  CHECK(!HasInputEpsilonCycle(c));
  const Candidates out = Outputs(c, U"ta");
  CHECK(out.at(U"ka") == 1.5);
  CHECK(out.at(U"tha") == 2.0);
  CHECK(out.at(U"khā") == 3.5);
  CHECK(Outputs(c, U"a a").at(U"aa") == 0.5);

  for (const char *bad : {"t\n", "<eps>\t<eps>\t1\n", "t\tk\t-1\n",
                          "t\tk\tx\n", "tt\tk\t1\n", "t\tk\t1\tguard=no\n"}) {
    std::istringstream b(bad);
    CHECK_THROWS_AS(ParseRuleSet(b), FormatError);
  }
}

TEST_CASE("insertion penalty weights every inserted okina") {
  OrthographyFstOptions options;
  options.insertion_penalty = 0.25;
  const Wfst c = BuildOrthographyFst(Syms(), options);
  const Candidates out = Outputs(c, U"aa");
  CHECK(out.at(U"aa") == 0.0);
  CHECK(out.at(U"aʻā") == 0.25);
  CHECK(out.at(U"ʻaʻa") == 0.5);
}

}  // namespace
}  // namespace kahako
