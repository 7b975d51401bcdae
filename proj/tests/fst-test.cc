// tests/fst-test.cc

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

#include <sstream>

#include "base/errors.h"
#include "fst/fst-algorithms.h"
#include "fst/symbol-table.h"
#include "fst/wfst.h"
#include "test-util.h"

namespace kahako {
namespace {

using testing::Labels;

Labels L(std::u32string_view text, const SymbolTable &syms) {
  return syms.MapText(text);
}

// Identity transducer over every non-reserved symbol of `syms`.
Wfst Identity(std::shared_ptr<const SymbolTable> syms) {
  Wfst fst(syms, syms);
  const StateId s = fst.AddState();
  fst.SetStart(s);
  fst.SetFinal(s, Weight::One());
  for (Label l = kNumReserved; l < static_cast<Label>(syms->size()); ++l) {
    fst.AddArc(s, Arc{l, l, Weight::One(), s});
  }
  return fst;
}

TEST_CASE("weight semiring laws hold exactly on dyadic values") {
  std::mt19937_64 rng(7);
  auto draw = [&]() {
    return Weight(testing::Uniform(rng, -64, 64) / 4.0);
  };
  for (int i = 0; i < 1000; ++i) {
    const Weight a = draw(), b = draw(), c = draw();
    CHECK(Plus(Plus(a, b), c) == Plus(a, Plus(b, c)));
    CHECK(Times(Times(a, b), c) == Times(a, Times(b, c)));
    CHECK(Plus(a, b) == Plus(b, a));
    CHECK(Times(a, b) == Times(b, a));
    CHECK(Plus(a, Weight::Zero()) == a);
    CHECK(Times(a, Weight::One()) == a);
    CHECK(Times(a, Weight::Zero()).IsZero());
    CHECK(Times(a, Plus(b, c)) == Plus(Times(a, b), Times(a, c)));
  }
}

TEST_CASE("symbol table reserves the special labels") {
  SymbolTable syms;
  CHECK(syms.size() == 4);
  CHECK(syms.FindName("<eps>") == kEpsilon);
  CHECK(syms.FindName("<s>") == kBos);
  CHECK(syms.FindName("</s>") == kEos);
  CHECK(syms.FindName("<unk>") == kUnk);
  const Label a = syms.AddSymbol(U'a');
  CHECK(a == kNumReserved);
  CHECK(syms.AddSymbol(U'a') == a);
  CHECK(syms.Map(U'a') == a);
  CHECK(syms.Map(U'q') == kUnk);
  CHECK(syms.Find(U'q') == kNoLabel);
  CHECK(syms.Character(a) == U'a');
}

TEST_CASE("symbol table text round trip") {
  SymbolTable syms;
  for (char32_t c : std::u32string(U"ka ʻāina\t")) syms.AddSymbol(c);
  std::stringstream ss;
  syms.Write(ss);
  const SymbolTable back = SymbolTable::Read(ss);
  CHECK(back == syms);
  CHECK(back.size() == syms.size());
  std::stringstream bad("0\t<eps>\n1\t<s>\n");
  CHECK_THROWS_AS(SymbolTable::Read(bad), FormatError);
}

TEST_CASE("chain acceptor") {
  auto syms = std::make_shared<SymbolTable>();
  for (char32_t c : std::u32string(U"aehiW")) syms->AddSymbol(c);

  const Wfst aa = ChainAcceptor(U"aa", syms);
  CHECK(aa.NumStates() == 3);
  CHECK(aa.TotalArcs() == 2);
  CHECK(aa.IsFinal(2));
  CHECK(!aa.IsFinal(0));
  for (StateId s = 0; s < 2; ++s) {
    REQUIRE(aa.NumArcs(s) == 1);
    const Arc &arc = aa.Arcs(s)[0];
    CHECK(arc.ilabel == syms->Find(U'a'));
    CHECK(arc.olabel == arc.ilabel);
    CHECK(arc.weight == Weight::One());
    CHECK(arc.nextstate == s + 1);
  }

  const Wfst empty = ChainAcceptor(U"", syms);
  CHECK(empty.NumStates() == 1);
  CHECK(empty.Start() == 0);
  CHECK(empty.IsFinal(0));
  CHECK(ShortestPath(empty).olabels.empty());

  const Wfst weheia = ChainAcceptor(U"Weheia", syms);
  CHECK(weheia.NumStates() == 7);
  const Wfst id = Identity(syms);
  const Labels w = L(U"Weheia", *syms);
  CHECK(testing::OutputsFor(Compose(weheia, id), w).size() == 1);
  CHECK(testing::OutputsFor(Compose(weheia, id), L(U"Wehe", *syms)).empty());

  // Unknown characters become <unk>.
  const Wfst unk = ChainAcceptor(U"aq", syms);
  CHECK(unk.Arcs(1)[0].ilabel == kUnk);
}

TEST_CASE("compose with identity keeps the chain") {
  auto syms = testing::LetterSymbols(2);
  const Wfst c = Compose(ChainAcceptor(U"aa", syms), Identity(syms));
  const Path p = ShortestPath(c);
  CHECK(p.olabels == L(U"aa", *syms));
  CHECK(p.ilabels == L(U"aa", *syms));
  CHECK(p.cost == 0.0);
  const testing::Relation out = testing::OutputsFor(c, L(U"aa", *syms));
  REQUIRE(out.size() == 1);
  CHECK(out.begin()->first == L(U"aa", *syms));
}

TEST_CASE("compose rejects mismatched symbol tables") {
  auto a = testing::LetterSymbols(2);
  auto b = testing::LetterSymbols(3);
  CHECK_THROWS_AS(Compose(ChainAcceptor(U"a", a), Identity(b)),
                  ModelMismatchError);
}

TEST_CASE("compose matches the brute-force join on random 3-state FSTs") {
  std::mt19937_64 rng(11);
  auto syms = testing::LetterSymbols(2);
  testing::RandomFstOptions opt;
  opt.max_states = 3;
  opt.num_letters = 2;
  const auto inputs = testing::AllStrings(2, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const Wfst a = testing::RandomFst(rng, syms, opt);
    const Wfst b = testing::RandomFst(rng, syms, opt);
    const Wfst c = Compose(a, b);
    for (const Labels &x : inputs) {
      const testing::Relation expected = testing::JoinFor(a, b, x);
      const testing::Relation got = testing::OutputsFor(c, x);
      REQUIRE(got.size() == expected.size());
      for (const auto &[z, w] : expected) {
        REQUIRE(got.count(z) == 1);
        CHECK(got.at(z) == doctest::Approx(w).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("shortest path basics") {
  auto syms = testing::LetterSymbols(2);
  const Label a = kNumReserved, b = kNumReserved + 1;
  CHECK(ShortestPath(ChainAcceptor(U"ab", syms)).cost == 0.0);

  Wfst two(syms, syms);
  for (int i = 0; i < 3; ++i) two.AddState();
  two.SetStart(0);
  two.AddArc(0, Arc{a, a, Weight(2.0), 1});
  two.AddArc(0, Arc{b, b, Weight(1.5), 2});
  two.SetFinal(1, Weight::One());
  two.SetFinal(2, Weight::One());
  const Path p = ShortestPath(two);
  CHECK(p.cost == 1.5);
  CHECK(p.olabels == Labels{b});

  Wfst none(syms, syms);
  none.SetStart(none.AddState());
  CHECK_THROWS_AS(ShortestPath(none), EmptyLanguageError);
}

TEST_CASE("shortest path breaks ties by the smallest output string") {
  auto syms = testing::LetterSymbols(3);
  const Label a = kNumReserved, b = kNumReserved + 1, c = kNumReserved + 2;
  Wfst f(syms, syms);
  for (int i = 0; i < 5; ++i) f.AddState();
  f.SetStart(0);
  // "c" and "ab" and "b" all cost 1; the smallest string is "ab".
  f.AddArc(0, Arc{a, c, Weight(1.0), 4});
  f.AddArc(0, Arc{a, kEpsilon, Weight(0.5), 1});
  f.AddArc(1, Arc{a, a, Weight(0.25), 2});
  f.AddArc(2, Arc{a, b, Weight(0.25), 4});
  f.AddArc(0, Arc{b, b, Weight(1.0), 3});
  f.SetFinal(3, Weight::One());
  f.SetFinal(4, Weight::One());
  const Path p = ShortestPath(f);
  CHECK(p.cost == 1.0);
  CHECK(p.olabels == Labels{a, b});
}

TEST_CASE("shortest path cost equals the enumerated minimum") {
  std::mt19937_64 rng(5);
  auto syms = testing::LetterSymbols(3);
  testing::RandomFstOptions opt;
  opt.max_states = 10;
  opt.acyclic = true;
  opt.integer_weights = true;  // plenty of ties
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Wfst f = testing::RandomFst(rng, syms, opt);
    const auto paths = testing::AllPaths(f);
    if (paths.empty()) {
      CHECK_THROWS_AS(ShortestPath(f), EmptyLanguageError);
      continue;
    }
    double best = INFINITY;
    for (const auto &path : paths) best = std::min(best, path.cost);
    Labels smallest;
    bool first = true;
    for (const auto &path : paths) {
      if (path.cost != best) continue;
      if (first || path.olabels < smallest) smallest = path.olabels;
      first = false;
    }
    const Path p = ShortestPath(f);
    CHECK(p.cost == best);
    CHECK(p.olabels == smallest);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("shortest path handles negative weights on acyclic FSTs") {
  auto syms = testing::LetterSymbols(2);
  const Label a = kNumReserved, b = kNumReserved + 1;
  Wfst f(syms, syms);
  for (int i = 0; i < 3; ++i) f.AddState();
  f.SetStart(0);
  f.AddArc(0, Arc{a, a, Weight(1.0), 2});
  f.AddArc(0, Arc{kEpsilon, kEpsilon, Weight(-0.5), 1});
  f.AddArc(1, Arc{b, b, Weight(0.75), 2});
  f.SetFinal(2, Weight::One());
  const Path p = ShortestPath(f);
  CHECK(p.cost == 0.25);
  CHECK(p.olabels == Labels{b});

  f.AddArc(2, Arc{kEpsilon, kEpsilon, Weight(-1.0), 1});
  CHECK_THROWS_AS(ShortestPath(f), DecodeError);
}

TEST_CASE("trim") {
  std::mt19937_64 rng(3);
  auto syms = testing::LetterSymbols(2);

  const Wfst chain = ChainAcceptor(U"ab", syms);
  CHECK(Trim(chain).StructurallyEqual(chain));

  Wfst extra = chain;
  const StateId dead = extra.AddState();
  extra.AddArc(dead, Arc{kNumReserved, kNumReserved, Weight::One(), 0});
  const Wfst trimmed = Trim(extra);
  CHECK(trimmed.NumStates() == 3);
  CHECK(trimmed.StructurallyEqual(chain));

  testing::RandomFstOptions opt;
  opt.max_states = 6;
  int both = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Wfst f = testing::RandomFst(rng, syms, opt);
    const Wfst t = Trim(f);
    CHECK(t.NumStates() <= f.NumStates());
    bool ok_f = true, ok_t = true;
    Path pf, pt;
    try {
      pf = ShortestPath(f);
    } catch (const EmptyLanguageError &) {
      ok_f = false;
    }
    try {
      pt = ShortestPath(t);
    } catch (const EmptyLanguageError &) {
      ok_t = false;
    }
    REQUIRE(ok_f == ok_t);
    if (!ok_f) continue;
    ++both;
    CHECK(pf.cost == pt.cost);
    CHECK(pf.olabels == pt.olabels);
    CHECK(pf.ilabels == pt.ilabels);
  }
  CHECK(both > 100);
}

TEST_CASE("epsilon-input cycle detection") {
  auto syms = testing::LetterSymbols(1);
  Wfst f(syms, syms);
  f.AddState();
  f.AddState();
  f.SetStart(0);
  f.SetFinal(1, Weight::One());
  f.AddArc(0, Arc{kEpsilon, kNumReserved, Weight::One(), 1});
  CHECK(!HasInputEpsilonCycle(f));
  f.AddArc(1, Arc{kNumReserved, kEpsilon, Weight::One(), 0});
  CHECK(!HasInputEpsilonCycle(f));
  f.AddArc(1, Arc{kEpsilon, kEpsilon, Weight::One(), 0});
  CHECK(HasInputEpsilonCycle(f));
}

TEST_CASE("FST text round trip") {
  std::mt19937_64 rng(9);
  auto syms = testing::LetterSymbols(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Wfst f = testing::RandomFst(rng, syms, {});
    std::stringstream ss;
    WriteText(f, ss);
    const Wfst back = ReadText(ss, syms, syms);
    CHECK(back.StructurallyEqual(f));
  }
}

}  // namespace
}  // namespace kahako
