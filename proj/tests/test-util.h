// tests/test-util.h

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

// Random generators and brute-force oracles shared by the unit tests and the
// acceptance suite. Nothing here calls the algorithms under test.

#ifndef KAHAKO_TESTS_TEST_UTIL_H_
#define KAHAKO_TESTS_TEST_UTIL_H_

#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fst/symbol-table.h"
#include "fst/wfst.h"

namespace kahako {
namespace testing {

using Labels = std::vector<Label>;
using Relation = std::map<Labels, double>;

// Symbol table holding the reserved symbols plus the first `n` lowercase
// letters, so that letter k has label kNumReserved + k.
inline std::shared_ptr<const SymbolTable> LetterSymbols(int n) {
  auto syms = std::make_shared<SymbolTable>();
  for (int k = 0; k < n; ++k) syms->AddSymbol(U'a' + k);
  return syms;
}

inline int Uniform(std::mt19937_64 &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool Coin(std::mt19937_64 &rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

struct RandomFstOptions {
  int max_states = 4;
  int num_letters = 3;
  int max_arcs_per_state = 3;
  double epsilon_in = 0.25;   // probability of an epsilon input label
  double epsilon_out = 0.25;  // probability of an epsilon output label
  bool acyclic = false;       // every arc goes to a higher state
  bool integer_weights = false;
};

// Random FST in which epsilon-input arcs always go to a higher state, so
// every cycle consumes input and input-driven enumeration terminates.
inline Wfst RandomFst(std::mt19937_64 &rng,
                      std::shared_ptr<const SymbolTable> syms,
                      const RandomFstOptions &opt) {
  Wfst fst(syms, syms);
  const int n = Uniform(rng, 1, opt.max_states);
  for (int s = 0; s < n; ++s) fst.AddState();
  fst.SetStart(0);
  auto weight = [&]() {
    if (opt.integer_weights) return double(Uniform(rng, 0, 3));
    return std::uniform_real_distribution<double>(0.0, 2.0)(rng);
  };
  auto letter = [&](double eps) {
    if (Coin(rng, eps)) return kEpsilon;
    return kNumReserved + Uniform(rng, 0, opt.num_letters - 1);
  };
  for (int s = 0; s < n; ++s) {
    if (Coin(rng, 0.5) || s == n - 1) fst.SetFinal(s, Weight(weight()));
    const int arcs = Uniform(rng, 0, opt.max_arcs_per_state);
    for (int a = 0; a < arcs; ++a) {
      Label il = letter(opt.epsilon_in);
      const Label ol = letter(opt.epsilon_out);
      const bool forward_only = opt.acyclic || il == kEpsilon;
      if (forward_only && s == n - 1) {
        if (opt.acyclic) continue;
        il = kNumReserved + Uniform(rng, 0, opt.num_letters - 1);
      }
      const int lo = forward_only && il == kEpsilon ? s + 1 : 0;
      const int next = opt.acyclic ? Uniform(rng, s + 1, n - 1)
                                   : Uniform(rng, lo, n - 1);
      fst.AddArc(s, Arc{il, ol, Weight(weight()), next});
    }
  }
  return fst;
}

// All output strings (epsilons removed) of accepting paths whose input is
// exactly `input`, with the minimum weight of each. Requires that every
// cycle consumes input.
inline Relation OutputsFor(const Wfst &fst, const Labels &input) {
  Relation out;
  if (fst.Start() == kNoStateId) return out;
  Labels olabels;
  std::function<void(StateId, size_t, double, int)> visit =
      [&](StateId s, size_t pos, double cost, int depth) {
        if (depth > 10000) throw std::logic_error("unbounded enumeration");
        if (pos == input.size() && fst.IsFinal(s)) {
          const double total = cost + fst.Final(s).Value();
          auto [it, inserted] = out.emplace(olabels, total);
          if (!inserted && total < it->second) it->second = total;
        }
        for (const Arc &arc : fst.Arcs(s)) {
          if (arc.ilabel != kEpsilon &&
              (pos == input.size() || arc.ilabel != input[pos])) {
            continue;
          }
          if (arc.olabel != kEpsilon) olabels.push_back(arc.olabel);
          visit(arc.nextstate, pos + (arc.ilabel != kEpsilon),
                cost + arc.weight.Value(), depth + 1);
          if (arc.olabel != kEpsilon) olabels.pop_back();
        }
      };
  visit(fst.Start(), 0, 0.0, 0);
  return out;
}

// Join of two relations enumerated independently: for input x, the minimum
// over intermediate strings y of a(x, y) + b(y, z).
inline Relation JoinFor(const Wfst &a, const Wfst &b, const Labels &input) {
  Relation out;
  for (const auto &[mid, wa] : OutputsFor(a, input)) {
    for (const auto &[z, wb] : OutputsFor(b, mid)) {
      auto [it, inserted] = out.emplace(z, wa + wb);
      if (!inserted && wa + wb < it->second) it->second = wa + wb;
    }
  }
  return out;
}

// Every string over `letters` letters of length at most `max_len`.
inline std::vector<Labels> AllStrings(int letters, int max_len) {
  std::vector<Labels> out{{}};
  for (size_t i = 0; i < out.size(); ++i) {
    if (static_cast<int>(out[i].size()) == max_len) continue;
    for (int k = 0; k < letters; ++k) {
      Labels next = out[i];
      next.push_back(kNumReserved + k);
      out.push_back(next);
    }
  }
  return out;
}

struct EnumeratedPath {
  Labels ilabels, olabels;
  double cost = 0.0;
};

// Every accepting path of an acyclic FST.
inline std::vector<EnumeratedPath> AllPaths(const Wfst &fst) {
  std::vector<EnumeratedPath> out;
  if (fst.Start() == kNoStateId) return out;
  EnumeratedPath cur;
  std::function<void(StateId, int)> visit = [&](StateId s, int depth) {
    if (depth > fst.NumStates()) throw std::logic_error("cyclic FST");
    if (fst.IsFinal(s)) {
      EnumeratedPath done = cur;
      done.cost += fst.Final(s).Value();
      out.push_back(std::move(done));
    }
    for (const Arc &arc : fst.Arcs(s)) {
      if (arc.ilabel != kEpsilon) cur.ilabels.push_back(arc.ilabel);
      if (arc.olabel != kEpsilon) cur.olabels.push_back(arc.olabel);
      cur.cost += arc.weight.Value();
      visit(arc.nextstate, depth + 1);
      cur.cost -= arc.weight.Value();
      if (arc.olabel != kEpsilon) cur.olabels.pop_back();
      if (arc.ilabel != kEpsilon) cur.ilabels.pop_back();
    }
  };
  visit(fst.Start(), 0);
  return out;
}

}  // namespace testing
}  // namespace kahako

#endif  // KAHAKO_TESTS_TEST_UTIL_H_
