// fst/compose.cc

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

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_map>

#include "base/errors.h"
#include "fst/fst-algorithms.h"

namespace kahako {
namespace {

struct PairState {
  StateId a;
  StateId b;
  // 0: either side may take an epsilon move; 1: `b` has moved alone since
  // the last match, so `a` may no longer move alone.
  int filter;

  bool operator==(const PairState &o) const = default;
};

struct PairStateHash {
  size_t operator()(const PairState &p) const {
    uint64_t key = (static_cast<uint64_t>(static_cast<uint32_t>(p.a)) << 32) ^
                   (static_cast<uint64_t>(static_cast<uint32_t>(p.b)) << 1) ^
                   static_cast<uint64_t>(p.filter);
    key ^= key >> 33;
    key *= 0xff51afd7ed558ccdULL;
    key ^= key >> 33;
    return static_cast<size_t>(key);
  }
};

// Per-state arcs of the right operand sorted by input label.
class SortedArcs {
 public:
  explicit SortedArcs(const Wfst &fst) : fst_(fst), cache_(fst.NumStates()) {}

  const std::vector<Arc> &Get(StateId s) {
    auto &slot = cache_[s];
    if (!slot) {
      auto arcs = fst_.Arcs(s);
      slot.emplace(arcs.begin(), arcs.end());
      std::stable_sort(slot->begin(), slot->end(),
                       [](const Arc &x, const Arc &y) {
                         return x.ilabel < y.ilabel;
                       });
    }
    return *slot;
  }

 private:
  const Wfst &fst_;
  std::vector<std::optional<std::vector<Arc>>> cache_;
};

}  // namespace

Wfst Compose(const Wfst &a, const Wfst &b) {
  if (!SameSymbols(a.OutputSymbols(), b.InputSymbols())) {
    throw ModelMismatchError(
        "compose: output symbols of the left operand differ from input "
        "symbols of the right operand");
  }
  Wfst c(a.InputSymbolsPtr(), b.OutputSymbolsPtr());
  if (a.Start() == kNoStateId || b.Start() == kNoStateId) {
    c.SetStart(c.AddState());
    return c;
  }

  std::unordered_map<PairState, StateId, PairStateHash> ids;
  std::deque<PairState> queue;
  auto find_or_add = [&](const PairState &p) {
    auto [it, inserted] = ids.emplace(p, c.NumStates());
    if (inserted) {
      c.AddState();
      queue.push_back(p);
    }
    return it->second;
  };

  SortedArcs b_arcs(b);
  c.SetStart(find_or_add(PairState{a.Start(), b.Start(), 0}));
  while (!queue.empty()) {
    const PairState p = queue.front();
    queue.pop_front();
    const StateId src = ids.at(p);
    c.SetFinal(src, Times(a.Final(p.a), b.Final(p.b)));

    const std::vector<Arc> &right = b_arcs.Get(p.b);
    for (const Arc &x : a.Arcs(p.a)) {
      if (x.olabel == kEpsilon) {
        if (p.filter != 0) continue;
        const StateId dst = find_or_add(PairState{x.nextstate, p.b, 0});
        c.AddArc(src, Arc{x.ilabel, kEpsilon, x.weight, dst});
        continue;
      }
      auto lo = std::lower_bound(
          right.begin(), right.end(), x.olabel,
          [](const Arc &y, Label l) { return y.ilabel < l; });
      for (auto it = lo; it != right.end() && it->ilabel == x.olabel; ++it) {
        const StateId dst = find_or_add(PairState{x.nextstate, it->nextstate, 0});
        c.AddArc(src, Arc{x.ilabel, it->olabel, Times(x.weight, it->weight), dst});
      }
    }
    for (const Arc &y : right) {
      if (y.ilabel != kEpsilon) break;
      const StateId dst = find_or_add(PairState{p.a, y.nextstate, 1});
      c.AddArc(src, Arc{kEpsilon, y.olabel, y.weight, dst});
    }
  }
  return c;
}

}  // namespace kahako
