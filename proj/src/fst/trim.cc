// fst/trim.cc

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

#include <vector>

#include "fst/fst-algorithms.h"

namespace kahako {
namespace {

std::vector<bool> Accessible(const Wfst &fst) {
  std::vector<bool> seen(fst.NumStates(), false);
  if (fst.Start() == kNoStateId) return seen;
  std::vector<StateId> stack{fst.Start()};
  seen[fst.Start()] = true;
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (const Arc &arc : fst.Arcs(s)) {
      if (!seen[arc.nextstate]) {
        seen[arc.nextstate] = true;
        stack.push_back(arc.nextstate);
      }
    }
  }
  return seen;
}

std::vector<bool> Coaccessible(const Wfst &fst) {
  std::vector<std::vector<StateId>> preds(fst.NumStates());
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (const Arc &arc : fst.Arcs(s)) preds[arc.nextstate].push_back(s);
  }
  std::vector<bool> seen(fst.NumStates(), false);
  std::vector<StateId> stack;
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    if (fst.IsFinal(s)) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (StateId p : preds[s]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace

Wfst Trim(const Wfst &fst) {
  const std::vector<bool> acc = Accessible(fst);
  const std::vector<bool> coacc = Coaccessible(fst);
  Wfst out(fst.InputSymbolsPtr(), fst.OutputSymbolsPtr());
  if (fst.Start() == kNoStateId || !acc[fst.Start()] || !coacc[fst.Start()]) {
    out.SetStart(out.AddState());
    return out;
  }
  std::vector<StateId> remap(fst.NumStates(), kNoStateId);
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    if (acc[s] && coacc[s]) remap[s] = out.AddState();
  }
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    if (remap[s] == kNoStateId) continue;
    for (const Arc &arc : fst.Arcs(s)) {
      if (remap[arc.nextstate] == kNoStateId) continue;
      Arc copy = arc;
      copy.nextstate = remap[arc.nextstate];
      out.AddArc(remap[s], copy);
    }
    out.SetFinal(remap[s], fst.Final(s));
  }
  out.SetStart(remap[fst.Start()]);
  return out;
}

bool HasAcceptingPath(const Wfst &fst) {
  const std::vector<bool> acc = Accessible(fst);
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    if (acc[s] && fst.IsFinal(s)) return true;
  }
  return false;
}

bool HasInputEpsilonCycle(const Wfst &fst) {
  // 0 = unvisited, 1 = on the DFS stack, 2 = done.
  std::vector<char> color(fst.NumStates(), 0);
  struct Frame {
    StateId state;
    size_t next_arc;
  };
  for (StateId root = 0; root < fst.NumStates(); ++root) {
    if (color[root] != 0) continue;
    std::vector<Frame> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      Frame &top = stack.back();
      auto arcs = fst.Arcs(top.state);
      if (top.next_arc == arcs.size()) {
        color[top.state] = 2;
        stack.pop_back();
        continue;
      }
      const Arc &arc = arcs[top.next_arc++];
      if (arc.ilabel != kEpsilon) continue;
      if (color[arc.nextstate] == 1) return true;
      if (color[arc.nextstate] == 0) {
        color[arc.nextstate] = 1;
        stack.push_back({arc.nextstate, 0});
      }
    }
  }
  return false;
}

}  // namespace kahako
