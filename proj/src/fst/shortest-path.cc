// fst/shortest-path.cc

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
#include <cmath>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <vector>

#include "base/errors.h"
#include "fst/fst-algorithms.h"

namespace kahako {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct RevArc {
  StateId src;
  double weight;
};

// Reverse topological order (sinks first), or empty if `fst` has a cycle.
std::vector<StateId> ReverseTopologicalOrder(
    const Wfst &fst, const std::vector<std::vector<RevArc>> &preds) {
  std::vector<int64_t> out_degree(fst.NumStates(), 0);
  std::vector<StateId> order;
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    out_degree[s] = static_cast<int64_t>(fst.NumArcs(s));
    if (out_degree[s] == 0) order.push_back(s);
  }
  for (size_t i = 0; i < order.size(); ++i) {
    for (const RevArc &p : preds[order[i]]) {
      if (--out_degree[p.src] == 0) order.push_back(p.src);
    }
  }
  if (order.size() != static_cast<size_t>(fst.NumStates())) order.clear();
  return order;
}

// Distance from every state to a final state (final weight included).
// Acyclic machines, which may carry negative weights (backoff arcs with a
// weight above one), use dynamic programming; otherwise Dijkstra on the
// reversed graph, or label correction when some weight is negative.
std::vector<double> DistanceToFinal(const Wfst &fst) {
  std::vector<std::vector<RevArc>> preds(fst.NumStates());
  bool negative = false;
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (const Arc &arc : fst.Arcs(s)) {
      preds[arc.nextstate].push_back({s, arc.weight.Value()});
      negative = negative || arc.weight.Value() < 0.0;
    }
  }
  std::vector<double> dist(fst.NumStates(), kInf);
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    if (fst.IsFinal(s)) dist[s] = fst.Final(s).Value();
  }

  const std::vector<StateId> order = ReverseTopologicalOrder(fst, preds);
  if (!order.empty() || fst.NumStates() == 0) {
    for (StateId s : order) {
      for (const Arc &arc : fst.Arcs(s)) {
        dist[s] = std::min(dist[s], arc.weight.Value() + dist[arc.nextstate]);
      }
    }
    return dist;
  }

  if (negative) {
    std::deque<StateId> queue;
    std::vector<bool> queued(fst.NumStates(), false);
    std::vector<int64_t> relaxed(fst.NumStates(), 0);
    for (StateId s = 0; s < fst.NumStates(); ++s) {
      if (fst.IsFinal(s)) {
        queue.push_back(s);
        queued[s] = true;
      }
    }
    while (!queue.empty()) {
      const StateId s = queue.front();
      queue.pop_front();
      queued[s] = false;
      for (const RevArc &p : preds[s]) {
        const double nd = p.weight + dist[s];
        if (nd < dist[p.src]) {
          dist[p.src] = nd;
          if (++relaxed[p.src] > fst.NumStates()) {
            throw DecodeError("negative-weight cycle in shortest path");
          }
          if (!queued[p.src]) {
            queued[p.src] = true;
            queue.push_back(p.src);
          }
        }
      }
    }
    return dist;
  }

  using Entry = std::pair<double, StateId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    if (fst.IsFinal(s)) heap.emplace(dist[s], s);
  }
  while (!heap.empty()) {
    const auto [d, s] = heap.top();
    heap.pop();
    if (d > dist[s]) continue;
    for (const RevArc &p : preds[s]) {
      const double nd = p.weight + d;
      if (nd < dist[p.src]) {
        dist[p.src] = nd;
        heap.emplace(nd, p.src);
      }
    }
  }
  return dist;
}

bool Tight(double via, double best) {
  return std::abs(via - best) <= 1e-9 * std::max(1.0, std::abs(best));
}

// One node of the search over the optimal subgraph; `parent` indexes the
// node vector, `arc` is the arc taken to get here.
struct Node {
  StateId state;
  int64_t parent;
  Arc arc;
};

}  // namespace

Path ShortestPath(const Wfst &fst) {
  if (fst.Start() == kNoStateId) throw EmptyLanguageError();
  const std::vector<double> dist = DistanceToFinal(fst);
  if (std::isinf(dist[fst.Start()])) throw EmptyLanguageError();

  auto tight_arc = [&](StateId s, const Arc &arc) {
    return !std::isinf(dist[arc.nextstate]) &&
           Tight(arc.weight.Value() + dist[arc.nextstate], dist[s]);
  };
  auto tight_final = [&](StateId s) {
    return fst.IsFinal(s) && Tight(fst.Final(s).Value(), dist[s]);
  };

  // Layered search for the lexicographically smallest output string over
  // arcs that lie on some optimal path. Each layer is the epsilon closure of
  // the states reached by the previous layer's smallest output label.
  std::vector<Node> nodes;
  std::vector<int64_t> layer;
  std::vector<int64_t> layer_mark(fst.NumStates(), -1);
  int64_t layer_index = 0;

  auto close = [&](std::vector<int64_t> &frontier) {
    for (size_t i = 0; i < frontier.size(); ++i) {
      const StateId s = nodes[frontier[i]].state;
      for (const Arc &arc : fst.Arcs(s)) {
        if (arc.olabel != kEpsilon || !tight_arc(s, arc)) continue;
        if (layer_mark[arc.nextstate] == layer_index) continue;
        layer_mark[arc.nextstate] = layer_index;
        nodes.push_back({arc.nextstate, frontier[i], arc});
        frontier.push_back(static_cast<int64_t>(nodes.size()) - 1);
      }
    }
  };

  nodes.push_back({fst.Start(), -1, Arc{}});
  layer.push_back(0);
  layer_mark[fst.Start()] = layer_index;
  close(layer);

  int64_t found = -1;
  const int64_t max_layers = static_cast<int64_t>(fst.NumStates()) + 1;
  while (found < 0) {
    for (int64_t n : layer) {
      if (tight_final(nodes[n].state)) {
        found = n;
        break;
      }
    }
    if (found >= 0) break;
    if (layer_index >= max_layers) {
      // Only reachable through zero-cost cycles on optimal paths, where a
      // smallest string need not exist; take the fewest-arcs completion.
      std::deque<int64_t> queue(layer.begin(), layer.end());
      std::vector<bool> seen(fst.NumStates(), false);
      for (int64_t n : layer) seen[nodes[n].state] = true;
      while (!queue.empty() && found < 0) {
        const int64_t n = queue.front();
        queue.pop_front();
        const StateId s = nodes[n].state;
        if (tight_final(s)) {
          found = n;
          break;
        }
        for (const Arc &arc : fst.Arcs(s)) {
          if (!tight_arc(s, arc) || seen[arc.nextstate]) continue;
          seen[arc.nextstate] = true;
          nodes.push_back({arc.nextstate, n, arc});
          queue.push_back(static_cast<int64_t>(nodes.size()) - 1);
        }
      }
      if (found < 0) throw EmptyLanguageError();
      break;
    }
    Label best = std::numeric_limits<Label>::max();
    for (int64_t n : layer) {
      const StateId s = nodes[n].state;
      for (const Arc &arc : fst.Arcs(s)) {
        if (arc.olabel != kEpsilon && arc.olabel < best && tight_arc(s, arc)) {
          best = arc.olabel;
        }
      }
    }
    if (best == std::numeric_limits<Label>::max()) throw EmptyLanguageError();
    ++layer_index;
    std::vector<int64_t> next;
    for (int64_t n : layer) {
      const StateId s = nodes[n].state;
      for (const Arc &arc : fst.Arcs(s)) {
        if (arc.olabel != best || !tight_arc(s, arc)) continue;
        if (layer_mark[arc.nextstate] == layer_index) continue;
        layer_mark[arc.nextstate] = layer_index;
        nodes.push_back({arc.nextstate, n, arc});
        next.push_back(static_cast<int64_t>(nodes.size()) - 1);
      }
    }
    close(next);
    layer = std::move(next);
  }

  std::vector<Arc> arcs;
  for (int64_t n = found; nodes[n].parent >= 0; n = nodes[n].parent) {
    arcs.push_back(nodes[n].arc);
  }
  std::reverse(arcs.begin(), arcs.end());
  Path path;
  double cost = 0.0;
  for (const Arc &arc : arcs) {
    if (arc.ilabel != kEpsilon) path.ilabels.push_back(arc.ilabel);
    if (arc.olabel != kEpsilon) path.olabels.push_back(arc.olabel);
    cost += arc.weight.Value();
  }
  path.cost = cost + fst.Final(nodes[found].state).Value();
  return path;
}

}  // namespace kahako
