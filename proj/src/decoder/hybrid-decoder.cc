// decoder/hybrid-decoder.cc

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

#include "decoder/hybrid-decoder.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "base/errors.h"
#include "fst/fst-algorithms.h"

namespace kahako {

void BeamConfig::Check() const {
  if (width < 1) throw std::invalid_argument("beam width must be >= 1");
  if (max_iterations < 0) {
    throw std::invalid_argument("max_iterations must be >= 0");
  }
}

namespace {

// Interned token sequences; node 0 is the empty sequence.
class TokenTrie {
 public:
  TokenTrie() : nodes_(1) {}

  int32_t Child(int32_t node, Label label) {
    const uint64_t key = (static_cast<uint64_t>(node) << 32) |
                         static_cast<uint32_t>(label);
    auto [it, inserted] =
        index_.try_emplace(key, static_cast<int32_t>(nodes_.size()));
    if (inserted) nodes_.push_back({node, label});
    return it->second;
  }

  std::vector<Label> Tokens(int32_t node) const {
    std::vector<Label> out;
    for (; node != 0; node = nodes_[node].parent) {
      out.push_back(nodes_[node].label);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  bool Less(int32_t a, int32_t b) const {
    if (a == b) return false;
    const std::vector<Label> ta = Tokens(a);
    const std::vector<Label> tb = Tokens(b);
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(),
                                        tb.end());
  }

 private:
  struct Node {
    int32_t parent;
    Label label;
  };
  std::vector<Node> nodes_;
  std::unordered_map<uint64_t, int32_t> index_;
};

struct Hypothesis {
  StateId state;
  int32_t tokens;
  double score;
  // Null until computed; then the scorer state after `tokens`.
  ScorerStatePtr scorer;
  // For a fresh emission: the parent's scorer state and the emitted label.
  ScorerStatePtr parent;
  Label pending = kNoLabel;
};

// Pseudo-state of completed hypotheses.
constexpr StateId kDone = -1;

uint64_t Key(StateId state, int32_t tokens) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(state)) << 32) |
         static_cast<uint32_t>(tokens);
}

}  // namespace

DecodeResult BeamSearch(const Wfst &f, const SequenceScorer &scorer,
                        const BeamConfig &config) {
  config.Check();
  if (f.Start() == kNoStateId || !HasAcceptingPath(f)) {
    throw EmptyLanguageError();
  }
  if (f.OutputSymbols().size() != scorer.NumSymbols()) {
    throw ModelMismatchError(
        "language model vocabulary (" + std::to_string(scorer.NumSymbols()) +
        ") does not match the lattice symbol table (" +
        std::to_string(f.OutputSymbols().size()) + ")");
  }
  const int64_t max_iterations = config.max_iterations > 0
                                     ? config.max_iterations
                                     : static_cast<int64_t>(f.NumStates()) + 1;
  const size_t width = static_cast<size_t>(config.width);

  TokenTrie trie;
  std::vector<Hypothesis> beam;
  beam.push_back({f.Start(), 0, 0.0, scorer.Initial(), nullptr, kNoLabel});

  auto ordered = [&](const Hypothesis &a, const Hypothesis &b) {
    if (a.score != b.score) return a.score < b.score;
    if (a.tokens != b.tokens) return trie.Less(a.tokens, b.tokens);
    return a.state < b.state;
  };

  // A hypothesis that reaches a final state spawns a completed copy that
  // carries the final weight (and the end-of-sentence cost when enabled);
  // completed copies move on unchanged while the original keeps expanding.
  int64_t iterations = 0;
  auto all_done = [&]() {
    return std::all_of(beam.begin(), beam.end(),
                       [](const Hypothesis &h) { return h.state == kDone; });
  };
  while (!all_done()) {
    if (++iterations > max_iterations) {
      throw DecodeError("non-consuming cycle: beam search exceeded " +
                        std::to_string(max_iterations) + " iterations");
    }
    std::vector<Hypothesis> next;
    std::unordered_map<uint64_t, size_t> seen;
    // The cheaper of two hypotheses with the same (state, tokens) wins; on
    // an exact tie the first one generated stays.
    auto offer = [&](Hypothesis &&h) {
      auto [it, inserted] = seen.try_emplace(Key(h.state, h.tokens), next.size());
      if (inserted) {
        next.push_back(std::move(h));
      } else if (h.score < next[it->second].score) {
        next[it->second] = std::move(h);
      }
    };
    for (Hypothesis &h : beam) {
      if (h.state == kDone) {
        offer(std::move(h));
        continue;
      }
      if (f.IsFinal(h.state)) {
        double score = h.score + f.Final(h.state).Value();
        if (config.eos_scoring) score -= h.scorer->log_probs[kEos];
        if (!std::isinf(score)) {
          offer({kDone, h.tokens, score, nullptr, nullptr, kNoLabel});
        }
      }
      for (const Arc &arc : f.Arcs(h.state)) {
        if (arc.olabel == kEpsilon) {
          offer({arc.nextstate, h.tokens, h.score + arc.weight.Value(),
                 h.scorer, nullptr, kNoLabel});
          continue;
        }
        const double lp = h.scorer->log_probs[arc.olabel];
        if (std::isinf(lp)) continue;
        offer({arc.nextstate, trie.Child(h.tokens, arc.olabel),
               h.score + arc.weight.Value() - lp, nullptr, h.scorer,
               arc.olabel});
      }
    }
    if (next.empty()) throw EmptyLanguageError();
    std::sort(next.begin(), next.end(), ordered);
    if (next.size() > width) next.resize(width);

    // Feed the scorer only for survivors that still need a distribution.
    std::vector<size_t> todo;
    std::vector<const ScorerState *> parents;
    std::vector<Label> symbols;
    for (size_t i = 0; i < next.size(); ++i) {
      Hypothesis &h = next[i];
      if (h.scorer != nullptr || h.state == kDone) continue;
      todo.push_back(i);
      parents.push_back(h.parent.get());
      symbols.push_back(h.pending);
    }
    if (!todo.empty()) {
      std::vector<ScorerStatePtr> states = scorer.Advance(parents, symbols);
      for (size_t j = 0; j < todo.size(); ++j) {
        Hypothesis &h = next[todo[j]];
        h.scorer = std::move(states[j]);
        h.parent.reset();
      }
    }
    beam = std::move(next);
  }

  // The beam is sorted, so its head is the best completed hypothesis.
  const Hypothesis *best = &beam.front();
  const double best_cost = best->score;
  if (std::isinf(best_cost)) throw EmptyLanguageError();
  DecodeResult result;
  result.olabels = trie.Tokens(best->tokens);
  result.cost = best_cost;
  result.text = f.OutputSymbols().Render(result.olabels);
  return result;
}

DecodeResult DecodeHybrid(std::u32string_view input, const Wfst &rules,
                          const SequenceScorer &scorer,
                          const BeamConfig &config) {
  const std::vector<Label> labels = rules.InputSymbols().MapText(input);
  DecodeResult result =
      BeamSearch(BuildInputLattice(labels, rules), scorer, config);
  result.text = RestoreUnknowns(rules.OutputSymbols(), input, result.olabels);
  return result;
}

}  // namespace kahako
