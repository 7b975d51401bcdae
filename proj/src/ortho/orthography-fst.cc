// ortho/orthography-fst.cc

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

#include "ortho/orthography-fst.h"

#include <string>
#include <vector>

#include "base/errors.h"
#include "base/utf8.h"
#include "ortho/alphabet.h"

namespace kahako {
namespace {

// Where a hub arc leads, resolved per transducer variant.
enum class Target { kHub, kAfterVowel, kNeedVowel, kNeedInput };

struct ArcTemplate {
  Label ilabel;
  Label olabel;
  double weight;
  Target target;
};

Label RequireLabel(const SymbolTable &syms, char32_t c) {
  const Label l = syms.Find(c);
  if (l == kNoLabel) {
    throw ModelMismatchError("symbol table lacks character '" + EncodeUtf8(c) +
                             "' needed by the orthography transducer");
  }
  return l;
}

// Vowel arcs: identity for every vowel, lengthening for short ones.
std::vector<ArcTemplate> VowelArcs(const SymbolTable &syms) {
  std::vector<ArcTemplate> arcs;
  for (Label l = kNumReserved; static_cast<size_t>(l) < syms.size(); ++l) {
    const char32_t c = syms.Character(l);
    if (!alphabet::IsVowel(c)) continue;
    arcs.push_back({l, l, 0.0, Target::kAfterVowel});
    if (alphabet::IsShortVowel(c)) {
      const Label long_label = syms.Find(alphabet::Lengthen(c));
      if (long_label != kNoLabel) {
        arcs.push_back({l, long_label, 0.0, Target::kAfterVowel});
      }
    }
  }
  return arcs;
}

std::vector<ArcTemplate> HubArcs(const SymbolTable &syms,
                                 const OrthographyFstOptions &options) {
  std::vector<ArcTemplate> arcs;
  arcs.push_back({kUnk, kUnk, 0.0, Target::kHub});
  for (Label l = kNumReserved; static_cast<size_t>(l) < syms.size(); ++l) {
    if (!alphabet::IsVowel(syms.Character(l))) {
      arcs.push_back({l, l, 0.0, Target::kHub});
    }
  }
  for (const ArcTemplate &v : VowelArcs(syms)) arcs.push_back(v);
  arcs.push_back({kEpsilon, RequireLabel(syms, kOkina),
                  options.insertion_penalty, Target::kNeedVowel});
  for (const Rule &rule : options.extra_rules) {
    ArcTemplate t;
    t.ilabel = rule.from ? RequireLabel(syms, *rule.from) : kEpsilon;
    t.olabel = rule.to ? RequireLabel(syms, *rule.to) : kEpsilon;
    t.weight = rule.weight.Value();
    if (rule.guard == RuleGuard::kNextIsVowel) {
      t.target = Target::kNeedVowel;
    } else {
      t.target = rule.from ? Target::kHub : Target::kNeedInput;
    }
    arcs.push_back(t);
  }
  return arcs;
}

class Builder {
 public:
  Builder(std::shared_ptr<const SymbolTable> syms,
          const OrthographyFstOptions &options, bool word_boundaries)
      : syms_(syms),
        options_(options),
        word_boundaries_(word_boundaries),
        fst_(syms, syms) {}

  Wfst Build() {
    const SymbolTable &syms = *syms_;
    hub_arcs_ = HubArcs(syms, options_);
    vowel_arcs_ = VowelArcs(syms);

    hub_ = fst_.AddState();
    need_vowel_ = fst_.AddState();
    fst_.SetStart(hub_);
    fst_.SetFinal(hub_, Weight::One());
    if (word_boundaries_) {
      after_vowel_ = fst_.AddState();
      after_space_ = fst_.AddState();
      fst_.SetFinal(after_vowel_, Weight::One());
    }
    bool need_input_used = false;
    for (const ArcTemplate &t : hub_arcs_) {
      need_input_used |= t.target == Target::kNeedInput;
    }
    if (need_input_used) need_input_ = fst_.AddState();

    Emit(hub_, hub_arcs_);
    Emit(need_vowel_, vowel_arcs_);
    if (need_input_ != kNoStateId) {
      std::vector<ArcTemplate> consuming;
      for (const ArcTemplate &t : hub_arcs_) {
        if (t.ilabel != kEpsilon) consuming.push_back(t);
      }
      Emit(need_input_, consuming);
    }
    if (word_boundaries_) {
      Emit(after_vowel_, hub_arcs_);
      fst_.AddArc(after_vowel_,
                  Arc{kEpsilon, RequireLabel(syms, U' '),
                      Weight(options_.insertion_penalty), after_space_});
      const Label space = RequireLabel(syms, U' ');
      std::vector<ArcTemplate> no_space;
      for (const ArcTemplate &t : hub_arcs_) {
        if (t.ilabel == space) continue;
        if (t.ilabel == kEpsilon && t.target == Target::kNeedInput) continue;
        no_space.push_back(t);
      }
      Emit(after_space_, no_space);
    }
    return std::move(fst_);
  }

 private:
  StateId Resolve(Target t) const {
    switch (t) {
      case Target::kHub:
        return hub_;
      case Target::kAfterVowel:
        return word_boundaries_ ? after_vowel_ : hub_;
      case Target::kNeedVowel:
        return need_vowel_;
      case Target::kNeedInput:
        return need_input_;
    }
    return hub_;
  }

  void Emit(StateId from, const std::vector<ArcTemplate> &arcs) {
    for (const ArcTemplate &t : arcs) {
      fst_.AddArc(from, Arc{t.ilabel, t.olabel, Weight(t.weight),
                            Resolve(t.target)});
    }
  }

  std::shared_ptr<const SymbolTable> syms_;
  const OrthographyFstOptions &options_;
  bool word_boundaries_;
  Wfst fst_;
  std::vector<ArcTemplate> hub_arcs_;
  std::vector<ArcTemplate> vowel_arcs_;
  StateId hub_ = kNoStateId;
  StateId need_vowel_ = kNoStateId;
  StateId need_input_ = kNoStateId;
  StateId after_vowel_ = kNoStateId;
  StateId after_space_ = kNoStateId;
};

}  // namespace

Wfst BuildOrthographyFst(std::shared_ptr<const SymbolTable> syms,
                         const OrthographyFstOptions &options) {
  return Builder(std::move(syms), options, false).Build();
}

Wfst BuildWordBoundaryFst(std::shared_ptr<const SymbolTable> syms,
                          const OrthographyFstOptions &options) {
  return Builder(std::move(syms), options, true).Build();
}

}  // namespace kahako
