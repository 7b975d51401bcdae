// fst/wfst.h

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

#ifndef KAHAKO_FST_WFST_H_
#define KAHAKO_FST_WFST_H_

#include <cmath>
#include <iosfwd>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fst/symbol-table.h"

namespace kahako {

using StateId = int32_t;
inline constexpr StateId kNoStateId = -1;

// Tropical semiring element: a non-negative cost on the -log probability
// scale. Plus is min, Times is +, One is 0 and Zero is +infinity.
class Weight {
 public:
  constexpr Weight() = default;
  constexpr explicit Weight(double value) : value_(value) {}

  static constexpr Weight One() { return Weight(0.0); }
  static constexpr Weight Zero() {
    return Weight(std::numeric_limits<double>::infinity());
  }

  constexpr double Value() const { return value_; }
  bool IsZero() const { return std::isinf(value_) && value_ > 0; }

  friend constexpr Weight Plus(Weight a, Weight b) {
    return a.value_ <= b.value_ ? a : b;
  }
  friend constexpr Weight Times(Weight a, Weight b) {
    return Weight(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Weight a, Weight b) {
    return a.value_ == b.value_;
  }
  friend constexpr bool operator<(Weight a, Weight b) {
    return a.value_ < b.value_;
  }

 private:
  double value_ = 0.0;
};

struct Arc {
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  Weight weight;
  StateId nextstate = kNoStateId;

  bool operator==(const Arc &other) const = default;
};

// Mutable weighted transducer with a single start state and per-state final
// weights. States are dense ids in [0, NumStates()).
class Wfst {
 public:
  Wfst(std::shared_ptr<const SymbolTable> isyms,
       std::shared_ptr<const SymbolTable> osyms);

  StateId AddState();
  void SetStart(StateId s);
  void SetFinal(StateId s, Weight weight);
  // Both `s` and `arc.nextstate` must already exist.
  void AddArc(StateId s, const Arc &arc);
  void ReserveStates(size_t n);

  StateId Start() const { return start_; }
  StateId NumStates() const { return static_cast<StateId>(arcs_.size()); }
  Weight Final(StateId s) const { return finals_[s]; }
  bool IsFinal(StateId s) const { return !finals_[s].IsZero(); }
  std::span<const Arc> Arcs(StateId s) const { return arcs_[s]; }
  size_t NumArcs(StateId s) const { return arcs_[s].size(); }
  size_t TotalArcs() const;

  const SymbolTable &InputSymbols() const { return *isyms_; }
  const SymbolTable &OutputSymbols() const { return *osyms_; }
  const std::shared_ptr<const SymbolTable> &InputSymbolsPtr() const {
    return isyms_;
  }
  const std::shared_ptr<const SymbolTable> &OutputSymbolsPtr() const {
    return osyms_;
  }

  // Same states, arcs (in order), finals and start. Symbol tables are not
  // compared.
  bool StructurallyEqual(const Wfst &other) const;

 private:
  void CheckState(StateId s) const;

  std::shared_ptr<const SymbolTable> isyms_;
  std::shared_ptr<const SymbolTable> osyms_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<Weight> finals_;
  StateId start_ = kNoStateId;
};

// Linear acceptor over `labels`: len+1 states, one arc per label with
// ilabel == olabel and weight One, last state final with weight One.
Wfst ChainAcceptor(std::span<const Label> labels,
                   std::shared_ptr<const SymbolTable> syms);
// Maps `text` through `syms`; unknown characters become kUnk.
Wfst ChainAcceptor(std::u32string_view text,
                   std::shared_ptr<const SymbolTable> syms);

// AT&T text format. One arc per line as "src dst ilabel olabel weight",
// final states as "state weight"; the first line starts at the start state.
void WriteText(const Wfst &fst, std::ostream &os);
void WriteTextFile(const Wfst &fst, const std::string &path);
// Throws FormatError on malformed lines or labels missing from the tables.
Wfst ReadText(std::istream &is, std::shared_ptr<const SymbolTable> isyms,
              std::shared_ptr<const SymbolTable> osyms);

bool SameSymbols(const SymbolTable &a, const SymbolTable &b);

}  // namespace kahako

#endif  // KAHAKO_FST_WFST_H_
