// fst/wfst.cc

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

#include "fst/wfst.h"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "base/errors.h"

namespace kahako {

Wfst::Wfst(std::shared_ptr<const SymbolTable> isyms,
           std::shared_ptr<const SymbolTable> osyms)
    : isyms_(std::move(isyms)), osyms_(std::move(osyms)) {
  if (!isyms_ || !osyms_) {
    throw std::invalid_argument("Wfst requires input and output symbol tables");
  }
}

StateId Wfst::AddState() {
  arcs_.emplace_back();
  finals_.push_back(Weight::Zero());
  return NumStates() - 1;
}

void Wfst::ReserveStates(size_t n) {
  arcs_.reserve(n);
  finals_.reserve(n);
}

void Wfst::CheckState(StateId s) const {
  if (s < 0 || s >= NumStates()) {
    throw std::out_of_range("invalid state id " + std::to_string(s));
  }
}

void Wfst::SetStart(StateId s) {
  CheckState(s);
  start_ = s;
}

void Wfst::SetFinal(StateId s, Weight weight) {
  CheckState(s);
  finals_[s] = weight;
}

void Wfst::AddArc(StateId s, const Arc &arc) {
  CheckState(s);
  CheckState(arc.nextstate);
  arcs_[s].push_back(arc);
}

size_t Wfst::TotalArcs() const {
  size_t n = 0;
  for (const auto &a : arcs_) n += a.size();
  return n;
}

bool Wfst::StructurallyEqual(const Wfst &other) const {
  return start_ == other.start_ && arcs_ == other.arcs_ &&
         finals_ == other.finals_;
}

bool SameSymbols(const SymbolTable &a, const SymbolTable &b) {
  return &a == &b || a == b;
}

Wfst ChainAcceptor(std::span<const Label> labels,
                   std::shared_ptr<const SymbolTable> syms) {
  Wfst fst(syms, syms);
  fst.ReserveStates(labels.size() + 1);
  StateId prev = fst.AddState();
  fst.SetStart(prev);
  for (Label l : labels) {
    const StateId next = fst.AddState();
    fst.AddArc(prev, Arc{l, l, Weight::One(), next});
    prev = next;
  }
  fst.SetFinal(prev, Weight::One());
  return fst;
}

Wfst ChainAcceptor(std::u32string_view text,
                   std::shared_ptr<const SymbolTable> syms) {
  const std::vector<Label> labels = syms->MapText(text);
  return ChainAcceptor(labels, std::move(syms));
}

namespace {

std::string FormatWeight(Weight w) {
  if (w.IsZero()) return "Infinity";
  std::ostringstream os;
  os << std::setprecision(17) << w.Value();
  return os.str();
}

Weight ParseWeight(const std::string &token, const std::string &line) {
  char *end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0') {
    throw FormatError("bad weight in FST line: " + line);
  }
  return Weight(v);
}

StateId ParseState(const std::string &token, const std::string &line) {
  char *end = nullptr;
  const long v = std::strtol(token.c_str(), &end, 10);
  if (end == token.c_str() || *end != '\0' || v < 0 ||
      v > std::numeric_limits<StateId>::max() - 1) {
    throw FormatError("bad state id in FST line: " + line);
  }
  return static_cast<StateId>(v);
}

}  // namespace

void WriteText(const Wfst &fst, std::ostream &os) {
  if (fst.Start() == kNoStateId) return;
  auto write_state = [&](StateId s) {
    for (const Arc &arc : fst.Arcs(s)) {
      os << s << ' ' << arc.nextstate << ' '
         << fst.InputSymbols().Name(arc.ilabel) << ' '
         << fst.OutputSymbols().Name(arc.olabel) << ' '
         << FormatWeight(arc.weight) << '\n';
    }
  };
  const StateId start = fst.Start();
  if (fst.NumArcs(start) == 0) {
    // The start state must lead; a lone final line does that.
    os << start << ' ' << FormatWeight(fst.Final(start)) << '\n';
  } else {
    write_state(start);
    if (fst.IsFinal(start)) {
      os << start << ' ' << FormatWeight(fst.Final(start)) << '\n';
    }
  }
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    if (s == start) continue;
    write_state(s);
  }
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    if (s == start || !fst.IsFinal(s)) continue;
    os << s << ' ' << FormatWeight(fst.Final(s)) << '\n';
  }
}

void WriteTextFile(const Wfst &fst, const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  WriteText(fst, os);
  if (!os) throw IoError("write failed: " + path);
}

Wfst ReadText(std::istream &is, std::shared_ptr<const SymbolTable> isyms,
              std::shared_ptr<const SymbolTable> osyms) {
  struct PendingArc {
    StateId src;
    Arc arc;
  };
  std::vector<PendingArc> arcs;
  std::vector<std::pair<StateId, Weight>> finals;
  StateId start = kNoStateId;
  StateId max_state = -1;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const StateId src = ParseState(tok[0], line);
    if (start == kNoStateId) start = src;
    max_state = std::max(max_state, src);
    if (tok.size() == 1 || tok.size() == 2) {
      finals.emplace_back(src, tok.size() == 2 ? ParseWeight(tok[1], line)
                                               : Weight::One());
    } else if (tok.size() == 4 || tok.size() == 5) {
      Arc arc;
      arc.nextstate = ParseState(tok[1], line);
      arc.ilabel = isyms->FindName(tok[2]);
      arc.olabel = osyms->FindName(tok[3]);
      if (arc.ilabel == kNoLabel || arc.olabel == kNoLabel) {
        throw FormatError("unknown label in FST line: " + line);
      }
      arc.weight = tok.size() == 5 ? ParseWeight(tok[4], line) : Weight::One();
      max_state = std::max(max_state, arc.nextstate);
      arcs.push_back({src, arc});
    } else {
      throw FormatError("bad FST line: " + line);
    }
  }
  Wfst fst(std::move(isyms), std::move(osyms));
  if (start == kNoStateId) return fst;
  fst.ReserveStates(max_state + 1);
  for (StateId s = 0; s <= max_state; ++s) fst.AddState();
  fst.SetStart(start);
  for (const auto &p : arcs) fst.AddArc(p.src, p.arc);
  for (const auto &[s, w] : finals) fst.SetFinal(s, w);
  return fst;
}

}  // namespace kahako
