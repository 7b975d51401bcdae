// fst/symbol-table.cc

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

#include "fst/symbol-table.h"

#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "base/errors.h"
#include "base/utf8.h"

namespace kahako {
namespace {

constexpr std::array<std::string_view, kNumReserved> kReservedNames = {
    "<eps>", "<s>", "</s>", "<unk>"};

}  // namespace

SymbolTable::SymbolTable() = default;

Label SymbolTable::AddSymbol(char32_t c) {
  auto it = index_.find(c);
  if (it != index_.end()) return it->second;
  const Label label = static_cast<Label>(size());
  chars_.push_back(c);
  index_.emplace(c, label);
  return label;
}

Label SymbolTable::Find(char32_t c) const {
  auto it = index_.find(c);
  return it == index_.end() ? kNoLabel : it->second;
}

Label SymbolTable::Map(char32_t c) const {
  const Label label = Find(c);
  return label == kNoLabel ? kUnk : label;
}

std::vector<Label> SymbolTable::MapText(std::u32string_view text) const {
  std::vector<Label> labels;
  labels.reserve(text.size());
  for (char32_t c : text) labels.push_back(Map(c));
  return labels;
}

char32_t SymbolTable::Character(Label label) const {
  if (label < kNumReserved || static_cast<size_t>(label) >= size()) {
    throw std::out_of_range("label " + std::to_string(label) +
                            " has no character");
  }
  return chars_[label - kNumReserved];
}

std::string SymbolTable::Name(Label label) const {
  if (IsReserved(label)) return std::string(kReservedNames[label]);
  const char32_t c = Character(label);
  if (c == U' ') return "<space>";
  if (c == U'\t') return "<tab>";
  return EncodeUtf8(c);
}

Label SymbolTable::FindName(std::string_view name) const {
  for (Label l = 0; l < kNumReserved; ++l) {
    if (name == kReservedNames[l]) return l;
  }
  if (name == "<space>") return Find(U' ');
  if (name == "<tab>") return Find(U'\t');
  std::u32string text;
  try {
    text = DecodeUtf8(name);
  } catch (const EncodingError &) {
    return kNoLabel;
  }
  if (text.size() != 1) return kNoLabel;
  return Find(text[0]);
}

std::u32string SymbolTable::Render(std::span<const Label> labels) const {
  std::u32string out;
  out.reserve(labels.size());
  for (Label l : labels) {
    if (l == kEpsilon) continue;
    out.push_back(IsReserved(l) ? U'�' : Character(l));
  }
  return out;
}

void SymbolTable::Write(std::ostream &os) const {
  for (Label l = 0; static_cast<size_t>(l) < size(); ++l) {
    os << Name(l) << '\t' << l << '\n';
  }
}

SymbolTable SymbolTable::Read(std::istream &is) {
  SymbolTable table;
  std::string line;
  Label expected = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const size_t tab = line.rfind('\t');
    if (tab == std::string::npos) {
      throw FormatError("symbol table line without a tab: " + line);
    }
    const std::string name = line.substr(0, tab);
    Label id;
    try {
      id = static_cast<Label>(std::stol(line.substr(tab + 1)));
    } catch (const std::exception &) {
      throw FormatError("bad symbol id in line: " + line);
    }
    if (id != expected) {
      throw FormatError("symbol ids must be dense and ordered; got " +
                        std::to_string(id) + ", expected " +
                        std::to_string(expected));
    }
    if (id < kNumReserved) {
      if (name != kReservedNames[id]) {
        throw FormatError("reserved id " + std::to_string(id) +
                          " must be named " + std::string(kReservedNames[id]));
      }
    } else {
      char32_t c;
      if (name == "<space>") {
        c = U' ';
      } else if (name == "<tab>") {
        c = U'\t';
      } else {
        std::u32string text = DecodeUtf8(name);
        if (text.size() != 1) {
          throw FormatError("symbol is not a single character: " + name);
        }
        c = text[0];
      }
      if (table.Contains(c)) throw FormatError("duplicate symbol: " + name);
      table.AddSymbol(c);
    }
    ++expected;
  }
  if (expected < kNumReserved) {
    throw FormatError("symbol table is missing reserved entries");
  }
  return table;
}

void SymbolTable::WriteFile(const std::string &path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path);
  Write(os);
  if (!os) throw IoError("write failed: " + path);
}

SymbolTable SymbolTable::ReadFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path);
  return Read(is);
}

}  // namespace kahako
