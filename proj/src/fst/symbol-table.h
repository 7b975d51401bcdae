// fst/symbol-table.h

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

#ifndef KAHAKO_FST_SYMBOL_TABLE_H_
#define KAHAKO_FST_SYMBOL_TABLE_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace kahako {

using Label = int32_t;

inline constexpr Label kNoLabel = -1;
inline constexpr Label kEpsilon = 0;
inline constexpr Label kBos = 1;
inline constexpr Label kEos = 2;
inline constexpr Label kUnk = 3;
inline constexpr Label kNumReserved = 4;

// Bidirectional map between dense label ids and single Unicode characters.
// Ids 0..3 are reserved for epsilon, sentence begin, sentence end and the
// unknown character; they never map to printable text.
class SymbolTable {
 public:
  SymbolTable();

  // Returns the label of `c`, adding it if absent.
  Label AddSymbol(char32_t c);

  // kNoLabel if `c` has no label.
  Label Find(char32_t c) const;
  bool Contains(char32_t c) const { return Find(c) != kNoLabel; }

  // Like Find() but unknown characters map to kUnk.
  Label Map(char32_t c) const;
  std::vector<Label> MapText(std::u32string_view text) const;

  // The character behind a non-reserved label. Throws std::out_of_range on
  // reserved or out-of-range labels.
  char32_t Character(Label label) const;
  bool IsReserved(Label label) const { return label >= 0 && label < kNumReserved; }

  // Printable token used by the text formats: "<eps>", "<s>", "</s>",
  // "<unk>", "<space>", "<tab>", otherwise the UTF-8 character itself.
  std::string Name(Label label) const;
  // Inverse of Name(); kNoLabel if the token is unknown.
  Label FindName(std::string_view name) const;

  // Concatenates the characters of `labels`, skipping epsilon. Other reserved
  // labels render as U+FFFD.
  std::u32string Render(std::span<const Label> labels) const;

  size_t size() const { return kNumReserved + chars_.size(); }

  // One "name<TAB>id" line per label, in id order.
  void Write(std::ostream &os) const;
  // Throws FormatError unless ids are dense, reserved names sit at 0..3 and
  // every other name is a single character.
  static SymbolTable Read(std::istream &is);
  void WriteFile(const std::string &path) const;
  static SymbolTable ReadFile(const std::string &path);

  bool operator==(const SymbolTable &other) const {
    return chars_ == other.chars_;
  }

 private:
  std::vector<char32_t> chars_;
  std::unordered_map<char32_t, Label> index_;
};

}  // namespace kahako

#endif  // KAHAKO_FST_SYMBOL_TABLE_H_
