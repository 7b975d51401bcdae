// ortho/alphabet.cc

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

#include "ortho/alphabet.h"

#include <set>

namespace kahako {
namespace alphabet {
namespace {

constexpr std::u32string_view kShort = U"aeiouAEIOU";
constexpr std::u32string_view kLong = U"āēīōūĀĒĪŌŪ";
constexpr std::u32string_view kNative = U"hklmnpwHKLMNPW";
constexpr std::u32string_view kForeign = U"bcdfgjqrstvxyzBCDFGJQRSTVXYZ";

}  // namespace

bool IsShortVowel(char32_t c) { return kShort.find(c) != kShort.npos; }
bool IsLongVowel(char32_t c) { return kLong.find(c) != kLong.npos; }
bool IsNativeConsonant(char32_t c) { return kNative.find(c) != kNative.npos; }
bool IsForeignConsonant(char32_t c) { return kForeign.find(c) != kForeign.npos; }

bool IsUpper(char32_t c) {
  if (c >= U'A' && c <= U'Z') return true;
  const size_t pos = kLong.find(c);
  return pos != kLong.npos && pos >= 5;
}

char32_t Lengthen(char32_t c) {
  const size_t pos = kShort.find(c);
  return pos == kShort.npos ? c : kLong[pos];
}

char32_t Shorten(char32_t c) {
  const size_t pos = kLong.find(c);
  return pos == kLong.npos ? c : kShort[pos];
}

std::u32string Inventory() {
  std::u32string out = U" ";
  for (char32_t c = U'0'; c <= U'9'; ++c) out.push_back(c);
  for (char32_t c = 0x21; c <= 0x7E; ++c) {
    const bool alnum = (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'z') ||
                       (c >= U'A' && c <= U'Z');
    if (!alnum && c != U'`') out.push_back(c);
  }
  for (char32_t c = U'a'; c <= U'z'; ++c) out.push_back(c);
  for (char32_t c = U'A'; c <= U'Z'; ++c) out.push_back(c);
  out += kLong;
  out.push_back(kOkina);
  return out;
}

}  // namespace alphabet

SymbolTable MakeSymbolTable(std::span<const std::u32string> lines) {
  SymbolTable table;
  for (char32_t c : alphabet::Inventory()) table.AddSymbol(c);
  std::set<char32_t> extra;
  for (const auto &line : lines) {
    for (char32_t c : line) {
      if (!table.Contains(c)) extra.insert(c);
    }
  }
  for (char32_t c : extra) table.AddSymbol(c);
  return table;
}

}  // namespace kahako
