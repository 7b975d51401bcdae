// ortho/alphabet.h

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

#ifndef KAHAKO_ORTHO_ALPHABET_H_
#define KAHAKO_ORTHO_ALPHABET_H_

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "fst/symbol-table.h"

namespace kahako {

inline constexpr char32_t kOkina = U'ʻ';

// The modern Hawaiian letter inventory. Short and long vowels pair up
// one-to-one with case preserved; the ʻokina has a single case form.
namespace alphabet {

bool IsShortVowel(char32_t c);
bool IsLongVowel(char32_t c);
inline bool IsVowel(char32_t c) { return IsShortVowel(c) || IsLongVowel(c); }
bool IsNativeConsonant(char32_t c);  // h k l m n p w, either case
bool IsForeignConsonant(char32_t c);
inline bool IsOkina(char32_t c) { return c == kOkina; }
bool IsUpper(char32_t c);

// Long counterpart of a short vowel (same case); other characters are
// returned unchanged.
char32_t Lengthen(char32_t c);
// Short counterpart of a long vowel (same case); other characters are
// returned unchanged.
char32_t Shorten(char32_t c);

// Every character the orthography transducers know about: space, digits,
// ASCII punctuation (backtick excluded), Latin letters of both cases, long
// vowels and the ʻokina, in a fixed order.
std::u32string Inventory();

}  // namespace alphabet

// Reserved labels, then alphabet::Inventory(), then any other characters
// occurring in `lines` in code point order.
SymbolTable MakeSymbolTable(std::span<const std::u32string> lines);

}  // namespace kahako

#endif  // KAHAKO_ORTHO_ALPHABET_H_
