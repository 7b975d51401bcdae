// ortho/normalize.h

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

#ifndef KAHAKO_ORTHO_NORMALIZE_H_
#define KAHAKO_ORTHO_NORMALIZE_H_

#include <string>
#include <string_view>

namespace kahako {

// Unicode NFC, then ASCII backtick -> ʻokina (U+02BB). Combining macrons
// fold into precomposed long vowels. Throws EncodingError on invalid UTF-8.
std::u32string Normalize(std::string_view utf8);
std::u32string Normalize(std::u32string_view text);

// Modern -> missionary orthography: drops every ʻokina and shortens every
// long vowel, keeping case. Everything else, spaces included, is copied.
std::u32string BackwardMap(std::u32string_view modern);

}  // namespace kahako

#endif  // KAHAKO_ORTHO_NORMALIZE_H_
