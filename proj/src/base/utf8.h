// base/utf8.h

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

#ifndef KAHAKO_BASE_UTF8_H_
#define KAHAKO_BASE_UTF8_H_

#include <string>
#include <string_view>

namespace kahako {

// Decodes UTF-8 into Unicode scalar values. Throws EncodingError on overlong
// forms, surrogates, truncated sequences and values above U+10FFFF.
std::u32string DecodeUtf8(std::string_view bytes);

std::string EncodeUtf8(std::u32string_view text);
std::string EncodeUtf8(char32_t c);

// Drops trailing '\r' and '\n' characters.
std::u32string StripLineEnding(std::u32string_view line);

}  // namespace kahako

#endif  // KAHAKO_BASE_UTF8_H_
