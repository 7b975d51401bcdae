// ortho/normalize.cc

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

#include "ortho/normalize.h"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "base/errors.h"
#include "base/utf8.h"
#include "ortho/alphabet.h"

namespace kahako {
namespace {

std::u32string Nfc(std::string_view utf8) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw EncodingError(std::string("ICU NFC unavailable: ") +
                        u_errorName(status));
  }
  const icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  const icu::UnicodeString out = nfc->normalize(in, status);
  if (U_FAILURE(status)) {
    throw EncodingError(std::string("NFC normalization failed: ") +
                        u_errorName(status));
  }
  std::string bytes;
  out.toUTF8String(bytes);
  return DecodeUtf8(bytes);
}

}  // namespace

std::u32string Normalize(std::string_view utf8) {
  DecodeUtf8(utf8);  // validates; ICU would silently substitute U+FFFD
  std::u32string text = Nfc(utf8);
  for (char32_t &c : text) {
    if (c == U'`') c = kOkina;
  }
  return text;
}

std::u32string Normalize(std::u32string_view text) {
  return Normalize(EncodeUtf8(text));
}

std::u32string BackwardMap(std::u32string_view modern) {
  std::u32string out;
  out.reserve(modern.size());
  for (char32_t c : modern) {
    if (alphabet::IsOkina(c)) continue;
    out.push_back(alphabet::Shorten(c));
  }
  return out;
}

}  // namespace kahako
