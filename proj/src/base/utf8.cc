// base/utf8.cc

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

#include "base/utf8.h"

#include "base/errors.h"

namespace kahako {
namespace {

[[noreturn]] void Fail(size_t offset) {
  throw EncodingError("invalid UTF-8 at byte offset " + std::to_string(offset));
}

}  // namespace

std::u32string DecodeUtf8(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  size_t i = 0;
  while (i < bytes.size()) {
    const unsigned char lead = static_cast<unsigned char>(bytes[i]);
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    }
    int extra;
    char32_t value;
    char32_t min_value;
    if ((lead & 0xE0) == 0xC0) {
      extra = 1; value = lead & 0x1F; min_value = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2; value = lead & 0x0F; min_value = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3; value = lead & 0x07; min_value = 0x10000;
    } else {
      Fail(i);
    }
    if (i + extra >= bytes.size()) Fail(i);
    for (int k = 1; k <= extra; ++k) {
      const unsigned char cont = static_cast<unsigned char>(bytes[i + k]);
      if ((cont & 0xC0) != 0x80) Fail(i);
      value = (value << 6) | (cont & 0x3F);
    }
    if (value < min_value || value > 0x10FFFF ||
        (value >= 0xD800 && value <= 0xDFFF)) {
      Fail(i);
    }
    out.push_back(value);
    i += extra + 1;
  }
  return out;
}

std::string EncodeUtf8(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) out += EncodeUtf8(c);
  return out;
}

std::u32string StripLineEnding(std::u32string_view line) {
  while (!line.empty() && (line.back() == U'\n' || line.back() == U'\r')) {
    line.remove_suffix(1);
  }
  return std::u32string(line);
}

}  // namespace kahako
