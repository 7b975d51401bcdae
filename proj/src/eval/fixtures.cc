// eval/fixtures.cc

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

#include "eval/fixtures.h"

#include <cstdlib>
#include <fstream>

#include "base/errors.h"
#include "ortho/alphabet.h"
#include "ortho/normalize.h"

namespace kahako {

std::string DataDir() {
  if (const char *env = std::getenv("KAHAKO_DATA_DIR"); env && *env) return env;
  return KAHAKO_DATA_DIR;
}

std::u32string TexToUnicode(std::string_view tex) {
  std::string plain;
  size_t i = 0;
  auto fail = [&]() {
    throw FormatError("bad TeX macron escape in: " + std::string(tex));
  };
  while (i < tex.size()) {
    if (tex.compare(i, 2, "\\=") != 0) {
      plain.push_back(tex[i++]);
      continue;
    }
    i += 2;
    char base;
    if (tex.compare(i, 4, "\\i{}") == 0) {
      base = 'i';
      i += 4;
    } else if (i + 2 < tex.size() && tex[i] == '{' && tex[i + 2] == '}') {
      base = tex[i + 1];
      i += 3;
    } else if (i < tex.size()) {
      base = tex[i++];
    } else {
      fail();
    }
    if (!alphabet::IsShortVowel(static_cast<char32_t>(base))) fail();
    plain += '\x01';  // placeholder, replaced below
    plain += base;
  }
  // Decode, then lengthen each marked vowel.
  std::u32string marked = Normalize(plain);
  std::u32string out;
  for (size_t k = 0; k < marked.size(); ++k) {
    if (marked[k] == U'\x01' && k + 1 < marked.size()) {
      out.push_back(alphabet::Lengthen(marked[++k]));
    } else {
      out.push_back(marked[k]);
    }
  }
  return out;
}

std::vector<ParallelPair> LoadFixtureFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open fixture " + path);
  std::vector<ParallelPair> pairs;
  std::string line;
  size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw FormatError(path + ":" + std::to_string(line_no) +
                        ": expected input<TAB>truth");
    }
    ParallelPair p{TexToUnicode(line.substr(0, tab)),
                   TexToUnicode(line.substr(tab + 1)), {}};
    if (p.truth.empty()) {
      throw FormatError(path + ":" + std::to_string(line_no) + ": empty truth");
    }
    pairs.push_back(std::move(p));
  }
  if (pairs.empty()) throw FormatError("fixture " + path + " has no pairs");
  return pairs;
}

std::vector<ParallelPair> LoadFixture(std::string_view name) {
  if (name != "newspaper1" && name != "newspaper2") {
    throw IoError("unknown fixture '" + std::string(name) + "'");
  }
  return LoadFixtureFile(DataDir() + "/fixtures/" + std::string(name) + ".tsv");
}

}  // namespace kahako
