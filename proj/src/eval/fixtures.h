// eval/fixtures.h

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

#ifndef KAHAKO_EVAL_FIXTURES_H_
#define KAHAKO_EVAL_FIXTURES_H_

#include <string>
#include <string_view>
#include <vector>

#include "eval/cerr.h"

namespace kahako {

// The bundled data directory: $KAHAKO_DATA_DIR if set, else the source
// tree's data/ directory.
std::string DataDir();

// Converts TeX macron escapes (\=a, \={a}, \=\i{}, \=E) to composed
// characters; the result is then normalized, so backticks become okina.
std::u32string TexToUnicode(std::string_view tex);

// Pairs of a fixture file whose fields are written in the TeX notation
// above. Throws IoError if missing and FormatError if malformed.
std::vector<ParallelPair> LoadFixtureFile(const std::string &path);

// "newspaper1" or "newspaper2", from DataDir()/fixtures.
std::vector<ParallelPair> LoadFixture(std::string_view name);

}  // namespace kahako

#endif  // KAHAKO_EVAL_FIXTURES_H_
