// eval/corpus.h

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

#ifndef KAHAKO_EVAL_CORPUS_H_
#define KAHAKO_EVAL_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "eval/cerr.h"

namespace kahako {

// Normalized lines of a UTF-8 text file. Blank lines and lines starting with
// '#' are skipped. If `path` is a directory, its regular files are read in
// name order.
std::vector<std::u32string> ReadCorpus(const std::string &path);

// (BackwardMap(line), line) for every line, in order.
std::vector<ParallelPair> MakeSynthetic(std::span<const std::u32string> lines);

struct SplitSpec {
  double train = 0.8;
  double valid = 0.1;
  double test = 0.1;
  uint64_t seed = 1;

  void Check() const;
};

// Line indices of each part, each in increasing order.
struct Split {
  std::vector<size_t> train, valid, test;
};

// Seeded shuffle of 0..n-1, cut into parts of round(n * fraction) lines
// (test takes the remainder).
Split SplitLines(size_t n, const SplitSpec &spec);

template <class T>
std::vector<T> Select(std::span<const T> items, std::span<const size_t> idx) {
  std::vector<T> out;
  out.reserve(idx.size());
  for (size_t i : idx) out.push_back(items[i]);
  return out;
}

// "input<TAB>truth[<TAB>prediction]" per line, UTF-8, normalized on read.
std::vector<ParallelPair> ReadParallel(std::istream &is);
std::vector<ParallelPair> ReadParallelFile(const std::string &path);
void WriteParallel(std::span<const ParallelPair> pairs, std::ostream &os);
void WriteParallelFile(std::span<const ParallelPair> pairs,
                       const std::string &path);

}  // namespace kahako

#endif  // KAHAKO_EVAL_CORPUS_H_
