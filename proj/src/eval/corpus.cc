// eval/corpus.cc

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

#include "eval/corpus.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>

#include "base/errors.h"
#include "base/utf8.h"
#include "ortho/normalize.h"

namespace kahako {
namespace {

void ReadCorpusFile(const std::string &path, std::vector<std::u32string> *out) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  std::string line;
  size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::u32string text;
    try {
      text = Normalize(line);
    } catch (const EncodingError &e) {
      throw EncodingError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (text.find_first_not_of(U" \t") == std::u32string::npos) continue;
    out->push_back(std::move(text));
  }
}

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

}  // namespace

std::vector<std::u32string> ReadCorpus(const std::string &path) {
  namespace fs = std::filesystem;
  std::vector<std::u32string> lines;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<std::string> files;
    for (const auto &entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    for (const auto &f : files) ReadCorpusFile(f, &lines);
  } else {
    ReadCorpusFile(path, &lines);
  }
  return lines;
}

std::vector<ParallelPair> MakeSynthetic(std::span<const std::u32string> lines) {
  std::vector<ParallelPair> pairs;
  pairs.reserve(lines.size());
  for (const auto &line : lines) pairs.push_back({BackwardMap(line), line, {}});
  return pairs;
}

void SplitSpec::Check() const {
  if (train < 0 || valid < 0 || test < 0 ||
      std::abs(train + valid + test - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "split fractions must be non-negative and sum to 1");
  }
}

Split SplitLines(size_t n, const SplitSpec &spec) {
  spec.Check();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::mt19937_64 rng(spec.seed);
  for (size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<size_t> pick(0, i - 1);
    std::swap(order[i - 1], order[pick(rng)]);
  }
  const size_t n_train = std::min(
      n, static_cast<size_t>(std::llround(spec.train * static_cast<double>(n))));
  const size_t n_valid = std::min(
      n - n_train,
      static_cast<size_t>(std::llround(spec.valid * static_cast<double>(n))));
  Split split;
  split.train.assign(order.begin(), order.begin() + n_train);
  split.valid.assign(order.begin() + n_train, order.begin() + n_train + n_valid);
  split.test.assign(order.begin() + n_train + n_valid, order.end());
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.valid.begin(), split.valid.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

std::vector<ParallelPair> ReadParallel(std::istream &is) {
  std::vector<ParallelPair> pairs;
  std::string line;
  size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = SplitTabs(line);
    if (fields.size() < 2 || fields.size() > 3) {
      throw FormatError("parallel line " + std::to_string(line_no) +
                        ": expected 2 or 3 tab-separated fields");
    }
    ParallelPair p{Normalize(fields[0]), Normalize(fields[1]), {}};
    if (p.truth.empty()) {
      throw FormatError("parallel line " + std::to_string(line_no) +
                        ": empty truth");
    }
    if (fields.size() == 3) p.prediction = Normalize(fields[2]);
    pairs.push_back(std::move(p));
  }
  return pairs;
}

std::vector<ParallelPair> ReadParallelFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  return ReadParallel(is);
}

void WriteParallel(std::span<const ParallelPair> pairs, std::ostream &os) {
  for (const ParallelPair &p : pairs) {
    os << EncodeUtf8(p.input) << '\t' << EncodeUtf8(p.truth);
    if (p.prediction) os << '\t' << EncodeUtf8(*p.prediction);
    os << '\n';
  }
}

void WriteParallelFile(std::span<const ParallelPair> pairs,
                       const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  WriteParallel(pairs, os);
  if (!os) throw IoError("error writing " + path);
}

}  // namespace kahako
