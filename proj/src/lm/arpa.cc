// lm/arpa.cc

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

#include "lm/arpa.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <sstream>

#include "base/errors.h"

namespace kahako {
namespace {

constexpr double kNoProb = -99.0;
constexpr char kSmoothingKey[] = "kahako-smoothing=";

struct Entry {
  std::optional<double> log_prob;  // natural log
  std::optional<double> log_backoff;
};

// All grams of length k, keyed by label sequence.
std::vector<std::map<Ngram, Entry>> CollectGrams(const NgramModel &model) {
  std::vector<std::map<Ngram, Entry>> grams(model.order() + 1);
  const auto &nodes = model.nodes();
  for (int32_t id = 0; id < static_cast<int32_t>(nodes.size()); ++id) {
    const auto &node = nodes[id];
    const Ngram context = model.ContextOf(id);
    for (const auto &[c, lp] : node.log_probs) {
      Ngram gram = context;
      gram.push_back(c);
      grams[gram.size()][gram].log_prob = lp;
    }
    if (node.has_backoff && !context.empty()) {
      grams[context.size()][context].log_backoff = node.log_backoff;
    }
  }
  return grams;
}

std::string Tokens(const NgramModel &model, const Ngram &gram) {
  std::string out;
  for (size_t i = 0; i < gram.size(); ++i) {
    if (i > 0) out += ' ';
    out += model.symbols().Name(gram[i]);
  }
  return out;
}

[[noreturn]] void Bad(size_t line_no, const std::string &what) {
  throw FormatError("ARPA line " + std::to_string(line_no) + ": " + what);
}

double ParseNumber(const std::string &field, size_t line_no) {
  size_t used = 0;
  double v;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception &) {
    Bad(line_no, "bad number '" + field + "'");
  }
  if (used != field.size()) Bad(line_no, "bad number '" + field + "'");
  return v;
}

std::vector<std::string> Split(const std::string &s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t end = s.find(sep, start);
    out.push_back(s.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

void WriteArpa(const NgramModel &model, std::ostream &os) {
  const auto grams = CollectGrams(model);
  const double to_log10 = 1.0 / std::log(10.0);
  os << kSmoothingKey << SmoothingName(model.smoothing()) << '\n';
  os << "\\data\\\n";
  for (int k = 1; k <= model.order(); ++k) {
    os << "ngram " << k << '=' << grams[k].size() << '\n';
  }
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (int k = 1; k <= model.order(); ++k) {
    os << "\n\\" << k << "-grams:\n";
    for (const auto &[gram, entry] : grams[k]) {
      os << (entry.log_prob ? *entry.log_prob * to_log10 : kNoProb) << '\t'
         << Tokens(model, gram);
      if (entry.log_backoff) os << '\t' << *entry.log_backoff * to_log10;
      os << '\n';
    }
  }
  os << "\n\\end\\\n";
}

void WriteArpaFile(const NgramModel &model, const std::string &path) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path + " for writing");
  WriteArpa(model, os);
  if (!os) throw IoError("error writing " + path);
}

NgramModel ReadArpa(std::istream &is, std::shared_ptr<const SymbolTable> syms) {
  const double from_log10 = std::log(10.0);
  std::string line;
  size_t line_no = 0;
  Smoothing smoothing = Smoothing::kKneserNey;

  auto next = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };

  if (!next()) throw FormatError("empty ARPA file");
  if (line.rfind(kSmoothingKey, 0) == 0) {
    try {
      smoothing = ParseSmoothing(line.substr(sizeof(kSmoothingKey) - 1));
    } catch (const std::exception &e) {
      Bad(line_no, e.what());
    }
    if (!next()) Bad(line_no, "missing \\data\\");
  }
  if (line != "\\data\\") Bad(line_no, "expected \\data\\");

  std::vector<size_t> declared;
  while (next() && line.rfind("ngram ", 0) == 0) {
    const size_t eq = line.find('=');
    if (eq == std::string::npos) Bad(line_no, "bad count line");
    const int k = static_cast<int>(ParseNumber(line.substr(6, eq - 6), line_no));
    if (k != static_cast<int>(declared.size()) + 1) {
      Bad(line_no, "orders must be listed as 1, 2, ...");
    }
    declared.push_back(
        static_cast<size_t>(ParseNumber(line.substr(eq + 1), line_no)));
  }
  if (declared.empty()) Bad(line_no, "no n-gram counts");

  const int order = static_cast<int>(declared.size());
  NgramModel model(order, smoothing, syms);
  for (int k = 1; k <= order; ++k) {
    const std::string header = "\\" + std::to_string(k) + "-grams:";
    if (line != header) Bad(line_no, "expected " + header);
    size_t seen = 0;
    Ngram gram;
    while (next() && line[0] != '\\') {
      const auto fields = Split(line, '\t');
      if (fields.size() < 2 || fields.size() > 3) Bad(line_no, "bad entry");
      const double lp = ParseNumber(fields[0], line_no);
      gram.clear();
      for (const auto &tok : Split(fields[1], ' ')) {
        const Label l = syms->FindName(tok);
        if (l == kNoLabel) {
          throw ModelMismatchError("ARPA token '" + tok +
                                   "' is not in the symbol table");
        }
        gram.push_back(l);
      }
      if (static_cast<int>(gram.size()) != k) Bad(line_no, "wrong gram length");
      if (lp > kNoProb) model.SetLogProb(gram, lp * from_log10);
      if (fields.size() == 3) {
        if (k == order) Bad(line_no, "backoff on a highest-order gram");
        model.SetLogBackoff(gram, ParseNumber(fields[2], line_no) * from_log10);
      }
      ++seen;
    }
    if (seen != declared[k - 1]) Bad(line_no, "count mismatch for order " +
                                                  std::to_string(k));
  }
  if (line != "\\end\\") Bad(line_no, "expected \\end\\");
  return model;
}

NgramModel ReadArpaFile(const std::string &path,
                        std::shared_ptr<const SymbolTable> syms) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path);
  return ReadArpa(is, std::move(syms));
}

}  // namespace kahako
