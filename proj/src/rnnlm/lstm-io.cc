// rnnlm/lstm-io.cc

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

#include "rnnlm/lstm-io.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "base/errors.h"

namespace kahako {
namespace {

static_assert(std::endian::native == std::endian::little,
              "model files are written in host byte order");

constexpr char kMagic[8] = {'K', 'H', 'K', 'L', 'S', 'T', 'M', '\0'};
constexpr uint32_t kVersion = 1;

template <class T>
void Put(std::ostream &os, T value) {
  os.write(reinterpret_cast<const char *>(&value), sizeof(value));
}

template <class T>
T Get(std::istream &is) {
  T value;
  if (!is.read(reinterpret_cast<char *>(&value), sizeof(value))) {
    throw FormatError("truncated LSTM model file");
  }
  return value;
}

}  // namespace

void WriteLstm(const LstmParams &params, std::ostream &os) {
  const LstmConfig &cfg = params.config;
  os.write(kMagic, sizeof(kMagic));
  Put<uint32_t>(os, kVersion);
  Put<int32_t>(os, cfg.layers);
  Put<int32_t>(os, cfg.hidden);
  Put<int32_t>(os, cfg.vocab);
  Put<double>(os, cfg.dropout);
  params.ForEachBlock([&](const std::string &, const double *data,
                          Eigen::Index rows, Eigen::Index cols) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) Put<double>(os, data[c * rows + r]);
    }
  });
}

LstmParams ReadLstm(std::istream &is) {
  char magic[sizeof(kMagic)];
  if (!is.read(magic, sizeof(magic)) ||
      std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw FormatError("not an LSTM model file (bad magic)");
  }
  const uint32_t version = Get<uint32_t>(is);
  if (version != kVersion) {
    throw FormatError("unsupported LSTM model version " + std::to_string(version));
  }
  LstmConfig cfg;
  cfg.layers = Get<int32_t>(is);
  cfg.hidden = Get<int32_t>(is);
  cfg.vocab = Get<int32_t>(is);
  cfg.dropout = Get<double>(is);
  // Guard against absurd sizes before allocating.
  if (cfg.layers < 1 || cfg.layers > 64 || cfg.hidden < 1 ||
      cfg.hidden > 65536 || cfg.vocab < 1 || cfg.vocab > (1 << 22)) {
    throw FormatError("implausible LSTM model dimensions");
  }
  LstmParams params;
  try {
    params = LstmParams::Zeros(cfg);
  } catch (const std::invalid_argument &e) {
    throw FormatError(std::string("bad LSTM config: ") + e.what());
  }
  params.ForEachBlock([&](const std::string &, double *data, Eigen::Index rows,
                          Eigen::Index cols) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) data[c * rows + r] = Get<double>(is);
    }
  });
  if (!params.AllFinite()) throw FormatError("non-finite LSTM parameters");
  return params;
}

void WriteLstmFile(const LstmParams &params, const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open " + path + " for writing");
  WriteLstm(params, os);
  if (!os) throw IoError("error writing " + path);
}

LstmParams ReadLstmFile(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path);
  return ReadLstm(is);
}

}  // namespace kahako
