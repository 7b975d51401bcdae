// rnnlm/lstm-io.h

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

#ifndef KAHAKO_RNNLM_LSTM_IO_H_
#define KAHAKO_RNNLM_LSTM_IO_H_

#include <iosfwd>
#include <string>

#include "rnnlm/lstm-lm.h"

namespace kahako {

// Binary layout: 8-byte magic "KHKLSTM\0", uint32 version, int32 layers,
// hidden, vocab, f64 dropout, then every parameter block in ForEachBlock()
// order, row-major. All numbers little-endian.
void WriteLstm(const LstmParams &params, std::ostream &os);
LstmParams ReadLstm(std::istream &is);

void WriteLstmFile(const LstmParams &params, const std::string &path);
LstmParams ReadLstmFile(const std::string &path);

}  // namespace kahako

#endif  // KAHAKO_RNNLM_LSTM_IO_H_
