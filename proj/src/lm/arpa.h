// lm/arpa.h

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

#ifndef KAHAKO_LM_ARPA_H_
#define KAHAKO_LM_ARPA_H_

#include <iosfwd>
#include <memory>
#include <string>

#include "lm/ngram-model.h"

namespace kahako {

// ARPA-style text: optional "kahako-smoothing=<name>" line, a \data\ header
// of per-order counts, then "\k-grams:" sections with lines
//   log10-prob <TAB> space-separated tokens [<TAB> log10-backoff]
// Grams that only exist as contexts (e.g. "<s> <s>") carry log-prob -99.
void WriteArpa(const NgramModel &model, std::ostream &os);
void WriteArpaFile(const NgramModel &model, const std::string &path);

// Tokens are resolved through `syms`; an unknown token is a
// ModelMismatchError, malformed structure a FormatError.
NgramModel ReadArpa(std::istream &is, std::shared_ptr<const SymbolTable> syms);
NgramModel ReadArpaFile(const std::string &path,
                        std::shared_ptr<const SymbolTable> syms);

}  // namespace kahako

#endif  // KAHAKO_LM_ARPA_H_
