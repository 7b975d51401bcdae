// base/errors.h

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

#ifndef KAHAKO_BASE_ERRORS_H_
#define KAHAKO_BASE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace kahako {

// Root of all errors thrown by the library. The command-line driver maps the
// subclasses below onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed UTF-8 or otherwise unusable text.
class EncodingError : public Error {
 public:
  using Error::Error;
};

// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// A file was readable but its contents do not follow the expected format.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Two artifacts that must agree (symbol tables, vocabularies) do not.
class ModelMismatchError : public Error {
 public:
  using Error::Error;
};

// Decoding could not produce an output.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// Raised by shortest-path when no start-to-final path exists.
class EmptyLanguageError : public DecodeError {
 public:
  EmptyLanguageError() : DecodeError("empty language") {}
};

// Numerical failure during training (NaN or infinite loss).
class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace kahako

#endif  // KAHAKO_BASE_ERRORS_H_
