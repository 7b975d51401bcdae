// base/log.h

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

#ifndef KAHAKO_BASE_LOG_H_
#define KAHAKO_BASE_LOG_H_

#include <string_view>

namespace kahako {

enum class LogLevel { kInfo = 0, kWarning = 1, kSilent = 2 };

// Messages below this level are dropped. Defaults to kInfo.
void SetLogLevel(LogLevel level);
LogLevel GetLogLevel();

// All log output goes to standard error.
void LogInfo(std::string_view message);
void LogWarning(std::string_view message);

}  // namespace kahako

#endif  // KAHAKO_BASE_LOG_H_
