// base/log.cc

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

#include "base/log.h"

#include <atomic>
#include <iostream>
#include <mutex>

namespace kahako {
namespace {

std::atomic<LogLevel> g_level{LogLevel::kInfo};
std::mutex g_mutex;

void Emit(const char *prefix, std::string_view message) {
  std::lock_guard<std::mutex> lock(g_mutex);
  std::cerr << prefix << message << '\n';
}

}  // namespace

void SetLogLevel(LogLevel level) { g_level = level; }

LogLevel GetLogLevel() { return g_level; }

void LogInfo(std::string_view message) {
  if (g_level.load() <= LogLevel::kInfo) Emit("LOG: ", message);
}

void LogWarning(std::string_view message) {
  if (g_level.load() <= LogLevel::kWarning) Emit("WARNING: ", message);
}

}  // namespace kahako
