// cli/cli.h

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

#ifndef KAHAKO_CLI_CLI_H_
#define KAHAKO_CLI_CLI_H_

namespace kahako {

// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitModelMismatch = 4;
inline constexpr int kExitDecode = 5;

// Parses argv (argv[0] is the program name), runs the subcommand and
// returns the exit code. Diagnostics go to stderr as one line.
int RunCli(int argc, const char *const *argv);

}  // namespace kahako

#endif  // KAHAKO_CLI_CLI_H_
