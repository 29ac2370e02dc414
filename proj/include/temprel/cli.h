// temprel/cli.h

// Copyright 2026  The temprel Authors
//
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

#ifndef TEMPREL_CLI_H_
#define TEMPREL_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace temprel {

enum ExitStatus { kExitOk = 0, kExitDataError = 1, kExitUsageError = 2 };

// Entry point behind the temprel binary. args excludes the program name.
// Data goes to the --out file or to out; log lines go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace temprel

#endif  // TEMPREL_CLI_H_
