/* Copyright 2026 The RPCP Augment Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef RPCP_CLI_H_
#define RPCP_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace rpcp {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConfig = 2,
  kExitIo = 3,
  kExitDataMismatch = 4,
};

// Entry point behind the `rpcp` binary. args[0] is the program name.
//
//   rpcp extract --images D --masks D --out BANK [--config F] [--jobs N]
//   rpcp augment --images D --masks D --out D [--config F] [--seed S]
//                [--jobs N] [--bank BANK]
//   rpcp stats   --masks D [--images D] [--config F] [--out D]
//                [--sample-pixels N] [--seed S]
//   rpcp eval    --pred D --gt D [--config F] [--out D]
//   rpcp eval    --per-class-iou a,b,c --per-class-acc a,b,c
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace rpcp

#endif  // RPCP_CLI_H_
