// Copyright 2026 The cvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.h"

namespace cvqe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitRuntime = 3;

// Each command writes its CSV to `out` when cfg.out is empty, otherwise into
// files under cfg.out; progress and summaries go to `log`. Returns the exit
// code. ConfigError escapes to the caller.
int cmd_exact(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_vqe(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_usweep(const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_calibrate(const RunConfig& cfg, std::ostream& out, std::ostream& log);

// Full driver: args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Shared numeric format for every emitted file.
std::string format_number(double x);

}  // namespace cvqe::cli
