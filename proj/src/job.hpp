/*
   Copyright 2026 The qfs authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QFS_JOB_HPP
#define QFS_JOB_HPP

#include <optional>
#include <string>
#include <vector>

#include "fedder.hpp"
#include "graded.hpp"

namespace qfs {

inline constexpr const char* kToolName = "qfs";
inline constexpr const char* kToolVersion = "0.1.0";

/// One batch job: prime, variables, lifts as expression strings, optional
/// grading, recorded assertions, and work limits.
struct JobConfig {
  std::uint32_t p = 2;
  std::vector<std::string> variables;
  std::vector<std::string> lifts;
  std::optional<std::vector<std::uint64_t>> weights;
  Assertions assertions;
  ChainOptions limits;
  std::uint32_t dump_levels = 32;  // cap for chain dumps
  std::string preset;              // set when loaded from a preset

  static JobConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
};

/// Built-in configurations replaying the worked examples; acceptance runs
/// need no hand-written configs.
std::vector<std::string> preset_names();
JobConfig preset_config(const std::string& name);

enum class RunStatus : int {
  Ok = 0,
  InputError = 1,
  InternalBug = 2,
  Inconclusive = 3,
};

enum class Command { Height, Ppt, Chain };

Command parse_command(const std::string& name);

/// Everything one run produced. Serialization is deterministic: the same
/// config yields byte-identical JSON apart from the timing field.
struct Report {
  RunStatus status = RunStatus::Ok;
  Command command = Command::Height;
  JobConfig config;
  std::string error;  // set for InputError / InternalBug

  std::optional<HeightResult> height;
  std::optional<StableIdealResult> stable;
  std::optional<bool> ffinfty;
  std::optional<PptResult> ppt;
  std::optional<long> a_inv;
  std::optional<std::vector<std::uint64_t>> degrees;
  std::optional<GradedReport> graded;
  std::optional<FFInftyResult> ffinfty_detail;
  double timing_ms = 0.0;

  std::string to_json_text() const;
  std::string to_text() const;
};

/// Parse, validate, and run the pipeline for one command. Never throws:
/// failures are encoded in the report status.
Report run_job(const JobConfig& config, Command command);

}  // namespace qfs

#endif  // QFS_JOB_HPP
