// Copyright 2026 The entfb Authors
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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entfb/optimizer.hpp"
#include "entfb/types.hpp"

namespace entfb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

enum class Command { steady, evolve, concurrence, scan, validate };
enum class Format { csv, json };
enum class EvolveMode { closed, open };

struct Range {
  double min = 0.0;
  double max = 0.0;
  int count = 1;

  /// Parses "MIN:MAX:N". Throws ContractViolation on malformed input,
  /// N < 1 or MIN > MAX.
  static Range parse(const std::string& text);
  std::vector<double> values() const;
};

struct RunConfig {
  Command command = Command::steady;
  ModelParams params{1.0, 1.0, 0.0};
  double tau = 10.0;
  double t_final = 50.0;
  std::optional<double> dt;  ///< unset: master_equation::suggested_dt
  int samples = 101;
  EvolveMode mode = EvolveMode::closed;
  Range alpha_range{0.05, 2.0, 40};
  Range J_range{0.05, 5.0, 40};
  optimizer::OptimizationConfig optimization;
  unsigned threads = 0;
  bool analytic = false;
  bool optimize = false;
  std::optional<std::string> output_path;
  Format format = Format::csv;
};

/// Formats a value with 12 significant digits, the precision of every
/// numeric field the tool writes.
std::string format_number(double x);

void write_scan_csv(std::ostream& os, const std::vector<optimizer::ScanRecord>& records);
void write_scan_json(std::ostream& os, const std::vector<optimizer::ScanRecord>& records);

int cmd_steady(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_concurrence(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses arguments (argv[0] is the program name) and dispatches. Returns the
/// process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entfb::cli
