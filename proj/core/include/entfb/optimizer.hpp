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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "entfb/types.hpp"

namespace entfb::optimizer {

struct OptimizationConfig {
  double lambda_min = -8.0;
  double lambda_max = 8.0;
  int coarse_points = 161;
  double refine_tol = 1e-6;
  bool include_zero = true;

  /// Throws ContractViolation unless lambda_min < lambda_max,
  /// coarse_points >= 3 and refine_tol > 0.
  void validate() const;
};

struct LambdaOptimum {
  double lambda_opt = 0.0;
  double Cfb = 0.0;
  /// Maximizer sits within refine_tol of a search bound; the true maximum
  /// may lie outside [lambda_min, lambda_max].
  bool at_boundary = false;
  int evaluations = 0;
};

struct ScanRecord {
  double alpha = 0.0;
  double J = 0.0;
  double C0 = 0.0;
  double Cfb = 0.0;
  double lambda_opt = 0.0;
  double delta = 0.0;
  bool at_boundary = false;
  std::optional<std::string> error;
};

struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search for a maximum of f on [a, b], stopping once the
/// bracket is narrower than tol. Returns the best point evaluated.
GoldenResult golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                     double tol);

/// Concurrence of the stationary state with feedback strength p.lambda.
double feedback_concurrence(const ModelParams& p);

/// C0: concurrence of the no-feedback stationary state, from the closed form.
double stationary_concurrence(const ModelParams& p);

/// Same through the numeric null-space solve of the no-feedback generator.
double stationary_concurrence_numeric(const ModelParams& p);

/// Maximizes feedback_concurrence over lambda (p.lambda is ignored):
/// coarse scan over the configured grid plus lambda = 0, then golden-section
/// refinement between the neighbours of the best coarse point.
LambdaOptimum optimize_lambda(const ModelParams& p, const OptimizationConfig& cfg = {});

/// One record per (alpha, J), alpha outer and J inner. Points are computed on
/// up to `threads` workers (0 = hardware concurrency); failures are recorded
/// in ScanRecord::error.
std::vector<ScanRecord> scan_grid(std::span<const double> alphas, std::span<const double> Js,
                                  const OptimizationConfig& cfg = {}, unsigned threads = 0);

/// `count` evenly spaced values from lo to hi inclusive (count == 1 gives lo).
std::vector<double> linspace(double lo, double hi, int count);

}  // namespace entfb::optimizer
