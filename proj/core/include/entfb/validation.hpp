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
#include <string>
#include <vector>

#include "entfb/types.hpp"

/// Cross-checks between independent routes to the same quantities. Used by
/// `entfb validate` and the acceptance suite.
namespace entfb::validation {

struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

using GeneratorBuilder = std::function<Superoperator(const ModelParams&)>;

/// Generators under test. Defaults to the library builders; fixtures can
/// substitute altered ones.
struct Generators {
  GeneratorBuilder nofb;
  GeneratorBuilder fb;

  static Generators reference();
};

/// Feedback generator in the expanded form
///   -i[H, .] + D[c+] + D[c-] - i[F, c- . + . c-^dagger] + D[F].
Superoperator liouvillian_fb_expanded(const ModelParams& p);

/// Right-hand side of the feedback master equation evaluated with plain
/// matrix products, no vectorization.
Operator feedback_rhs(const ModelParams& p, const Operator& rho);

std::vector<CheckResult> run_all(const Generators& gens = Generators::reference());

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace entfb::validation
