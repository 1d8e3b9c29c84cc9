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

#include "entfb/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "entfb/entanglement.hpp"
#include "entfb/errors.hpp"
#include "entfb/master_equation.hpp"

namespace entfb::optimizer {

namespace me = master_equation;

void OptimizationConfig::validate() const {
  if (!(lambda_min < lambda_max))
    throw ContractViolation("optimization config: lambda_min must be below lambda_max");
  if (coarse_points < 3)
    throw ContractViolation("optimization config: coarse_points must be at least 3");
  if (!(refine_tol > 0.0))
    throw ContractViolation("optimization config: refine_tol must be positive");
}

GoldenResult golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                     double tol) {
  if (a > b) std::swap(a, b);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  GoldenResult best;
  auto consider = [&](double x, double fx) {
    ++best.evaluations;
    if (best.evaluations == 1 || fx > best.value) {
      best.x = x;
      best.value = fx;
    }
  };

  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  consider(c, fc);
  double fd = f(d);
  consider(d, fd);

  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      consider(d, fd);
    }
  }
  return best;
}

double feedback_concurrence(const ModelParams& p) {
  return entanglement::concurrence(me::steady_state(me::liouvillian_fb(p))).value;
}

double stationary_concurrence(const ModelParams& p) {
  return entanglement::concurrence(me::analytic_steady_state(p)).value;
}

double stationary_concurrence_numeric(const ModelParams& p) {
  ModelParams q = p;
  q.lambda = 0.0;
  return entanglement::concurrence(me::steady_state(me::liouvillian_nofb(q))).value;
}

LambdaOptimum optimize_lambda(const ModelParams& p, const OptimizationConfig& cfg) {
  cfg.validate();

  std::vector<double> grid = linspace(cfg.lambda_min, cfg.lambda_max, cfg.coarse_points);
  if (cfg.include_zero) {
    const bool present = std::any_of(grid.begin(), grid.end(),
                                     [](double x) { return x == 0.0; });
    if (!present) {
      grid.push_back(0.0);
      std::sort(grid.begin(), grid.end());
    }
  }

  ModelParams q = p;
  auto evaluate = [&q](double lambda) {
    q.lambda = lambda;
    return feedback_concurrence(q);
  };

  LambdaOptimum out;
  std::vector<double> values(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    values[k] = evaluate(grid[k]);
    ++out.evaluations;
  }

  // lambda = 0 is the incumbent; other candidates must strictly beat it.
  std::size_t best = 0;
  if (cfg.include_zero) {
    best = static_cast<std::size_t>(std::find(grid.begin(), grid.end(), 0.0) - grid.begin());
  }
  if (best >= grid.size()) best = 0;
  for (std::size_t k = 0; k < grid.size(); ++k)
    if (values[k] > values[best]) best = k;

  out.lambda_opt = grid[best];
  out.Cfb = values[best];

  const double lo = grid[best == 0 ? 0 : best - 1];
  const double hi = grid[std::min(best + 1, grid.size() - 1)];
  const GoldenResult refined = golden_section_maximize(evaluate, lo, hi, cfg.refine_tol);
  out.evaluations += refined.evaluations;
  if (refined.value > out.Cfb) {
    out.lambda_opt = refined.x;
    out.Cfb = refined.value;
  }

  out.at_boundary = std::abs(out.lambda_opt - cfg.lambda_min) <= cfg.refine_tol ||
                    std::abs(out.lambda_opt - cfg.lambda_max) <= cfg.refine_tol;
  return out;
}

std::vector<ScanRecord> scan_grid(std::span<const double> alphas, std::span<const double> Js,
                                  const OptimizationConfig& cfg, unsigned threads) {
  if (alphas.empty() || Js.empty())
    throw ContractViolation("scan_grid: parameter lists must be non-empty");
  cfg.validate();

  const std::size_t total = alphas.size() * Js.size();
  std::vector<ScanRecord> records(total);

  auto compute = [&](std::size_t index) {
    ScanRecord& r = records[index];
    r.alpha = alphas[index / Js.size()];
    r.J = Js[index % Js.size()];
    try {
      const ModelParams p{r.alpha, r.J, 0.0};
      r.C0 = stationary_concurrence(p);
      const LambdaOptimum opt = optimize_lambda(p, cfg);
      r.Cfb = opt.Cfb;
      r.lambda_opt = opt.lambda_opt;
      r.at_boundary = opt.at_boundary;
      r.delta = r.Cfb - r.C0;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  };

  unsigned workers = threads == 0 ? std::thread::hardware_concurrency() : threads;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(total)));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) compute(i);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return records;
}

std::vector<double> linspace(double lo, double hi, int count) {
  if (count < 1) throw ContractViolation("linspace: count must be at least 1");
  std::vector<double> out(static_cast<std::size_t>(count));
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (int k = 0; k < count; ++k) out[k] = lo + step * static_cast<double>(k);
  out.back() = hi;
  return out;
}

}  // namespace entfb::optimizer
