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

#include "entfb/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "entfb/algebra.hpp"
#include "entfb/entanglement.hpp"
#include "entfb/hamiltonian.hpp"
#include "entfb/master_equation.hpp"

namespace entfb::validation {

namespace me = master_equation;
namespace ham = hamiltonian;
using algebra::kron;
using algebra::left_multiplication;
using algebra::right_multiplication;

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr std::uint64_t kSeed = 0x5eed'2026'0001ULL;

const std::vector<double> kGridValues{0.2, 0.5, 1.0, 2.0, 4.0};

struct ParamPoint {
  double alpha, J, lambda;
};

const std::vector<ParamPoint> kFeedbackPoints{
    {1.0, 1.0, 0.5}, {0.3, 0.2, -0.7}, {2.0, 0.5, 1.5}, {0.8, 3.0, 2.5}, {1.2, 0.05, -3.0}};

Operator random_operator(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Operator m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = Complex(n(rng), n(rng));
  return m;
}

Operator random_hermitian(std::mt19937_64& rng) {
  const Operator g = random_operator(rng);
  return 0.5 * (g + g.adjoint());
}

Operator random_density(std::mt19937_64& rng) {
  const Operator g = random_operator(rng);
  const Operator rho = g * g.adjoint();
  return rho / rho.trace();
}

StateVector random_pure(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  StateVector v;
  for (int k = 0; k < 4; ++k) v(k) = Complex(n(rng), n(rng));
  return v.normalized();
}

Operator dissipate(const Operator& a, const Operator& rho) {
  const Operator ada = a.adjoint() * a;
  return a * rho * a.adjoint() - 0.5 * (ada * rho + rho * ada);
}

double max_abs(const auto& m) { return m.cwiseAbs().maxCoeff(); }

CheckResult make(std::string name, double deviation, double threshold) {
  return {std::move(name), deviation, threshold, deviation <= threshold};
}

template <typename F>
CheckResult guarded(std::string name, double threshold, F&& body) {
  try {
    return make(std::move(name), body(), threshold);
  } catch (const std::exception&) {
    return {std::move(name), std::numeric_limits<double>::infinity(), threshold, false};
  }
}

}  // namespace

Generators Generators::reference() {
  return {&me::liouvillian_nofb, &me::liouvillian_fb};
}

Superoperator liouvillian_fb_expanded(const ModelParams& p) {
  const Operator F = me::feedback_operator(p);
  const Operator c_plus = algebra::collective_lowering(+1);
  const Operator c = algebra::collective_lowering(-1);
  const Operator cd = c.adjoint();
  // -i[F, c X + X c^dagger] = -i(F c X + F X c^dagger - c X F - X c^dagger F)
  const Superoperator feedback_drive =
      -kI * (left_multiplication(F * c) + kron(cd.transpose(), F) - kron(F.transpose(), c) -
             right_multiplication(cd * F));
  return algebra::hamiltonian_superoperator(ham::build_h_tot(p)) + algebra::dissipator(c_plus) +
         algebra::dissipator(c) + algebra::dissipator(F) + feedback_drive;
}

Operator feedback_rhs(const ModelParams& p, const Operator& rho) {
  const Operator H = ham::build_h_tot(p);
  const Operator F = me::feedback_operator(p);
  const Operator c_plus = algebra::collective_lowering(+1);
  const Operator c_minus = algebra::collective_lowering(-1);
  const Operator K = c_minus.adjoint() * F + F * c_minus;
  return -kI * (H * rho - rho * H) + dissipate(c_plus, rho) +
         dissipate(c_minus - kI * F, rho) - 0.5 * kI * (K * rho - rho * K);
}

std::vector<CheckResult> run_all(const Generators& gens) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(kSeed);

  out.push_back(guarded("eigenpair residuals (closed form)", 1e-12, [] {
    double worst = 0.0;
    for (double a : kGridValues)
      for (double J : kGridValues) {
        const ModelParams p{a, J, 0.0};
        const Operator H = ham::build_h_tot(p);
        const auto es = ham::analytic_eigensystem(p);
        for (int k = 0; k < 4; ++k)
          worst = std::max(worst, (H * es.vectors[k] - es.energies[k] * es.vectors[k]).norm());
      }
    return worst;
  }));

  out.push_back(guarded("numeric spectrum vs closed form", 1e-12, [] {
    double worst = 0.0;
    for (double a : kGridValues)
      for (double J : kGridValues) {
        const ModelParams p{a, J, 0.0};
        const auto es = ham::numeric_eigensystem(ham::build_h_tot(p));
        const double big = 2.0 * std::sqrt(a * a + J * J);
        std::array<double, 4> expected{-big, -2.0 * J, 2.0 * J, big};
        std::sort(expected.begin(), expected.end());
        for (int k = 0; k < 4; ++k)
          worst = std::max(worst, std::abs(es.energies[k] - expected[k]));
      }
    return worst;
  }));

  out.push_back(guarded("initial expansion reconstructs |gg>", 1e-12, [] {
    double worst = 0.0;
    for (double a : kGridValues)
      for (double J : kGridValues) {
        const ModelParams p{a, J, 0.0};
        const auto es = ham::analytic_eigensystem(p);
        const auto ex = ham::initial_expansion(p);
        StateVector sum = StateVector::Zero();
        for (int k = 0; k < 4; ++k) sum += ex.coefficients[k] * es.vectors[k];
        worst = std::max(worst, (sum - basis_ket(basis::gg)).norm());
      }
    return worst;
  }));

  out.push_back(guarded("closed evolution vs matrix exponential", 1e-10, [] {
    double worst = 0.0;
    for (const ParamPoint& pt : {ParamPoint{1, 1, 0}, ParamPoint{2, 1, 0}, ParamPoint{0.5, 2, 0}})
      for (double tau : {0.0, 0.37, 2.3, 7.9}) {
        const ModelParams p{pt.alpha, pt.J, 0.0};
        const Operator generator = -kI * ham::build_h_tot(p) * ham::tau_to_time(p, tau);
        const StateVector expected = generator.exp() * basis_ket(basis::gg);
        worst = std::max(worst, (ham::evolve_closed(p, tau) - expected).norm());
      }
    return worst;
  }));

  out.push_back(guarded("marker variance closed form vs expectation", 1e-10, [] {
    double worst = 0.0;
    const Operator O = ham::marker_observable();
    for (const ParamPoint& pt : {ParamPoint{1, 1, 0}, ParamPoint{2, 1, 0}, ParamPoint{0.5, 2, 0}})
      for (int k = 0; k < 50; ++k) {
        const ModelParams p{pt.alpha, pt.J, 0.0};
        const double tau = 0.1 * k;
        worst = std::max(worst, std::abs(ham::marker_variance(p, tau) -
                                         ham::variance(O, ham::evolve_closed(p, tau))));
      }
    return worst;
  }));

  out.push_back(guarded("no-feedback generator: site vs collective decay", 1e-13, [&] {
    double worst = 0.0;
    for (double a : kGridValues)
      for (double J : kGridValues) {
        const ModelParams p{a, J, 0.0};
        worst = std::max(worst, max_abs(gens.nofb(p) - me::liouvillian_nofb_collective(p)));
      }
    return worst;
  }));

  out.push_back(guarded("closed-form vs null-space steady state", 1e-10, [&] {
    double worst = 0.0;
    for (double a : {0.0, 0.25, 0.5, 1.0, 2.0})
      for (double J : {0.0, 0.25, 1.0, 4.0}) {
        const ModelParams p{a, J, 0.0};
        const auto numeric = me::steady_state(gens.nofb(p));
        worst = std::max(worst, max_abs(numeric.matrix() - me::analytic_steady_state(p).matrix()));
      }
    return worst;
  }));

  out.push_back(guarded("feedback generator at lambda = 0 equals no-feedback", 1e-13, [&] {
    double worst = 0.0;
    for (double a : kGridValues)
      for (double J : kGridValues) {
        const ModelParams p{a, J, 0.0};
        worst = std::max(worst, max_abs(gens.fb(p) - gens.nofb(p)));
      }
    return worst;
  }));

  out.push_back(guarded("feedback generator vs expanded homodyne form", 1e-12, [&] {
    double worst = 0.0;
    for (const ParamPoint& pt : kFeedbackPoints) {
      const ModelParams p{pt.alpha, pt.J, pt.lambda};
      worst = std::max(worst, max_abs(gens.fb(p) - liouvillian_fb_expanded(p)));
    }
    return worst;
  }));

  out.push_back(guarded("feedback generator vs direct right-hand side", 1e-12, [&] {
    double worst = 0.0;
    for (const ParamPoint& pt : kFeedbackPoints) {
      const ModelParams p{pt.alpha, pt.J, pt.lambda};
      const Superoperator L = gens.fb(p);
      for (int k = 0; k < 20; ++k) {
        const Operator X = random_hermitian(rng);
        worst = std::max(worst, max_abs(algebra::apply(L, X) - feedback_rhs(p, X)));
      }
    }
    return worst;
  }));

  out.push_back(guarded("feedback steady state solves the master equation", 1e-10, [&] {
    double worst = 0.0;
    for (const ParamPoint& pt : kFeedbackPoints) {
      const ModelParams p{pt.alpha, pt.J, pt.lambda};
      const auto rho = me::steady_state(gens.fb(p));
      worst = std::max(worst, max_abs(feedback_rhs(p, rho.matrix())));
    }
    return worst;
  }));

  out.push_back(guarded("generators preserve trace and Hermiticity", 1e-12, [&] {
    double worst = 0.0;
    for (const ParamPoint& pt : kFeedbackPoints) {
      const ModelParams p{pt.alpha, pt.J, pt.lambda};
      for (const Superoperator& L : {gens.nofb(p), gens.fb(p)})
        for (int k = 0; k < 10; ++k) {
          const Operator Y = algebra::apply(L, random_hermitian(rng));
          worst = std::max({worst, std::abs(Y.trace()), max_abs(Y - Y.adjoint())});
        }
    }
    return worst;
  }));

  out.push_back(guarded("steady states are positive", 1e-8, [&] {
    double worst = 0.0;
    for (const ParamPoint& pt : kFeedbackPoints) {
      const ModelParams p{pt.alpha, pt.J, pt.lambda};
      worst = std::max(worst, -me::steady_state(gens.fb(p)).min_eigenvalue());
    }
    return worst;
  }));

  out.push_back(guarded("concurrence: pure-state formula vs Wootters", 1e-10, [&] {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const StateVector psi = random_pure(rng);
      worst = std::max(worst, std::abs(entanglement::concurrence_pure(psi) -
                                       entanglement::concurrence(me::DensityMatrix::pure(psi)).value));
    }
    return worst;
  }));

  out.push_back(guarded("concurrence: non-Hermitian vs Hermitian route", 1e-9, [&] {
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
      const me::DensityMatrix rho(random_density(rng));
      worst = std::max(worst, std::abs(entanglement::concurrence(rho).value -
                                       entanglement::concurrence_hermitian(rho).value));
    }
    return worst;
  }));

  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace entfb::validation
