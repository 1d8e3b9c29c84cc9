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

#include "entfb/master_equation.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "entfb/algebra.hpp"
#include "entfb/errors.hpp"
#include "entfb/hamiltonian.hpp"
#include "test_support.hpp"

namespace entfb::master_equation {
namespace {

using algebra::apply;
using algebra::pauli;
using testing::max_abs;

const Operator kGroundProjector = basis_ket(basis::gg) * basis_ket(basis::gg).adjoint();

TEST(LiouvillianNoFeedback, SiteAndCollectiveDecayAgree) {
  EXPECT_LT(max_abs(liouvillian_nofb({1.0, 2.0, 0.0}) - liouvillian_nofb_collective({1.0, 2.0, 0.0})),
            1e-13);
}

TEST(LiouvillianNoFeedback, TraceIsLeftNullVector) {
  for (double a : {0.0, 0.5, 3.0})
    for (double J : {0.0, 1.0}) {
      const Superoperator L = liouvillian_nofb({a, J, 0.0});
      EXPECT_LT((algebra::trace_row() * L).cwiseAbs().maxCoeff(), 1e-13);
      EXPECT_TRUE(is_trace_preserving(L));
    }
}

TEST(LiouvillianNoFeedback, PureDecayRelaxesToGround) {
  const DensityMatrix rho = steady_state(liouvillian_nofb({0.0, 0.0, 0.0}));
  EXPECT_LT(max_abs(rho.matrix() - kGroundProjector), 1e-12);
}

TEST(FeedbackOperator, Properties) {
  EXPECT_EQ(feedback_operator({1.0, 1.0, 0.0}), Operator::Zero());
  const Operator F = feedback_operator({1.0, 1.0, 0.7});
  EXPECT_TRUE(algebra::is_hermitian(F));
  EXPECT_LT(max_abs(algebra::swap_sites(F) + F), 1e-15);
  EXPECT_NEAR(feedback_operator({1.0, 1.0, 2.1}).norm(), 3.0 * F.norm(), 1e-13);
  EXPECT_LT(max_abs(F - 0.7 / std::sqrt(2.0) *
                            (pauli(Axis::y, Site::one) - pauli(Axis::y, Site::two))),
            1e-15);
}

TEST(LiouvillianFeedback, ReducesWithoutFeedback) {
  for (double a : {0.0, 0.4, 2.0})
    for (double J : {0.0, 0.3, 5.0})
      EXPECT_LT(max_abs(liouvillian_fb({a, J, 0.0}) - liouvillian_nofb({a, J, 0.0})), 1e-13);
}

TEST(LiouvillianFeedback, TracePreserving) {
  EXPECT_LT((algebra::trace_row() * liouvillian_fb({1.0, 1.0, 0.7})).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(LiouvillianFeedback, PreservesTraceAndHermiticity) {
  std::mt19937_64 rng(21);
  for (double lambda : {-2.0, 0.5, 3.0}) {
    const Superoperator L = liouvillian_fb({0.8, 0.3, lambda});
    for (int k = 0; k < 30; ++k) {
      const Operator Y = algebra::apply(L, testing::random_hermitian(rng));
      EXPECT_LT(std::abs(Y.trace()), 1e-12);
      EXPECT_TRUE(algebra::is_hermitian(Y, 1e-12));
    }
  }
}

TEST(LiouvillianFeedback, SteadyStateIsPhysical) {
  const DensityMatrix rho = steady_state(liouvillian_fb({1.0, 1.0, 0.5}));
  EXPECT_TRUE(algebra::is_hermitian(rho.matrix(), 1e-10));
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
  EXPECT_GE(rho.min_eigenvalue(), -1e-8);
  EXPECT_TRUE(rho.is_physical());
}

TEST(SteadyState, MatchesClosedFormAtUnitParameters) {
  const ModelParams p{1.0, 1.0, 0.0};
  EXPECT_LT(max_abs(steady_state(liouvillian_nofb(p)).matrix() - analytic_steady_state(p).matrix()),
            1e-10);
}

TEST(SteadyState, MatchesClosedFormOnGrid) {
  for (double a : {0.25, 0.5, 1.0, 2.0})
    for (double J : {0.25, 1.0, 4.0}) {
      const ModelParams p{a, J, 0.0};
      const Superoperator L = liouvillian_nofb(p);
      const DensityMatrix rho = steady_state(L);
      EXPECT_LT(max_abs(rho.matrix() - analytic_steady_state(p).matrix()), 1e-10)
          << "alpha=" << a << " J=" << J;
      EXPECT_LT((L * algebra::vectorize(rho.matrix())).norm(), 1e-10);
      EXPECT_GE(rho.min_eigenvalue(), -1e-8);
    }
}

TEST(SteadyState, RecoversConjugatedAnswer) {
  // U L0 U^dagger has stationary state U rho0 U^dagger.
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 5; ++trial) {
    const ModelParams p{0.7, 1.3, 0.0};
    const Operator U = testing::random_unitary<4>(rng);
    const Superoperator conj = algebra::kron(U.conjugate(), U);
    const Superoperator L = conj * liouvillian_nofb(p) * conj.adjoint();
    const Operator expected = U * analytic_steady_state(p).matrix() * U.adjoint();
    EXPECT_LT(max_abs(steady_state(L).matrix() - expected), 1e-9);
  }
}

TEST(SteadyState, DegeneracyIsReported) {
  // Decay of site 1 only: any state of site 2 times |g><g| is stationary.
  const Superoperator L = algebra::dissipator(algebra::lowering(Site::one));
  try {
    steady_state(L);
    FAIL() << "expected DegenerateSteadyState";
  } catch (const DegenerateSteadyState& e) {
    EXPECT_LT(e.second_smallest(), 1e-10);
    EXPECT_NE(std::string(e.what()).find("singular values"), std::string::npos);
  }
  EXPECT_THROW(steady_state(Superoperator::Zero()), DegenerateSteadyState);
}

TEST(SteadyState, RejectsNonTracePreservingGenerator) {
  Superoperator L = liouvillian_nofb({1.0, 1.0, 0.0});
  L(0, 0) += 0.5;
  EXPECT_THROW(steady_state(L), ContractViolation);
}

TEST(SteadyState, SmallestSingularValues) {
  const auto s = smallest_singular_values(liouvillian_nofb({1.0, 1.0, 0.0}));
  EXPECT_LT(s[0], 1e-12);
  EXPECT_GT(s[1], 1e-3);
}

TEST(AnalyticSteadyState, NoDriveGivesGroundState) {
  for (double J : {0.0, 0.5, 3.0}) {
    const auto c = steady_state_coefficients(0.0, 2.0 * J);
    EXPECT_DOUBLE_EQ(c.Xi, 1.0 + 16.0 * 4.0 * J * J);
    EXPECT_DOUBLE_EQ(c.L, 1.0);
    EXPECT_LT(max_abs(analytic_steady_state({0.0, J, 0.0}).matrix() - kGroundProjector), 1e-15);
  }
}

TEST(AnalyticSteadyState, CoefficientInvariants) {
  for (double a : {0.1, 1.0, 2.5})
    for (double K : {0.0, 1.0, 4.0}) {
      const auto c = steady_state_coefficients(a, K);
      EXPECT_NEAR(c.A + c.E + c.H + c.L, 1.0, 1e-14);
      EXPECT_GE(c.A, 0.0);
      EXPECT_GE(c.E, 0.0);
      EXPECT_GE(c.H, 0.0);
      EXPECT_GE(c.L, 0.0);
      EXPECT_DOUBLE_EQ(c.Xi, 64 * a * a * a * a + 16 * a * a + 1 + 16 * K * K);
      EXPECT_EQ(c.B2, 0.0);
      EXPECT_EQ(c.C2, 0.0);
      EXPECT_EQ(c.F2, 0.0);
    }
  EXPECT_NEAR(analytic_steady_state({1.0, 1.0, 0.0}).trace().real(), 1.0, 1e-14);
}

TEST(AnalyticSteadyState, AssembledMatrixIsHermitian) {
  const Operator m = analytic_steady_state({1.3, 0.6, 0.0}).matrix();
  EXPECT_TRUE(algebra::is_hermitian(m, 0.0));
  const auto c = steady_state_coefficients(1.3, 1.2);
  EXPECT_EQ(m(3, 1), Complex(c.G1, -c.G2));
  EXPECT_EQ(m(1, 3), Complex(c.G1, c.G2));
}

TEST(AnalyticSteadyState, CoefficientsAreWrittenForTheZZCoefficient) {
  // The closed form is stationary for -i[alpha(sy1 + sy2) + K sz1 sz2, .] + decay,
  // which is the model generator when K = 2J.
  for (double a : {0.3, 1.0})
    for (double K : {0.5, 2.0}) {
      const Operator H = a * (pauli(Axis::y, Site::one) + pauli(Axis::y, Site::two)) +
                         K * pauli(Axis::z, Site::one) * pauli(Axis::z, Site::two);
      const Superoperator L = algebra::hamiltonian_superoperator(H) +
                              algebra::dissipator(algebra::lowering(Site::one)) +
                              algebra::dissipator(algebra::lowering(Site::two));
      const Operator closed = assemble(steady_state_coefficients(a, K));
      EXPECT_LT((L * algebra::vectorize(closed)).norm(), 1e-13);
    }
}

TEST(Propagate, ZeroTimeReturnsInitialState) {
  std::mt19937_64 rng(23);
  const DensityMatrix rho0(testing::random_density(rng));
  EXPECT_EQ(propagate(rho0, liouvillian_nofb({1, 1, 0}), 0.0, 0.01).matrix(), rho0.matrix());
}

TEST(Propagate, ZeroGeneratorIsIdentity) {
  std::mt19937_64 rng(24);
  const DensityMatrix rho0(testing::random_density(rng));
  EXPECT_EQ(propagate(rho0, Superoperator::Zero(), 3.7, 0.1).matrix(), rho0.matrix());
}

TEST(Propagate, ConvergesToSteadyState) {
  const Superoperator L = liouvillian_nofb({1.0, 1.0, 0.0});
  const DensityMatrix rho0 = DensityMatrix::pure(basis_ket(basis::gg));
  double worst_drift = 0.0;
  const DensityMatrix rho = propagate(rho0, L, 50.0, 0.01, [&](double, const DensityMatrix& r) {
    worst_drift = std::max(worst_drift, std::abs(r.trace() - 1.0));
  });
  EXPECT_LT((rho.matrix() - steady_state(L).matrix()).norm(), 1e-6);
  EXPECT_LT(worst_drift, 1e-8);
}

TEST(Propagate, MatchesExactExponentialWithShortenedLastStep) {
  const Superoperator L = liouvillian_fb({0.9, 0.4, 0.6});
  std::mt19937_64 rng(25);
  const DensityMatrix rho0(testing::random_density(rng));
  const double t = 0.737;
  int calls = 0;
  double last_t = 0.0;
  const DensityMatrix rho = propagate(rho0, L, t, 0.01, [&](double tt, const DensityMatrix&) {
    ++calls;
    last_t = tt;
  });
  const Superoperator lt = L * t;
  const Operator exact = algebra::apply(lt.exp(), rho0.matrix());
  const double err = max_abs(rho.matrix() - exact);
  EXPECT_LT(err, 1e-8);
  EXPECT_EQ(calls, 74);
  EXPECT_DOUBLE_EQ(last_t, t);
  // Fourth order: halving the step cuts the error by about 16.
  const double err_half = max_abs(propagate(rho0, L, t, 0.005).matrix() - exact);
  EXPECT_GT(err / err_half, 12.0);
  EXPECT_LT(err / err_half, 20.0);
}

TEST(Propagate, InvalidArguments) {
  const DensityMatrix rho0 = DensityMatrix::pure(basis_ket(basis::gg));
  const Superoperator L = liouvillian_nofb({1, 1, 0});
  EXPECT_THROW(propagate(rho0, L, 1.0, 0.0), ContractViolation);
  EXPECT_THROW(propagate(rho0, L, 1.0, -0.1), ContractViolation);
  EXPECT_THROW(propagate(rho0, L, -1.0, 0.1), ContractViolation);
}

TEST(Propagate, UnstableStepIsReported) {
  const DensityMatrix rho0 = DensityMatrix::pure(basis_ket(basis::gg));
  EXPECT_THROW(propagate(rho0, liouvillian_fb({3.0, 3.0, 2.0}), 100.0, 2.0), StepSizeError);
}

TEST(SuggestedStep, FollowsFastestRate) {
  EXPECT_DOUBLE_EQ(suggested_dt({0.1, 0.1, 0.0}), 0.05);
  EXPECT_DOUBLE_EQ(suggested_dt({0.0, 2.0, 0.0}), 0.05 / 16.0);
  EXPECT_DOUBLE_EQ(suggested_dt({0.0, 0.0, 3.0}), 0.05 / 18.0);
}

TEST(DensityMatrixType, PhysicalityChecks) {
  EXPECT_TRUE(DensityMatrix(Operator::Identity() / 4.0).is_physical());
  EXPECT_FALSE(DensityMatrix(Operator::Identity() / 2.0).is_physical());
  Operator m = Operator::Zero();
  m(0, 0) = 1.5;
  m(1, 1) = -0.5;
  EXPECT_FALSE(DensityMatrix(m).is_physical());
  EXPECT_FALSE(DensityMatrix(algebra::lowering(Site::one) + Operator::Identity() / 4.0).is_physical());
}

}  // namespace
}  // namespace entfb::master_equation
