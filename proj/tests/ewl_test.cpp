// Copyright 2026 The ewlpd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ewlpd/ewl.hpp"
#include "ewlpd/verifier.hpp"

namespace {

namespace ewl = ewlpd::ewl;
using ewl::Complex;
using ewl::StrategyTriple;

constexpr double kPi = 3.14159265358979323846;

StrategyTriple random_triple(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> th(0.0, kPi), an(0.0, 2.0 * kPi);
  return {th(rng), an(rng), an(rng)};
}

// Amplitudes computed independently: apply each unitary to its own qubit of
// the initial state (|00> + i|11>)/sqrt 2 without forming a tensor product.
std::array<Complex, 4> evolve(const ewl::ComplexMatrix2& a, const ewl::ComplexMatrix2& b) {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex in[2][2] = {{h, 0.0}, {0.0, Complex(0.0, h)}};
  std::array<Complex, 4> out{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int u = 0; u < 2; ++u)
        for (int v = 0; v < 2; ++v) out[2 * x + y] += a(x, u) * b(y, v) * in[u][v];
  return out;
}

TEST(EwlTest, StrategyUnitariesAreSpecialUnitary) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 1000; ++k) {
    const ewl::ComplexMatrix2 u = ewl::unitary(random_triple(rng));
    EXPECT_LE(ewl::unitarity_deviation(u), ewl::kUnitaryTolerance);
    EXPECT_NEAR(std::abs(u.determinant() - Complex(1.0)), 0.0, 1e-12);
  }
}

TEST(EwlTest, RejectsOutOfRangeAngles) {
  EXPECT_THROW(ewl::unitary({-0.1, 0, 0}), std::invalid_argument);
  EXPECT_THROW(ewl::unitary({kPi + 1e-6, 0, 0}), std::invalid_argument);
  EXPECT_THROW(ewl::unitary({0, 2 * kPi, 0}), std::invalid_argument);
  EXPECT_THROW(ewl::unitary({0, 0, -1e-9}), std::invalid_argument);
  EXPECT_THROW(ewl::unitary({std::nan(""), 0, 0}), std::invalid_argument);
}

TEST(EwlTest, RejectsNonUnitaryOperators) {
  ewl::ComplexMatrix2 bad = ewl::ComplexMatrix2::identity();
  bad(0, 0) = 1.01;
  EXPECT_THROW(ewl::outcome_distribution(bad, ewl::ComplexMatrix2::identity()), std::invalid_argument);
}

TEST(EwlTest, BasisIsOrthonormal) {
  const auto& b = ewl::entangled_basis();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_NEAR(std::abs(ewl::inner(b[i], b[j]) - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-12);
}

TEST(EwlTest, DistributionMatchesDirectEvolution) {
  std::mt19937_64 rng(22);
  const auto& basis = ewl::entangled_basis();
  for (int k = 0; k < 500; ++k) {
    const auto s1 = random_triple(rng), s2 = random_triple(rng);
    const auto state = evolve(ewl::unitary(s1), ewl::unitary(s2));
    const auto d = ewl::outcome_distribution(ewl::unitary(s1), ewl::unitary(s2));
    const double want[4] = {std::norm(ewl::inner(basis[0], state)), std::norm(ewl::inner(basis[1], state)),
                            std::norm(ewl::inner(basis[2], state)), std::norm(ewl::inner(basis[3], state))};
    EXPECT_NEAR(d.p11, want[0], 1e-12);
    EXPECT_NEAR(d.p12, want[1], 1e-12);
    EXPECT_NEAR(d.p21, want[2], 1e-12);
    EXPECT_NEAR(d.p22, want[3], 1e-12);
    EXPECT_NEAR(d.sum(), 1.0, 1e-12);
  }
}

TEST(EwlTest, ClassicalStrategiesReproduceTheClassicalGame) {
  const auto g = ewlpd::standard_raw_pd().game();
  const StrategyTriple c{0, 0, 0}, d{kPi, 0, 0};
  const auto cc = ewl::ewl_payoffs(g, c, c, ewl::PayoffMethod::kBasis);
  EXPECT_NEAR(cc.u1, 3.0, 1e-12);
  const auto dd = ewl::ewl_payoffs(g, d, d, ewl::PayoffMethod::kBasis);
  EXPECT_NEAR(dd.u1, 1.0, 1e-12);
  const auto cd = ewl::ewl_payoffs(g, c, d, ewl::PayoffMethod::kBasis);
  EXPECT_NEAR(cd.u1, 0.0, 1e-12);
  EXPECT_NEAR(cd.u2, 5.0, 1e-12);
  const auto dc = ewl::ewl_payoffs(g, d, c, ewl::PayoffMethod::kClosedForm);
  EXPECT_NEAR(dc.u1, 5.0, 1e-12);
  EXPECT_NEAR(dc.u2, 0.0, 1e-12);
}

TEST(EwlTest, DualPathsAgree) {
  const auto r = ewlpd::check_ewl_dual_path(1000, 1e-9, 99);
  EXPECT_TRUE(r.passed()) << r.max_deviation;
  EXPECT_EQ(r.seed, 99u);
  EXPECT_EQ(ewlpd::check_ewl_dual_path(50, 1e-9).max_deviation, ewlpd::check_ewl_dual_path(50, 1e-9).max_deviation);
  const auto g = ewlpd::gamma_game(ewlpd::standard_pd());
  EXPECT_LE(ewlpd::dual_path_deviation(g, {0, 0, 0}, {0, 0, 0}), 1e-15);
  EXPECT_THROW(ewlpd::check_ewl_dual_path(0, 1e-9), std::invalid_argument);
}

TEST(EwlTest, SymmetricGameGivesSymmetricPayoffs) {
  std::mt19937_64 rng(23);
  const auto g = ewlpd::gamma_game(ewlpd::standard_pd());
  for (int k = 0; k < 500; ++k) EXPECT_TRUE(ewl::symmetry_check(g, random_triple(rng), random_triple(rng)));
  const ewlpd::BimatrixGame asym(2, 2, {{1, 2}, {0, 0}, {0, 0}, {0, 0}});
  EXPECT_THROW(ewl::symmetry_check(asym, {0, 0, 0}, {0, 0, 0}), std::invalid_argument);
}

TEST(EwlTest, PayoffsAreAffineInTheGame) {
  std::mt19937_64 rng(24);
  const auto g = ewlpd::gamma_game(ewlpd::standard_pd());
  for (int k = 0; k < 200; ++k) {
    const ewlpd::Rational lambda(k % 7 + 1, 3), mu(k % 5 - 2, 4);
    const auto s1 = random_triple(rng), s2 = random_triple(rng);
    const auto v = ewl::ewl_payoffs(g, s1, s2, ewl::PayoffMethod::kBasis);
    const auto w = ewl::ewl_payoffs(ewlpd::affine_transform(g, lambda, mu), s1, s2, ewl::PayoffMethod::kClosedForm);
    EXPECT_NEAR(w.u1, lambda.to_double() * v.u1 + mu.to_double(), 1e-9);
    EXPECT_NEAR(w.u2, lambda.to_double() * v.u2 + mu.to_double(), 1e-9);
  }
}

TEST(EwlTest, RequiresTwoByTwoGames) {
  const ewlpd::BimatrixGame g(1, 2, {{1, 1}, {0, 0}});
  EXPECT_THROW(ewl::ewl_payoffs(g, {0, 0, 0}, {0, 0, 0}, ewl::PayoffMethod::kBasis), std::invalid_argument);
}

}  // namespace
