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

// Eisert-Wilkens-Lewenstein payoffs for a 2x2 game.
//
// Each player applies U(theta, alpha, beta) in SU(2) to its half of the
// maximally entangled state psi_11. Computational basis order is
// |00>, |01>, |10>, |11> with player 1 as the left tensor factor. The outcome
// (k, l) is observed with probability |<psi_kl| U1 (x) U2 |psi_11>|^2.
//
// Two independent routes are provided: the explicit state-vector contraction
// (PayoffMethod::kBasis) and the trigonometric closed form
// (PayoffMethod::kClosedForm). They must agree to 1e-9.
//
// Floating point is confined to this header; everything else is exact.

#ifndef EWLPD_EWL_HPP_
#define EWLPD_EWL_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ewlpd/game.hpp"

namespace ewlpd::ewl {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kUnitaryTolerance = 1e-12;
inline constexpr double kRejectTolerance = 1e-9;
inline constexpr double kProbabilityTolerance = 1e-12;

struct StrategyTriple {
  double theta = 0.0;  // [0, pi]
  double alpha = 0.0;  // [0, 2 pi)
  double beta = 0.0;   // [0, 2 pi)
};

inline void validate(const StrategyTriple& s) {
  if (!(s.theta >= 0.0 && s.theta <= kPi))
    throw std::invalid_argument("strategy: theta must lie in [0, pi]");
  if (!(s.alpha >= 0.0 && s.alpha < 2.0 * kPi))
    throw std::invalid_argument("strategy: alpha must lie in [0, 2 pi)");
  if (!(s.beta >= 0.0 && s.beta < 2.0 * kPi))
    throw std::invalid_argument("strategy: beta must lie in [0, 2 pi)");
}

// Row-major 2x2 complex matrix.
struct ComplexMatrix2 {
  std::array<Complex, 4> m{};

  Complex& operator()(int i, int j) { return m[static_cast<std::size_t>(2 * i + j)]; }
  const Complex& operator()(int i, int j) const { return m[static_cast<std::size_t>(2 * i + j)]; }

  Complex determinant() const { return m[0] * m[3] - m[1] * m[2]; }

  static ComplexMatrix2 identity() { return {{Complex(1), Complex(0), Complex(0), Complex(1)}}; }
};

// Largest entry-wise deviation of U U^dagger from the identity.
inline double unitarity_deviation(const ComplexMatrix2& u) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Complex acc = 0.0;
      for (int k = 0; k < 2; ++k) acc += u(i, k) * std::conj(u(j, k));
      worst = std::max(worst, std::abs(acc - Complex(i == j ? 1.0 : 0.0)));
    }
  return worst;
}

inline ComplexMatrix2 unitary(const StrategyTriple& s) {
  validate(s);
  const Complex i(0.0, 1.0);
  const double c = std::cos(s.theta / 2.0);
  const double sn = std::sin(s.theta / 2.0);
  ComplexMatrix2 u;
  u(0, 0) = std::exp(i * s.alpha) * c;
  u(0, 1) = i * std::exp(i * s.beta) * sn;
  u(1, 0) = i * std::exp(-i * s.beta) * sn;
  u(1, 1) = std::exp(-i * s.alpha) * c;
  return u;
}

using StateVector = std::array<Complex, 4>;

// psi_11, psi_12, psi_21, psi_22 in that order.
//
// psi_12 is taken as (i|01> - |10>)/sqrt 2. The commonly printed form repeats
// |01>, which is neither normalized nor orthogonal to psi_21; this form is
// the one consistent with the closed-form payoff.
inline const std::array<StateVector, 4>& entangled_basis() {
  static const std::array<StateVector, 4> basis = [] {
    const double h = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    std::array<StateVector, 4> b{};
    b[0] = {h, 0.0, 0.0, i * h};            // (|00> + i|11>)/sqrt2
    b[1] = {0.0, i * h, -h, 0.0};           // (i|01> - |10>)/sqrt2
    b[2] = {0.0, -h, i * h, 0.0};           // -(|01> - i|10>)/sqrt2
    b[3] = {-i * h, 0.0, 0.0, -h};          // -(i|00> + |11>)/sqrt2
    return b;
  }();
  return basis;
}

inline Complex inner(const StateVector& a, const StateVector& b) {
  Complex acc = 0.0;
  for (std::size_t k = 0; k < 4; ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

using ComplexMatrix4 = std::array<std::array<Complex, 4>, 4>;

inline ComplexMatrix4 kron(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  ComplexMatrix4 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out[2 * i + k][2 * j + l] = a(i, j) * b(k, l);
  return out;
}

struct OutcomeDistribution {
  double p11 = 0.0, p12 = 0.0, p21 = 0.0, p22 = 0.0;

  double sum() const { return p11 + p12 + p21 + p22; }
  // Probability of classical outcome (k, l), 1-based.
  double at(int k, int l) const {
    return k == 1 ? (l == 1 ? p11 : p12) : (l == 1 ? p21 : p22);
  }
};

namespace detail {

inline double clamp_probability(double p) {
  if (p < -kProbabilityTolerance || p > 1.0 + kProbabilityTolerance)
    throw std::logic_error("outcome probability outside [0, 1]: " + std::to_string(p));
  return std::min(1.0, std::max(0.0, p));
}

inline OutcomeDistribution make_distribution(double p11, double p12, double p21, double p22) {
  OutcomeDistribution d{clamp_probability(p11), clamp_probability(p12), clamp_probability(p21),
                        clamp_probability(p22)};
  return d;
}

}  // namespace detail

// |<psi_kl| (u1 (x) u2) |psi_11>|^2 via an explicit 4x4 tensor product.
inline OutcomeDistribution outcome_distribution(const ComplexMatrix2& u1, const ComplexMatrix2& u2) {
  if (unitarity_deviation(u1) > kRejectTolerance || unitarity_deviation(u2) > kRejectTolerance)
    throw std::invalid_argument("outcome_distribution: input is not unitary");
  const auto& basis = entangled_basis();
  const ComplexMatrix4 op = kron(u1, u2);
  StateVector out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r] += op[r][c] * basis[0][c];
  std::array<double, 4> p{};
  for (std::size_t k = 0; k < 4; ++k) p[k] = std::norm(inner(basis[k], out));
  return detail::make_distribution(p[0], p[1], p[2], p[3]);
}

// Squared amplitudes from the trigonometric closed form.
inline OutcomeDistribution closed_form_distribution(const StrategyTriple& s1, const StrategyTriple& s2) {
  validate(s1);
  validate(s2);
  const double c1 = std::cos(s1.theta / 2.0), n1 = std::sin(s1.theta / 2.0);
  const double c2 = std::cos(s2.theta / 2.0), n2 = std::sin(s2.theta / 2.0);
  const double a11 = std::cos(s1.alpha + s2.alpha) * c1 * c2 + std::sin(s1.beta + s2.beta) * n1 * n2;
  const double a12 = std::cos(s1.alpha - s2.beta) * c1 * n2 + std::sin(s2.alpha - s1.beta) * n1 * c2;
  const double a21 = std::sin(s1.alpha - s2.beta) * c1 * n2 + std::cos(s2.alpha - s1.beta) * n1 * c2;
  const double a22 = std::sin(s1.alpha + s2.alpha) * c1 * c2 - std::cos(s1.beta + s2.beta) * n1 * n2;
  return detail::make_distribution(a11 * a11, a12 * a12, a21 * a21, a22 * a22);
}

enum class PayoffMethod { kBasis, kClosedForm };

struct EwlPayoff {
  double u1 = 0.0;
  double u2 = 0.0;
};

inline EwlPayoff expected_payoffs(const BimatrixGame& game2x2, const OutcomeDistribution& d) {
  EwlPayoff out;
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) {
      out.u1 += d.at(k, l) * game2x2.u1(k, l).to_double();
      out.u2 += d.at(k, l) * game2x2.u2(k, l).to_double();
    }
  return out;
}

inline EwlPayoff ewl_payoffs(const BimatrixGame& game2x2, const StrategyTriple& s1,
                             const StrategyTriple& s2, PayoffMethod method) {
  if (game2x2.rows() != 2 || game2x2.cols() != 2)
    throw std::invalid_argument("ewl_payoffs: game must be 2x2");
  const OutcomeDistribution d = method == PayoffMethod::kBasis
                                    ? outcome_distribution(unitary(s1), unitary(s2))
                                    : closed_form_distribution(s1, s2);
  return expected_payoffs(game2x2, d);
}

// For a symmetric game: u2(s2, s1) == u1(s1, s2) within 1e-9.
inline bool symmetry_check(const BimatrixGame& game2x2, const StrategyTriple& s1,
                           const StrategyTriple& s2) {
  if (game2x2.rows() != 2 || game2x2.cols() != 2)
    throw std::invalid_argument("symmetry_check: game must be 2x2");
  if (!is_symmetric(game2x2)) throw std::invalid_argument("symmetry_check: game is not symmetric");
  const EwlPayoff forward = ewl_payoffs(game2x2, s1, s2, PayoffMethod::kBasis);
  const EwlPayoff swapped = ewl_payoffs(game2x2, s2, s1, PayoffMethod::kBasis);
  return std::abs(swapped.u2 - forward.u1) <= kRejectTolerance;
}

}  // namespace ewlpd::ewl

#endif  // EWLPD_EWL_HPP_
