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

// Reproduction bundle: the standard-PD results for every extension class,
// the full predicate/oracle sweep and the EWL engine checks, each with a
// pass flag.

#ifndef EWLPD_REPORT_HPP_
#define EWLPD_REPORT_HPP_

#include <chrono>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "ewlpd/ewl.hpp"
#include "ewlpd/extensions.hpp"
#include "ewlpd/game.hpp"
#include "ewlpd/regions.hpp"
#include "ewlpd/verifier.hpp"

namespace ewlpd {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  nlohmann::json detail;
};

namespace detail {

template <typename Fn>
CheckResult timed(int id, std::string name, Fn&& fn) {
  CheckResult r{id, std::move(name), false, 0.0, nlohmann::json::object()};
  const auto start = std::chrono::steady_clock::now();
  r.passed = fn(r.detail);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline nlohmann::json set_with_payoffs(const BimatrixGame& g, const ProfileSet& set, const PayoffScale& sc) {
  nlohmann::json pay = nlohmann::json::array();
  for (const auto& s : set) pay.push_back({sc.apply(g.at(s).u1).str(), sc.apply(g.at(s).u2).str()});
  return {{"equilibria", to_json(set)}, {"payoffs", std::move(pay)}};
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-50, 50), den(1, 12);
  return Rational(num(rng), den(rng));
}

}  // namespace detail

inline std::vector<CheckResult> reproduction_report(std::uint64_t seed = kDefaultSeed) {
  const NormalizedPD pd = standard_pd();
  const PayoffScale classic = PayoffScale::classic(standard_raw_pd());
  std::vector<CheckResult> out;

  out.push_back(detail::timed(1, "classical baseline", [&](nlohmann::json& d) {
    const BimatrixGame g = gamma_game(pd);
    const ProfileSet ne = pure_nash_equilibria(g);
    d = detail::set_with_payoffs(g, ne, {});
    return ne == ProfileSet{{2, 2}} && g.at(2, 2).u1 == Rational(1, 5) && g.at(2, 2).u2 == Rational(1, 5);
  }));

  out.push_back(detail::timed(2, "A1 maximal equal payoffs", [&](nlohmann::json& d) {
    const Rational step = GridSpec::defaults(ExtensionClass::kA1).param_step;
    d = nlohmann::json::array();
    bool ok = true;
    struct Want { int i, j; bool found; double param, payoff; };
    const double s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
    const std::vector<Want> wants = {{2, 2, true, 1.0, 1.0},         {2, 3, true, 0.5, 2.5},
                                     {3, 2, true, 0.5, 2.5},         {2, 4, true, 1.0, 1.0},
                                     {4, 2, true, 1.0, 1.0},         {3, 3, true, (3 - s3) / 6, 5.0 / 3},
                                     {4, 4, true, (3 + s6) / 6, 5.0 / 3}, {3, 4, false, 0, 0},
                                     {4, 3, false, 0, 0}};
    for (const auto& w : wants) {
      const ExtremalResult r = max_equal_payoff(ExtensionClass::kA1, pd, {w.i, w.j}, step);
      d.push_back(to_json(r, classic));
      if (r.found != w.found) ok = false;
      if (!w.found || !r.found) continue;
      if (std::abs(r.param_value - w.param) > 1e-6) ok = false;
      if (std::abs(classic.apply(r.payoff_value) - w.payoff) > 1e-9) ok = false;
    }
    return ok;
  }));

  out.push_back(detail::timed(3, "B equilibria", [&](nlohmann::json& d) {
    const BimatrixGame g = build_extension(ExtensionSpec::make(ExtensionClass::kB), pd);
    const ProfileSet ne = pure_nash_equilibria(g);
    d = detail::set_with_payoffs(g, ne, classic);
    ProfileSet want;
    for (int i = 2; i <= 4; ++i)
      for (int j = 2; j <= 4; ++j)
        if (i != 2 || j != 2) want.push_back({i, j});
    bool ok = ne == want;
    for (const auto& s : ne)
      ok = ok && classic.apply(g.at(s).u1) == Rational(9, 4) && classic.apply(g.at(s).u2) == Rational(9, 4);
    return ok;
  }));

  out.push_back(detail::timed(4, "C equilibria and supremum", [&](nlohmann::json& d) {
    const BimatrixGame c = build_extension(ExtensionSpec::make(ExtensionClass::kC, Rational(1, 2)), pd);
    const BimatrixGame b = build_extension(ExtensionSpec::make(ExtensionClass::kB), pd);
    const ExtremalResult sup =
        max_equal_payoff(ExtensionClass::kC, pd, {2, 3}, GridSpec::defaults(ExtensionClass::kC).param_step);
    const Rational near = Rational(1) - pow2_inverse(20);
    const Rational at_near = classic.apply(
        build_extension(ExtensionSpec::make(ExtensionClass::kC, near), pd).at(2, 3).u1);
    d = {{"equal_to_B", c == b},
         {"equilibria", to_json(pure_nash_equilibria(c))},
         {"supremum", to_json(sup, classic)},
         {"payoff_near_one", at_near.str()}};
    return c == b && pure_nash_equilibria(c).size() == 8 && sup.is_supremum_only && sup.payoff &&
           classic.apply(*sup.payoff) == Rational(5, 2) &&
           std::abs(at_near.to_double() - 2.5) <= 5e-7;
  }));

  out.push_back(detail::timed(5, "D and E equilibria", [&](nlohmann::json& d) {
    bool ok = true;
    const Rational half(1, 2);
    std::size_t points = 0;
    for (const auto& t : param_grid(ExtensionClass::kD1, Rational(1, 64))) {
      ++points;
      auto ne = [&](ExtensionClass id) { return pure_nash_equilibria(build_extension(ExtensionSpec::make(id, t), pd)); };
      ok = ok && ne(ExtensionClass::kD1) == ProfileSet{{2, 2}} && ne(ExtensionClass::kD2).empty();
      if (*t >= half) ok = ok && ne(ExtensionClass::kE1) == ProfileSet{{4, 4}};
      if (*t <= half) ok = ok && ne(ExtensionClass::kE2) == ProfileSet{{3, 3}};
    }
    const auto e1 = build_extension(ExtensionSpec::make(ExtensionClass::kE1, half), pd).at(4, 4);
    const auto e2 = build_extension(ExtensionSpec::make(ExtensionClass::kE2, half), pd).at(3, 3);
    ok = ok && classic.apply(e1.u1) == Rational(9, 4) && classic.apply(e1.u2) == Rational(9, 4) &&
         classic.apply(e2.u1) == Rational(9, 4) && classic.apply(e2.u2) == Rational(9, 4);
    d = {{"t_points", points}, {"E1_payoff", classic.apply(e1.u1).str()}, {"E2_payoff", classic.apply(e2.u1).str()}};
    return ok;
  }));

  out.push_back(detail::timed(6, "predicate/oracle sweep", [&](nlohmann::json& d) {
    bool ok = true;
    d = nlohmann::json::array();
    for (ExtensionClass id : kAllClasses) {
      const MismatchReport r = sweep_verify(id, GridSpec::defaults(id));
      d.push_back(to_json(r));
      ok = ok && r.ok();
    }
    return ok;
  }));

  out.push_back(detail::timed(7, "EWL engine", [&](nlohmann::json& d) {
    const auto& basis = ewl::entangled_basis();
    double ortho = 0.0;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b)
        ortho = std::max(ortho, std::abs(ewl::inner(basis[a], basis[b]) - ewl::Complex(a == b ? 1.0 : 0.0)));
    std::mt19937_64 rng(seed);
    const BimatrixGame g = gamma_game(pd);
    double norm = 0.0;
    bool symmetric = true;
    for (int k = 0; k < 1000; ++k) {
      const auto s1 = random_strategy(rng), s2 = random_strategy(rng);
      norm = std::max(norm, std::abs(ewl::outcome_distribution(ewl::unitary(s1), ewl::unitary(s2)).sum() - 1.0));
      symmetric = symmetric && ewl::symmetry_check(g, s1, s2);
    }
    const DualPathResult dual = check_ewl_dual_path(1000, ewl::kRejectTolerance, seed);
    d = {{"seed", seed}, {"orthonormality", ortho}, {"normalization", norm},
         {"dual_path", dual.max_deviation}, {"symmetric", symmetric}};
    return ortho <= 1e-12 && norm <= 1e-12 && dual.passed() && symmetric;
  }));

  out.push_back(detail::timed(8, "affine invariance", [&](nlohmann::json& d) {
    std::mt19937_64 rng(seed);
    bool ok = true;
    double ewl_dev = 0.0;
    for (int k = 0; k < 100; ++k) {
      std::vector<PayoffPair<Rational>> cells;
      for (int c = 0; c < 16; ++c) cells.push_back({detail::random_rational(rng), detail::random_rational(rng)});
      const BimatrixGame g(4, 4, std::move(cells));
      Rational lambda = abs(detail::random_rational(rng)) + Rational(1, 7);
      const Rational mu = detail::random_rational(rng);
      ok = ok && check_affine_ne_invariance(g, lambda, mu);
      const BimatrixGame base = gamma_game(pd);
      const auto s1 = random_strategy(rng), s2 = random_strategy(rng);
      const auto v = ewl::ewl_payoffs(base, s1, s2, ewl::PayoffMethod::kBasis);
      const auto w = ewl::ewl_payoffs(affine_transform(base, lambda, mu), s1, s2, ewl::PayoffMethod::kBasis);
      ewl_dev = std::max({ewl_dev, std::abs(w.u1 - (lambda.to_double() * v.u1 + mu.to_double())),
                          std::abs(w.u2 - (lambda.to_double() * v.u2 + mu.to_double()))});
    }
    d = {{"seed", seed}, {"games", 100}, {"ewl_max_deviation", ewl_dev}};
    return ok && ewl_dev <= 1e-9;
  }));

  out.push_back(detail::timed(9, "Pareto gap", [&](nlohmann::json& d) {
    std::optional<Rational> best;
    std::string where;
    for (ExtensionClass id : kAllClasses) {
      const Rational step = GridSpec::defaults(id).param_step;
      for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
          const ExtremalResult r = max_equal_payoff(id, pd, {i, j}, step);
          if (!r.found) continue;
          // Irrational optima are only known approximately; they never win here.
          const Rational v = r.payoff ? *r.payoff : Rational::from_double(r.payoff_value);
          if (!best || v > *best) {
            best = v;
            where = std::string(to_string(id)) + " " + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
          }
        }
    }
    const BimatrixGame g = gamma_game(pd);
    Rational pareto = g.at(1, 1).u1;  // the best equal Pareto-optimal payoff
    for (const auto& s : pareto_optimal_profiles(g))
      if (g.at(s).u1 == g.at(s).u2 && g.at(s).u1 > pareto) pareto = g.at(s).u1;
    const Rational classical = g.at(2, 2).u1;
    const Rational b = classic.apply(best.value_or(Rational(0)));
    d = {{"best_equal_ne_payoff", b.str()}, {"attained_by", where},
         {"pareto", classic.apply(pareto).str()}, {"classical", classic.apply(classical).str()}};
    return best && b == Rational(5, 2) && b < classic.apply(pareto) && b > classic.apply(classical);
  }));
  return out;
}

inline nlohmann::json to_json(const std::vector<CheckResult>& checks) {
  nlohmann::json arr = nlohmann::json::array();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.passed;
    arr.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed},
                   {"seconds", c.seconds}, {"detail", c.detail}});
  }
  return {{"passed", all}, {"checks", std::move(arr)}};
}

}  // namespace ewlpd

#endif  // EWLPD_REPORT_HPP_
