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

// Cross-validation of the closed-form NE regions against brute-force
// enumeration, plus the structural, affine and EWL dual-path checks and the
// maximal-equal-payoff search.

#ifndef EWLPD_VERIFIER_HPP_
#define EWLPD_VERIFIER_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ewlpd/ewl.hpp"
#include "ewlpd/extensions.hpp"
#include "ewlpd/game.hpp"
#include "ewlpd/regions.hpp"

namespace ewlpd {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// ---------------------------------------------------------------------------
// Grids

struct GridSpec {
  Rational p_step{1, 20};
  Rational r_step{1, 20};
  Rational param_step{1, 64};
  std::optional<NormalizedPD> fixed_pd;  // sweep a single game instead of the (p, r) simplex

  // p, r step 1/20; a step 1/32; t step 1/64.
  static GridSpec defaults(ExtensionClass id) {
    GridSpec g;
    g.param_step = param_kind(id) == ParamKind::kA ? Rational(1, 32) : Rational(1, 64);
    return g;
  }

  void validate() const {
    if (p_step.sign() <= 0 || r_step.sign() <= 0 || param_step.sign() <= 0)
      throw std::invalid_argument("grid: steps must be positive");
  }
};

// Points k * r_step in (1/2, 1) and k * p_step in (0, r), r-major.
inline std::vector<NormalizedPD> pd_grid(const GridSpec& grid) {
  grid.validate();
  if (grid.fixed_pd) return {*grid.fixed_pd};
  std::vector<NormalizedPD> out;
  const Rational half(1, 2), one(1);
  for (Rational r = grid.r_step; r < one; r += grid.r_step) {
    if (r <= half) continue;
    for (Rational p = grid.p_step; p < r; p += grid.p_step) out.push_back(NormalizedPD::make(r, p));
  }
  return out;
}

// a: k * step in [0, 1]; t: k * step in (0, 1); B: a single empty entry.
inline std::vector<std::optional<Rational>> param_grid(ExtensionClass id, const Rational& step) {
  if (step.sign() <= 0) throw std::invalid_argument("grid: parameter step must be positive");
  std::vector<std::optional<Rational>> out;
  switch (param_kind(id)) {
    case ParamKind::kNone: out.emplace_back(); break;
    case ParamKind::kA:
      for (Rational a(0); a <= Rational(1); a += step) out.emplace_back(a);
      break;
    case ParamKind::kT:
      for (Rational t = step; t < Rational(1); t += step) out.emplace_back(t);
      break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweep

struct SweepPoint {
  NormalizedPD pd;
  std::optional<Rational> param;
  ProfileSet predicted;
  ProfileSet oracle;

  bool agrees() const { return predicted == oracle; }
};

struct MismatchReport {
  ExtensionClass id = ExtensionClass::kB;
  std::size_t points = 0;
  std::vector<SweepPoint> mismatches;
  std::vector<SweepPoint> all_points;  // grid order; feeds the CSV summary

  bool ok() const { return mismatches.empty(); }
};

inline MismatchReport sweep_verify(ExtensionClass id, const GridSpec& grid) {
  MismatchReport report;
  report.id = id;
  const auto pds = pd_grid(grid);
  const auto params = param_grid(id, grid.param_step);
  if (pds.empty() || params.empty()) throw std::invalid_argument("sweep: empty grid");
  for (const auto& pd : pds)
    for (const auto& param : params) {
      SweepPoint pt{pd, param, ne_region_table(id, pd, param),
                    pure_nash_equilibria(build_extension(ExtensionSpec::make(id, param), pd))};
      ++report.points;
      if (!pt.agrees()) report.mismatches.push_back(pt);
      report.all_points.push_back(std::move(pt));
    }
  return report;
}

// ---------------------------------------------------------------------------
// Structural and invariance checks

inline bool check_extension_symmetry(ExtensionClass id, const NormalizedPD& pd,
                                     const std::optional<Rational>& param) {
  return is_symmetric(build_extension(ExtensionSpec::make(id, param), pd));
}

inline bool check_affine_ne_invariance(const BimatrixGame& game, const Rational& lambda,
                                       const Rational& mu) {
  return pure_nash_equilibria(affine_transform(game, lambda, mu)) == pure_nash_equilibria(game);
}

struct DualPathResult {
  std::size_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  double tolerance = 0.0;
  double max_deviation = 0.0;

  bool passed() const { return max_deviation <= tolerance; }
};

inline ewl::StrategyTriple random_strategy(std::mt19937_64& rng) {
  // Half-open ranges keep alpha, beta strictly below 2 pi.
  std::uniform_real_distribution<double> theta(0.0, ewl::kPi);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * ewl::kPi);
  return {theta(rng), angle(rng), angle(rng)};
}

inline double dual_path_deviation(const BimatrixGame& game2x2, const ewl::StrategyTriple& s1,
                                  const ewl::StrategyTriple& s2) {
  const auto basis = ewl::ewl_payoffs(game2x2, s1, s2, ewl::PayoffMethod::kBasis);
  const auto closed = ewl::ewl_payoffs(game2x2, s1, s2, ewl::PayoffMethod::kClosedForm);
  return std::max(std::abs(basis.u1 - closed.u1), std::abs(basis.u2 - closed.u2));
}

// Max |basis - closed form| over random strategy pairs on Γ(3/5, 1/5).
inline DualPathResult check_ewl_dual_path(std::size_t samples, double tolerance,
                                          std::uint64_t seed = kDefaultSeed) {
  if (samples == 0) throw std::invalid_argument("check_ewl_dual_path: samples must be >= 1");
  const BimatrixGame g = gamma_game(standard_pd());
  std::mt19937_64 rng(seed);
  DualPathResult out{samples, seed, tolerance, 0.0};
  for (std::size_t k = 0; k < samples; ++k) {
    const auto s1 = random_strategy(rng);
    const auto s2 = random_strategy(rng);
    out.max_deviation = std::max(out.max_deviation, dual_path_deviation(g, s1, s2));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Maximal equal NE payoff

struct ExtremalResult {
  ExtensionClass id = ExtensionClass::kB;
  StrategyProfile profile;
  bool found = false;               // false: no equal-payoff NE on the grid
  bool has_param = false;           // false for class B
  std::optional<Rational> param;    // exact when !approximate
  double param_value = 0.0;
  std::optional<Rational> payoff;   // normalized units; exact when !approximate
  double payoff_value = 0.0;
  bool approximate = false;         // boundary refined numerically (irrational optimum)
  bool is_supremum_only = false;    // approached at an open endpoint, not attained
  std::optional<Rational> approach_param;   // closest probe to the endpoint
  std::optional<Rational> approach_payoff;
};

namespace detail {

struct ProbeValue {
  bool in_region = false;
  bool equal = false;
  Rational payoff;
};

// Endpoints outside the open t domain are evaluated as limits (no region test).
inline ProbeValue probe(ExtensionClass id, const NormalizedPD& pd, const StrategyProfile& s,
                        const Rational& x) {
  ProbeValue v;
  v.in_region = param_in_domain(id, x) && ne_condition({id, s, pd, x}).is_ne;
  const auto cell = build_unchecked(id, x, pd).at(s);
  v.equal = cell.u1 == cell.u2;
  v.payoff = cell.u1;
  return v;
}

// Searches from an inside point toward an outside one for the best in-region
// equal payoff. Payoff increases toward the region boundary along the segment,
// so the objective is unimodal (rising, then -inf outside the region).
inline std::pair<Rational, Rational> golden_refine(ExtensionClass id, const NormalizedPD& pd,
                                                   const StrategyProfile& s, const Rational& inside,
                                                   const Rational& outside) {
  const double x0 = inside.to_double(), x1 = outside.to_double();
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  Rational best_x = inside;
  Rational best_payoff = probe(id, pd, s, inside).payoff;
  auto f = [&](double u) {
    const Rational x = Rational::from_double(x0 + u * (x1 - x0));
    const ProbeValue v = probe(id, pd, s, x);
    if (!v.in_region || !v.equal) return -std::numeric_limits<double>::infinity();
    if (v.payoff > best_payoff) {
      best_payoff = v.payoff;
      best_x = x;
    }
    return v.payoff.to_double();
  };
  double a = 0.0, b = 1.0;
  double c = b - (b - a) * inv_phi, d = a + (b - a) * inv_phi;
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) * std::abs(x1 - x0) > 1e-15; ++it) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = f(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
    }
  }
  return {best_x, best_payoff};
}

}  // namespace detail

// Best NE payoff with u1 == u2 for one profile, scanning the parameter grid
// and refining toward region boundaries or open endpoints.
inline ExtremalResult max_equal_payoff(ExtensionClass id, const NormalizedPD& pd,
                                       const StrategyProfile& profile, const Rational& param_step) {
  ExtremalResult out;
  out.id = id;
  out.profile = profile;
  if (param_kind(id) == ParamKind::kNone) {
    const auto cell = build_extension(ExtensionSpec::make(id), pd).at(profile);
    if (ne_condition({id, profile, pd, std::nullopt}).is_ne && cell.u1 == cell.u2) {
      out.found = true;
      out.payoff = cell.u1;
      out.payoff_value = cell.u1.to_double();
    }
    return out;
  }

  const auto params = param_grid(id, param_step);
  std::vector<Rational> xs;
  for (const auto& x : params) xs.push_back(*x);
  std::vector<detail::ProbeValue> values;
  values.reserve(xs.size());
  for (const auto& x : xs) values.push_back(detail::probe(id, pd, profile, x));

  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < xs.size(); ++k)
    if (values[k].in_region && values[k].equal && (!best || values[k].payoff > values[*best].payoff))
      best = k;
  out.has_param = true;
  if (!best) return out;

  out.found = true;
  out.param = xs[*best];
  out.param_value = xs[*best].to_double();
  out.payoff = values[*best].payoff;
  out.payoff_value = values[*best].payoff.to_double();

  const Rational& best_payoff = values[*best].payoff;
  double best_value = out.payoff_value;
  for (int dir : {-1, +1}) {
    const long nb = static_cast<long>(*best) + dir;
    if (nb >= 0 && nb < static_cast<long>(xs.size())) {
      const auto& v = values[static_cast<std::size_t>(nb)];
      if (v.in_region || !v.equal || !(v.payoff > best_payoff)) continue;
      auto [x, payoff] = detail::golden_refine(id, pd, profile, xs[*best], xs[static_cast<std::size_t>(nb)]);
      if (x == xs[*best] || !(payoff.to_double() > best_value)) continue;
      best_value = payoff.to_double();
      out.approximate = true;
      out.param.reset();
      out.payoff.reset();
      out.param_value = x.to_double();
      out.payoff_value = best_value;
      continue;
    }
    // Grid edge: only an open endpoint can hide a larger supremum.
    if (param_kind(id) != ParamKind::kT) continue;
    const Rational endpoint = dir < 0 ? Rational(0) : Rational(1);
    const detail::ProbeValue limit = detail::probe(id, pd, profile, endpoint);
    if (!limit.equal || !(limit.payoff > best_payoff)) continue;
    bool approaches = true;
    Rational last_payoff = best_payoff;
    Rational x_probe;
    detail::ProbeValue v;
    for (unsigned k = 1; k <= 20; ++k) {
      x_probe = dir < 0 ? pow2_inverse(k) : Rational(1) - pow2_inverse(k);
      if ((dir < 0 && x_probe >= xs[*best]) || (dir > 0 && x_probe <= xs[*best])) continue;
      v = detail::probe(id, pd, profile, x_probe);
      if (!v.in_region || !v.equal || v.payoff < last_payoff) { approaches = false; break; }
      last_payoff = v.payoff;
    }
    if (!approaches || !(limit.payoff.to_double() > best_value)) continue;
    best_value = limit.payoff.to_double();
    out.approximate = false;
    out.is_supremum_only = true;
    out.param = endpoint;
    out.param_value = endpoint.to_double();
    out.payoff = limit.payoff;
    out.payoff_value = best_value;
    out.approach_param = x_probe;
    out.approach_payoff = v.payoff;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::json to_json(const SweepPoint& pt) {
  nlohmann::json j{{"p", pt.pd.p().str()}, {"r", pt.pd.r().str()},
                   {"predicted", to_json(pt.predicted)}, {"oracle", to_json(pt.oracle)}};
  j["param"] = pt.param ? nlohmann::json(pt.param->str()) : nlohmann::json(nullptr);
  return j;
}

inline nlohmann::json to_json(const MismatchReport& report) {
  nlohmann::json details = nlohmann::json::array();
  for (const auto& m : report.mismatches) details.push_back(to_json(m));
  return {{"class", std::string(to_string(report.id))},
          {"points", report.points},
          {"mismatches", report.mismatches.size()},
          {"details", std::move(details)}};
}

// class,p,r,param,profile,predicted,oracle, one row per profile in either set.
inline std::string to_csv(const MismatchReport& report) {
  std::ostringstream os;
  os << "class,p,r,param,profile,predicted,oracle\n";
  for (const auto& pt : report.all_points) {
    ProfileSet both = pt.predicted;
    both.insert(both.end(), pt.oracle.begin(), pt.oracle.end());
    std::sort(both.begin(), both.end());
    both.erase(std::unique(both.begin(), both.end()), both.end());
    auto has = [](const ProfileSet& s, const StrategyProfile& x) {
      return std::binary_search(s.begin(), s.end(), x);
    };
    for (const auto& s : both)
      os << to_string(report.id) << ',' << pt.pd.p() << ',' << pt.pd.r() << ','
         << (pt.param ? pt.param->str() : std::string()) << ",\"(" << s.row << ',' << s.col << ")\","
         << has(pt.predicted, s) << ',' << has(pt.oracle, s) << '\n';
  }
  return os.str();
}

// Payoffs in normalized units, or mapped back through x -> x (T - S) + S.
struct PayoffScale {
  Rational factor{1};
  Rational offset{0};

  static PayoffScale classic(const RawPD& raw) { return {raw.T - raw.S, raw.S}; }
  Rational apply(const Rational& x) const { return x * factor + offset; }
  double apply(double x) const { return x * factor.to_double() + offset.to_double(); }
};

inline nlohmann::json to_json(const ExtremalResult& r, const PayoffScale& scale = {}) {
  nlohmann::json j{{"class", std::string(to_string(r.id))},
                   {"profile", to_json(r.profile)},
                   {"found", r.found}};
  if (!r.found) {
    j["note"] = "no NE on grid";
    return j;
  }
  if (r.has_param) {
    j["param"] = r.param ? nlohmann::json(r.param->str()) : nlohmann::json(nullptr);
    j["param_value"] = r.param_value;
  }
  j["payoff"] = r.payoff ? nlohmann::json(scale.apply(*r.payoff).str()) : nlohmann::json(nullptr);
  j["payoff_value"] = scale.apply(r.payoff_value);
  j["approximate"] = r.approximate;
  j["is_supremum_only"] = r.is_supremum_only;
  if (r.approach_param) {
    j["approach_param"] = r.approach_param->str();
    j["approach_payoff"] = scale.apply(*r.approach_payoff).str();
    j["approach_payoff_value"] = scale.apply(*r.approach_payoff).to_double();
  }
  return j;
}

}  // namespace ewlpd

#endif  // EWLPD_VERIFIER_HPP_
