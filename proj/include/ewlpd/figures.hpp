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

// Plot-ready NE payoff series: payoff against the class parameter, or against
// the raw (P, R) payoffs at a fixed per-profile parameter.

#ifndef EWLPD_FIGURES_HPP_
#define EWLPD_FIGURES_HPP_

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ewlpd/extensions.hpp"
#include "ewlpd/regions.hpp"
#include "ewlpd/verifier.hpp"

namespace ewlpd {

enum class FigureAxis { kParam, kPR };

inline FigureAxis parse_figure_axis(std::string_view s) {
  if (s == "param") return FigureAxis::kParam;
  if (s == "PR") return FigureAxis::kPR;
  throw std::invalid_argument("unknown axis '" + std::string(s) + "' (expected param or PR)");
}

struct FigurePoint {
  Rational x;                // parameter, or P on the PR axis
  std::optional<Rational> y; // R on the PR axis
  Rational payoff1;
  Rational payoff2;
};

struct FigureSeries {
  std::string label;
  StrategyProfile profile;
  std::optional<Rational> param;  // fixed parameter (PR axis only)
  std::vector<FigurePoint> points;
};

struct FigureRequest {
  ExtensionClass id = ExtensionClass::kA1;
  FigureAxis axis = FigureAxis::kParam;
  RawPD raw = standard_raw_pd();        // reference game; PR axis keeps its T and S = 0
  std::optional<Rational> step;         // parameter step (param) or P/R step as a fraction of T (PR)
  PayoffScale scale;
};

namespace detail {

inline std::string profile_label(const StrategyProfile& s) {
  return "(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")";
}

}  // namespace detail

// axis=param: one series per profile (row-major, possibly empty) of in-region
// grid points. axis=PR: one series per profile i <= j with an equal-payoff NE
// at the reference game, evaluated over the (P, R) grid at that profile's
// extremal parameter.
inline std::vector<FigureSeries> figure_data(const FigureRequest& req) {
  const NormalizedPD ref = normalize(req.raw);
  std::vector<FigureSeries> out;
  if (req.axis == FigureAxis::kParam) {
    if (param_kind(req.id) == ParamKind::kNone)
      throw std::invalid_argument("figure-data: class " + std::string(to_string(req.id)) +
                                  " has no parameter for axis=param");
    const Rational step = req.step.value_or(GridSpec::defaults(req.id).param_step);
    const auto xs = param_grid(req.id, step);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        FigureSeries s{detail::profile_label({i, j}), {i, j}, std::nullopt, {}};
        for (const auto& x : xs) {
          if (!ne_condition({req.id, {i, j}, ref, x}).is_ne) continue;
          const auto cell = build_extension(ExtensionSpec::make(req.id, x), ref).at(i, j);
          s.points.push_back({*x, std::nullopt, req.scale.apply(cell.u1), req.scale.apply(cell.u2)});
        }
        out.push_back(std::move(s));
      }
    return out;
  }

  if (req.raw.S != Rational(0))
    throw std::invalid_argument("figure-data: axis=PR requires S = 0");
  const Rational T = req.raw.T;
  GridSpec grid = GridSpec::defaults(req.id);
  if (req.step) grid.p_step = grid.r_step = *req.step;
  const auto pds = pd_grid(grid);
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) {
      std::optional<Rational> param;
      if (param_kind(req.id) != ParamKind::kNone) {
        const ExtremalResult best = max_equal_payoff(req.id, ref, {i, j}, grid.param_step);
        if (!best.found) continue;
        if (best.is_supremum_only) param = best.approach_param;
        else if (best.param) param = best.param;
        else param = Rational::from_double(best.param_value);
      } else if (!max_equal_payoff(req.id, ref, {i, j}, grid.param_step).found) {
        continue;
      }
      FigureSeries s{detail::profile_label({i, j}), {i, j}, param, {}};
      for (const auto& pd : pds) {
        if (!ne_condition({req.id, {i, j}, pd, param}).is_ne) continue;
        const auto cell = build_extension(ExtensionSpec::make(req.id, param), pd).at(i, j);
        s.points.push_back({pd.p() * T, pd.r() * T, req.scale.apply(cell.u1), req.scale.apply(cell.u2)});
      }
      out.push_back(std::move(s));
    }
  return out;
}

inline nlohmann::json to_json(const std::vector<FigureSeries>& series) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : series) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s.points) {
      nlohmann::json pt{{"x", p.x.str()}, {"payoff1", p.payoff1.str()}, {"payoff2", p.payoff2.str()}};
      if (p.y) {
        pt = {{"P", p.x.str()}, {"R", p.y->str()}, {"payoff1", p.payoff1.str()},
              {"payoff2", p.payoff2.str()}};
      }
      pts.push_back(std::move(pt));
    }
    nlohmann::json j{{"label", s.label}, {"profile", to_json(s.profile)}, {"points", std::move(pts)}};
    if (s.param) j["param"] = s.param->str();
    arr.push_back(std::move(j));
  }
  return arr;
}

// profile,x,payoff1,payoff2; the PR axis writes profile,P,R,payoff1,payoff2.
inline std::string to_csv(const std::vector<FigureSeries>& series, FigureAxis axis) {
  std::ostringstream os;
  os << (axis == FigureAxis::kParam ? "profile,x,payoff1,payoff2\n" : "profile,P,R,payoff1,payoff2\n");
  for (const auto& s : series)
    for (const auto& p : s.points) {
      os << '"' << s.label << "\"," << p.x;
      if (p.y) os << ',' << *p.y;
      os << ',' << p.payoff1 << ',' << p.payoff2 << '\n';
    }
  return os.str();
}

}  // namespace ewlpd

#endif  // EWLPD_FIGURES_HPP_
