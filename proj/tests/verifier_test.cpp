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

#include "ewlpd/figures.hpp"
#include "ewlpd/verifier.hpp"
#include "oracle.hpp"

namespace {

using ewlpd::ExtensionClass;
using ewlpd::GridSpec;
using ewlpd::NormalizedPD;
using ewlpd::Rational;

TEST(GridTest, DefaultSizes) {
  EXPECT_EQ(ewlpd::pd_grid(GridSpec::defaults(ExtensionClass::kB)).size(), 126u);
  EXPECT_EQ(ewlpd::param_grid(ExtensionClass::kA1, Rational(1, 32)).size(), 33u);
  EXPECT_EQ(ewlpd::param_grid(ExtensionClass::kC, Rational(1, 64)).size(), 63u);
  EXPECT_EQ(ewlpd::param_grid(ExtensionClass::kB, Rational(1, 64)).size(), 1u);
  EXPECT_THROW(ewlpd::param_grid(ExtensionClass::kC, Rational(0)), std::invalid_argument);
  for (const auto& pd : ewlpd::pd_grid(GridSpec::defaults(ExtensionClass::kB)))
    EXPECT_TRUE(pd.p() < pd.r() && pd.r() > Rational(1, 2));
}

TEST(SweepTest, CoarseSweepsAgreeForEveryClass) {
  for (ExtensionClass id : ewlpd::kAllClasses) {
    GridSpec grid = GridSpec::defaults(id);
    grid.p_step = grid.r_step = Rational(1, 10);
    grid.param_step = Rational(1, 16);
    const auto report = ewlpd::sweep_verify(id, grid);
    EXPECT_TRUE(report.ok()) << to_string(id) << " " << ewlpd::to_json(report).dump();
    EXPECT_EQ(report.points, report.all_points.size());
  }
}

TEST(SweepTest, FixedGameAndDeterminism) {
  GridSpec grid = GridSpec::defaults(ExtensionClass::kA1);
  grid.fixed_pd = ewlpd::standard_pd();
  const auto a = ewlpd::sweep_verify(ExtensionClass::kA1, grid);
  const auto b = ewlpd::sweep_verify(ExtensionClass::kA1, grid);
  EXPECT_EQ(a.points, 33u);
  EXPECT_EQ(ewlpd::to_json(a).dump(), ewlpd::to_json(b).dump());
  EXPECT_EQ(ewlpd::to_csv(a), ewlpd::to_csv(b));
  const std::string csv = ewlpd::to_csv(a);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "class,p,r,param,profile,predicted,oracle");
  EXPECT_NE(csv.find("A1,1/5,3/5,1/2,\"(2,3)\",1,1"), std::string::npos);
}

TEST(SweepTest, ReportsEveryPointAgainstTheOracle) {
  GridSpec grid = GridSpec::defaults(ExtensionClass::kE1);
  grid.p_step = grid.r_step = Rational(1, 8);
  const auto report = ewlpd::sweep_verify(ExtensionClass::kE1, grid);
  for (const auto& pt : report.all_points) {
    const auto g = ewlpd::build_extension(ewlpd::ExtensionSpec::make(ExtensionClass::kE1, pt.param), pt.pd);
    EXPECT_EQ(oracle::as_pairs(pt.oracle), oracle::pure_ne(oracle::table_of(g)));
  }
}

TEST(StructureTest, SymmetryAndAffineChecks) {
  for (ExtensionClass id : ewlpd::kAllClasses) {
    std::optional<Rational> x;
    if (ewlpd::param_kind(id) != ewlpd::ParamKind::kNone) x = Rational(1, 3);
    EXPECT_TRUE(ewlpd::check_extension_symmetry(id, ewlpd::standard_pd(), x));
  }
  const auto g = ewlpd::build_extension(ewlpd::ExtensionSpec::make(ExtensionClass::kB), ewlpd::standard_pd());
  EXPECT_TRUE(ewlpd::check_affine_ne_invariance(g, Rational(5), Rational(-2)));
  EXPECT_THROW(ewlpd::check_affine_ne_invariance(g, Rational(0), Rational(1)), std::invalid_argument);
}

const ewlpd::PayoffScale kClassic = ewlpd::PayoffScale::classic(ewlpd::standard_raw_pd());

TEST(ExtremalTest, A1StandardTable) {
  const NormalizedPD pd = ewlpd::standard_pd();
  const Rational step(1, 32);
  auto run = [&](int i, int j) { return ewlpd::max_equal_payoff(ExtensionClass::kA1, pd, {i, j}, step); };

  const auto r22 = run(2, 2);
  ASSERT_TRUE(r22.found);
  EXPECT_EQ(*r22.param, Rational(1));
  EXPECT_EQ(kClassic.apply(*r22.payoff), Rational(1));

  const auto r23 = run(2, 3);
  EXPECT_EQ(*r23.param, Rational(1, 2));
  EXPECT_EQ(kClassic.apply(*r23.payoff), Rational(5, 2));
  EXPECT_FALSE(r23.approximate);

  const auto r24 = run(4, 2);
  EXPECT_EQ(*r24.param, Rational(1));
  EXPECT_EQ(kClassic.apply(*r24.payoff), Rational(1));

  const auto r33 = run(3, 3);
  EXPECT_TRUE(r33.approximate);
  EXPECT_NEAR(r33.param_value, (3.0 - std::sqrt(3.0)) / 6.0, 1e-6);
  EXPECT_NEAR(kClassic.apply(r33.payoff_value), 5.0 / 3.0, 1e-9);

  const auto r44 = run(4, 4);
  EXPECT_TRUE(r44.approximate);
  EXPECT_NEAR(r44.param_value, (3.0 + std::sqrt(6.0)) / 6.0, 1e-6);
  EXPECT_NEAR(kClassic.apply(r44.payoff_value), 5.0 / 3.0, 1e-9);

  EXPECT_FALSE(run(3, 4).found);
  EXPECT_FALSE(run(1, 1).found);
}

TEST(ExtremalTest, RefinedOptimumStaysInsideTheRegion) {
  const NormalizedPD pd = ewlpd::standard_pd();
  for (int k : {3, 4}) {
    const auto r = ewlpd::max_equal_payoff(ExtensionClass::kA1, pd, {k, k}, Rational(1, 32));
    EXPECT_TRUE(ewlpd::ne_condition({ExtensionClass::kA1, {k, k}, pd, Rational::from_double(r.param_value)}).is_ne);
  }
}

TEST(ExtremalTest, OpenEndpointGivesSupremum) {
  const auto r = ewlpd::max_equal_payoff(ExtensionClass::kC, ewlpd::standard_pd(), {3, 2}, Rational(1, 64));
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(r.is_supremum_only);
  EXPECT_EQ(*r.param, Rational(1));
  EXPECT_EQ(kClassic.apply(*r.payoff), Rational(5, 2));
  EXPECT_EQ(*r.approach_param, Rational(1) - ewlpd::pow2_inverse(20));
  EXPECT_LT(kClassic.apply(*r.approach_payoff), Rational(5, 2));
  EXPECT_NEAR(kClassic.apply(r.approach_payoff->to_double()), 2.5, 5e-7);
}

TEST(ExtremalTest, BoundaryOnGridStaysExact) {
  const NormalizedPD pd = ewlpd::standard_pd();
  const auto e1 = ewlpd::max_equal_payoff(ExtensionClass::kE1, pd, {4, 4}, Rational(1, 64));
  EXPECT_FALSE(e1.approximate);
  EXPECT_FALSE(e1.is_supremum_only);
  EXPECT_EQ(*e1.param, Rational(1, 2));
  EXPECT_EQ(kClassic.apply(*e1.payoff), Rational(9, 4));
  const auto e2 = ewlpd::max_equal_payoff(ExtensionClass::kE2, pd, {3, 3}, Rational(1, 64));
  EXPECT_EQ(*e2.param, Rational(1, 2));
  EXPECT_EQ(kClassic.apply(*e2.payoff), Rational(9, 4));
  const auto d1 = ewlpd::max_equal_payoff(ExtensionClass::kD1, pd, {2, 2}, Rational(1, 64));
  EXPECT_FALSE(d1.is_supremum_only);
  EXPECT_EQ(kClassic.apply(*d1.payoff), Rational(1));
  const auto b = ewlpd::max_equal_payoff(ExtensionClass::kB, pd, {3, 4}, Rational(1, 64));
  EXPECT_FALSE(b.has_param);
  EXPECT_EQ(kClassic.apply(*b.payoff), Rational(9, 4));
}

TEST(FigureTest, ParameterAxisSeries) {
  ewlpd::FigureRequest req;
  req.scale = kClassic;
  const auto series = ewlpd::figure_data(req);
  ASSERT_EQ(series.size(), 16u);
  const auto& s22 = series[5];
  EXPECT_EQ(s22.label, "(2,2)");
  ASSERT_EQ(s22.points.size(), 1u);
  EXPECT_EQ(s22.points[0].x, Rational(1));
  EXPECT_EQ(s22.points[0].payoff1, Rational(1));
  EXPECT_TRUE(series[11].points.empty());  // (3,4)
  for (const auto& s : series) {
    for (std::size_t k = 1; k < s.points.size(); ++k) EXPECT_LT(s.points[k - 1].x, s.points[k].x);
    for (const auto& p : s.points)
      EXPECT_TRUE(ewlpd::ne_condition({ExtensionClass::kA1, s.profile, ewlpd::standard_pd(), p.x}).is_ne);
  }
  req.id = ExtensionClass::kB;
  EXPECT_THROW(ewlpd::figure_data(req), std::invalid_argument);
}

TEST(FigureTest, PayoffGridAxis) {
  ewlpd::FigureRequest req;
  req.axis = ewlpd::FigureAxis::kPR;
  req.scale = kClassic;
  const auto series = ewlpd::figure_data(req);
  bool seen = false;
  for (const auto& s : series) {
    EXPECT_LE(s.profile.row, s.profile.col);
    for (const auto& p : s.points) {
      const auto pd = NormalizedPD::make(*p.y / Rational(5), p.x / Rational(5));
      EXPECT_TRUE(ewlpd::ne_condition({ExtensionClass::kA1, s.profile, pd, s.param}).is_ne);
      if (s.profile == ewlpd::StrategyProfile{2, 3} && p.x == Rational(1) && *p.y == Rational(3)) {
        EXPECT_EQ(p.payoff1, Rational(5, 2));
        seen = true;
      }
    }
  }
  EXPECT_TRUE(seen);
  const std::string csv = ewlpd::to_csv(series, req.axis);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "profile,P,R,payoff1,payoff2");
}

}  // namespace
