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

// Closed-form pure-NE regions of the extension classes over (p, r, param).
//
// Every condition is a finite disjunction ("branch 1", "branch 2", ...) of
// polynomial inequalities with rational coefficients. Bounds that are usually
// written with square roots are evaluated through the quadratic they solve,
// so the predicates never leave exact arithmetic and boundary points such as
// a = 1/4, t = 1/2 or p = (1 + r)/3 are decided exactly.
//
// All extension games are symmetric, so (i, j) and (j, i) share one region.
// Profiles in the first row or column are never equilibria.

#ifndef EWLPD_REGIONS_HPP_
#define EWLPD_REGIONS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "ewlpd/extensions.hpp"
#include "ewlpd/game.hpp"

namespace ewlpd {

struct RegionQuery {
  ExtensionClass id = ExtensionClass::kB;
  StrategyProfile profile;
  NormalizedPD pd = standard_pd();
  std::optional<Rational> param;
};

struct RegionVerdict {
  bool is_ne = false;
  std::string active_branch = "none";  // "branch k" when is_ne
};

namespace detail {

// Each returns the 1-based index of the first satisfied branch, 0 if none.
// Profiles are passed with row <= col.

inline int a1_branch(int i, int j, const Rational& p, const Rational& r, const Rational& a) {
  const Rational one(1), half(1, 2), quarter(1, 4), sixth(1, 6);
  if (i == 1) return 0;
  if (i == 2 && j == 2) return a == one ? 1 : 0;

  if (i == 2 && j == 3) {
    const Rational lo = p / (one + p - r);
    const Rational hi = (r - one) / (r - one - p);
    const Rational r3 = one - Rational(3) * p;
    const bool in_lo_hi = lo <= a && a <= hi;
    if (p <= sixth && r <= r3 && quarter <= a && a <= hi) return 1;
    if (p <= sixth && r3 < r && r < one - p && in_lo_hi) return 2;
    if (p <= sixth && r == one - p && a == hi) return 3;
    if (sixth < p && p < half && r <= one - p && in_lo_hi) return 4;
    return 0;
  }

  if (i == 2 && j == 4) {
    // Above r = (3 - p)/3 the interval is [(1-r)/(1+p-r), 1/4] plus the
    // isolated point a = 1: the diagonal entry (4,4) beats (2,4) on (1/4, 1).
    const Rational k = (Rational(3) - p) / Rational(3);
    const Rational lo = (one - r) / (one + p - r);
    if (r < k && a == one) return 1;
    if (r == k && (a == quarter || a == one)) return 2;
    if (r > k && ((lo <= a && a <= quarter) || a == one)) return 3;
    return 0;
  }

  if (i == 3 && j == 3) {
    // a >= 1/2 - sqrt(p/(1+p-r))/2  <=>  4a²(r-p-1) - 4a(r-p-1) + r - 1 >= 0 (for a <= 1/2).
    const Rational c = r - p - one;
    const bool poly = Rational(4) * a * a * c - Rational(4) * a * c + r - one >= Rational(0);
    const Rational r3 = one - Rational(3) * p;
    if (p < sixth && r == r3 && a == quarter) return 1;
    if (p < sixth && r > r3 && poly && a <= quarter) return 2;
    if (sixth <= p && p <= half && poly && a <= quarter) return 3;
    if (p > half && poly && a <= quarter) return 4;
    return 0;
  }

  if (i == 3 && j == 4) {
    return (a == quarter && r <= one - Rational(3) * p && p < sixth) ? 1 : 0;
  }

  if (i == 4 && j == 4) {
    // |a - 1/2| >= sqrt((1-r)/(p-r+1))/2  <=>  4a²(p-r+1) - 4a(p-r+1) + p >= 0.
    const Rational m = p - r + one;
    const bool poly = Rational(4) * a * a * m - Rational(4) * a * m + p >= Rational(0);
    const bool upper = poly && a >= half;
    const bool lower = poly && quarter <= a && a <= half;
    const Rational three_quarters(3, 4);
    const Rational p_edge = Rational(3) - Rational(3) * r;
    if (r <= three_quarters && upper) return 1;
    if (r > three_quarters && p < p_edge && upper) return 2;
    if (r > three_quarters && p == p_edge && (a == quarter || upper)) return 3;
    if (r > three_quarters && p > p_edge && (lower || upper)) return 4;
    return 0;
  }
  return 0;
}

inline int b_branch(int i, int j, const Rational& p, const Rational& r) {
  if (i == 1) return 0;
  const Rational edge = (Rational(1) + r) / Rational(3);
  if (i == 2 && j == 2) return p >= edge ? 1 : 0;
  if (i == 2) return p <= edge ? 1 : 0;
  return 1;
}

inline int c_branch(int i, int j, const Rational& p, const Rational& r, const Rational& t) {
  const Rational one(1), half(1, 2);
  if (i == 1) return 0;
  const Rational edge = (one + r) / Rational(3);
  if (i == 2 && j == 2) {
    const Rational s = t * (p + r - one);
    if (p > half && r - p <= s && s <= Rational(2) * p - one) return 1;
    if (t == half && p == edge) return 2;
    return 0;
  }
  if (i == 2 && j == 3) {
    if (p <= one - r && t >= half) return 1;
    if (t == half && one - r < p && p <= edge) return 2;
    return 0;
  }
  if (i == 2 && j == 4) {
    if (p <= one - r && t <= half) return 1;
    if (t == half && one - r < p && p <= edge) return 2;
    return 0;
  }
  return t == half ? 1 : 0;
}

inline int de_branch(ExtensionClass id, int i, int j, const Rational& t) {
  const Rational half(1, 2);
  switch (id) {
    case ExtensionClass::kD1: return (i == 2 && j == 2) ? 1 : 0;
    case ExtensionClass::kD2: return 0;
    case ExtensionClass::kE1: return (i == 4 && j == 4 && t >= half) ? 1 : 0;
    case ExtensionClass::kE2: return (i == 3 && j == 3 && t <= half) ? 1 : 0;
    default: break;
  }
  return 0;
}

inline void validate(const RegionQuery& q) {
  if (q.profile.row < 1 || q.profile.row > 4 || q.profile.col < 1 || q.profile.col > 4)
    throw std::out_of_range("region query: profile indices must lie in 1..4");
  // Reuses the parameter-presence and range rules of ExtensionSpec.
  (void)ExtensionSpec::make(q.id, q.param);
}

}  // namespace detail

inline RegionVerdict ne_condition(const RegionQuery& q) {
  detail::validate(q);
  int i = q.profile.row, j = q.profile.col;
  if (q.id == ExtensionClass::kA2) {
    // A2 is A1 with strategies 3 and 4 exchanged for both players.
    auto swap34 = [](int k) { return k == 3 ? 4 : (k == 4 ? 3 : k); };
    i = swap34(i);
    j = swap34(j);
  }
  if (i > j) std::swap(i, j);
  const Rational& p = q.pd.p();
  const Rational& r = q.pd.r();
  int branch = 0;
  switch (q.id) {
    case ExtensionClass::kA1:
    case ExtensionClass::kA2: branch = detail::a1_branch(i, j, p, r, *q.param); break;
    case ExtensionClass::kB: branch = detail::b_branch(i, j, p, r); break;
    case ExtensionClass::kC: branch = detail::c_branch(i, j, p, r, *q.param); break;
    default: branch = detail::de_branch(q.id, i, j, *q.param); break;
  }
  if (branch == 0) return {};
  return {true, "branch " + std::to_string(branch)};
}

inline ProfileSet ne_region_table(ExtensionClass id, const NormalizedPD& pd,
                                  const std::optional<Rational>& param) {
  ProfileSet out;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (ne_condition({id, {i, j}, pd, param}).is_ne) out.push_back({i, j});
  return out;
}

}  // namespace ewlpd

#endif  // EWLPD_REGIONS_HPP_
