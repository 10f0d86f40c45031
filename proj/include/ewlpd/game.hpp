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

// Two-player bimatrix games over an ordered scalar (exact rationals by
// default): pure Nash equilibria, best responses, symmetry, positive affine
// transforms, Pareto optimality, and the normalized Prisoner's Dilemma.

#ifndef EWLPD_GAME_HPP_
#define EWLPD_GAME_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ewlpd/rational.hpp"
#include "json.hpp"

namespace ewlpd {

template <typename Scalar>
struct PayoffPair {
  Scalar u1{};
  Scalar u2{};

  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

// (row, col), 1-based.
struct StrategyProfile {
  int row = 1;
  int col = 1;

  StrategyProfile transposed() const { return {col, row}; }

  friend auto operator<=>(const StrategyProfile&, const StrategyProfile&) = default;
  friend std::ostream& operator<<(std::ostream& os, const StrategyProfile& s) {
    return os << '(' << s.row << ',' << s.col << ')';
  }
};

using ProfileSet = std::vector<StrategyProfile>;  // sorted row-major, no duplicates

enum class Player { kRow = 1, kColumn = 2 };

template <typename Scalar>
class BasicBimatrixGame {
 public:
  using scalar_type = Scalar;
  using cell_type = PayoffPair<Scalar>;

  BasicBimatrixGame() = default;

  BasicBimatrixGame(std::size_t rows, std::size_t cols, std::vector<cell_type> cells)
      : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("bimatrix: empty strategy set");
    if (cells_.size() != rows_ * cols_)
      throw std::invalid_argument("bimatrix: grid is not fully populated");
  }

  // Builds the game from the two payoff matrices (u1 = first, u2 = second).
  static BasicBimatrixGame from_matrices(const std::vector<std::vector<Scalar>>& first,
                                         const std::vector<std::vector<Scalar>>& second) {
    if (first.empty() || first.size() != second.size())
      throw std::invalid_argument("bimatrix: payoff matrices differ in shape");
    std::size_t cols = first.front().size();
    std::vector<cell_type> cells;
    cells.reserve(first.size() * cols);
    for (std::size_t i = 0; i < first.size(); ++i) {
      if (first[i].size() != cols || second[i].size() != cols)
        throw std::invalid_argument("bimatrix: ragged payoff matrix");
      for (std::size_t j = 0; j < cols; ++j) cells.push_back({first[i][j], second[i][j]});
    }
    return BasicBimatrixGame(first.size(), cols, std::move(cells));
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // 1-based access, matching profile notation.
  const cell_type& at(int row, int col) const { return cells_[index(row, col)]; }
  cell_type& at(int row, int col) { return cells_[index(row, col)]; }
  const cell_type& at(const StrategyProfile& s) const { return at(s.row, s.col); }

  const Scalar& u1(int row, int col) const { return at(row, col).u1; }
  const Scalar& u2(int row, int col) const { return at(row, col).u2; }

  const std::vector<cell_type>& cells() const { return cells_; }

  bool contains(const StrategyProfile& s) const {
    return s.row >= 1 && s.col >= 1 && static_cast<std::size_t>(s.row) <= rows_ &&
           static_cast<std::size_t>(s.col) <= cols_;
  }

  friend bool operator==(const BasicBimatrixGame&, const BasicBimatrixGame&) = default;

 private:
  std::size_t index(int row, int col) const {
    if (!contains({row, col})) throw std::out_of_range("bimatrix: profile index out of range");
    return static_cast<std::size_t>(row - 1) * cols_ + static_cast<std::size_t>(col - 1);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cell_type> cells_;
};

using BimatrixGame = BasicBimatrixGame<Rational>;

// Indices (1-based) maximizing the player's payoff against a fixed opponent
// strategy; ties are all reported.
template <typename Scalar>
std::vector<int> best_responses(const BasicBimatrixGame<Scalar>& game, Player player,
                                int opponent_strategy) {
  const bool row_player = player == Player::kRow;
  const int opponent_count = static_cast<int>(row_player ? game.cols() : game.rows());
  const int own_count = static_cast<int>(row_player ? game.rows() : game.cols());
  if (opponent_strategy < 1 || opponent_strategy > opponent_count)
    throw std::out_of_range("best_responses: opponent strategy " +
                            std::to_string(opponent_strategy) + " out of range");
  auto payoff = [&](int own) -> const Scalar& {
    return row_player ? game.u1(own, opponent_strategy) : game.u2(opponent_strategy, own);
  };
  const Scalar* best = &payoff(1);
  for (int k = 2; k <= own_count; ++k)
    if (payoff(k) > *best) best = &payoff(k);
  std::vector<int> out;
  for (int k = 1; k <= own_count; ++k)
    if (payoff(k) == *best) out.push_back(k);
  return out;
}

// All pure Nash equilibria (weak inequalities), row-major order.
template <typename Scalar>
ProfileSet pure_nash_equilibria(const BasicBimatrixGame<Scalar>& game) {
  const int n = static_cast<int>(game.rows());
  const int m = static_cast<int>(game.cols());
  // Column maxima of u1 and row maxima of u2, computed once.
  std::vector<Scalar> col_max(m), row_max(n);
  for (int j = 1; j <= m; ++j) {
    col_max[j - 1] = game.u1(1, j);
    for (int i = 2; i <= n; ++i)
      if (game.u1(i, j) > col_max[j - 1]) col_max[j - 1] = game.u1(i, j);
  }
  for (int i = 1; i <= n; ++i) {
    row_max[i - 1] = game.u2(i, 1);
    for (int j = 2; j <= m; ++j)
      if (game.u2(i, j) > row_max[i - 1]) row_max[i - 1] = game.u2(i, j);
  }
  ProfileSet out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      if (game.u1(i, j) == col_max[j - 1] && game.u2(i, j) == row_max[i - 1])
        out.push_back({i, j});
  return out;
}

template <typename Scalar>
bool is_symmetric(const BasicBimatrixGame<Scalar>& game) {
  if (game.rows() != game.cols()) return false;
  const int n = static_cast<int>(game.rows());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!(game.u2(i, j) == game.u1(j, i))) return false;
  return true;
}

// x -> lambda * x + mu applied to both players' payoffs.
template <typename Scalar>
BasicBimatrixGame<Scalar> affine_transform(const BasicBimatrixGame<Scalar>& game,
                                           const Scalar& lambda, const Scalar& mu) {
  if (!(lambda > Scalar(0)))
    throw std::invalid_argument("affine_transform: lambda must be positive");
  std::vector<PayoffPair<Scalar>> cells;
  cells.reserve(game.cells().size());
  for (const auto& c : game.cells()) cells.push_back({lambda * c.u1 + mu, lambda * c.u2 + mu});
  return BasicBimatrixGame<Scalar>(game.rows(), game.cols(), std::move(cells));
}

// Profiles not dominated by another profile that is weakly better for both
// players and strictly better for at least one.
template <typename Scalar>
ProfileSet pareto_optimal_profiles(const BasicBimatrixGame<Scalar>& game) {
  const int n = static_cast<int>(game.rows());
  const int m = static_cast<int>(game.cols());
  auto dominates = [](const PayoffPair<Scalar>& a, const PayoffPair<Scalar>& b) {
    return a.u1 >= b.u1 && a.u2 >= b.u2 && (a.u1 > b.u1 || a.u2 > b.u2);
  };
  ProfileSet out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j) {
      bool dominated = false;
      for (const auto& other : game.cells())
        if (dominates(other, game.at(i, j))) { dominated = true; break; }
      if (!dominated) out.push_back({i, j});
    }
  return out;
}

// Returns the game with rows (and/or columns) permuted; perm[k] is the 1-based
// source index placed at position k + 1.
template <typename Scalar>
BasicBimatrixGame<Scalar> permute(const BasicBimatrixGame<Scalar>& game,
                                  const std::vector<int>& row_perm,
                                  const std::vector<int>& col_perm) {
  if (row_perm.size() != game.rows() || col_perm.size() != game.cols())
    throw std::invalid_argument("permute: permutation size mismatch");
  std::vector<PayoffPair<Scalar>> cells;
  cells.reserve(game.cells().size());
  for (int src_row : row_perm)
    for (int src_col : col_perm) cells.push_back(game.at(src_row, src_col));
  return BasicBimatrixGame<Scalar>(game.rows(), game.cols(), std::move(cells));
}

// ---------------------------------------------------------------------------
// Prisoner's Dilemma

// General PD payoffs: (R,R) (S,T) / (T,S) (P,P) with T > R > P > S, 2R > T + S.
struct RawPD {
  Rational T, R, P, S;

  static RawPD make(Rational t, Rational r, Rational p, Rational s) {
    if (!(t > r)) throw std::invalid_argument("RawPD: requires T > R");
    if (!(r > p)) throw std::invalid_argument("RawPD: requires R > P");
    if (!(p > s)) throw std::invalid_argument("RawPD: requires P > S");
    if (!(Rational(2) * r > t + s)) throw std::invalid_argument("RawPD: requires 2R > T + S");
    return RawPD{std::move(t), std::move(r), std::move(p), std::move(s)};
  }

  BimatrixGame game() const {
    return BimatrixGame(2, 2, {{R, R}, {S, T}, {T, S}, {P, P}});
  }
};

// Normalized PD Γ(r, p) = (r,r) (0,1) / (1,0) (p,p), 0 < p < r < 1, r > 1/2.
class NormalizedPD {
 public:
  static NormalizedPD make(Rational r, Rational p) {
    if (!(p > Rational(0))) throw std::invalid_argument("NormalizedPD: requires p > 0");
    if (!(r > p)) throw std::invalid_argument("NormalizedPD: requires p < r");
    if (!(r < Rational(1))) throw std::invalid_argument("NormalizedPD: requires r < 1");
    if (!(r > Rational(1, 2))) throw std::invalid_argument("NormalizedPD: requires r > 1/2");
    return NormalizedPD(std::move(r), std::move(p));
  }

  const Rational& r() const { return r_; }
  const Rational& p() const { return p_; }

  friend bool operator==(const NormalizedPD&, const NormalizedPD&) = default;

 private:
  NormalizedPD(Rational r, Rational p) : r_(std::move(r)), p_(std::move(p)) {}
  Rational r_, p_;
};

// f(x) = (x - S) / (T - S).
inline NormalizedPD normalize(const RawPD& raw) {
  RawPD checked = RawPD::make(raw.T, raw.R, raw.P, raw.S);
  const Rational span = checked.T - checked.S;
  return NormalizedPD::make((checked.R - checked.S) / span, (checked.P - checked.S) / span);
}

// The commonly used PD (3,3) (0,5) / (5,0) (1,1).
inline RawPD standard_raw_pd() { return RawPD::make(5, 3, 1, 0); }
inline NormalizedPD standard_pd() { return normalize(standard_raw_pd()); }

struct GammaFamily {
  BimatrixGame gamma;    // Γ
  BimatrixGame gamma1;   // rows swapped
  BimatrixGame gamma2;   // columns swapped
  BimatrixGame gamma3;   // both swapped
};

inline BimatrixGame gamma_game(const NormalizedPD& pd) {
  return BimatrixGame(2, 2, {{pd.r(), pd.r()}, {0, 1}, {1, 0}, {pd.p(), pd.p()}});
}

inline GammaFamily gamma_family(const NormalizedPD& pd) {
  BimatrixGame g = gamma_game(pd);
  return {g, permute(g, {2, 1}, {1, 2}), permute(g, {1, 2}, {2, 1}), permute(g, {2, 1}, {2, 1})};
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const StrategyProfile& s) { return nlohmann::json::array({s.row, s.col}); }

inline nlohmann::json to_json(const ProfileSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : set) out.push_back(to_json(s));
  return out;
}

// {"rows": n, "cols": m, "entries": [[["u1","u2"], ...], ...]} with payoffs as
// "num/den" strings.
inline nlohmann::json to_json(const BimatrixGame& game) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 1; i <= static_cast<int>(game.rows()); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= static_cast<int>(game.cols()); ++j)
      row.push_back(nlohmann::json::array({game.u1(i, j).str(), game.u2(i, j).str()}));
    entries.push_back(std::move(row));
  }
  return {{"rows", game.rows()}, {"cols", game.cols()}, {"entries", std::move(entries)}};
}

inline BimatrixGame game_from_json(const nlohmann::json& j) {
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.empty())
    throw std::invalid_argument("bimatrix json: 'entries' must be a nonempty array");
  std::size_t rows = entries.size();
  std::size_t cols = entries.front().size();
  std::vector<PayoffPair<Rational>> cells;
  for (const auto& row : entries) {
    if (!row.is_array() || row.size() != cols)
      throw std::invalid_argument("bimatrix json: ragged entries");
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != 2)
        throw std::invalid_argument("bimatrix json: each entry needs two payoffs");
      cells.push_back({Rational::parse(cell[0].get<std::string>()),
                       Rational::parse(cell[1].get<std::string>())});
    }
  }
  if (j.contains("rows") && j.at("rows").get<std::size_t>() != rows)
    throw std::invalid_argument("bimatrix json: 'rows' disagrees with entries");
  if (j.contains("cols") && j.at("cols").get<std::size_t>() != cols)
    throw std::invalid_argument("bimatrix json: 'cols' disagrees with entries");
  return BimatrixGame(rows, cols, std::move(cells));
}

}  // namespace ewlpd

#endif  // EWLPD_GAME_HPP_
