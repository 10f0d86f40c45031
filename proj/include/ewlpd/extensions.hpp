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

// Four-strategy quantum extensions of the normalized Prisoner's Dilemma.
//
// Each extension is a 4x4 bimatrix whose 2x2 blocks are convex combinations of
// Γ and its row/column swapped variants Γ1, Γ2, Γ3:
//
//   A1 = [ Γ          aΓ + a'Γ3  ]    A2 = [ Γ           aΓ2 + a'Γ1 ]
//        [ aΓ + a'Γ3  bΓ + b'Γ3  ]         [ aΓ1 + a'Γ2  bΓ3 + b'Γ  ]
//
//   B  = [ Γ  M ]   M = (Γ + Γ1 + Γ2 + Γ3) / 4
//        [ M  M ]
//
//   C  = [ Γ  N ]   N = t(Γ + Γ3)/2 + t'(Γ1 + Γ2)/2
//        [ N  t'²Γ + tt'(Γ1 + Γ2) + t²Γ3 ]
//
//   D1, D2, E1, E2 share the lower-right block K = t²Γ + tt'(Γ1 + Γ2) + t'²Γ3
//   with off-diagonal blocks
//     D1: tΓ + t'Γ2  / tΓ + t'Γ1      D2: tΓ3 + t'Γ1 / tΓ3 + t'Γ2
//     E1: tΓ + t'Γ1  / tΓ + t'Γ2      E2: tΓ3 + t'Γ2 / tΓ3 + t'Γ1
//
// with a' = 1 - a, b = (1 - 2a)², b' = 4a(1 - a), t' = 1 - t. Blocks are
// combined pairwise (both players), so the transpose relation between the two
// payoff matrices is a checkable property rather than an assumption.

#ifndef EWLPD_EXTENSIONS_HPP_
#define EWLPD_EXTENSIONS_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ewlpd/game.hpp"

namespace ewlpd {

enum class ExtensionClass { kA1, kA2, kB, kC, kD1, kD2, kE1, kE2 };

inline constexpr std::array<ExtensionClass, 8> kAllClasses = {
    ExtensionClass::kA1, ExtensionClass::kA2, ExtensionClass::kB,  ExtensionClass::kC,
    ExtensionClass::kD1, ExtensionClass::kD2, ExtensionClass::kE1, ExtensionClass::kE2};

inline std::string_view to_string(ExtensionClass id) {
  switch (id) {
    case ExtensionClass::kA1: return "A1";
    case ExtensionClass::kA2: return "A2";
    case ExtensionClass::kB: return "B";
    case ExtensionClass::kC: return "C";
    case ExtensionClass::kD1: return "D1";
    case ExtensionClass::kD2: return "D2";
    case ExtensionClass::kE1: return "E1";
    case ExtensionClass::kE2: return "E2";
  }
  return "?";
}

inline ExtensionClass parse_extension_class(std::string_view name) {
  for (ExtensionClass id : kAllClasses)
    if (to_string(id) == name) return id;
  throw std::invalid_argument("unknown extension class '" + std::string(name) + "'");
}

enum class ParamKind { kNone, kA, kT };

inline ParamKind param_kind(ExtensionClass id) {
  switch (id) {
    case ExtensionClass::kA1:
    case ExtensionClass::kA2: return ParamKind::kA;
    case ExtensionClass::kB: return ParamKind::kNone;
    default: return ParamKind::kT;
  }
}

inline std::string_view param_name(ExtensionClass id) {
  switch (param_kind(id)) {
    case ParamKind::kA: return "a";
    case ParamKind::kT: return "t";
    case ParamKind::kNone: break;
  }
  return "";
}

// a in [0, 1] closed; t in (0, 1) open.
inline bool param_in_domain(ExtensionClass id, const Rational& x) {
  switch (param_kind(id)) {
    case ParamKind::kA: return x >= Rational(0) && x <= Rational(1);
    case ParamKind::kT: return x > Rational(0) && x < Rational(1);
    case ParamKind::kNone: break;
  }
  return false;
}

class ExtensionSpec {
 public:
  static ExtensionSpec make(ExtensionClass id, std::optional<Rational> param = std::nullopt) {
    const ParamKind kind = param_kind(id);
    const std::string cls(to_string(id));
    if (kind == ParamKind::kNone) {
      if (param) throw std::invalid_argument("class " + cls + " takes no parameter");
    } else {
      const std::string name(param_name(id));
      if (!param) throw std::invalid_argument("class " + cls + " requires parameter " + name);
      if (!param_in_domain(id, *param))
        throw std::out_of_range("parameter " + name + "=" + param->str() + " outside " +
                                (kind == ParamKind::kA ? "[0, 1]" : "(0, 1)") + " for class " + cls);
    }
    return ExtensionSpec(id, std::move(param));
  }

  ExtensionClass id() const { return id_; }
  const std::optional<Rational>& param() const { return param_; }

 private:
  ExtensionSpec(ExtensionClass id, std::optional<Rational> param) : id_(id), param_(std::move(param)) {}
  ExtensionClass id_;
  std::optional<Rational> param_;
};

struct DerivedAParams {
  Rational a, a_prime, b, b_prime;
};

inline DerivedAParams derive_a_params(const Rational& a) {
  if (a < Rational(0) || a > Rational(1))
    throw std::out_of_range("derive_a_params: a=" + a.str() + " outside [0, 1]");
  const Rational one(1);
  return {a, one - a, square(one - Rational(2) * a), Rational(4) * a * (one - a)};
}

namespace detail {

using Block = BimatrixGame;  // 2x2
using Term = std::pair<Rational, const Block*>;

inline Block combine(std::initializer_list<Term> terms) {
  std::vector<PayoffPair<Rational>> cells(4);
  for (const auto& [coef, block] : terms)
    for (std::size_t k = 0; k < 4; ++k) {
      cells[k].u1 += coef * block->cells()[k].u1;
      cells[k].u2 += coef * block->cells()[k].u2;
    }
  return Block(2, 2, std::move(cells));
}

inline BimatrixGame assemble(const Block& top_left, const Block& top_right, const Block& bottom_left,
                             const Block& bottom_right) {
  std::vector<PayoffPair<Rational>> cells;
  cells.reserve(16);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      const Block& b = i <= 2 ? (j <= 2 ? top_left : top_right) : (j <= 2 ? bottom_left : bottom_right);
      cells.push_back(b.at((i - 1) % 2 + 1, (j - 1) % 2 + 1));
    }
  return BimatrixGame(4, 4, std::move(cells));
}

// Block formulas without domain checks. The formulas are polynomial in the
// parameter, so this also evaluates limits at the open endpoints t = 0, 1.
inline BimatrixGame build_unchecked(ExtensionClass id, const Rational& x, const NormalizedPD& pd) {
  const GammaFamily f = gamma_family(pd);
  const Block& g = f.gamma;
  const Block& g1 = f.gamma1;
  const Block& g2 = f.gamma2;
  const Block& g3 = f.gamma3;
  const Rational one(1);
  switch (id) {
    case ExtensionClass::kA1:
    case ExtensionClass::kA2: {
      const Rational a = x, ap = one - x;
      const Rational b = square(one - Rational(2) * x), bp = Rational(4) * x * (one - x);
      if (id == ExtensionClass::kA1) {
        Block off = combine({{a, &g}, {ap, &g3}});
        return assemble(g, off, off, combine({{b, &g}, {bp, &g3}}));
      }
      return assemble(g, combine({{a, &g2}, {ap, &g1}}), combine({{a, &g1}, {ap, &g2}}),
                      combine({{b, &g3}, {bp, &g}}));
    }
    case ExtensionClass::kB: {
      const Rational q(1, 4);
      Block m = combine({{q, &g}, {q, &g1}, {q, &g2}, {q, &g3}});
      return assemble(g, m, m, m);
    }
    case ExtensionClass::kC: {
      const Rational t = x, tp = one - x, half(1, 2);
      Block n = combine({{t * half, &g}, {t * half, &g3}, {tp * half, &g1}, {tp * half, &g2}});
      return assemble(g, n, n, combine({{tp * tp, &g}, {t * tp, &g1}, {t * tp, &g2}, {t * t, &g3}}));
    }
    default: break;
  }
  const Rational t = x, tp = one - x;
  Block k = combine({{t * t, &g}, {t * tp, &g1}, {t * tp, &g2}, {tp * tp, &g3}});
  switch (id) {
    case ExtensionClass::kD1:
      return assemble(g, combine({{t, &g}, {tp, &g2}}), combine({{t, &g}, {tp, &g1}}), k);
    case ExtensionClass::kD2:
      return assemble(g, combine({{t, &g3}, {tp, &g1}}), combine({{t, &g3}, {tp, &g2}}), k);
    case ExtensionClass::kE1:
      return assemble(g, combine({{t, &g}, {tp, &g1}}), combine({{t, &g}, {tp, &g2}}), k);
    case ExtensionClass::kE2:
      return assemble(g, combine({{t, &g3}, {tp, &g2}}), combine({{t, &g3}, {tp, &g1}}), k);
    default: break;
  }
  throw std::logic_error("build_unchecked: unhandled class");
}

}  // namespace detail

inline BimatrixGame build_extension(const ExtensionSpec& spec, const NormalizedPD& pd) {
  return detail::build_unchecked(spec.id(), spec.param().value_or(Rational(0)), pd);
}

inline bool classical_embedding_check(const BimatrixGame& ext, const NormalizedPD& pd) {
  if (ext.rows() != 4 || ext.cols() != 4)
    throw std::invalid_argument("classical_embedding_check: expected a 4x4 game");
  const BimatrixGame g = gamma_game(pd);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      if (!(ext.at(i, j) == g.at(i, j))) return false;
  return true;
}

// {"class": "A1", "param": "1/4"}; "param" omitted for B.
inline nlohmann::json to_json(const ExtensionSpec& spec) {
  nlohmann::json j{{"class", std::string(to_string(spec.id()))}};
  if (spec.param()) j["param"] = spec.param()->str();
  return j;
}

inline ExtensionSpec spec_from_json(const nlohmann::json& j) {
  const ExtensionClass id = parse_extension_class(j.at("class").get<std::string>());
  std::optional<Rational> param;
  if (j.contains("param")) param = Rational::parse(j.at("param").get<std::string>());
  return ExtensionSpec::make(id, std::move(param));
}

}  // namespace ewlpd

#endif  // EWLPD_EXTENSIONS_HPP_
