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

// Command-line front end. Exit codes: 0 success, 2 invalid input, 1 internal
// error.

#ifndef EWLPD_CLI_HPP_
#define EWLPD_CLI_HPP_

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ewlpd/extensions.hpp"
#include "ewlpd/figures.hpp"
#include "ewlpd/game.hpp"
#include "ewlpd/regions.hpp"
#include "ewlpd/report.hpp"
#include "ewlpd/verifier.hpp"

namespace ewlpd::cli {

// Bad user input; the message starts with the offending flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string cls, p, r, a, t, T, R, P, S, profile;
  std::string format = "json";
  std::string scale = "normalized";
  std::string axis = "param";
  std::string grid_step, param_step, out;
  std::uint64_t seed = kDefaultSeed;
};

namespace detail {

template <typename Fn>
auto flagged(const std::string& flag, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

inline std::optional<Rational> rational_flag(const std::string& flag, const std::string& text) {
  if (text.empty()) return std::nullopt;
  return flagged(flag, [&] { return Rational::parse(text); });
}

inline ExtensionClass class_flag(const Options& o, bool required) {
  if (o.cls.empty()) {
    if (required) throw UsageError("--class: required for this command");
    return ExtensionClass::kB;
  }
  return flagged("--class", [&] { return parse_extension_class(o.cls); });
}

inline std::optional<ExtensionClass> optional_class(const Options& o) {
  if (o.cls.empty()) return std::nullopt;
  return class_flag(o, true);
}

struct GameSource {
  RawPD raw;
  NormalizedPD pd;
  bool explicit_pd = false;
};

// --T/--R/--P/--S (all four), or --p/--r (both, read as T = 1, S = 0), or the
// standard 5/3/1/0 game.
inline GameSource game_source(const Options& o) {
  const bool any_raw = !(o.T.empty() && o.R.empty() && o.P.empty() && o.S.empty());
  const bool any_norm = !(o.p.empty() && o.r.empty());
  if (any_raw && any_norm) throw UsageError("--p/--r: cannot be combined with --T/--R/--P/--S");
  if (any_raw) {
    for (const auto& [flag, v] : {std::pair{"--T", &o.T}, {"--R", &o.R}, {"--P", &o.P}, {"--S", &o.S}})
      if (v->empty()) throw UsageError(std::string(flag) + ": required together with --T/--R/--P/--S");
    const RawPD raw = flagged("--T/--R/--P/--S", [&] {
      return RawPD::make(*rational_flag("--T", o.T), *rational_flag("--R", o.R), *rational_flag("--P", o.P),
                         *rational_flag("--S", o.S));
    });
    return {raw, normalize(raw), true};
  }
  if (any_norm) {
    if (o.p.empty()) throw UsageError("--p: required together with --r");
    if (o.r.empty()) throw UsageError("--r: required together with --p");
    const Rational p = *rational_flag("--p", o.p), r = *rational_flag("--r", o.r);
    const NormalizedPD pd = flagged("--p/--r", [&] { return NormalizedPD::make(r, p); });
    return {RawPD::make(1, r, p, 0), pd, true};
  }
  return {standard_raw_pd(), standard_pd(), false};
}

inline std::optional<Rational> class_param(const Options& o, ExtensionClass id) {
  const auto a = rational_flag("--a", o.a);
  const auto t = rational_flag("--t", o.t);
  switch (param_kind(id)) {
    case ParamKind::kNone:
      if (a || t) throw UsageError(std::string(a ? "--a" : "--t") + ": class B takes no parameter");
      return std::nullopt;
    case ParamKind::kA:
      if (t) throw UsageError("--t: class " + std::string(to_string(id)) + " takes --a");
      if (!a) throw UsageError("--a: required for class " + std::string(to_string(id)));
      flagged("--a", [&] { return ExtensionSpec::make(id, a); });
      return a;
    case ParamKind::kT:
      if (a) throw UsageError("--a: class " + std::string(to_string(id)) + " takes --t");
      if (!t) throw UsageError("--t: required for class " + std::string(to_string(id)));
      flagged("--t", [&] { return ExtensionSpec::make(id, t); });
      return t;
  }
  return std::nullopt;
}

inline std::optional<StrategyProfile> profile_flag(const Options& o) {
  if (o.profile.empty()) return std::nullopt;
  int i = 0, j = 0;
  char comma = 0;
  std::istringstream is(o.profile);
  if (!(is >> i >> comma >> j) || comma != ',' || !is.eof() || i < 1 || i > 4 || j < 1 || j > 4)
    throw UsageError("--profile: expected 'i,j' with i, j in 1..4, got '" + o.profile + "'");
  return StrategyProfile{i, j};
}

inline PayoffScale scale_of(const Options& o, const GameSource& src) {
  return o.scale == "classic" ? PayoffScale::classic(src.raw) : PayoffScale{};
}

inline std::string quote(const std::string& s) { return "\"" + s + "\""; }

inline std::string profile_text(const StrategyProfile& s) {
  return quote("(" + std::to_string(s.row) + "," + std::to_string(s.col) + ")");
}

struct Output {
  nlohmann::json json;
  std::string csv;
};

// ---------------------------------------------------------------------------
// Subcommands

inline Output cmd_normalize(const Options& o) {
  const GameSource src = game_source(o);
  return {{{"r", src.pd.r().str()}, {"p", src.pd.p().str()}},
          "r,p\n" + src.pd.r().str() + "," + src.pd.p().str() + "\n"};
}

inline BimatrixGame selected_game(const Options& o, const GameSource& src, nlohmann::json& meta) {
  const auto id = optional_class(o);
  if (!id) {
    if (!o.a.empty() || !o.t.empty()) throw UsageError(std::string(o.a.empty() ? "--t" : "--a") + ": requires --class");
    meta = {{"class", "PD"}};
    return gamma_game(src.pd);
  }
  const auto param = class_param(o, *id);
  const ExtensionSpec spec = ExtensionSpec::make(*id, param);
  meta = to_json(spec);
  return build_extension(spec, src.pd);
}

inline Output cmd_build(const Options& o) {
  const GameSource src = game_source(o);
  nlohmann::json meta;
  const BimatrixGame g = affine_transform(selected_game(o, src, meta), scale_of(o, src).factor, scale_of(o, src).offset);
  std::ostringstream csv;
  csv << "row,col,payoff1,payoff2\n";
  for (int i = 1; i <= static_cast<int>(g.rows()); ++i)
    for (int j = 1; j <= static_cast<int>(g.cols()); ++j)
      csv << i << ',' << j << ',' << g.at(i, j).u1 << ',' << g.at(i, j).u2 << '\n';
  meta["game"] = to_json(g);
  return {meta, csv.str()};
}

inline Output cmd_ne(const Options& o) {
  const GameSource src = game_source(o);
  nlohmann::json meta;
  const BimatrixGame g = selected_game(o, src, meta);
  const PayoffScale sc = scale_of(o, src);
  nlohmann::json eq = nlohmann::json::array(), pay = nlohmann::json::array();
  std::ostringstream csv;
  csv << "profile,payoff1,payoff2\n";
  for (const auto& s : pure_nash_equilibria(g)) {
    const Rational u1 = sc.apply(g.at(s).u1), u2 = sc.apply(g.at(s).u2);
    eq.push_back(to_json(s));
    pay.push_back({u1.str(), u2.str()});
    csv << profile_text(s) << ',' << u1 << ',' << u2 << '\n';
  }
  return {{{"equilibria", eq}, {"payoffs", pay}}, csv.str()};
}

inline Output cmd_region(const Options& o) {
  const GameSource src = game_source(o);
  const ExtensionClass id = class_flag(o, true);
  const auto param = class_param(o, id);
  const auto only = profile_flag(o);
  nlohmann::json verdicts = nlohmann::json::array();
  std::ostringstream csv;
  csv << "profile,is_ne,branch\n";
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (only && !(*only == StrategyProfile{i, j})) continue;
      const RegionVerdict v = ne_condition({id, {i, j}, src.pd, param});
      verdicts.push_back({{"profile", to_json(StrategyProfile{i, j})}, {"is_ne", v.is_ne}, {"branch", v.active_branch}});
      csv << profile_text({i, j}) << ',' << v.is_ne << ',' << v.active_branch << '\n';
    }
  nlohmann::json j = to_json(ExtensionSpec::make(id, param));
  j["verdicts"] = std::move(verdicts);
  if (!only) j["equilibria"] = to_json(ne_region_table(id, src.pd, param));
  return {j, csv.str()};
}

inline Output cmd_sweep(const Options& o) {
  const GameSource src = game_source(o);
  const auto p_step = rational_flag("--grid-step", o.grid_step);
  const auto param_step = rational_flag("--param-step", o.param_step);
  std::vector<ExtensionClass> ids;
  if (const auto id = optional_class(o)) ids.push_back(*id);
  else ids.assign(kAllClasses.begin(), kAllClasses.end());
  nlohmann::json all = nlohmann::json::array();
  std::string csv;
  for (ExtensionClass id : ids) {
    GridSpec grid = GridSpec::defaults(id);
    if (p_step) grid.p_step = grid.r_step = *p_step;
    if (param_step) grid.param_step = *param_step;
    if (src.explicit_pd) grid.fixed_pd = src.pd;
    const MismatchReport report = flagged("--grid-step", [&] { return sweep_verify(id, grid); });
    all.push_back(to_json(report));
    const std::string part = to_csv(report);
    csv += csv.empty() ? part : part.substr(part.find('\n') + 1);
  }
  return {ids.size() == 1 ? all[0] : all, csv};
}

inline Output cmd_extremal(const Options& o) {
  const GameSource src = game_source(o);
  const ExtensionClass id = class_flag(o, true);
  const auto step = rational_flag("--grid-step", o.grid_step).value_or(GridSpec::defaults(id).param_step);
  if (step.sign() <= 0) throw UsageError("--grid-step: must be positive");
  const auto only = profile_flag(o);
  const PayoffScale sc = scale_of(o, src);
  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream csv;
  csv.precision(17);
  csv << "class,profile,found,param,payoff,payoff_value,approximate,supremum_only\n";
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      if (only && !(*only == StrategyProfile{i, j})) continue;
      const ExtremalResult r = max_equal_payoff(id, src.pd, {i, j}, step);
      arr.push_back(to_json(r, sc));
      csv << to_string(id) << ',' << profile_text({i, j}) << ',' << r.found << ',';
      if (r.found) {
        csv << (r.param ? r.param->str() : r.has_param ? nlohmann::json(r.param_value).dump() : std::string()) << ','
            << (r.payoff ? sc.apply(*r.payoff).str() : std::string()) << ',' << sc.apply(r.payoff_value) << ','
            << r.approximate << ',' << r.is_supremum_only;
      } else {
        csv << ",,,,";
      }
      csv << '\n';
    }
  return {arr, csv.str()};
}

inline Output cmd_figure(const Options& o) {
  const GameSource src = game_source(o);
  FigureRequest req;
  req.id = class_flag(o, true);
  req.axis = flagged("--axis", [&] { return parse_figure_axis(o.axis); });
  req.raw = src.raw;
  req.step = rational_flag("--grid-step", o.grid_step);
  req.scale = scale_of(o, src);
  const auto series = flagged("--class", [&] { return figure_data(req); });
  return {to_json(series), to_csv(series, req.axis)};
}

inline Output cmd_report(const Options& o) {
  const auto checks = reproduction_report(o.seed);
  std::ostringstream csv;
  csv << "id,name,passed,seconds\n";
  for (const auto& c : checks) csv << c.id << ',' << quote(c.name) << ',' << c.passed << ',' << c.seconds << '\n';
  return {to_json(checks), csv.str()};
}

}  // namespace detail

// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pure Nash equilibria of quantum Prisoner's Dilemma extensions", "ewlpd"};
  app.require_subcommand(1);
  Options o;
  std::function<detail::Output(const Options&)> handler;

  auto add = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--class", o.cls, "Extension class: A1 A2 B C D1 D2 E1 E2");
    sub->add_option("--p", o.p, "Normalized punishment payoff");
    sub->add_option("--r", o.r, "Normalized reward payoff");
    sub->add_option("--a", o.a, "A-class parameter in [0, 1]");
    sub->add_option("--t", o.t, "C/D/E-class parameter in (0, 1)");
    sub->add_option("--T", o.T, "Raw temptation payoff");
    sub->add_option("--R", o.R, "Raw reward payoff");
    sub->add_option("--P", o.P, "Raw punishment payoff");
    sub->add_option("--S", o.S, "Raw sucker payoff");
    sub->add_option("--profile", o.profile, "Single profile 'i,j'");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--scale", o.scale, "Payoff scale")->check(CLI::IsMember({"normalized", "classic"}));
    sub->add_option("--axis", o.axis, "Figure axis: param or PR");
    sub->add_option("--grid-step", o.grid_step, "Grid step (p/r for sweeps and PR figures, else the parameter)");
    sub->add_option("--param-step", o.param_step, "Parameter step for sweeps");
    sub->add_option("--seed", o.seed, "Seed for randomized checks");
    sub->add_option("--out", o.out, "Write output to FILE");
    sub->callback([&handler, fn] { handler = fn; });
  };
  add("normalize", "Normalize raw PD payoffs to (r, p)", detail::cmd_normalize);
  add("build", "Print a game's payoff matrix", detail::cmd_build);
  add("ne", "Pure Nash equilibria by exhaustive search", detail::cmd_ne);
  add("region", "Closed-form NE region verdicts", detail::cmd_region);
  add("sweep", "Compare closed-form regions with exhaustive search on a grid", detail::cmd_sweep);
  add("extremal", "Maximal equal NE payoff per profile", detail::cmd_extremal);
  add("figure-data", "Plot-ready NE payoff series", detail::cmd_figure);
  add("report", "Full reproduction bundle", detail::cmd_report);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const detail::Output result = handler(o);
    const std::string text = o.format == "csv" ? result.csv : result.json.dump(2) + "\n";
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out);
      if (!file) throw UsageError("--out: cannot open '" + o.out + "' for writing");
      file << text;
    }
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace ewlpd::cli

#endif  // EWLPD_CLI_HPP_
