/*
   Copyright 2026 The vakh authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// vakh: command-line front end.
//
//   vakh classify --alpha 0.5 --v 0.24
//   vakh snapshot --preset fig4-5 --time 11 --out p.csv
//   vakh verify   --alpha 1.2 --v1 0.24 --v2 0.12 --json
//   vakh scan     --out region.csv
//   vakh fission  --preset fig10-11
//
// Exit status: 0 ok, 1 invalid input or domain error, 2 verification failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vakh/io.hpp"
#include "vakh/vakh.hpp"

namespace {

using vakh::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitVerify = 2;

struct RunConfig {
  std::optional<std::string> preset;
  std::optional<double> alpha;
  std::optional<double> v, v1, v2;
  double eta01 = 0.0, eta02 = 0.0;
  std::optional<double> time;
  std::optional<double> t_start, t_end;
  int t_steps = 2;
  std::optional<double> T_min, T_max;
  int samples = vakh::kDefaultSamples;
  double x0 = 0.0;
  std::optional<double> tol;
  double prominence = vakh::kDefaultProminence;
  std::string format;
  std::optional<std::string> out;
  bool json_out = false;
  std::string form = "corrected";
  // scan
  double alpha_min = 0.0, alpha_max = 3.0, v_min = 0.05, v_max = 1.0;
  int alpha_n = 60, v_n = 60;
};

/// Collects every validation problem so the user sees them all at once.
class Problems {
 public:
  void require(bool ok, const std::string& msg) {
    if (!ok) items_.push_back(msg);
  }
  void raise() const {
    if (items_.empty()) return;
    std::ostringstream os;
    os << "invalid arguments:";
    for (const auto& m : items_) os << "\n  - " << m;
    throw vakh::DomainError(os.str());
  }

 private:
  std::vector<std::string> items_;
};

bool finite_or_unset(const std::optional<double>& x) { return !x || std::isfinite(*x); }

void apply_preset(RunConfig& c, Problems& p) {
  if (!c.preset) return;
  const auto pr = vakh::find_preset(*c.preset);
  if (!pr) {
    std::string names;
    for (const auto& q : vakh::kPresets) names += (names.empty() ? "" : ", ") + std::string(q.name);
    p.require(false, "unknown preset '" + *c.preset + "' (known: " + names + ")");
    return;
  }
  if (!c.alpha) c.alpha = pr->alpha;
  if (!c.v1 && !c.v) c.v1 = pr->v1;
  if (!c.v2 && !c.v) c.v2 = pr->v2;
}

// Fills v1 from --v when a single velocity is given.
int mode_count(const RunConfig& c) { return c.v2 ? 2 : 1; }

double first_velocity(const RunConfig& c) { return c.v ? *c.v : c.v1.value_or(0.0); }

void validate_physics(RunConfig& c, Problems& p, bool allow_two) {
  p.require(c.alpha.has_value(), "--alpha is required (or use --preset)");
  if (c.alpha) p.require(std::isfinite(*c.alpha) && *c.alpha >= 0.0, "--alpha must be finite and >= 0");
  p.require(!(c.v && (c.v1 || c.v2)), "give either --v or --v1/--v2, not both");
  p.require(c.v || c.v1, "a velocity is required: --v (one soliton) or --v1 and --v2");
  for (const auto& [name, val] : {std::pair{"--v", c.v}, {"--v1", c.v1}, {"--v2", c.v2}}) {
    if (val) p.require(std::isfinite(*val) && *val > 0.0, std::string(name) + " must be finite and > 0");
  }
  p.require(std::isfinite(c.eta01) && std::isfinite(c.eta02), "--eta01/--eta02 must be finite");
  if (c.v2) {
    p.require(allow_two, "this subcommand takes a single velocity (--v)");
    p.require(c.v1.has_value(), "--v2 needs --v1");
    if (c.v1) p.require(*c.v1 != *c.v2, "--v1 and --v2 must differ");
    if (c.alpha) p.require(*c.alpha > 0.0, "two-soliton constructions need --alpha > 0");
  }
  p.require(c.form == "corrected" || c.form == "literal", "--form must be corrected or literal");
}

void validate_sampling(const RunConfig& c, Problems& p) {
  p.require(c.samples >= 3, "--samples must be >= 3");
  p.require(std::isfinite(c.x0), "--x0 must be finite");
  p.require(finite_or_unset(c.T_min) && finite_or_unset(c.T_max), "--T-min/--T-max must be finite");
  p.require(c.T_min.has_value() == c.T_max.has_value(), "--T-min and --T-max go together");
  if (c.T_min && c.T_max) p.require(*c.T_min < *c.T_max, "--T-min must be < --T-max");
}

std::ostream& open_out(const RunConfig& c, std::ofstream& file) {
  if (!c.out || *c.out == "-") return std::cout;
  file.open(*c.out);
  if (!file) throw vakh::DomainError("cannot write to '" + *c.out + "'");
  return file;
}

vakh::TwoSolitonOptions two_options(const RunConfig& c) {
  vakh::TwoSolitonOptions o;
  o.form = c.form == "literal" ? vakh::TwoSolitonForm::kLiteral : vakh::TwoSolitonForm::kCorrected;
  o.certification = vakh::Certification::kAttach;
  if (c.tol) o.tol = *c.tol;
  return o;
}

std::pair<vakh::SolitonParams, vakh::TauFunction> build(const RunConfig& c) {
  if (mode_count(c) == 2) {
    return vakh::build_two_soliton(*c.alpha, *c.v1, *c.v2, c.eta01, c.eta02, two_options(c));
  }
  return vakh::build_one_soliton(*c.alpha, first_velocity(c), c.eta01);
}

std::optional<vakh::TRange> t_range(const RunConfig& c) {
  if (c.T_min && c.T_max) return vakh::TRange{*c.T_min, *c.T_max};
  return std::nullopt;
}

void print_json(std::ostream& os, const json& j) { os << std::setw(2) << j << '\n'; }

// ---------------------------------------------------------------------------

int run_classify(RunConfig& c) {
  Problems p;
  apply_preset(c, p);
  validate_physics(c, p, false);
  if (c.tol) p.require(*c.tol >= 0.0, "--tol must be >= 0");
  p.raise();
  const double v = first_velocity(c);
  const auto r = vakh::classify_regime(*c.alpha, v, c.tol.value_or(vakh::kCuspTieTolerance));
  if (c.json_out || c.format == "json") {
    json j = vakh::to_json(r);
    j["alpha"] = *c.alpha;
    j["v"] = v;
    print_json(std::cout, j);
  } else {
    std::cout << std::setprecision(10) << "regime     " << vakh::to_string(r.regime) << "\n"
              << "lambda     " << r.lambda << "\n"
              << "alpha*     " << r.alpha_star << "\n"
              << "K          " << r.K << "\n"
              << "U_M        " << r.U_M << "\n";
  }
  return kExitOk;
}

int run_snapshot(RunConfig& c) {
  Problems p;
  apply_preset(c, p);
  validate_physics(c, p, true);
  validate_sampling(c, p);
  if (!c.time) {
    if (c.preset) {
      c.time = vakh::find_preset(*c.preset) ? vakh::find_preset(*c.preset)->t_after : 0.0;
    } else {
      p.require(false, "--time is required");
    }
  }
  p.require(finite_or_unset(c.time), "--time must be finite");
  const std::string fmt = c.format.empty() ? "csv" : c.format;
  p.require(fmt == "csv" || fmt == "json", "--format must be csv or json");
  p.raise();

  const auto [params, tau] = build(c);
  const auto profile = vakh::snapshot(tau, *c.time, t_range(c), c.samples, c.x0);
  json cls = nullptr;
  if (mode_count(c) == 1) cls = vakh::to_json(vakh::classify_regime(*c.alpha, first_velocity(c)));
  json meta = vakh::profile_metadata(params, profile, cls);
  if (tau.certificate) meta["certificate"] = vakh::to_json(*tau.certificate);

  std::ofstream file;
  std::ostream& os = open_out(c, file);
  if (fmt == "json") {
    json rows = json::array();
    for (const auto& s : profile.samples) rows.push_back({s.T, s.x, s.U, s.xT});
    meta["columns"] = {"T", "x", "U", "xT"};
    meta["rows"] = std::move(rows);
    print_json(os, meta);
    return kExitOk;
  }
  vakh::write_profile_csv(os, profile);
  if (c.out && *c.out != "-") {
    std::ofstream side(*c.out + ".json");
    if (!side) throw vakh::DomainError("cannot write sidecar '" + *c.out + ".json'");
    print_json(side, meta);
  }
  return kExitOk;
}

struct VerifyRow {
  std::string check;
  std::string value;
  bool passed;
  bool gating;
};

std::string sci(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(3) << x;
  return os.str();
}

int run_verify(RunConfig& c) {
  Problems p;
  apply_preset(c, p);
  validate_physics(c, p, true);
  if (c.tol) p.require(*c.tol > 0.0, "--tol must be > 0");
  p.raise();
  const double tol = c.tol.value_or(vakh::kCoefficientTolerance);
  const double alpha = *c.alpha;

  json out;
  std::vector<VerifyRow> rows;
  const vakh::Grid grid;

  if (mode_count(c) == 1) {
    const auto [params, tau] = vakh::build_one_soliton(alpha, first_velocity(c), c.eta01);
    out["params"] = vakh::to_json(params);
    if (alpha > 0.0) {
      const auto r = vakh::combined_bilinear_residual(tau.F, alpha, tol);
      out["bilinear"] = vakh::to_json(r);
      rows.push_back({"bilinear residual", sci(r.max_relative_coefficient), r.passed, true});
    } else {
      out["bilinear"] = nullptr;
      rows.push_back({"bilinear residual", "n/a (alpha = 0)", true, false});
    }
    const auto pr = vakh::pde_residual(tau, grid, alpha);
    const auto pm = vakh::pde_residual(tau, grid, alpha, vakh::DissipativeTerm::kWXT);
    out["pde_residual"] = vakh::to_json(pr);
    out["pde_residual_mixed"] = vakh::to_json(pm);
    rows.push_back({"PDE residual, alpha W_T", sci(*pr.grid_max_abs), pr.passed, true});
    rows.push_back({"PDE residual, alpha W_XT", sci(*pm.grid_max_abs), pm.passed, false});
  } else {
    const auto params = vakh::make_two_mode_params(alpha, *c.v1, *c.v2, c.eta01, c.eta02);
    out["params"] = vakh::to_json(params);
    const auto d = vakh::derive_coefficients(params, tol);
    out["coefficients"] = vakh::to_json(d);
    rows.push_back({"first-order residual", sci(d.first_order.max_relative_coefficient),
                    d.first_order.passed, true});
    rows.push_back({"full residual, solved A,B,C", sci(d.full.max_relative_coefficient),
                    d.full.passed, true});
    if (d.closed_form) {
      rows.push_back({"A vs closed form", sci(d.rel_dev_A), d.formula_A_matches, false});
      rows.push_back({"B vs closed form", sci(d.rel_dev_B), d.formula_B_matches, false});
      rows.push_back({"C vs closed form", sci(d.rel_dev_C), d.formula_C_matches, false});
    }

    // The same checks with the closed-form C and with the literal first-order term.
    vakh::TwoSolitonOptions o = two_options(c);
    o.tol = tol;
    o.form = vakh::TwoSolitonForm::kCorrected;
    o.source = vakh::CoefficientSource::kClosedForm;
    const auto closed = vakh::build_two_soliton(alpha, *c.v1, *c.v2, c.eta01, c.eta02, o).second;
    o.form = vakh::TwoSolitonForm::kLiteral;
    o.source = vakh::CoefficientSource::kOracle;
    const auto literal = vakh::build_two_soliton(alpha, *c.v1, *c.v2, c.eta01, c.eta02, o).second;
    out["closed_form_C_residual"] = vakh::to_json(*closed.certificate);
    out["literal_form_residual"] = vakh::to_json(*literal.certificate);
    rows.push_back({"full residual, closed-form C",
                    sci(closed.certificate->max_relative_coefficient), closed.certificate->passed,
                    false});
    rows.push_back({"full residual, literal form",
                    sci(literal.certificate->max_relative_coefficient),
                    literal.certificate->passed, false});

    o.form = vakh::TwoSolitonForm::kCorrected;
    const auto canonical = vakh::build_two_soliton(alpha, *c.v1, *c.v2, c.eta01, c.eta02, o).second;
    const auto pr = vakh::pde_residual(canonical, grid, alpha);
    out["pde_residual"] = vakh::to_json(pr);
    rows.push_back({"PDE residual, alpha W_T", sci(*pr.grid_max_abs), pr.passed, true});
  }

  bool ok = true;
  for (const auto& r : rows) ok = ok && (r.passed || !r.gating);
  out["passed"] = ok;

  if (c.json_out || c.format == "json") {
    std::ofstream file;
    print_json(open_out(c, file), out);
  } else {
    std::ofstream file;
    std::ostream& os = open_out(c, file);
    for (const auto& r : rows) {
      os << std::left << std::setw(34) << r.check << std::setw(20) << r.value
         << (r.passed ? "pass" : "FAIL") << (r.gating ? "" : "  (informational)") << '\n';
    }
    if (out.contains("coefficients")) {
      const auto& co = out["coefficients"];
      os << std::setprecision(12) << "solved A,B,C   " << co["solved"]["A"] << ' '
         << co["solved"]["B"] << ' ' << co["solved"]["C"] << '\n';
      if (!co["closed_form"].is_null()) {
        os << "closed A,B,C   " << co["closed_form"]["A"] << ' ' << co["closed_form"]["B"] << ' '
           << co["closed_form"]["C"] << '\n';
      }
    }
    os << "verdict        " << (ok ? "pass" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitVerify;
}

int run_scan(RunConfig& c) {
  Problems p;
  p.require(c.alpha_n >= 2 && c.v_n >= 2, "--alpha-n and --v-n must be >= 2");
  p.require(c.alpha_min >= 0.0 && c.alpha_max > c.alpha_min, "need 0 <= --alpha-min < --alpha-max");
  p.require(c.v_min > 0.0 && c.v_max > c.v_min, "need 0 < --v-min < --v-max");
  const std::string fmt = c.format.empty() ? "csv" : c.format;
  p.require(fmt == "csv" || fmt == "json", "--format must be csv or json");
  p.raise();
  const auto rows = vakh::region_scan({c.alpha_min, c.alpha_max, c.alpha_n}, {c.v_min, c.v_max, c.v_n},
                                      c.tol.value_or(vakh::kCuspTieTolerance));
  std::ofstream file;
  std::ostream& os = open_out(c, file);
  if (fmt == "json") {
    json a = json::array();
    for (const auto& r : rows) {
      a.push_back({{"alpha", r.alpha}, {"v", r.v}, {"K", r.K}, {"lambda", r.lambda},
                   {"U_M", r.U_M}, {"regime", vakh::to_string(r.regime)}});
    }
    print_json(os, a);
  } else {
    vakh::write_scan_csv(os, rows);
  }
  return kExitOk;
}

int run_fission(RunConfig& c) {
  Problems p;
  apply_preset(c, p);
  validate_physics(c, p, true);
  validate_sampling(c, p);
  p.require(c.prominence > 0.0, "--prominence must be > 0");
  p.require(c.t_start.has_value() == c.t_end.has_value(), "--t-start and --t-end go together");
  if (c.t_start && c.t_end) {
    p.require(*c.t_start < *c.t_end, "--t-start must be < --t-end");
    p.require(c.t_steps >= 2, "--t-steps must be >= 2");
  }
  const std::string fmt = c.format.empty() ? "json" : c.format;
  p.require(fmt == "csv" || fmt == "json", "--format must be csv or json");
  p.require(!c.T_min, "fission picks the T range per time; --T-min/--T-max are not accepted");
  p.raise();

  const auto [params, tau] = build(c);
  const vakh::CensusOptions opts{c.prominence, c.samples, c.x0};
  vakh::Timeline tl;
  if (c.t_start) {
    tl = vakh::fission_timeline(tau, *c.t_start, *c.t_end, c.t_steps, opts);
  } else {
    std::vector<double> times{-15.0, 11.0};
    if (c.time) {
      times = {*c.time};
    } else if (c.preset) {
      const auto pr = vakh::find_preset(*c.preset);
      times = {pr->t_before, pr->t_after};
    }
    tl = vakh::census_timeline(tau, times, opts);
  }

  std::ofstream file;
  std::ostream& os = open_out(c, file);
  if (fmt == "csv") {
    const auto old = os.precision(std::numeric_limits<double>::max_digits10);
    os << "t,count,index,U_peak,x_peak,multivalued\n";
    for (const auto& cen : tl.censuses) {
      if (cen.structures.empty()) os << cen.t << ',' << 0 << ",,,,\n";
      for (std::size_t i = 0; i < cen.structures.size(); ++i) {
        const auto& s = cen.structures[i];
        os << cen.t << ',' << cen.count() << ',' << i << ',' << s.U_peak << ',' << s.x_peak << ','
           << (s.multivalued ? 1 : 0) << '\n';
      }
    }
    os.precision(old);
  } else {
    json j{{"params", vakh::to_json(params)},
           {"form", c.form},
           {"prominence", c.prominence},
           {"timeline", vakh::to_json(tl)}};
    j["fission_index"] = tl.fission_index ? json(*tl.fission_index) : json(nullptr);
    print_json(os, j);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vakhnenko-type solitons: tau functions, shapes and fission"};
  app.require_subcommand(1);
  RunConfig c;

  auto physics = [&](CLI::App* s) {
    s->add_option("--preset", c.preset, "Scenario preset: fig4-5, fig6-7, fig8-9, fig10-11");
    s->add_option("--alpha", c.alpha, "Dissipation parameter");
    s->add_option("--v", c.v, "Velocity (one soliton)");
    s->add_option("--v1", c.v1, "Velocity of mode 1");
    s->add_option("--v2", c.v2, "Velocity of mode 2");
    s->add_option("--eta01", c.eta01, "Phase offset of mode 1");
    s->add_option("--eta02", c.eta02, "Phase offset of mode 2");
    s->add_option("--form", c.form, "Two-soliton form: corrected (default) or literal");
  };
  auto sampling = [&](CLI::App* s) {
    s->add_option("--T-min", c.T_min, "Lower end of the T sweep");
    s->add_option("--T-max", c.T_max, "Upper end of the T sweep");
    s->add_option("--samples", c.samples, "Samples along T");
    s->add_option("--x0", c.x0, "Horizontal gauge added to x");
  };
  auto output = [&](CLI::App* s) {
    s->add_option("--out", c.out, "Output path ('-' for stdout)");
    s->add_option("--format", c.format, "csv or json");
  };

  auto* classify = app.add_subcommand("classify", "Loop/cusp/hump verdict for one soliton");
  physics(classify);
  classify->add_option("--tol", c.tol, "Cusp tie tolerance on |lambda - 1|");
  classify->add_flag("--json", c.json_out, "JSON output");
  classify->add_option("--format", c.format, "text or json");

  auto* snap = app.add_subcommand("snapshot", "Physical profile (x, U) at one time");
  physics(snap);
  sampling(snap);
  output(snap);
  snap->add_option("--time", c.time, "Physical time t");

  auto* verify = app.add_subcommand("verify", "Bilinear and PDE residual checks");
  physics(verify);
  output(verify);
  verify->add_option("--tol", c.tol, "Coefficient tolerance");
  verify->add_flag("--json", c.json_out, "JSON output");

  auto* scan = app.add_subcommand("scan", "Regime map over (alpha, v)");
  output(scan);
  scan->add_option("--alpha-min", c.alpha_min);
  scan->add_option("--alpha-max", c.alpha_max);
  scan->add_option("--alpha-n", c.alpha_n);
  scan->add_option("--v-min", c.v_min);
  scan->add_option("--v-max", c.v_max);
  scan->add_option("--v-n", c.v_n);
  scan->add_option("--tol", c.tol, "Cusp tie tolerance");

  auto* fission = app.add_subcommand("fission", "Structure census over time");
  physics(fission);
  sampling(fission);
  output(fission);
  fission->add_option("--time", c.time, "Single census time");
  fission->add_option("--t-start", c.t_start);
  fission->add_option("--t-end", c.t_end);
  fission->add_option("--t-steps", c.t_steps);
  fission->add_option("--prominence", c.prominence, "Relative peak prominence");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (*classify) return run_classify(c);
    if (*snap) return run_snapshot(c);
    if (*verify) return run_verify(c);
    if (*scan) return run_scan(c);
    if (*fission) return run_fission(c);
  } catch (const vakh::CertificationError& e) {
    std::cerr << "vakh: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "vakh: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitDomain;
}
