// Copyright 2026 The entfb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "entfb/entanglement.hpp"
#include "entfb/errors.hpp"
#include "entfb/hamiltonian.hpp"
#include "entfb/master_equation.hpp"
#include "entfb/validation.hpp"

namespace entfb::cli {

namespace me = master_equation;
namespace ham = hamiltonian;
using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON numbers carry the same digits as the CSV output.
double rounded(double x) { return std::stod(format_number(x)); }

int emit(const RunConfig& cfg, const std::string& artifact, std::ostream& out,
         std::ostream& err) {
  if (!cfg.output_path) {
    out << artifact;
    return kExitOk;
  }
  std::ofstream file(*cfg.output_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output file " << *cfg.output_path << '\n';
    return kExitUsage;
  }
  file << artifact;
  return file ? kExitOk : kExitUsage;
}

Superoperator generator_for(const ModelParams& p) {
  return p.lambda == 0.0 ? me::liouvillian_nofb(p) : me::liouvillian_fb(p);
}

json matrix_json(const Operator& m) {
  json re = json::array(), im = json::array();
  for (int r = 0; r < 4; ++r) {
    json re_row = json::array(), im_row = json::array();
    for (int c = 0; c < 4; ++c) {
      re_row.push_back(rounded(m(r, c).real()));
      im_row.push_back(rounded(m(r, c).imag()));
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  return {{"re", re}, {"im", im}};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ContractViolation("not a number: '" + s + "'");
  return v;
}

}  // namespace

Range Range::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw ContractViolation("range must be MIN:MAX:N, got '" + text + "'");
  Range r;
  r.min = parse_double(parts[0]);
  r.max = parse_double(parts[1]);
  const double n = parse_double(parts[2]);
  if (n != std::floor(n) || n < 1) throw ContractViolation("range count must be an integer >= 1");
  r.count = static_cast<int>(n);
  if (r.min > r.max) throw ContractViolation("range minimum exceeds maximum in '" + text + "'");
  return r;
}

std::vector<double> Range::values() const { return optimizer::linspace(min, max, count); }

std::string format_number(double x) { return fmt::format("{:.12g}", x); }

void write_scan_csv(std::ostream& os, const std::vector<optimizer::ScanRecord>& records) {
  const bool any_error =
      std::any_of(records.begin(), records.end(), [](const auto& r) { return r.error.has_value(); });
  os << "alpha,J,C0,Cfb,lambda_opt,delta" << (any_error ? ",error" : "") << '\n';
  for (const auto& r : records) {
    os << format_number(r.alpha) << ',' << format_number(r.J);
    if (r.error) {
      os << ",,,,";
    } else {
      os << ',' << format_number(r.C0) << ',' << format_number(r.Cfb) << ','
         << format_number(r.lambda_opt) << ',' << format_number(r.delta);
    }
    if (any_error) {
      std::string msg = r.error.value_or("");
      std::replace(msg.begin(), msg.end(), ',', ';');
      std::replace(msg.begin(), msg.end(), '\n', ' ');
      os << ',' << msg;
    }
    os << '\n';
  }
}

void write_scan_json(std::ostream& os, const std::vector<optimizer::ScanRecord>& records) {
  json rows = json::array();
  for (const auto& r : records) {
    json row = {{"alpha", rounded(r.alpha)}, {"J", rounded(r.J)}};
    if (r.error) {
      row["C0"] = nullptr;
      row["Cfb"] = nullptr;
      row["lambda_opt"] = nullptr;
      row["delta"] = nullptr;
      row["error"] = *r.error;
    } else {
      row["C0"] = rounded(r.C0);
      row["Cfb"] = rounded(r.Cfb);
      row["lambda_opt"] = rounded(r.lambda_opt);
      row["delta"] = rounded(r.delta);
    }
    rows.push_back(std::move(row));
  }
  os << rows.dump(2) << '\n';
}

int cmd_steady(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ModelParams& p = cfg.params;
  if (cfg.analytic && p.lambda != 0.0)
    throw UsageError("--analytic is only available without feedback (lambda = 0)");

  const me::DensityMatrix rho = me::steady_state(generator_for(p));
  std::optional<Operator> closed;
  double max_dev = 0.0;
  if (cfg.analytic) {
    closed = me::analytic_steady_state(p).matrix();
    max_dev = (rho.matrix() - *closed).cwiseAbs().maxCoeff();
  }

  std::ostringstream os;
  if (cfg.format == Format::json) {
    json doc = {{"alpha", p.alpha}, {"J", p.J}, {"lambda", p.lambda},
                {"numeric", matrix_json(rho.matrix())}};
    if (closed) {
      doc["analytic"] = matrix_json(*closed);
      doc["max_deviation"] = rounded(max_dev);
    }
    os << doc.dump(2) << '\n';
  } else {
    os << "row,col,re,im" << (closed ? ",analytic_re,analytic_im,abs_dev" : "") << '\n';
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        os << r + 1 << ',' << c + 1 << ',' << format_number(rho(r, c).real()) << ','
           << format_number(rho(r, c).imag());
        if (closed) {
          const Complex a = (*closed)(r, c);
          os << ',' << format_number(a.real()) << ',' << format_number(a.imag()) << ','
             << format_number(std::abs(rho(r, c) - a));
        }
        os << '\n';
      }
  }
  if (closed) err << "max_deviation=" << format_number(max_dev) << '\n';
  return emit(cfg, os.str(), out, err);
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ModelParams& p = cfg.params;
  if (cfg.samples < 1) throw UsageError("--samples must be at least 1");
  std::ostringstream os;
  json rows = json::array();

  if (cfg.mode == EvolveMode::closed) {
    if (p.J == 0.0 || p.alpha == 0.0)
      throw UsageError("closed evolution requires eta = alpha/J finite and nonzero "
                       "(alpha != 0, J != 0)");
    const Operator O = ham::marker_observable();
    os << "tau,variance_analytic,variance_numeric,concurrence\n";
    for (double tau : optimizer::linspace(0.0, cfg.tau, cfg.samples)) {
      const double analytic = ham::marker_variance(p, tau);
      const double numeric = ham::variance(O, ham::evolve_closed_numeric(p, tau));
      const double c = entanglement::concurrence_pure(ham::evolve_closed(p, tau));
      os << format_number(tau) << ',' << format_number(analytic) << ','
         << format_number(numeric) << ',' << format_number(c) << '\n';
      rows.push_back({{"tau", rounded(tau)},
                      {"variance_analytic", rounded(analytic)},
                      {"variance_numeric", rounded(numeric)},
                      {"concurrence", rounded(c)}});
    }
  } else {
    const Superoperator L = generator_for(p);
    const double dt = cfg.dt.value_or(me::suggested_dt(p));
    me::DensityMatrix rho = me::DensityMatrix::pure(basis_ket(basis::gg));
    os << "t,trace,min_eigenvalue,concurrence\n";
    double t_prev = 0.0;
    for (double t : optimizer::linspace(0.0, cfg.t_final, cfg.samples)) {
      rho = me::propagate(rho, L, t - t_prev, dt);
      t_prev = t;
      const double tr = rho.trace().real();
      const double min_ev = rho.min_eigenvalue();
      const double c = entanglement::concurrence(rho).value;
      os << format_number(t) << ',' << format_number(tr) << ',' << format_number(min_ev) << ','
         << format_number(c) << '\n';
      rows.push_back({{"t", rounded(t)},
                      {"trace", rounded(tr)},
                      {"min_eigenvalue", rounded(min_ev)},
                      {"concurrence", rounded(c)}});
    }
  }

  if (cfg.format == Format::json) return emit(cfg, rows.dump(2) + "\n", out, err);
  return emit(cfg, os.str(), out, err);
}

int cmd_concurrence(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ModelParams& p = cfg.params;
  const double c0 = optimizer::stationary_concurrence(p);
  const auto at_lambda = entanglement::concurrence(me::steady_state(generator_for(p)));

  std::optional<optimizer::LambdaOptimum> opt;
  if (cfg.optimize) {
    opt = optimizer::optimize_lambda(p, cfg.optimization);
    if (opt->at_boundary)
      err << "warning: optimum at the lambda search bound; the maximum may lie outside\n";
  }

  std::ostringstream os;
  if (cfg.format == Format::json) {
    json doc = {{"alpha", rounded(p.alpha)},
                {"J", rounded(p.J)},
                {"lambda", rounded(p.lambda)},
                {"C0", rounded(c0)},
                {"C_lambda", rounded(at_lambda.value)},
                {"xi", {rounded(at_lambda.xi[0]), rounded(at_lambda.xi[1]),
                        rounded(at_lambda.xi[2]), rounded(at_lambda.xi[3])}}};
    if (opt) {
      doc["Cfb"] = rounded(opt->Cfb);
      doc["lambda_opt"] = rounded(opt->lambda_opt);
    }
    os << doc.dump(2) << '\n';
  } else {
    os << "alpha,J,lambda,C0,C_lambda,xi1,xi2,xi3,xi4" << (opt ? ",Cfb,lambda_opt" : "")
       << '\n';
    os << format_number(p.alpha) << ',' << format_number(p.J) << ',' << format_number(p.lambda)
       << ',' << format_number(c0) << ',' << format_number(at_lambda.value);
    for (double x : at_lambda.xi) os << ',' << format_number(x);
    if (opt) os << ',' << format_number(opt->Cfb) << ',' << format_number(opt->lambda_opt);
    os << '\n';
  }
  return emit(cfg, os.str(), out, err);
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto alphas = cfg.alpha_range.values();
  const auto Js = cfg.J_range.values();
  const auto records = optimizer::scan_grid(alphas, Js, cfg.optimization, cfg.threads);

  bool failed = false;
  for (const auto& r : records) {
    if (r.error) {
      failed = true;
      err << "error at alpha=" << format_number(r.alpha) << " J=" << format_number(r.J) << ": "
          << *r.error << '\n';
    } else if (r.at_boundary) {
      err << "warning: alpha=" << format_number(r.alpha) << " J=" << format_number(r.J)
          << " optimum at the lambda search bound\n";
    }
  }

  std::ostringstream os;
  if (cfg.format == Format::json)
    write_scan_json(os, records);
  else
    write_scan_csv(os, records);
  const int status = emit(cfg, os.str(), out, err);
  if (status != kExitOk) return status;
  return failed ? kExitNumerical : kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto results = validation::run_all();
  std::ostringstream os;
  for (const auto& r : results)
    os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  deviation=" << fmt::format("{:.3e}", r.deviation)
       << "  threshold=" << fmt::format("{:.0e}", r.threshold) << '\n';
  const bool ok = validation::all_passed(results);
  os << (ok ? "all " : "FAILED: ") << results.size() << " checks" << (ok ? " passed" : "") << '\n';
  const int status = emit(cfg, os.str(), out, err);
  if (status != kExitOk) return status;
  return ok ? kExitOk : kExitNumerical;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steady-state entanglement of two Ising-coupled atoms under decay and "
               "homodyne-mediated feedback."};
  app.footer(
      "Exit codes: 0 success, 2 usage or configuration error, 3 numerical failure "
      "(degenerate steady state, tolerance breach, failed check).\n"
      "A --config file holds flat key=value lines using the long option names; "
      "command-line flags override it.");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string alpha_range = "0.05:2:40", J_range = "0.05:5:40", lambda_bounds = "-8:8";
  std::string format = "csv", mode = "closed", output;
  double dt = 0.0;

  app.add_option("--alpha", cfg.params.alpha, "driving strength (units of gamma)")
      ->capture_default_str();
  app.add_option("--J", cfg.params.J, "Ising coupling (units of gamma)")->capture_default_str();
  app.add_option("--lambda", cfg.params.lambda, "feedback strength (units of sqrt(gamma))")
      ->capture_default_str();
  app.add_option("--tau", cfg.tau, "closed evolution: final scaled time tau = J t")
      ->capture_default_str();
  app.add_option("--t-final", cfg.t_final, "open evolution: final time (units of 1/gamma)")
      ->capture_default_str();
  auto* dt_opt = app.add_option("--dt", dt, "open evolution: RK4 step (default: rate-based)");
  app.add_option("--samples", cfg.samples, "evolve: number of output samples")
      ->capture_default_str();
  app.add_option("--mode", mode, "evolve: closed|open")
      ->check(CLI::IsMember({"closed", "open"}))
      ->capture_default_str();
  app.add_option("--alpha-range", alpha_range, "scan: MIN:MAX:N")->capture_default_str();
  app.add_option("--J-range", J_range, "scan: MIN:MAX:N")->capture_default_str();
  app.add_option("--lambda-bounds", lambda_bounds, "lambda search interval MIN:MAX")
      ->capture_default_str();
  app.add_option("--coarse-points", cfg.optimization.coarse_points, "lambda coarse grid size")
      ->capture_default_str();
  app.add_option("--refine-tol", cfg.optimization.refine_tol, "lambda refinement resolution")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "scan worker threads (0 = all cores)")
      ->capture_default_str();
  app.add_flag("--analytic", cfg.analytic, "steady: also write the closed-form state");
  app.add_flag("--optimize", cfg.optimize, "concurrence: also optimize lambda");
  app.add_option("--output", output, "write the artifact to PATH instead of stdout");
  app.add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.set_config("--config", "", "read flat key=value defaults from PATH");

  const std::map<std::string, Command> commands{{"steady", Command::steady},
                                                {"evolve", Command::evolve},
                                                {"concurrence", Command::concurrence},
                                                {"scan", Command::scan},
                                                {"validate", Command::validate}};
  app.add_subcommand("steady", "stationary density matrix at (alpha, J, lambda)");
  app.add_subcommand("evolve", "closed evolution of |gg> or open RK4 propagation");
  app.add_subcommand("concurrence", "stationary concurrence with and without feedback");
  app.add_subcommand("scan", "C0, optimized Cfb and their difference over an (alpha, J) grid");
  app.add_subcommand("validate", "run the cross-check suite");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const auto& [name, command] : commands)
      if (app.got_subcommand(name)) cfg.command = command;
    if (*dt_opt) {
      if (!(dt > 0.0)) throw UsageError("--dt must be positive");
      cfg.dt = dt;
    }
    cfg.mode = mode == "open" ? EvolveMode::open : EvolveMode::closed;
    cfg.format = format == "json" ? Format::json : Format::csv;
    if (!output.empty()) cfg.output_path = output;
    cfg.alpha_range = Range::parse(alpha_range);
    cfg.J_range = Range::parse(J_range);
    const auto bounds = split(lambda_bounds, ':');
    if (bounds.size() != 2) throw UsageError("--lambda-bounds must be MIN:MAX");
    cfg.optimization.lambda_min = parse_double(bounds[0]);
    cfg.optimization.lambda_max = parse_double(bounds[1]);
    cfg.optimization.validate();
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    switch (cfg.command) {
      case Command::steady: return cmd_steady(cfg, out, err);
      case Command::evolve: return cmd_evolve(cfg, out, err);
      case Command::concurrence: return cmd_concurrence(cfg, out, err);
      case Command::scan: return cmd_scan(cfg, out, err);
      case Command::validate: return cmd_validate(cfg, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace entfb::cli
